#pragma once

#include <string>
#include <vector>

#include "specblocks/cmatrix.hpp"
#include "specblocks/parallel.hpp"
#include "specblocks/symbol.hpp"

namespace specblocks {

// chi(S), the m x m complex matrix with entries chi(S_ij).
CMat char_matrix(const Symbol& s, const Char& chi);

struct SpectrumEntry {
  cplx lambda;                  // cluster representative (mean of members)
  std::vector<Char> k_set;      // K_{S,lambda}: characters with this eigenvalue
  std::vector<int> multiplicity;  // algebraic multiplicity per k_set entry
  // mean of the member eigenvalues contributed by each character; used to
  // re-center the eigenspace solve per character
  std::vector<cplx> char_lambda;
};

struct SpectrumResult {
  std::vector<SpectrumEntry> entries;  // by descending real, then imaginary part
  std::vector<std::string> warnings;   // borderline clusters, reported not merged
};

// Eigenvalues of every chi(S) pooled and clustered at relative tolerance
// tol; each cluster carries its character set K_{S,lambda}.
SpectrumResult spectrum(const Symbol& s, double tol, Exec exec = Exec::serial);

// Orthonormal basis of V_{lambda,chi}, the lambda-eigenspace of chi(S).
// Throws validation_error when chi is not in K_{S,lambda} at tolerance tol.
std::vector<CVec> eigenspace_V(const Symbol& s, const Char& chi, cplx lambda, double tol);

// Basis of W_lambda = direct sum over chi in K_{S,lambda} of
// V_{lambda,chi} (x) <v_chi>, unit-normalized, coordinates in the frame's
// vertex order. Pairwise orthogonal.
std::vector<CVec> eigenspace_W(const Symbol& s, const SemiregularFrame& f, cplx lambda,
                               double tol);

// v_chi: the character vector (chi(h))_h over H in the fixed order.
CVec character_vector(const AbelianGroup& h, const Char& chi);

// Locates the spectrum cluster containing lambda; throws validation_error
// ("not an eigenvalue") when none is within tolerance.
const SpectrumEntry& find_eigenvalue(const SpectrumResult& spec, cplx lambda, double tol);

}  // namespace specblocks
