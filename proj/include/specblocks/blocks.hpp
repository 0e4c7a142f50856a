#pragma once

#include <string>
#include <vector>

#include "specblocks/spectral.hpp"

namespace specblocks {

// (base vector, index partition Delta of {0..m-1}, subgroup K of H):
// together they describe the G-invariant partition Pi(base, Delta, K) whose
// cells are unions over a Delta-class of matching K-coset orbit pieces.
struct GTriple {
  std::vector<int> base;            // one point per H-orbit, frame orbit order
  Partition delta;                  // partition of the orbit index set
  std::vector<Element> k_elements;  // subgroup of H, lexicographic
};

// Pi(base, Delta, K). Validates that K is a subgroup and the base vector is
// one point per orbit.
Partition build_partition(const GTriple& t, const SemiregularFrame& f);

// A triple with the same partition whose base vector contains x: shift the
// coordinates of the Delta-class of x's orbit by the matching h.
GTriple rebase(const GTriple& t, const SemiregularFrame& f, int x);

// Recovers a G-triple for a G-invariant partition b: Delta from the
// "some block meets both orbits" relation, K = H meet the kernel of the
// action on b, base vector from one block per Delta-class, rebased to
// contain anchor. Verifies the result reproduces b exactly (which fails
// precisely when the preconditions -- H <= G transitive, b G-invariant --
// do not hold).
GTriple recover_g_triple(const Partition& b, const PermGroup& g,
                         const SemiregularFrame& f, int anchor = 0);

// Linear action of a permutation on a vector in the frame's coordinate
// order: (w^g)[pos(x)] = w[pos(x^g)]. Under this rule acting by h in H on
// u (x) v_chi scales it by exactly chi(h).
CVec apply_perm(const SemiregularFrame& f, const Perm& g, const CVec& w);

struct SpectralBlockSystem {
  Partition blocks;          // B_{S,lambda}: orbits of the kernel below
  GTriple triple;
  PermGroup kernel;          // K_lambda, with its full element list
  std::vector<Char> k_set;   // K_{S,lambda}
  cplx lambda;
};

// The G-invariant partition induced by the kernel of the action of G on the
// lambda-eigenspace. The kernel membership test is a max-norm residual at
// tol over the stored basis; the filtered set is verified closed to guard
// against tolerance leaks.
SpectralBlockSystem spectral_block_system(const PermGroup& g, const Symbol& s,
                                          const SemiregularFrame& f, cplx lambda,
                                          double tol, std::int64_t cap = kDefaultCap,
                                          Exec exec = Exec::serial);

// Elements of H fixing every W_lambda basis vector; equals
// perp_of_characters(K_{S,lambda}) (tested exhaustively).
std::vector<Element> kernel_intersect_h(const Symbol& s, const SemiregularFrame& f,
                                        cplx lambda, double tol);

// The auxiliary index partition from i ~ j iff the component vectors of an
// orthonormal basis of V_{lambda,chi} satisfy U^(i) = chi(h) U^(j) for some
// h in H. The relation does not depend on the chosen basis; the from_basis
// form exists so the tests can verify that under unitary re-mixing.
Partition delta_lambda_chi(const Symbol& s, const Char& chi, cplx lambda, double tol);
Partition delta_lambda_chi_from_basis(const Symbol& s, const Char& chi,
                                      const std::vector<CVec>& basis, double tol);

bool check_refinement(const Partition& fine, const Partition& coarse);

enum class ExtremeCase {
  none,
  blocks_meet_orbits_at_most_once,  // <K_{S,lambda}> = H*, kernel nontrivial
  blocks_are_orbit_unions,          // K_{S,lambda} = {chi_0}, lambda != valency
};

struct ExtremeReport {
  explicit ExtremeReport(SpectralBlockSystem sys) : system(std::move(sys)) {}

  ExtremeCase kind = ExtremeCase::none;
  bool k_generates_dual = false;
  bool kernel_nontrivial = false;
  bool k_is_principal_only = false;
  bool lambda_is_valency = false;
  bool delta_universal = false;
  bool delta_trivial = false;
  bool structure_verified = false;  // the structural claim for the case holds
  SpectralBlockSystem system;
  std::string detail;
};

ExtremeReport classify_extreme(const Symbol& s, const PermGroup& g,
                               const SemiregularFrame& f, cplx lambda, double tol,
                               std::int64_t cap = kDefaultCap);

struct PrimitiveRow {
  cplx lambda;
  std::vector<Char> k_set;
  bool generates_dual = false;
};

struct PrimitiveReport {
  std::vector<PrimitiveRow> rows;  // one per eigenvalue != valency
  bool all_generate = true;
};

// For primitive g, every eigenvalue other than the valency must have
// K_{S,lambda} generating the whole dual group. Throws validation_error
// when g is not primitive.
PrimitiveReport verify_primitive_dual_generation(const PermGroup& g, const Symbol& s,
                                        const SemiregularFrame& f, double tol,
                                        std::int64_t cap = kDefaultCap);

}  // namespace specblocks
