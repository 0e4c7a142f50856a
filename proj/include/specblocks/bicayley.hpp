#pragma once

#include <string>
#include <vector>

#include "specblocks/spectral.hpp"

namespace specblocks {

// The 2 x 2 symbol of a bi-Cayley digraph, entries S, T / Q, R. For a
// digraph invariant under a transitive group, |S| = |R| and |T| = |Q|, so
// the principal character matrix has eigenvalues val = |S|+|T| and
// d = |S|-|T|.
struct BiSymbol {
  std::vector<Element> s, t, q, r;

  static BiSymbol from_symbol(const Symbol& sym);
  Symbol to_symbol(const AbelianGroup& h) const;
  int valency() const { return static_cast<int>(s.size() + t.size()); }
  int d() const { return static_cast<int>(s.size()) - static_cast<int>(t.size()); }
};

// M_g = {h : (x_1^h)^g lies in X_1}, N_g = {h : (x_2^h)^g lies in X_1};
// always |M_g| + |N_g| = |H|. Requires a two-orbit frame.
struct MNSets {
  std::vector<Element> m, n;
};

MNSets mn_sets(const Perm& g, const SemiregularFrame& f);

enum class ElementClass { orbit_preserving, swap, mixer };

ElementClass classify_element(const Perm& g, const SemiregularFrame& f);

// True iff some element of g does not permute the H-orbits setwise. Works
// for any orbit count, matching the generalized definition.
bool has_mixer(const PermGroup& g, const SemiregularFrame& f,
               std::int64_t cap = kDefaultCap);
bool has_swap(const PermGroup& g, const SemiregularFrame& f,
              std::int64_t cap = kDefaultCap);

struct MNViolation {
  Char chi;
  cplx m_sum, n_sum;
};

struct MNReport {
  bool ok = true;
  std::vector<MNViolation> violations;  // characters outside K_{S,d} with
                                        // nonvanishing chi(M_g) or chi(N_g)
};

// chi(M_g) = chi(N_g) = 0 for every character outside K_{S,d(Gamma)}.
MNReport mn_vanishing_check(const Perm& g, const BiSymbol& bs, const SemiregularFrame& f,
                      double tol);

}  // namespace specblocks
