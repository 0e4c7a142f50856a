#include "specblocks/bicayley.hpp"

#include <algorithm>
#include <cmath>

#include "specblocks/polyroots.hpp"

namespace specblocks {

BiSymbol BiSymbol::from_symbol(const Symbol& sym) {
  if (sym.m() != 2) throw validation_error("bi-Cayley symbol needs exactly two orbits");
  BiSymbol bs{sym.entry(0, 0), sym.entry(0, 1), sym.entry(1, 0), sym.entry(1, 1)};
  if (bs.s.size() != bs.r.size() || bs.t.size() != bs.q.size())
    throw validation_error("bi-Cayley symbol must have |S| = |R| and |T| = |Q|");
  return bs;
}

Symbol BiSymbol::to_symbol(const AbelianGroup& h) const {
  return Symbol(h, {{s, t}, {q, r}});
}

MNSets mn_sets(const Perm& g, const SemiregularFrame& f) {
  if (f.orbit_count() != 2)
    throw validation_error("M_g/N_g need a frame with exactly two orbits");
  const AbelianGroup& h = f.abstract();
  MNSets out;
  for (std::int64_t e = 0; e < h.order(); ++e) {
    Element he = h.element_at(e);
    if (f.locate(g.apply(f.vertex(0, e))).first == 0) out.m.push_back(he);
    if (f.locate(g.apply(f.vertex(1, e))).first == 0) out.n.push_back(he);
  }
  return out;
}

ElementClass classify_element(const Perm& g, const SemiregularFrame& f) {
  MNSets mn = mn_sets(g, f);
  std::size_t order = static_cast<std::size_t>(f.group_order());
  if (mn.m.size() == order) return ElementClass::orbit_preserving;
  if (mn.m.empty() && mn.n.size() == order) return ElementClass::swap;
  return ElementClass::mixer;
}

namespace {

// g permutes the H-orbits setwise iff each orbit's image is an orbit
bool permutes_orbits(const Perm& g, const SemiregularFrame& f) {
  for (int i = 0; i < f.orbit_count(); ++i) {
    int target = f.locate(g.apply(f.orbits()[i].front())).first;
    for (int p : f.orbits()[i])
      if (f.locate(g.apply(p)).first != target) return false;
  }
  return true;
}

}  // namespace

bool has_mixer(const PermGroup& g, const SemiregularFrame& f, std::int64_t cap) {
  for (const auto& e : g.elements(cap))
    if (!permutes_orbits(e, f)) return true;
  return false;
}

bool has_swap(const PermGroup& g, const SemiregularFrame& f, std::int64_t cap) {
  if (f.orbit_count() != 2) throw validation_error("swaps need exactly two orbits");
  for (const auto& e : g.elements(cap))
    if (classify_element(e, f) == ElementClass::swap) return true;
  return false;
}

MNReport mn_vanishing_check(const Perm& g, const BiSymbol& bs, const SemiregularFrame& f,
                      double tol) {
  const AbelianGroup& h = f.abstract();
  Symbol sym = bs.to_symbol(h);
  double d = static_cast<double>(bs.d());

  MNSets mn = mn_sets(g, f);
  MNReport report;
  for (std::int64_t c = 0; c < h.order(); ++c) {
    Char chi = h.element_at(c);
    std::vector<cplx> eigs = small_eigenvalues(char_matrix(sym, chi));
    double scale = 1.0;
    for (const auto& e : eigs) scale = std::max(scale, std::abs(e));
    bool in_k = false;
    for (const auto& e : eigs)
      if (std::abs(e - d) <= std::max(tol, 1e-9) * scale) in_k = true;
    if (in_k) continue;
    cplx m_sum = char_sum(h, chi, mn.m);
    cplx n_sum = char_sum(h, chi, mn.n);
    if (std::abs(m_sum) > tol || std::abs(n_sum) > tol) {
      report.ok = false;
      report.violations.push_back({std::move(chi), m_sum, n_sum});
    }
  }
  return report;
}

}  // namespace specblocks
