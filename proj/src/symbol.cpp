#include "specblocks/symbol.hpp"

#include <algorithm>

namespace specblocks {

SemiregularFrame::SemiregularFrame(PermGroup h, AbelianGroup abstract,
                                   std::vector<Perm> element_perms,
                                   std::vector<std::vector<int>> orbits,
                                   std::vector<int> base)
    : h_(std::move(h)),
      abstract_(std::move(abstract)),
      element_perms_(std::move(element_perms)),
      orbits_(std::move(orbits)),
      base_(std::move(base)) {
  locate_.assign(h_.degree(), {-1, -1});
  for (int i = 0; i < orbit_count(); ++i) {
    for (std::int64_t e = 0; e < group_order(); ++e) {
      int point = element_perms_[e].apply(base_[i]);
      if (locate_[point].first != -1)
        throw validation_error("frame ordering is not a bijection onto the points");
      locate_[point] = {i, e};
    }
  }
  for (const auto& [i, e] : locate_)
    if (i == -1) throw validation_error("frame ordering does not cover the points");
}

SemiregularFrame SemiregularFrame::build(const PermGroup& h,
                                         std::optional<std::vector<int>> base_choice,
                                         std::int64_t cap) {
  if (!h.is_abelian()) throw validation_error("H is not abelian");
  SemiregularReport sr = is_semiregular(h, cap);
  if (!sr.semiregular) throw validation_error("H is not semiregular");
  AbelianIso iso = abelianize(h, cap);

  std::vector<int> base;
  base.reserve(sr.orbits.size());
  if (base_choice) {
    for (const auto& orb : sr.orbits) {
      int found = -1;
      for (int p : *base_choice) {
        if (std::binary_search(orb.begin(), orb.end(), p)) {
          if (found != -1)
            throw validation_error("base choice has two points in one orbit");
          found = p;
        }
      }
      if (found == -1) throw validation_error("base choice misses an orbit");
      base.push_back(found);
    }
    if (base_choice->size() != sr.orbits.size())
      throw validation_error("base choice must have one point per orbit");
  } else {
    for (const auto& orb : sr.orbits) base.push_back(orb.front());
  }
  return {h, std::move(iso.group), std::move(iso.perm_of), std::move(sr.orbits),
          std::move(base)};
}

SemiregularFrame SemiregularFrame::canonical(const AbelianGroup& abstract, int m) {
  if (m < 1) throw validation_error("frame needs at least one orbit");
  std::int64_t n = abstract.order();
  int degree = static_cast<int>(m * n);
  // translation by e: (i, a) -> (i, a + e)
  std::vector<Perm> element_perms;
  element_perms.reserve(static_cast<std::size_t>(n));
  for (std::int64_t e = 0; e < n; ++e) {
    Element step = abstract.element_at(e);
    std::vector<int> img(degree);
    for (int i = 0; i < m; ++i)
      for (std::int64_t a = 0; a < n; ++a)
        img[i * n + a] =
            static_cast<int>(i * n + abstract.index_of(abstract.add(abstract.element_at(a), step)));
    element_perms.emplace_back(std::move(img));
  }
  std::vector<Perm> gens;
  for (int k = 0; k < abstract.rank(); ++k) {
    if (abstract.factors()[k] == 1) continue;
    Element unit = abstract.zero();
    unit[k] = 1;
    gens.push_back(element_perms[abstract.index_of(unit)]);
  }
  std::vector<std::vector<int>> orbits(m);
  std::vector<int> base(m);
  for (int i = 0; i < m; ++i) {
    orbits[i].resize(static_cast<std::size_t>(n));
    for (std::int64_t a = 0; a < n; ++a) orbits[i][a] = static_cast<int>(i * n + a);
    base[i] = static_cast<int>(i * n);
  }
  return {PermGroup(degree, std::move(gens)), abstract, std::move(element_perms),
          std::move(orbits), std::move(base)};
}

int SemiregularFrame::vertex(int orbit_index, std::int64_t element_index) const {
  return element_perms_[element_index].apply(base_[orbit_index]);
}

std::pair<int, std::int64_t> SemiregularFrame::locate(int point) const {
  if (point < 0 || point >= degree()) throw validation_error("point out of range");
  return locate_[point];
}

std::int64_t SemiregularFrame::position(int point) const {
  auto [i, e] = locate(point);
  return i * group_order() + e;
}

int SemiregularFrame::point_at_position(std::int64_t pos) const {
  if (pos < 0 || pos >= static_cast<std::int64_t>(degree()))
    throw validation_error("position out of range");
  return vertex(static_cast<int>(pos / group_order()), pos % group_order());
}

Symbol::Symbol(AbelianGroup group, int m) : group_(std::move(group)), m_(m) {
  if (m < 1) throw validation_error("symbol needs m >= 1");
  entries_.assign(m_, std::vector<std::vector<Element>>(m_));
}

Symbol::Symbol(AbelianGroup group, std::vector<std::vector<std::vector<Element>>> entries)
    : Symbol(std::move(group), static_cast<int>(entries.size())) {
  for (int i = 0; i < m_; ++i) {
    if (entries[i].size() != static_cast<std::size_t>(m_))
      throw validation_error("symbol entries must form an m x m array");
    for (int j = 0; j < m_; ++j) set_entry(i, j, std::move(entries[i][j]));
  }
}

void Symbol::set_entry(int i, int j, std::vector<Element> subset) {
  for (auto& e : subset) {
    group_.validate_tuple(e);
  }
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  entries_[i][j] = std::move(subset);
}

bool Symbol::entry_contains(int i, int j, const Element& e) const {
  return std::binary_search(entries_[i][j].begin(), entries_[i][j].end(), e);
}

std::int64_t Symbol::row_valency(int i) const {
  std::int64_t total = 0;
  for (int j = 0; j < m_; ++j) total += static_cast<std::int64_t>(entries_[i][j].size());
  return total;
}

Symbol extract_symbol(const Digraph& d, const SemiregularFrame& f) {
  if (d.vertex_count() != f.degree())
    throw validation_error("digraph and frame degree mismatch");
  for (const auto& gen : f.h().generators())
    for (auto [u, v] : d.arcs())
      if (!d.has_arc(gen.apply(u), gen.apply(v)))
        throw validation_error("digraph is not invariant under H");

  Symbol s(f.abstract(), f.orbit_count());
  for (int i = 0; i < f.orbit_count(); ++i) {
    std::vector<std::vector<Element>> row(f.orbit_count());
    for (int w : d.out_neighbors(f.base()[i])) {
      auto [j, e] = f.locate(w);
      row[j].push_back(f.abstract().element_at(e));
    }
    for (int j = 0; j < f.orbit_count(); ++j) s.set_entry(i, j, std::move(row[j]));
  }
  return s;
}

std::vector<std::vector<int>> assemble_adjacency(const Symbol& s) {
  const AbelianGroup& h = s.group();
  std::int64_t n = h.order();
  int m = s.m();
  std::size_t dim = static_cast<std::size_t>(m * n);
  std::vector<std::vector<int>> a(dim, std::vector<int>(dim, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      // block (i,j) is the Cayley adjacency of Cay(H, S_ij)
      std::vector<char> member(static_cast<std::size_t>(n), 0);
      for (const auto& e : s.entry(i, j)) member[h.index_of(e)] = 1;
      for (std::int64_t x = 0; x < n; ++x) {
        Element ex = h.element_at(x);
        for (std::int64_t y = 0; y < n; ++y)
          if (member[h.index_of(h.sub(h.element_at(y), ex))])
            a[i * n + x][j * n + y] = 1;
      }
    }
  return a;
}

SymbolRealization digraph_from_symbol(const Symbol& s) {
  const AbelianGroup& h = s.group();
  std::int64_t n = h.order();
  int m = s.m();
  std::vector<Arc> arcs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (const auto& step : s.entry(i, j))
        for (std::int64_t a = 0; a < n; ++a)
          arcs.emplace_back(static_cast<int>(i * n + a),
                            static_cast<int>(j * n + h.index_of(h.add(h.element_at(a), step))));
  Digraph d(static_cast<int>(m * n), std::move(arcs));
  return {std::move(d), SemiregularFrame::canonical(h, m)};
}

}  // namespace specblocks
