#include "specblocks/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace specblocks {

Perm::Perm(int degree) : img_(degree) {
  if (degree < 0) throw validation_error("permutation degree must be nonnegative");
  std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v])
      throw validation_error("permutation images are not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw validation_error("cycle point out of range");
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

Perm Perm::then(const Perm& other) const {
  if (degree() != other.degree()) throw validation_error("degree mismatch in composition");
  std::vector<int> img(img_.size());
  for (int x = 0; x < degree(); ++x) img[x] = other.img_[img_[x]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(img_.size());
  for (int x = 0; x < degree(); ++x) img[img_[x]] = x;
  return Perm(std::move(img));
}

Perm Perm::power(std::int64_t e) const {
  Perm base = e >= 0 ? *this : inverse();
  std::int64_t k = e >= 0 ? e : -e;
  Perm acc(degree());
  while (k > 0) {
    if (k & 1) acc = acc.then(base);
    base = base.then(base);
    k >>= 1;
  }
  return acc;
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (img_[x] != x) return false;
  return true;
}

int Perm::order() const {
  // lcm of cycle lengths
  std::vector<char> done(img_.size(), 0);
  std::int64_t ord = 1;
  for (int x = 0; x < degree(); ++x) {
    if (done[x]) continue;
    int len = 0, y = x;
    do {
      done[y] = 1;
      y = img_[y];
      ++len;
    } while (y != x);
    ord = std::lcm(ord, static_cast<std::int64_t>(len));
  }
  return static_cast<int>(ord);
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

Partition::Partition(int degree, std::vector<std::vector<int>> cells)
    : cell_of_(degree, -1) {
  for (auto& cell : cells) {
    if (cell.empty()) throw validation_error("partition cell is empty");
    std::sort(cell.begin(), cell.end());
    cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
    for (int p : cell) {
      if (p < 0 || p >= degree) throw validation_error("partition point out of range");
      if (cell_of_[p] != -1) throw validation_error("partition cells are not disjoint");
      cell_of_[p] = 0;  // provisional; reindexed below
    }
  }
  for (int p = 0; p < degree; ++p)
    if (cell_of_[p] == -1) throw validation_error("partition does not cover the point set");
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  cells_ = std::move(cells);
  for (int i = 0; i < cell_count(); ++i)
    for (int p : cells_[i]) cell_of_[p] = i;
}

Partition Partition::singletons(int degree) {
  std::vector<std::vector<int>> cells(degree);
  for (int p = 0; p < degree; ++p) cells[p] = {p};
  return {degree, std::move(cells)};
}

Partition Partition::universal(int degree) {
  std::vector<int> all(degree);
  std::iota(all.begin(), all.end(), 0);
  return {degree, {all}};
}

Partition Partition::from_cell_ids(const std::vector<int>& ids) {
  int n = static_cast<int>(ids.size());
  std::vector<std::vector<int>> by_id;
  std::vector<int> remap(n, -1);
  std::vector<std::vector<int>> cells;
  for (int p = 0; p < n; ++p) {
    int id = ids[p];
    if (id < 0 || id >= n) throw validation_error("cell id out of range");
    if (remap[id] == -1) {
      remap[id] = static_cast<int>(cells.size());
      cells.emplace_back();
    }
    cells[remap[id]].push_back(p);
  }
  return {n, std::move(cells)};
}

bool Partition::is_uniform() const {
  for (const auto& c : cells_)
    if (c.size() != cells_.front().size()) return false;
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

Partition Partition::join(const Partition& other) const {
  if (degree() != other.degree()) throw validation_error("partition degree mismatch");
  UnionFind uf(degree());
  for (const auto& c : cells_)
    for (std::size_t i = 1; i < c.size(); ++i) uf.unite(c[0], c[i]);
  for (const auto& c : other.cells_)
    for (std::size_t i = 1; i < c.size(); ++i) uf.unite(c[0], c[i]);
  std::vector<int> ids(degree());
  for (int p = 0; p < degree(); ++p) ids[p] = uf.find(p);
  return from_cell_ids(ids);
}

bool Partition::refines(const Partition& coarser) const {
  if (degree() != coarser.degree()) throw validation_error("partition degree mismatch");
  for (const auto& c : cells_) {
    int target = coarser.cell_index_of(c.front());
    for (int p : c)
      if (coarser.cell_index_of(p) != target) return false;
  }
  return true;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw validation_error("generator degree mismatch");
}

PermGroup PermGroup::trivial(int degree) { return {degree, {}}; }

PermGroup PermGroup::with_elements(int degree, std::vector<Perm> generators,
                                   std::vector<Perm> elements) {
  PermGroup g(degree, std::move(generators));
  g.elements_ = std::move(elements);
  return g;
}

const std::vector<Perm>& PermGroup::elements(std::int64_t cap) const {
  if (cap < 1) throw validation_error("cap must be at least 1");
  if (elements_) {
    if (static_cast<std::int64_t>(elements_->size()) > cap)
      throw cap_exceeded("group order exceeds cap");
    return *elements_;
  }
  // Breadth-first closure over words in the generators; within a level the
  // discovery order is lexicographic in generator indices.
  std::vector<Perm> elems{Perm(degree_)};
  std::unordered_set<Perm, PermHash> seen{elems.front()};
  std::size_t frontier_begin = 0;
  while (frontier_begin < elems.size()) {
    std::size_t frontier_end = elems.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const auto& gen : gens_) {
        Perm next = elems[i].then(gen);
        if (seen.insert(next).second) {
          if (static_cast<std::int64_t>(elems.size()) >= cap)
            throw cap_exceeded("group order exceeds cap");
          elems.push_back(std::move(next));
        }
      }
    }
    frontier_begin = frontier_end;
  }
  elements_ = std::move(elems);
  return *elements_;
}

std::int64_t PermGroup::order(std::int64_t cap) const {
  return static_cast<std::int64_t>(elements(cap).size());
}

bool PermGroup::contains(const Perm& p, std::int64_t cap) const {
  if (p.degree() != degree_) return false;
  const auto& elems = elements(cap);
  return std::find(elems.begin(), elems.end(), p) != elems.end();
}

bool PermGroup::is_transitive() const {
  if (degree_ == 0) return true;
  return static_cast<int>(orbit(gens_, 0).size()) == degree_;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (!(gens_[i].then(gens_[j]) == gens_[j].then(gens_[i]))) return false;
  return true;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<char> done(degree_, 0);
  std::vector<std::vector<int>> result;
  for (int p = 0; p < degree_; ++p) {
    if (done[p]) continue;
    auto orb = orbit(gens_, p);
    for (int q : orb) done[q] = 1;
    result.push_back(std::move(orb));
  }
  return result;  // ordered by minimal point since p ascends
}

std::vector<int> orbit(const std::vector<Perm>& gens, int seed) {
  if (!gens.empty()) {
    int deg = gens.front().degree();
    for (const auto& g : gens)
      if (g.degree() != deg) throw validation_error("degree mismatch among generators");
    if (seed < 0 || seed >= deg) throw validation_error("orbit seed out of range");
  } else if (seed < 0) {
    throw validation_error("orbit seed out of range");
  }
  std::vector<int> result{seed};
  std::unordered_set<int> seen{seed};
  std::deque<int> queue{seed};
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      int q = g.apply(p);
      if (seen.insert(q).second) {
        result.push_back(q);
        queue.push_back(q);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

SemiregularReport is_semiregular(const PermGroup& h, std::int64_t cap) {
  SemiregularReport report;
  report.orbits = h.orbits();
  std::int64_t ord = h.order(cap);
  report.semiregular = true;
  for (const auto& orb : report.orbits)
    if (static_cast<std::int64_t>(orb.size()) != ord) report.semiregular = false;
  return report;
}

bool is_invariant_partition(const PermGroup& g, const Partition& b) {
  if (g.degree() != b.degree()) throw validation_error("partition degree mismatch");
  for (const auto& gen : g.generators()) {
    for (const auto& cell : b.cells()) {
      int target = b.cell_index_of(gen.apply(cell.front()));
      for (int p : cell)
        if (b.cell_index_of(gen.apply(p)) != target) return false;
    }
  }
  return true;
}

PermGroup kernel_of_partition_action(const PermGroup& g, const Partition& b,
                                     std::int64_t cap) {
  if (!is_invariant_partition(g, b))
    throw validation_error("partition is not invariant under the group");
  std::vector<Perm> kernel;
  for (const auto& e : g.elements(cap)) {
    bool fixes = true;
    for (int p = 0; p < g.degree() && fixes; ++p)
      fixes = b.cell_index_of(e.apply(p)) == b.cell_index_of(p);
    if (fixes) kernel.push_back(e);
  }
  std::vector<Perm> gens = greedy_generators(g.degree(), kernel);
  return PermGroup::with_elements(g.degree(), std::move(gens), std::move(kernel));
}

Partition minimal_block(const PermGroup& g, int a, int b) {
  if (!g.is_transitive()) throw validation_error("group is not transitive");
  if (a < 0 || b < 0 || a >= g.degree() || b >= g.degree())
    throw validation_error("block seed out of range");
  UnionFind uf(g.degree());
  std::deque<std::pair<int, int>> queue;
  if (uf.unite(a, b)) queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [u, v] = queue.front();
    queue.pop_front();
    for (const auto& gen : g.generators()) {
      int x = uf.find(gen.apply(u));
      int y = uf.find(gen.apply(v));
      if (uf.unite(x, y)) queue.emplace_back(x, y);
    }
  }
  std::vector<int> ids(g.degree());
  for (int p = 0; p < g.degree(); ++p) ids[p] = uf.find(p);
  return Partition::from_cell_ids(ids);
}

std::vector<Partition> all_block_systems_oracle(const PermGroup& g) {
  if (!g.is_transitive()) throw validation_error("group is not transitive");
  std::vector<Partition> systems{Partition::singletons(g.degree())};
  for (int p = 1; p < g.degree(); ++p) {
    Partition mb = minimal_block(g, 0, p);
    if (std::find(systems.begin(), systems.end(), mb) == systems.end())
      systems.push_back(std::move(mb));
  }
  // Close under pairwise joins; every invariant partition is a join of the
  // minimal ones containing a fixed point's block mates.
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t count = systems.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        Partition joined = systems[i].join(systems[j]);
        if (std::find(systems.begin(), systems.end(), joined) == systems.end()) {
          systems.push_back(std::move(joined));
          grew = true;
        }
      }
    }
  }
  std::sort(systems.begin(), systems.end(),
            [](const Partition& a, const Partition& b) {
              if (a.cell_count() != b.cell_count()) return a.cell_count() > b.cell_count();
              return a < b;
            });
  return systems;
}

bool is_primitive(const PermGroup& g) {
  if (!g.is_transitive()) return false;
  for (int p = 1; p < g.degree(); ++p)
    if (!minimal_block(g, 0, p).is_universal()) return false;
  return true;
}

std::vector<Perm> greedy_generators(int degree, const std::vector<Perm>& elements) {
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> generated{Perm(degree)};
  std::vector<Perm> generated_list{Perm(degree)};
  for (const auto& e : elements) {
    if (generated.count(e)) continue;
    gens.push_back(e);
    // regenerate closure with the enlarged generating set
    std::size_t frontier = 0;
    generated_list.assign(1, Perm(degree));
    generated.clear();
    generated.insert(generated_list.front());
    while (frontier < generated_list.size()) {
      for (const auto& gen : gens) {
        Perm next = generated_list[frontier].then(gen);
        if (generated.insert(next).second) generated_list.push_back(std::move(next));
      }
      ++frontier;
    }
  }
  return gens;
}

}  // namespace specblocks
