#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "specblocks/abelian.hpp"
#include "specblocks/perm.hpp"

namespace specblocks {

using Arc = std::pair<int, int>;

inline constexpr std::int64_t kDefaultNodeBudget = 10'000'000;

// A finite digraph on {0..n-1}; arcs are ordered pairs, stored sorted and
// deduplicated. A graph is a digraph whose arc set is symmetric.
class Digraph {
 public:
  Digraph(int n, std::vector<Arc> arcs);

  int vertex_count() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
  const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
  bool has_arc(int u, int v) const;
  bool is_graph() const;  // symmetric arc set
  // Unordered pairs {u, v} with u < v such that both arcs are present;
  // loops are excluded.
  std::vector<Arc> undirected_edges() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_, in_;
};

// Arc set = union of the G-orbits of the seed pairs.
Digraph orbital_closure(const PermGroup& g, const std::vector<Arc>& seeds);

// Cay(H, S): arc x -> y whenever y - x lies in S (additive notation). S may
// contain the identity, giving loops.
Digraph cayley_digraph(const AbelianGroup& h, const std::vector<Element>& s);

// Full automorphism group by backtracking over refinement-stable vertex
// classes; exact, intended for n <= 64. Throws cap_exceeded past the node
// budget. The returned group carries its complete element list.
PermGroup automorphism_group_oracle(const Digraph& d,
                                    std::int64_t node_budget = kDefaultNodeBudget);

// True iff Aut(d) has a single orbit on undirected edges; d must be a graph.
bool is_edge_transitive_oracle(const Digraph& d,
                               std::int64_t node_budget = kDefaultNodeBudget);

bool is_vertex_transitive_oracle(const Digraph& d,
                                 std::int64_t node_budget = kDefaultNodeBudget);

// Backtracking isomorphism test at desk scale.
bool isomorphic_oracle(const Digraph& a, const Digraph& b,
                       std::int64_t node_budget = kDefaultNodeBudget);

}  // namespace specblocks
