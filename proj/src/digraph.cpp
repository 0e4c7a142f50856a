#include "specblocks/digraph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace specblocks {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n) {
  if (n < 0) throw validation_error("vertex count must be nonnegative");
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  out_.resize(n);
  in_.resize(n);
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw validation_error("arc endpoint out of range");
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  arcs_ = std::move(arcs);
}

bool Digraph::has_arc(int u, int v) const {
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

bool Digraph::is_graph() const {
  for (auto [u, v] : arcs_)
    if (!has_arc(v, u)) return false;
  return true;
}

std::vector<Arc> Digraph::undirected_edges() const {
  std::vector<Arc> edges;
  for (auto [u, v] : arcs_)
    if (u < v && has_arc(v, u)) edges.emplace_back(u, v);
  return edges;
}

Digraph orbital_closure(const PermGroup& g, const std::vector<Arc>& seeds) {
  std::set<Arc> closed;
  std::vector<Arc> frontier;
  for (auto [u, v] : seeds) {
    if (u < 0 || u >= g.degree() || v < 0 || v >= g.degree())
      throw validation_error("seed endpoint out of range");
    if (closed.insert({u, v}).second) frontier.push_back({u, v});
  }
  while (!frontier.empty()) {
    std::vector<Arc> next;
    for (auto [u, v] : frontier)
      for (const auto& gen : g.generators()) {
        Arc image{gen.apply(u), gen.apply(v)};
        if (closed.insert(image).second) next.push_back(image);
      }
    frontier = std::move(next);
  }
  return {g.degree(), {closed.begin(), closed.end()}};
}

Digraph cayley_digraph(const AbelianGroup& h, const std::vector<Element>& s) {
  std::int64_t n = h.order();
  std::vector<Arc> arcs;
  for (std::int64_t x = 0; x < n; ++x) {
    Element ex = h.element_at(x);
    for (const auto& step : s) {
      h.validate_tuple(step);
      arcs.emplace_back(static_cast<int>(x),
                        static_cast<int>(h.index_of(h.add(ex, step))));
    }
  }
  return {static_cast<int>(n), std::move(arcs)};
}

namespace {

// Iterated neighborhood-class refinement (directed 1-WL). Stable colors are
// used both to cut the backtracking and as an isomorphism invariant.
std::vector<int> refine_colors(const Digraph& d) {
  int n = d.vertex_count();
  std::vector<int> color(n, 0);
  for (int v = 0; v < n; ++v)
    color[v] = (static_cast<int>(d.out_neighbors(v).size()) * (n + 1) +
                static_cast<int>(d.in_neighbors(v).size())) * 2 +
               (d.has_arc(v, v) ? 1 : 0);
  // normalize
  auto normalize = [&](std::vector<std::pair<std::vector<int>, int>>& keys) {
    std::map<std::vector<int>, int> ids;
    for (auto& [key, idx] : keys) {
      auto it = ids.find(key);
      if (it == ids.end()) it = ids.emplace(key, static_cast<int>(ids.size())).first;
      color[idx] = it->second;
    }
    return static_cast<int>(ids.size());
  };
  int classes = 0;
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> keys;
    keys.reserve(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> key{color[v]};
      std::vector<int> outc, inc;
      for (int w : d.out_neighbors(v)) outc.push_back(color[w]);
      for (int w : d.in_neighbors(v)) inc.push_back(color[w]);
      std::sort(outc.begin(), outc.end());
      std::sort(inc.begin(), inc.end());
      key.push_back(-1);
      key.insert(key.end(), outc.begin(), outc.end());
      key.push_back(-2);
      key.insert(key.end(), inc.begin(), inc.end());
      keys.emplace_back(std::move(key), v);
    }
    std::sort(keys.begin(), keys.end());
    int next_classes = normalize(keys);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return color;
}

struct SearchContext {
  const Digraph& domain;
  const Digraph& target;
  std::vector<int> domain_color, target_color;
  std::vector<int> order;    // vertices of domain in mapping order
  std::vector<int> anchor;   // earlier position adjacent to order[k], or -1
  std::vector<int> image;    // image[v] for mapped v, else -1
  std::vector<char> used;    // image vertices already taken
  std::int64_t nodes = 0;
  std::int64_t budget;
  bool all_maps;             // collect all (automorphisms) or stop at first
  std::vector<Perm> found;
  bool success = false;

  SearchContext(const Digraph& dom, const Digraph& tgt, std::int64_t b, bool all)
      : domain(dom),
        target(tgt),
        image(dom.vertex_count(), -1),
        used(tgt.vertex_count(), 0),
        budget(b),
        all_maps(all) {}
};

// Static mapping order: BFS over the underlying (symmetrized) graph so that
// each vertex after a component root has an already-mapped neighbor.
void build_order(SearchContext& ctx) {
  const Digraph& d = ctx.domain;
  int n = d.vertex_count();
  std::vector<char> placed(n, 0);
  ctx.order.reserve(n);
  ctx.anchor.assign(n, -1);
  std::vector<std::vector<int>> und(n);
  for (auto [u, v] : d.arcs())
    if (u != v) {
      und[u].push_back(v);
      und[v].push_back(u);
    }
  for (auto& nb : und) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  while (static_cast<int>(ctx.order.size()) < n) {
    // component root: smallest color class, then smallest index
    int root = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (root == -1 || ctx.domain_color[v] < ctx.domain_color[root] ||
          (ctx.domain_color[v] == ctx.domain_color[root] && v < root))
        root = v;
    }
    std::vector<int> queue{root};
    placed[root] = 1;
    ctx.order.push_back(root);
    std::size_t qi = 0;
    while (qi < queue.size()) {
      int u = queue[qi++];
      for (int w : und[u]) {
        if (placed[w]) continue;
        placed[w] = 1;
        ctx.anchor[w] = u;
        ctx.order.push_back(w);
        queue.push_back(w);
      }
    }
  }
}

bool consistent(const SearchContext& ctx, int v, int w) {
  // all arcs between v and previously mapped vertices must be preserved,
  // in both directions, along with the non-arcs
  for (std::size_t k = 0; k < ctx.order.size(); ++k) {
    int u = ctx.order[k];
    if (u == v) break;
    int iu = ctx.image[u];
    if (iu < 0) break;
    if (ctx.domain.has_arc(v, u) != ctx.target.has_arc(w, iu)) return false;
    if (ctx.domain.has_arc(u, v) != ctx.target.has_arc(iu, w)) return false;
  }
  return true;
}

bool extend(SearchContext& ctx, std::size_t pos) {
  if (pos == ctx.order.size()) {
    std::vector<int> images(ctx.image.begin(), ctx.image.end());
    ctx.found.emplace_back(std::move(images));
    ctx.success = true;
    return !ctx.all_maps;  // stop early unless enumerating automorphisms
  }
  int v = ctx.order[pos];
  if (++ctx.nodes > ctx.budget)
    throw cap_exceeded("automorphism search exceeded node budget");

  std::vector<int> candidates;
  if (ctx.anchor[v] >= 0) {
    int ia = ctx.image[ctx.anchor[v]];
    // candidates must be underlying-adjacent to the anchor's image
    std::set<int> cand;
    for (int w : ctx.target.out_neighbors(ia)) cand.insert(w);
    for (int w : ctx.target.in_neighbors(ia)) cand.insert(w);
    candidates.assign(cand.begin(), cand.end());
  } else {
    candidates.resize(ctx.target.vertex_count());
    for (int w = 0; w < ctx.target.vertex_count(); ++w) candidates[w] = w;
  }
  for (int w : candidates) {
    if (ctx.used[w] || ctx.target_color[w] != ctx.domain_color[v]) continue;
    if (ctx.domain.has_arc(v, v) != ctx.target.has_arc(w, w)) continue;
    if (!consistent(ctx, v, w)) continue;
    ctx.image[v] = w;
    ctx.used[w] = 1;
    if (extend(ctx, pos + 1)) return true;
    ctx.image[v] = -1;
    ctx.used[w] = 0;
  }
  return false;
}

// Colors must be comparable across the two digraphs, so refine them jointly
// on the disjoint union.
bool joint_colors(const Digraph& a, const Digraph& b, std::vector<int>& ca,
                  std::vector<int>& cb) {
  int na = a.vertex_count(), nb = b.vertex_count();
  std::vector<Arc> arcs = a.arcs();
  for (auto [u, v] : b.arcs()) arcs.emplace_back(u + na, v + na);
  Digraph both(na + nb, std::move(arcs));
  std::vector<int> color = refine_colors(both);
  ca.assign(color.begin(), color.begin() + na);
  cb.assign(color.begin() + na, color.end());
  std::vector<int> sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;  // color multisets must agree for an isomorphism to exist
}

}  // namespace

PermGroup automorphism_group_oracle(const Digraph& d, std::int64_t node_budget) {
  if (d.vertex_count() > 64)
    throw validation_error("automorphism oracle is limited to 64 vertices");
  SearchContext ctx(d, d, node_budget, /*all_maps=*/true);
  ctx.domain_color = refine_colors(d);
  ctx.target_color = ctx.domain_color;
  build_order(ctx);
  extend(ctx, 0);
  std::sort(ctx.found.begin(), ctx.found.end());
  std::vector<Perm> gens = greedy_generators(d.vertex_count(), ctx.found);
  return PermGroup::with_elements(d.vertex_count(), std::move(gens), std::move(ctx.found));
}

bool is_edge_transitive_oracle(const Digraph& d, std::int64_t node_budget) {
  if (!d.is_graph())
    throw validation_error("edge transitivity is defined for graphs (symmetric arcs)");
  auto edges = d.undirected_edges();
  if (edges.empty()) return true;
  PermGroup aut = automorphism_group_oracle(d, node_budget);
  std::set<Arc> orbit_of_first;
  auto [u0, v0] = edges.front();
  for (const auto& g : aut.elements()) {
    int a = g.apply(u0), b = g.apply(v0);
    orbit_of_first.insert({std::min(a, b), std::max(a, b)});
  }
  return orbit_of_first.size() == edges.size();
}

bool is_vertex_transitive_oracle(const Digraph& d, std::int64_t node_budget) {
  PermGroup aut = automorphism_group_oracle(d, node_budget);
  return aut.is_transitive();
}

bool isomorphic_oracle(const Digraph& a, const Digraph& b, std::int64_t node_budget) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.arcs().size() != b.arcs().size()) return false;
  if (a.vertex_count() > 64)
    throw validation_error("isomorphism oracle is limited to 64 vertices");
  SearchContext ctx(a, b, node_budget, /*all_maps=*/false);
  if (!joint_colors(a, b, ctx.domain_color, ctx.target_color)) return false;
  build_order(ctx);
  extend(ctx, 0);
  return ctx.success;
}

}  // namespace specblocks
