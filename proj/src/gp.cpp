#include "specblocks/gp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace specblocks {

GPGraph gp_graph(int n, int s) {
  if (n < 3) throw validation_error("GP(n,s) needs n >= 3");
  s = ((s % n) + n) % n;
  if (s == 0) throw validation_error("GP(n,s) needs s nonzero mod n");
  if ((2 * s) % n == 0) throw validation_error("GP(n,s) needs 2s nonzero mod n");
  s = std::min(s, n - s);

  AbelianGroup zn({n});
  Symbol sym(zn, 2);
  sym.set_entry(0, 0, {{1}, {n - 1}});
  sym.set_entry(0, 1, {{0}});
  sym.set_entry(1, 0, {{0}});
  sym.set_entry(1, 1, {{s}, {n - s}});
  SymbolRealization real = digraph_from_symbol(sym);
  return {n, s, std::move(real.digraph), std::move(real.frame),
          BiSymbol::from_symbol(sym)};
}

GPFilterReport gp_character_filter(int n, int s) {
  if (n < 3) throw validation_error("GP(n,s) needs n >= 3");
  s = ((s % n) + n) % n;
  if (s == 0 || (2 * s) % n == 0) throw validation_error("invalid GP parameters");

  GPFilterReport report;
  report.n = n;
  report.s = std::min(s, n - s);
  report.cube_quotient = n % 4 == 0 && (s % 4 == 1 || s % 4 == 3);
  report.petersen_quotient = n % 5 == 0 && (s % 5 == 2 || s % 5 == 3);
  report.passes = report.cube_quotient || report.petersen_quotient;
  std::ostringstream os;
  if (!report.passes) {
    os << "no non-principal character solves the filter equation; "
          "no mixer is possible, hence not edge-transitive";
  } else if (report.cube_quotient && report.petersen_quotient) {
    os << "quotients onto both the cube and the Petersen graph";
  } else if (report.cube_quotient) {
    os << "the quotient graph is the cube";
  } else {
    os << "the quotient graph is the Petersen graph";
  }
  report.detail = os.str();
  return report;
}

namespace {

Digraph undirected(int n, const std::vector<Arc>& edges) {
  std::vector<Arc> arcs;
  for (auto [u, v] : edges) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return {n, std::move(arcs)};
}

}  // namespace

VoltageBase voltage_base(CoverBase which) {
  if (which == CoverBase::cube) {
    // outer cycle 0123, inner cycle 4567, spokes i -- i+4
    std::vector<Arc> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                           {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    VoltageBase vb{undirected(8, edges),
                   {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}},
                   {{{3, 0}, {1, 0}},
                    {{4, 5}, {0, 1}},
                    {{5, 6}, {0, 1}},
                    {{6, 7}, {0, 1}},
                    {{7, 4}, {1, 1}}},
                   {{3, 0, 1, 2, 3},
                    {4, 5, 1, 0, 4},
                    {5, 6, 2, 1, 5},
                    {6, 7, 3, 2, 6},
                    {7, 4, 0, 1, 2, 3, 7}},
                   Perm::from_cycles(8, {{1, 3, 4}, {5, 2, 7}})};
    return vb;
  }
  // Petersen graph: outer cycle 01234, inner 5 7 9 6 8, spokes i -- i+5
  std::vector<Arc> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                         {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                         {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}};
  VoltageBase vb{undirected(10, edges),
                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}},
                 {{{4, 0}, {1, 0}},
                  {{5, 7}, {0, 1}},
                  {{6, 8}, {0, 1}},
                  {{7, 9}, {0, 1}},
                  {{8, 5}, {1, 1}},
                  {{9, 6}, {1, 1}}},
                 {{4, 0, 1, 2, 3, 4},
                  {5, 7, 2, 1, 0, 5},
                  {6, 8, 3, 2, 1, 6},
                  {7, 9, 4, 3, 2, 7},
                  {8, 5, 0, 1, 2, 3, 8},
                  {9, 6, 1, 2, 3, 4, 9}},
                 Perm::from_cycles(10, {{1, 5, 4}, {2, 8, 9}, {3, 6, 7}})};
  return vb;
}

namespace {

AffineVoltage arc_voltage(const VoltageBase& vb, int u, int v) {
  if (!vb.base.has_arc(u, v)) throw validation_error("walk step is not an arc");
  for (const auto& [arc, volt] : vb.cotree_voltages) {
    if (arc.first == u && arc.second == v) return volt;
    if (arc.first == v && arc.second == u) return {-volt.c0, -volt.c1};
  }
  for (const auto& e : vb.tree_edges)
    if ((e.first == u && e.second == v) || (e.first == v && e.second == u))
      return {0, 0};
  throw validation_error("arc carries no voltage assignment");
}

AffineVoltage walk_voltage(const VoltageBase& vb, const std::vector<int>& walk) {
  AffineVoltage total{0, 0};
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    AffineVoltage step = arc_voltage(vb, walk[i], walk[i + 1]);
    total.c0 += step.c0;
    total.c1 += step.c1;
  }
  return total;
}

}  // namespace

std::vector<LiftEquation> lift_equations(CoverBase which) {
  VoltageBase vb = voltage_base(which);
  std::vector<LiftEquation> eqs;
  for (const auto& cycle : vb.cycles) {
    std::vector<int> image(cycle.size());
    for (std::size_t i = 0; i < cycle.size(); ++i) image[i] = vb.alpha.apply(cycle[i]);
    eqs.push_back({walk_voltage(vb, cycle), walk_voltage(vb, image)});
  }
  return eqs;
}

namespace {

std::int64_t mod(std::int64_t x, std::int64_t m) {
  x %= m;
  return x < 0 ? x + m : x;
}

// derived graph of the voltage assignment at parameter value a over Z_m
Digraph derived_cover(const VoltageBase& vb, int m, std::int64_t a) {
  int base_n = vb.base.vertex_count();
  std::vector<Arc> arcs;
  for (auto [u, v] : vb.base.arcs()) {
    AffineVoltage volt = arc_voltage(vb, u, v);
    std::int64_t shift = mod(volt.c0 + volt.c1 * a, m);
    for (int x = 0; x < m; ++x)
      arcs.emplace_back(u * m + x, v * m + static_cast<int>(mod(x + shift, m)));
  }
  return {base_n * m, std::move(arcs)};
}

}  // namespace

std::vector<LiftSolution> gp_cover_lift(CoverBase which, int m, std::int64_t node_budget) {
  if (m < 1) throw validation_error("fiber order must be at least 1");
  std::vector<LiftEquation> eqs = lift_equations(which);
  VoltageBase vb = voltage_base(which);
  int base_cycle = which == CoverBase::cube ? 4 : 5;
  int cover_n = base_cycle * m;

  std::vector<LiftSolution> out;
  for (std::int64_t lambda = 0; lambda < m; ++lambda) {
    if (m > 1 && std::gcd(lambda, static_cast<std::int64_t>(m)) != 1) continue;
    for (std::int64_t a = 0; a < m; ++a) {
      bool ok = true;
      for (const auto& eq : eqs) {
        std::int64_t lhs = mod(lambda * (eq.lhs.c0 + eq.lhs.c1 * a), m);
        std::int64_t rhs = mod(eq.rhs.c0 + eq.rhs.c1 * a, m);
        if (lhs != rhs) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      // label the derived covering graph as a GP(n,s) in canonical form
      Digraph cover = derived_cover(vb, m, a);
      int label = -1;
      for (int cand = 1; 2 * cand < cover_n; ++cand) {
        if (isomorphic_oracle(cover, gp_graph(cover_n, cand).graph, node_budget)) {
          label = cand;
          break;
        }
      }
      if (label == -1)
        throw oracle_disagreement("derived cover is not a generalized Petersen graph");
      out.push_back({lambda, a, cover_n, label});
    }
  }
  return out;
}

GPClassifyResult gp_classify(int n_max, Exec exec, std::int64_t node_budget) {
  if (n_max < 3) throw validation_error("classification needs n_max >= 3");

  // theory path: all covers of the two base graphs whose distinguished
  // automorphism lifts
  std::vector<std::pair<int, int>> theory;
  for (int m = 1; 4 * m <= n_max; ++m)
    for (const auto& sol : gp_cover_lift(CoverBase::cube, m, node_budget))
      theory.emplace_back(sol.n, sol.s);
  for (int m = 1; 5 * m <= n_max; ++m)
    for (const auto& sol : gp_cover_lift(CoverBase::petersen, m, node_budget))
      theory.emplace_back(sol.n, sol.s);
  std::sort(theory.begin(), theory.end());
  theory.erase(std::unique(theory.begin(), theory.end()), theory.end());

  // exhaustive oracle cross-check over every valid parameter pair
  std::vector<GPClassifyRow> rows;
  for (int n = 3; n <= n_max; ++n)
    for (int s = 1; 2 * s < n; ++s) rows.push_back({n, s, false, false, -1});

  parallel_for(static_cast<std::int64_t>(rows.size()), exec, [&](std::int64_t i) {
    GPClassifyRow& row = rows[static_cast<std::size_t>(i)];
    row.filter_passes = gp_character_filter(row.n, row.s).passes;
    row.theory_edge_transitive =
        std::binary_search(theory.begin(), theory.end(), std::make_pair(row.n, row.s));
    if (2 * row.n <= 64)
      row.oracle_edge_transitive =
          is_edge_transitive_oracle(gp_graph(row.n, row.s).graph, node_budget) ? 1 : 0;
  });

  for (const auto& row : rows) {
    if (row.oracle_edge_transitive == -1) continue;
    bool oracle = row.oracle_edge_transitive == 1;
    if (oracle != row.theory_edge_transitive) {
      std::ostringstream os;
      os << "GP(" << row.n << "," << row.s << "): theory says "
         << (row.theory_edge_transitive ? "edge-transitive" : "not edge-transitive")
         << " but the oracle disagrees";
      throw oracle_disagreement(os.str());
    }
    if (!row.filter_passes && oracle)
      throw oracle_disagreement("character filter rejected an edge-transitive graph");
  }
  return {std::move(theory), std::move(rows)};
}

}  // namespace specblocks
