#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specblocks/bicayley.hpp"
#include "specblocks/parallel.hpp"

namespace specblocks {

// GP(n,s): the cubic bicirculant over Z_n with outer connections {1,-1},
// spokes, and inner connections {s,-s}; s is normalized to min(s, n-s).
struct GPGraph {
  int n, s;
  Digraph graph;
  SemiregularFrame frame;
  BiSymbol symbol;
};

GPGraph gp_graph(int n, int s);

struct GPFilterReport {
  int n, s;
  bool passes = false;          // some non-principal character solves Eq. below
  bool cube_quotient = false;   // 4 | n and s = +-1 (mod 4)
  bool petersen_quotient = false;  // 5 | n and s = +-2 (mod 5)
  std::string detail;
};

// Decides by exact modular arithmetic whether a non-principal character chi
// can satisfy (chi(1)+chi(-1)-1)(chi(s)+chi(-s)-1) = 1, the necessary
// condition for a mixer and hence for edge-transitivity. A negative report
// certifies the graph is not edge-transitive.
GPFilterReport gp_character_filter(int n, int s);

enum class CoverBase { cube, petersen };

// c0 + c1 * a over the integers; reduced mod m only when solving.
struct AffineVoltage {
  std::int64_t c0 = 0, c1 = 0;
  friend bool operator==(const AffineVoltage&, const AffineVoltage&) = default;
};

// Base graph, spanning tree, parameterized cotree voltages, homology cycle
// list and the distinguished automorphism whose lift condition generates
// the consistency system.
struct VoltageBase {
  Digraph base;
  std::vector<Arc> tree_edges;
  std::vector<std::pair<Arc, AffineVoltage>> cotree_voltages;
  std::vector<std::vector<int>> cycles;  // closed vertex walks
  Perm alpha;
};

VoltageBase voltage_base(CoverBase which);

// lambda * lhs = rhs over Z_m, regenerated by walking each homology cycle
// and its alpha-image through the voltage assignment.
struct LiftEquation {
  AffineVoltage lhs, rhs;
  friend bool operator==(const LiftEquation&, const LiftEquation&) = default;
};

std::vector<LiftEquation> lift_equations(CoverBase which);

struct LiftSolution {
  std::int64_t lambda, a;
  int n, s;  // the covering GP graph, canonical label
};

// All (lambda, a) in units(Z_m) x Z_m satisfying the voltage-consistency
// system, each labeled with its derived covering GP graph. Empty when the
// automorphism does not lift.
std::vector<LiftSolution> gp_cover_lift(CoverBase which, int m,
                                        std::int64_t node_budget = kDefaultNodeBudget);

struct GPClassifyRow {
  int n, s;
  bool filter_passes = false;
  bool theory_edge_transitive = false;
  int oracle_edge_transitive = -1;  // -1 when out of oracle range
};

struct GPClassifyResult {
  std::vector<std::pair<int, int>> edge_transitive;  // canonical (n,s), sorted
  std::vector<GPClassifyRow> rows;
};

// Classification pipeline: character filter (necessary condition), then
// cover-lift enumeration over all admissible cyclic fibers, then an
// exhaustive cross-check of every parameter pair against the independent
// edge-transitivity oracle (for 2n <= 64). Throws oracle_disagreement when
// the theory path and the brute-force oracle diverge.
GPClassifyResult gp_classify(int n_max, Exec exec = Exec::serial,
                             std::int64_t node_budget = kDefaultNodeBudget);

}  // namespace specblocks
