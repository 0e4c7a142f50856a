#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "specblocks/blocks.hpp"
#include "specblocks/gp.hpp"
#include "specblocks/polyroots.hpp"
#include "support.hpp"

using namespace specblocks;
using testsupport::cyc;

namespace {

// coefficient of x^i at index i, so the result is monic with the leading
// coefficient last, as polynomial_roots expects
std::vector<cplx> expand_from_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> coeffs{cplx{1, 0}};
  for (const auto& r : roots) {
    std::vector<cplx> next(coeffs.size() + 1, cplx{0, 0});
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * r;
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

double match_roots(const std::vector<cplx>& expected, std::vector<cplx> got) {
  REQUIRE(expected.size() == got.size());
  double worst = 0;
  for (const auto& e : expected) {
    std::size_t best = 0;
    double best_dist = 1e300;
    for (std::size_t i = 0; i < got.size(); ++i) {
      double d = std::abs(got[i] - e);
      if (d < best_dist) {
        best_dist = d;
        best = i;
      }
    }
    worst = std::max(worst, best_dist);
    got.erase(got.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return worst;
}

}  // namespace

TEST_CASE("stress: polynomial roots from known configurations") {
  std::mt19937_64 rng(0x5eedb001);
  std::uniform_real_distribution<double> unif(-3.0, 3.0);

  // simple roots with an enforced minimum gap
  for (int trial = 0; trial < 300; ++trial) {
    int degree = 2 + static_cast<int>(rng() % 5);
    std::vector<cplx> roots;
    while (static_cast<int>(roots.size()) < degree) {
      cplx cand{unif(rng), unif(rng)};
      bool far = true;
      for (const auto& r : roots) far = far && std::abs(cand - r) > 0.05;
      if (far) roots.push_back(cand);
    }
    auto got = polynomial_roots(expand_from_roots(roots));
    CHECK(match_roots(roots, got) < 1e-8);
  }

  // multiple roots: every multiplicity pattern up to degree 5
  const std::vector<std::vector<int>> patterns{{2},    {2, 1}, {3},    {2, 2}, {3, 1},
                                               {4},    {2, 1, 1}, {3, 2}, {4, 1}, {5},
                                               {2, 2, 1}, {3, 1, 1}};
  for (int trial = 0; trial < 200; ++trial) {
    const auto& pattern = patterns[rng() % patterns.size()];
    std::vector<cplx> distinct, with_multiplicity;
    for (int mult : pattern) {
      cplx cand;
      bool far = false;
      while (!far) {
        cand = {unif(rng), unif(rng)};
        far = true;
        for (const auto& r : distinct) far = far && std::abs(cand - r) > 0.3;
      }
      distinct.push_back(cand);
      for (int i = 0; i < mult; ++i) with_multiplicity.push_back(cand);
    }
    auto got = polynomial_roots(expand_from_roots(with_multiplicity));
    CHECK(match_roots(with_multiplicity, got) < 1e-7);
  }
}

TEST_CASE("stress: automorphism counts of standard graphs") {
  auto complete = [](int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) arcs.emplace_back(i, j);
    return Digraph(n, arcs);
  };
  CHECK(automorphism_group_oracle(complete(4)).order() == 24);
  CHECK(automorphism_group_oracle(complete(5)).order() == 120);

  // cycle C6: dihedral of order 12
  AbelianGroup z6({6});
  CHECK(automorphism_group_oracle(cayley_digraph(z6, {{1}, {5}})).order() == 12);

  // path on 4 vertices: only the reversal
  Digraph path(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}});
  CHECK(automorphism_group_oracle(path).order() == 2);

  // star K_{1,4}: S4 on the leaves
  std::vector<Arc> star_arcs;
  for (int leaf = 1; leaf <= 4; ++leaf) {
    star_arcs.emplace_back(0, leaf);
    star_arcs.emplace_back(leaf, 0);
  }
  CHECK(automorphism_group_oracle(Digraph(5, star_arcs)).order() == 24);

  // complete bipartite K_{3,3}: (S3 x S3) x Z2
  std::vector<Arc> k33;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) {
      k33.emplace_back(i, j);
      k33.emplace_back(j, i);
    }
  CHECK(automorphism_group_oracle(Digraph(6, k33)).order() == 72);

  // prisms: 4n for n != 4 (the cube has extra symmetry)
  CHECK(automorphism_group_oracle(gp_graph(3, 1).graph).order() == 12);
  CHECK(automorphism_group_oracle(gp_graph(5, 1).graph).order() == 20);
  CHECK(automorphism_group_oracle(gp_graph(6, 1).graph).order() == 24);

  // Moebius-Kantor graph GP(8,3)
  CHECK(automorphism_group_oracle(gp_graph(8, 3).graph).order() == 96);
  // dodecahedron GP(10,2)
  CHECK(automorphism_group_oracle(gp_graph(10, 2).graph).order() == 120);
  // Desargues graph GP(10,3)
  CHECK(automorphism_group_oracle(gp_graph(10, 3).graph).order() == 240);
  // Nauru graph GP(12,5)
  CHECK(automorphism_group_oracle(gp_graph(12, 5).graph).order() == 144);
}

TEST_CASE("stress: block-system engine on an arc-transitive cover") {
  GPGraph gp = gp_graph(12, 5);
  PermGroup aut = automorphism_group_oracle(gp.graph);
  Symbol s = gp.symbol.to_symbol(gp.frame.abstract());
  const AbelianGroup& h = gp.frame.abstract();

  SpectrumResult spec = spectrum(s, 1e-8);
  CHECK(spec.warnings.empty());

  std::size_t total_dim = 0;
  for (const auto& entry : spec.entries) {
    // exact agreement between the enumerated kernel meet H and the perp
    CHECK(kernel_intersect_h(s, gp.frame, entry.lambda, 1e-8) ==
          perp_of_characters(h, entry.k_set).elements);

    auto sys = spectral_block_system(aut, s, gp.frame, entry.lambda, 1e-8);
    CHECK(is_invariant_partition(aut, sys.blocks));
    CHECK(sys.blocks.is_uniform());
    CHECK(sys.triple.delta.is_uniform());
    for (const auto& chi : entry.k_set)
      CHECK(check_refinement(sys.triple.delta,
                             delta_lambda_chi(s, chi, entry.lambda, 1e-8)));

    total_dim += eigenspace_W(s, gp.frame, entry.lambda, 1e-8).size();
  }
  CHECK(total_dim == 24);  // symmetric graph: eigenspaces fill the space

  // the valency eigenvalue has the universal block system on a connected graph
  auto principal = spectral_block_system(aut, s, gp.frame, {3, 0}, 1e-8);
  CHECK(principal.blocks.is_universal());
}
