#include <algorithm>

#include "doctest.h"
#include "specblocks/bicayley.hpp"
#include "specblocks/gp.hpp"
#include "support.hpp"

using namespace specblocks;
using testsupport::cyc;

TEST_CASE("M and N sets") {
  GPGraph cube = gp_graph(4, 1);
  const SemiregularFrame& f = cube.frame;

  // elements of H preserve their orbits: M = H, N = empty
  for (std::int64_t e = 0; e < 4; ++e) {
    MNSets mn = mn_sets(f.perm_at(e), f);
    CHECK(mn.m.size() == 4);
    CHECK(mn.n.empty());
    CHECK(classify_element(f.perm_at(e), f) == ElementClass::orbit_preserving);
  }

  // the inner/outer exchange of GP(4,1) is a swap
  Perm swap = cyc(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
  REQUIRE([&] {
    for (auto [u, v] : cube.graph.arcs())
      if (!cube.graph.has_arc(swap.apply(u), swap.apply(v))) return false;
    return true;
  }());
  MNSets mn = mn_sets(swap, f);
  CHECK(mn.m.empty());
  CHECK(mn.n.size() == 4);
  CHECK(classify_element(swap, f) == ElementClass::swap);

  // the cube automorphism fixing vertex 0 that maps outer 1 -> outer 3,
  // inner 4 -> outer 1 mixes the two orbits
  Perm mixer = cyc(8, {{1, 3, 4}, {5, 2, 7}});
  MNSets mixer_mn = mn_sets(mixer, f);
  CHECK(!mixer_mn.m.empty());
  CHECK(mixer_mn.m.size() != 4);
  CHECK(classify_element(mixer, f) == ElementClass::mixer);

  // |M| + |N| = |H| for every automorphism
  PermGroup aut = automorphism_group_oracle(cube.graph);
  for (const auto& g : aut.elements()) {
    MNSets sets = mn_sets(g, f);
    CHECK(sets.m.size() + sets.n.size() == 4);
  }
}

TEST_CASE("exactly one class per element") {
  for (auto [n, s] : {std::pair{4, 1}, {5, 2}, {6, 2}, {7, 2}, {8, 3}}) {
    GPGraph gp = gp_graph(n, s);
    PermGroup aut = automorphism_group_oracle(gp.graph);
    for (const auto& g : aut.elements()) {
      MNSets sets = mn_sets(g, gp.frame);
      int classes = 0;
      if (sets.m.size() == static_cast<std::size_t>(n)) ++classes;            // preserving
      if (sets.m.empty() && sets.n.size() == static_cast<std::size_t>(n)) ++classes;  // swap
      if (!sets.m.empty() && sets.m.size() != static_cast<std::size_t>(n)) ++classes; // mixer
      CHECK(classes == 1);
    }
  }
}

TEST_CASE("swap and mixer ground truth") {
  GPGraph gp72 = gp_graph(7, 2);
  PermGroup aut72 = automorphism_group_oracle(gp72.graph);
  CHECK_FALSE(has_mixer(aut72, gp72.frame));
  CHECK_FALSE(has_swap(aut72, gp72.frame));

  GPGraph gp31 = gp_graph(3, 1);
  PermGroup aut31 = automorphism_group_oracle(gp31.graph);
  CHECK(has_swap(aut31, gp31.frame));
  CHECK_FALSE(has_mixer(aut31, gp31.frame));

  GPGraph gp102 = gp_graph(10, 2);
  PermGroup aut102 = automorphism_group_oracle(gp102.graph);
  CHECK(has_mixer(aut102, gp102.frame));
  CHECK_FALSE(has_swap(aut102, gp102.frame));

  GPGraph gp41 = gp_graph(4, 1);
  PermGroup aut41 = automorphism_group_oracle(gp41.graph);
  CHECK(has_mixer(aut41, gp41.frame));
  CHECK(has_swap(aut41, gp41.frame));
}

TEST_CASE("character vanishing on M and N") {
  // every character vanishes on M_g = H for non-principal chi, trivially
  GPGraph cube = gp_graph(4, 1);
  for (std::int64_t e = 0; e < 4; ++e) {
    MNReport rep = mn_vanishing_check(cube.frame.perm_at(e), cube.symbol, cube.frame, 1e-9);
    CHECK(rep.ok);
  }

  // exhaustively on the cube: all chi outside K_{S,1} vanish on M_g, N_g
  PermGroup aut = automorphism_group_oracle(cube.graph);
  for (const auto& g : aut.elements()) {
    MNReport rep = mn_vanishing_check(g, cube.symbol, cube.frame, 1e-9);
    CHECK(rep.ok);
  }

  // mixer existence forces K_{S,d} beyond the principal character
  GPGraph gp102 = gp_graph(10, 2);
  PermGroup aut102 = automorphism_group_oracle(gp102.graph);
  REQUIRE(has_mixer(aut102, gp102.frame));
  Symbol sym = gp102.symbol.to_symbol(gp102.frame.abstract());
  SpectrumResult spec = spectrum(sym, 1e-8);
  const SpectrumEntry& d_entry = find_eigenvalue(spec, {1, 0}, 1e-8);
  CHECK(d_entry.k_set.size() > 1);
}

TEST_CASE("mixers in a three-orbit action") {
  // four disjoint triangles {i, i+4, i+8}: H = Z4 has three orbits, and the
  // full automorphism group moves vertices between them freely
  PermGroup h(12, {cyc(12, {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}})});
  SemiregularFrame f = SemiregularFrame::build(h);
  std::vector<Arc> arcs;
  for (int i = 0; i < 4; ++i)
    for (int a : {0, 4, 8})
      for (int b : {0, 4, 8})
        if (a != b) arcs.emplace_back(i + a, i + b);
  Digraph triangles(12, arcs);
  PermGroup aut = automorphism_group_oracle(triangles);
  CHECK(aut.order() == 31104);  // S3 wr S4
  CHECK(has_mixer(aut, f));

  // the subgroup generated by H and the orbit rotation only permutes the
  // orbits, so it has no mixer
  Perm rho = cyc(12, {{0, 4, 8}, {1, 5, 9}, {2, 6, 10}, {3, 7, 11}});
  PermGroup small(12, {h.generators().front(), rho});
  CHECK_FALSE(has_mixer(small, f));
}

TEST_CASE("bi-symbol validation") {
  AbelianGroup z4({4});
  Symbol bad(z4, 2);
  bad.set_entry(0, 0, {{1}});
  CHECK_THROWS_AS(BiSymbol::from_symbol(bad), Error);  // |S| != |R|

  Symbol three(z4, 3);
  CHECK_THROWS_AS(BiSymbol::from_symbol(three), Error);

  GPGraph gp = gp_graph(5, 2);
  CHECK(gp.symbol.valency() == 3);
  CHECK(gp.symbol.d() == 1);
  CHECK_THROWS_AS(mn_sets(Perm(12), SemiregularFrame::build(PermGroup(
                              12, {cyc(12, {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}})}))),
                  Error);
}
