#include <algorithm>
#include <random>

#include "doctest.h"
#include "specblocks/perm.hpp"
#include "support.hpp"

using namespace specblocks;
using testsupport::cyc;

TEST_CASE("orbit closure") {
  Perm h = cyc(12, {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}});
  CHECK(orbit({h}, 0) == std::vector<int>{0, 1, 2, 3});
  CHECK(orbit({Perm(12)}, 5) == std::vector<int>{5});
  CHECK(orbit({cyc(3, {{0, 1}}), cyc(3, {{1, 2}})}, 0) == std::vector<int>{0, 1, 2});

  // fixed point of applying any generator pointwise
  std::vector<Perm> gens{cyc(6, {{0, 1, 2}}), cyc(6, {{2, 3}, {4, 5}})};
  auto orb = orbit(gens, 0);
  for (const auto& g : gens)
    for (int p : orb) CHECK(std::binary_search(orb.begin(), orb.end(), g.apply(p)));

  CHECK_THROWS_AS(orbit({cyc(3, {{0, 1}}), cyc(4, {{0, 1}})}, 0), Error);
}

TEST_CASE("group enumeration") {
  PermGroup z4(4, {cyc(4, {{0, 1, 2, 3}})});
  CHECK(z4.order(100) == 4);
  CHECK_THROWS_AS((void)PermGroup(4, {cyc(4, {{0, 1, 2, 3}})}).elements(3), Error);

  // breadth-first word order: e, a, a^2, a^3
  const auto& elems = z4.elements();
  Perm a = cyc(4, {{0, 1, 2, 3}});
  CHECK(elems[0] == Perm(4));
  CHECK(elems[1] == a);
  CHECK(elems[2] == a.then(a));
  CHECK(elems[3] == a.then(a).then(a));

  // word order over two generators: e, a, b, ab, ba, aba
  Perm ga = cyc(3, {{0, 1}});
  Perm gb = cyc(3, {{1, 2}});
  PermGroup s3(3, {ga, gb});
  const auto& s3_elems = s3.elements();
  REQUIRE(s3_elems.size() == 6);
  CHECK(s3_elems[0] == Perm(3));
  CHECK(s3_elems[1] == ga);
  CHECK(s3_elems[2] == gb);
  CHECK(s3_elems[3] == ga.then(gb));
  CHECK(s3_elems[4] == gb.then(ga));
  CHECK(s3_elems[5] == ga.then(gb).then(ga));

  PermGroup s5(5, {cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})});
  CHECK(s5.order() == 120);

  // closure under composition and inverse; order divides degree!
  std::mt19937 rng(7);
  const auto& all = s5.elements();
  for (int trial = 0; trial < 50; ++trial) {
    const Perm& x = all[rng() % all.size()];
    const Perm& y = all[rng() % all.size()];
    CHECK(s5.contains(x.then(y)));
    CHECK(s5.contains(x.inverse()));
  }
  CHECK(120 % s5.order() == 0);
}

TEST_CASE("semiregularity") {
  PermGroup h(12, {cyc(12, {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}})});
  auto rep = is_semiregular(h);
  CHECK(rep.semiregular);
  REQUIRE(rep.orbits.size() == 3);
  CHECK(rep.orbits[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(rep.orbits[1] == std::vector<int>{4, 5, 6, 7});
  CHECK(rep.orbits[2] == std::vector<int>{8, 9, 10, 11});

  CHECK_FALSE(is_semiregular(PermGroup(4, {cyc(4, {{0, 1, 2}})})).semiregular);
  CHECK_FALSE(
      is_semiregular(PermGroup(4, {cyc(4, {{0, 1}}), cyc(4, {{2, 3}})})).semiregular);

  // orbit count * orbit size = degree when semiregular
  CHECK(rep.orbits.size() * rep.orbits[0].size() == 12);
  CHECK(static_cast<std::int64_t>(rep.orbits[0].size()) == h.order());
}

TEST_CASE("invariant partitions and kernels") {
  PermGroup z4(4, {cyc(4, {{0, 1, 2, 3}})});
  Partition halves(4, {{0, 2}, {1, 3}});
  Partition bad(4, {{0, 1}, {2, 3}});

  CHECK(is_invariant_partition(z4, halves));
  CHECK_FALSE(is_invariant_partition(z4, bad));
  CHECK(is_invariant_partition(z4, Partition::universal(4)));

  PermGroup kernel = kernel_of_partition_action(z4, halves);
  CHECK(kernel.order() == 2);
  CHECK(kernel.contains(cyc(4, {{0, 2}, {1, 3}})));

  CHECK(kernel_of_partition_action(z4, Partition::singletons(4)).order() == 1);
  CHECK_THROWS_AS(kernel_of_partition_action(z4, bad), Error);

  // kernel is normal: conjugates stabilize every cell
  PermGroup s4(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})});
  Partition pairs(4, {{0, 1}, {2, 3}});
  // S4 doesn't keep that invariant; use the dihedral subgroup instead
  PermGroup d4(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{1, 3}})});
  Partition diag(4, {{0, 2}, {1, 3}});
  PermGroup k = kernel_of_partition_action(d4, diag);
  for (const auto& g : d4.elements())
    for (const auto& e : k.elements()) {
      Perm conj = g.inverse().then(e).then(g);
      for (int p = 0; p < 4; ++p)
        CHECK(diag.cell_index_of(conj.apply(p)) == diag.cell_index_of(p));
    }
  (void)s4;
  (void)pairs;
}

TEST_CASE("minimal blocks") {
  PermGroup z4(4, {cyc(4, {{0, 1, 2, 3}})});
  CHECK(minimal_block(z4, 0, 2) == Partition(4, {{0, 2}, {1, 3}}));

  PermGroup s4(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})});
  CHECK(minimal_block(s4, 0, 1).is_universal());

  PermGroup z5(5, {cyc(5, {{0, 1, 2, 3, 4}})});
  CHECK(minimal_block(z5, 0, 1).is_universal());

  PermGroup intransitive(4, {cyc(4, {{0, 1}})});
  CHECK_THROWS_AS(minimal_block(intransitive, 0, 1), Error);
}

TEST_CASE("minimal block is the finest invariant partition joining the pair") {
  // brute force over all invariant partitions at small degree
  std::vector<PermGroup> groups;
  groups.emplace_back(6, std::vector<Perm>{cyc(6, {{0, 1, 2, 3, 4, 5}})});
  groups.emplace_back(8, std::vector<Perm>{cyc(8, {{0, 1, 2, 3, 4, 5, 6, 7}}),
                                           cyc(8, {{1, 7}, {2, 6}, {3, 5}})});
  groups.emplace_back(6, std::vector<Perm>{cyc(6, {{0, 1, 2}, {3, 4, 5}}),
                                           cyc(6, {{0, 3}, {1, 4}, {2, 5}})});
  for (const auto& g : groups) {
    auto invariant = testsupport::invariant_partitions_brute_force(g);
    for (int q = 1; q < g.degree(); ++q) {
      Partition mb = minimal_block(g, 0, q);
      CHECK(is_invariant_partition(g, mb));
      CHECK(mb.cell_index_of(0) == mb.cell_index_of(q));
      for (const auto& p : invariant)
        if (p.cell_index_of(0) == p.cell_index_of(q)) CHECK(mb.refines(p));
    }
  }
}

TEST_CASE("all block systems") {
  PermGroup z4(4, {cyc(4, {{0, 1, 2, 3}})});
  auto systems = all_block_systems_oracle(z4);
  CHECK(systems.size() == 3);

  PermGroup z5(5, {cyc(5, {{0, 1, 2, 3, 4}})});
  CHECK(all_block_systems_oracle(z5).size() == 2);

  // cross-check against exhaustive enumeration on dihedral and cyclic cases
  for (const auto& g :
       {PermGroup(6, {cyc(6, {{0, 1, 2, 3, 4, 5}})}),
        PermGroup(8, {cyc(8, {{0, 1, 2, 3, 4, 5, 6, 7}}), cyc(8, {{1, 7}, {2, 6}, {3, 5}})})}) {
    auto fast = all_block_systems_oracle(g);
    auto brute = testsupport::invariant_partitions_brute_force(g);
    std::sort(brute.begin(), brute.end());
    std::vector<Partition> fast_sorted = fast;
    std::sort(fast_sorted.begin(), fast_sorted.end());
    CHECK(fast_sorted == brute);
  }
}

TEST_CASE("partition basics") {
  Partition p(5, {{3, 4}, {0, 1, 2}});
  CHECK(p.cell(0) == std::vector<int>{0, 1, 2});  // canonical order by min
  CHECK_FALSE(p.is_uniform());
  CHECK(Partition(4, {{0, 2}, {1, 3}}).is_uniform());
  CHECK(Partition(4, {{0, 1}, {2, 3}}).join(Partition(4, {{1, 2}, {0}, {3}})).is_universal());
  CHECK_THROWS_AS(Partition(3, {{0, 1}}), Error);          // not covering
  CHECK_THROWS_AS(Partition(3, {{0, 1}, {1, 2}}), Error);  // overlap
}
