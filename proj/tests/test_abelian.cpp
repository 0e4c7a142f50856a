#include <cmath>

#include "doctest.h"
#include "specblocks/abelian.hpp"
#include "specblocks/cmatrix.hpp"
#include "support.hpp"

using namespace specblocks;
using testsupport::cyc;

TEST_CASE("roots of unity") {
  CHECK(RootOfUnity::make(4, 4) == RootOfUnity{0, 1});
  CHECK(RootOfUnity::make(2, 8) == RootOfUnity{1, 4});
  CHECK(RootOfUnity::make(-1, 4) == RootOfUnity{3, 4});
  CHECK(RootOfUnity::make(1, 4).value() == cplx{0.0, 1.0});
  CHECK(RootOfUnity::make(1, 2).value() == cplx{-1.0, 0.0});
  CHECK(RootOfUnity::make(1, 3).times(RootOfUnity::make(1, 6)) == RootOfUnity{1, 2});
  CHECK(RootOfUnity::make(3, 4).inverse() == RootOfUnity{1, 4});
}

TEST_CASE("character evaluation") {
  AbelianGroup z4({4});
  CHECK(char_eval(z4, {1}, {1}) == RootOfUnity{1, 4});  // i
  CHECK(char_eval(z4, {0}, {3}).is_one());
  AbelianGroup z2z2({2, 2});
  CHECK(char_eval(z2z2, {1, 1}, {1, 1}).is_one());  // (-1)(-1) = 1
  CHECK(char_eval(z2z2, {1, 0}, {1, 1}) == RootOfUnity{1, 2});
}

TEST_CASE("character sums") {
  AbelianGroup z4({4});
  CHECK(std::abs(char_sum(z4, {1}, {{1}, {3}})) < 1e-12);
  CHECK(std::abs(char_sum(z4, {2}, {{1}, {2}, {3}}) - cplx{-1.0, 0.0}) < 1e-12);
  CHECK(char_sum(z4, {2}, {}) == cplx{0.0, 0.0});

  // orthogonality: sum over H of chi vanishes for every non-principal chi,
  // and chi(H \ A) = -chi(A)
  for (const AbelianGroup& h : {AbelianGroup({6}), AbelianGroup({2, 4}), AbelianGroup({3, 3})}) {
    auto all = h.all_elements();
    for (std::int64_t c = 1; c < h.order(); ++c) {
      Char chi = h.element_at(c);
      CHECK(std::abs(char_sum(h, chi, all)) < 1e-9);
      std::vector<Element> a{all[0], all[2]};
      std::vector<Element> rest(all.begin() + 1, all.begin() + 2);
      for (std::size_t i = 3; i < all.size(); ++i) rest.push_back(all[i]);
      CHECK(std::abs(char_sum(h, chi, rest) + char_sum(h, chi, a)) < 1e-9);
    }
  }
}

TEST_CASE("nonvanishing character exists on proper nonempty subsets") {
  AbelianGroup h({8});
  auto all = h.all_elements();
  for (unsigned mask = 1; mask + 1 < (1u << 8); ++mask) {
    std::vector<Element> subset;
    for (int b = 0; b < 8; ++b)
      if (mask & (1u << b)) subset.push_back(all[b]);
    bool some_nonzero = false;
    for (std::int64_t c = 1; c < h.order() && !some_nonzero; ++c)
      some_nonzero = std::abs(char_sum(h, h.element_at(c), subset)) > 1e-9;
    CHECK(some_nonzero);
  }
}

TEST_CASE("Dirichlet correspondence") {
  AbelianGroup z4({4});
  CHECK(perp_of_characters(z4, {{0}, {1}, {3}}).elements == std::vector<Element>{{0}});
  CHECK(perp_of_characters(z4, {{2}}).elements == std::vector<Element>{{0}, {2}});
  CHECK(perp_of_characters(z4, {{0}}).elements.size() == 4);

  CHECK(perp_of_subgroup(z4, {{0}, {2}}) == std::vector<Char>{{0}, {2}});
  CHECK(perp_of_subgroup(z4, z4.all_elements()) == std::vector<Char>{{0}});
  CHECK(perp_of_subgroup(z4, {{0}}).size() == 4);
  CHECK_THROWS_AS(perp_of_subgroup(z4, {{1}}), Error);  // not a subgroup

  CHECK(subgroup_generated_by_chars(z4, {{1}}).size() == 4);
  CHECK(subgroup_generated_by_chars(z4, {{2}}) == std::vector<Char>{{0}, {2}});
  AbelianGroup z5({5});
  CHECK(subgroup_generated_by_chars(z5, {{1}, {2}}).size() == 5);
}

TEST_CASE("abelianize a concrete semiregular group") {
  // Z4 acting in three orbits
  PermGroup h(12, {cyc(12, {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}})});
  AbelianIso iso = abelianize(h);
  CHECK(iso.group.factors() == std::vector<int>{4});
  CHECK(iso.perm_of.size() == 4);
  CHECK(iso.perm_of[0].is_identity());
  // the map is a homomorphism
  for (std::int64_t i = 0; i < 4; ++i)
    for (std::int64_t j = 0; j < 4; ++j) {
      Element sum = iso.group.add(iso.group.element_at(i), iso.group.element_at(j));
      CHECK(iso.perm_of[i].then(iso.perm_of[j]) ==
            iso.perm_of[iso.group.index_of(sum)]);
    }

  // Z2 x Z2 regular on 4 points
  PermGroup klein(4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  AbelianIso k = abelianize(klein);
  CHECK(k.group.order() == 4);
  CHECK(k.group.factors() == std::vector<int>{2, 2});

  // Z6 regular: invariant factor [6]
  PermGroup z6(6, {cyc(6, {{0, 1, 2, 3, 4, 5}})});
  CHECK(abelianize(z6).group.factors() == std::vector<int>{6});

  // Z2 x Z4 shows up with the largest factor first
  PermGroup z2z4(8, {cyc(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}),
                     cyc(8, {{0, 2, 4, 6}, {1, 3, 5, 7}})});
  CHECK(abelianize(z2z4).group.factors() == std::vector<int>{4, 2});

  CHECK_THROWS_AS(abelianize(PermGroup(3, {cyc(3, {{0, 1}}), cyc(3, {{1, 2}})})), Error);
}

TEST_CASE("element arithmetic") {
  AbelianGroup h({2, 4});
  CHECK(h.order() == 8);
  CHECK(h.exponent() == 4);
  CHECK(h.add({1, 3}, {1, 2}) == Element{0, 1});
  CHECK(h.neg({1, 3}) == Element{1, 1});
  CHECK(h.element_order({1, 2}) == 2);
  CHECK(h.element_order({0, 1}) == 4);
  CHECK(h.index_of({1, 2}) == 6);
  CHECK(h.element_at(6) == Element{1, 2});
  CHECK_THROWS_AS(h.validate_tuple({0, 4}), Error);
  CHECK_THROWS_AS(h.validate_tuple({0}), Error);
}
