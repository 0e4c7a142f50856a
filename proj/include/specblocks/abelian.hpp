#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "specblocks/error.hpp"
#include "specblocks/perm.hpp"

namespace specblocks {

// Elements of H = Z_{d1} x ... x Z_{dr} and its dual are exponent tuples of
// length r. The dual group H* is identified with the same tuple space:
// chi_a(h) = exp(2*pi*i * sum_k a_k h_k / d_k).
using Element = std::vector<int>;
using Char = std::vector<int>;

// The exact value e^{2*pi*i*k/n} in lowest terms. Equality and the
// "equals 1" test are exact on (k, n).
struct RootOfUnity {
  std::int64_t k = 0;
  std::int64_t n = 1;

  static RootOfUnity make(std::int64_t k, std::int64_t n);
  RootOfUnity times(const RootOfUnity& other) const;
  RootOfUnity inverse() const;
  std::complex<double> value() const;
  bool is_one() const { return k == 0; }
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
    return a.k == b.k && a.n == b.n;
  }
};

class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> factor_orders);

  const std::vector<int>& factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  std::int64_t order() const { return order_; }
  std::int64_t exponent() const { return exponent_; }  // lcm of the factors

  Element zero() const { return Element(factors_.size(), 0); }
  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element sub(const Element& a, const Element& b) const;
  Element scale(std::int64_t c, const Element& a) const;
  Element reduce(const Element& a) const;  // componentwise mod
  int element_order(const Element& a) const;

  // Fixed linear order: lexicographic over exponent tuples.
  std::int64_t index_of(const Element& a) const;
  Element element_at(std::int64_t index) const;
  std::vector<Element> all_elements() const;

  void validate_tuple(const Element& a) const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<int> factors_;
  std::int64_t order_;
  std::int64_t exponent_;
};

// chi(h) as an exact root of unity of order dividing exponent(H).
RootOfUnity char_eval(const AbelianGroup& h, const Char& chi, const Element& g);

// chi(S) = sum over S of chi(g); 0 for the empty set.
std::complex<double> char_sum(const AbelianGroup& h, const Char& chi,
                              const std::vector<Element>& s);

struct Subgroup {
  std::vector<Element> elements;    // lexicographic order
  std::vector<Element> generators;  // greedy small generating set
};

// Closure of the given elements under the group operation, sorted.
std::vector<Element> subgroup_closure(const AbelianGroup& h,
                                      const std::vector<Element>& gens);
bool is_subgroup(const AbelianGroup& h, const std::vector<Element>& l);

// L*^perp = {h in H : chi(h) = 1 for all chi in chars}; exact.
Subgroup perp_of_characters(const AbelianGroup& h, const std::vector<Char>& chars);

// L^perp = {chi in H* : chi trivial on L}. Throws validation_error when l is
// not a subgroup. |L^perp| = |H|/|L| is verified.
std::vector<Char> perp_of_subgroup(const AbelianGroup& h, const std::vector<Element>& l);

// Closure of chars under product and inverse in H*.
std::vector<Char> subgroup_generated_by_chars(const AbelianGroup& h,
                                              const std::vector<Char>& chars);

// Isomorphism from a concrete semiregular abelian permutation group to an
// abstract product of cyclic groups, found by greedy peeling of maximal-order
// cyclic factors. perm_of[i] realizes element_at(i).
struct AbelianIso {
  AbelianGroup group;
  std::vector<Perm> perm_of;
};

AbelianIso abelianize(const PermGroup& h, std::int64_t cap = kDefaultCap);

}  // namespace specblocks
