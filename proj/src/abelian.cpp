#include "specblocks/abelian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace specblocks {

namespace {
constexpr double kTau = 6.283185307179586476925286766559;
}

RootOfUnity RootOfUnity::make(std::int64_t k, std::int64_t n) {
  if (n <= 0) throw validation_error("root of unity order must be positive");
  k %= n;
  if (k < 0) k += n;
  std::int64_t g = std::gcd(k, n);
  if (k == 0) return {0, 1};
  return {k / g, n / g};
}

RootOfUnity RootOfUnity::times(const RootOfUnity& other) const {
  std::int64_t common = std::lcm(n, other.n);
  return make(k * (common / n) + other.k * (common / other.n), common);
}

RootOfUnity RootOfUnity::inverse() const { return make(-k, n); }

std::complex<double> RootOfUnity::value() const {
  // exact values for the orders that appear constantly in the small cases
  if (n == 1) return {1.0, 0.0};
  if (n == 2) return {-1.0, 0.0};
  if (n == 4) return k == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
  double angle = kTau * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

AbelianGroup::AbelianGroup(std::vector<int> factor_orders)
    : factors_(std::move(factor_orders)) {
  order_ = 1;
  exponent_ = 1;
  for (int d : factors_) {
    if (d < 1) throw validation_error("cyclic factor order must be at least 1");
    order_ *= d;
    exponent_ = std::lcm(exponent_, static_cast<std::int64_t>(d));
  }
}

void AbelianGroup::validate_tuple(const Element& a) const {
  if (static_cast<int>(a.size()) != rank())
    throw validation_error("exponent tuple length does not match group rank");
  for (int i = 0; i < rank(); ++i)
    if (a[i] < 0 || a[i] >= factors_[i])
      throw validation_error("exponent tuple entry out of range");
}

Element AbelianGroup::reduce(const Element& a) const {
  if (static_cast<int>(a.size()) != rank())
    throw validation_error("exponent tuple length does not match group rank");
  Element r(a);
  for (int i = 0; i < rank(); ++i) {
    r[i] %= factors_[i];
    if (r[i] < 0) r[i] += factors_[i];
  }
  return r;
}

Element AbelianGroup::add(const Element& a, const Element& b) const {
  Element r(rank());
  for (int i = 0; i < rank(); ++i) r[i] = (a[i] + b[i]) % factors_[i];
  return r;
}

Element AbelianGroup::neg(const Element& a) const {
  Element r(rank());
  for (int i = 0; i < rank(); ++i) r[i] = a[i] == 0 ? 0 : factors_[i] - a[i];
  return r;
}

Element AbelianGroup::sub(const Element& a, const Element& b) const {
  return add(a, neg(b));
}

Element AbelianGroup::scale(std::int64_t c, const Element& a) const {
  Element r(rank());
  for (int i = 0; i < rank(); ++i) {
    std::int64_t v = (c % factors_[i]) * a[i] % factors_[i];
    if (v < 0) v += factors_[i];
    r[i] = static_cast<int>(v);
  }
  return r;
}

int AbelianGroup::element_order(const Element& a) const {
  std::int64_t ord = 1;
  for (int i = 0; i < rank(); ++i)
    if (a[i] != 0) ord = std::lcm(ord, static_cast<std::int64_t>(factors_[i] / std::gcd(factors_[i], a[i])));
  return static_cast<int>(ord);
}

std::int64_t AbelianGroup::index_of(const Element& a) const {
  validate_tuple(a);
  std::int64_t idx = 0;
  for (int i = 0; i < rank(); ++i) idx = idx * factors_[i] + a[i];
  return idx;
}

Element AbelianGroup::element_at(std::int64_t index) const {
  if (index < 0 || index >= order_) throw validation_error("element index out of range");
  Element a(rank());
  for (int i = rank() - 1; i >= 0; --i) {
    a[i] = static_cast<int>(index % factors_[i]);
    index /= factors_[i];
  }
  return a;
}

std::vector<Element> AbelianGroup::all_elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

RootOfUnity char_eval(const AbelianGroup& h, const Char& chi, const Element& g) {
  h.validate_tuple(chi);
  h.validate_tuple(g);
  std::int64_t n = h.exponent();
  std::int64_t k = 0;
  for (int i = 0; i < h.rank(); ++i)
    k = (k + static_cast<std::int64_t>(chi[i]) * g[i] % n * (n / h.factors()[i])) % n;
  return RootOfUnity::make(k, n);
}

std::complex<double> char_sum(const AbelianGroup& h, const Char& chi,
                              const std::vector<Element>& s) {
  std::complex<double> total{0.0, 0.0};
  for (const auto& g : s) total += char_eval(h, chi, g).value();
  return total;
}

std::vector<Element> subgroup_closure(const AbelianGroup& h,
                                      const std::vector<Element>& gens) {
  std::set<Element> seen{h.zero()};
  std::vector<Element> frontier{h.zero()};
  for (const auto& g : gens) h.validate_tuple(g);
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& e : frontier) {
      for (const auto& g : gens) {
        Element sum = h.add(e, g);
        if (seen.insert(sum).second) next.push_back(std::move(sum));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};  // std::set iterates in lexicographic order
}

bool is_subgroup(const AbelianGroup& h, const std::vector<Element>& l) {
  std::set<Element> members;
  for (const auto& e : l) {
    h.validate_tuple(e);
    members.insert(e);
  }
  if (!members.count(h.zero())) return false;
  for (const auto& a : members)
    for (const auto& b : members)
      if (!members.count(h.add(a, b))) return false;
  return true;
}

namespace {

std::vector<Element> greedy_element_generators(const AbelianGroup& h,
                                               const std::vector<Element>& elements) {
  std::vector<Element> gens;
  std::vector<Element> span = subgroup_closure(h, gens);
  for (const auto& e : elements) {
    if (std::binary_search(span.begin(), span.end(), e)) continue;
    gens.push_back(e);
    span = subgroup_closure(h, gens);
  }
  return gens;
}

}  // namespace

Subgroup perp_of_characters(const AbelianGroup& h, const std::vector<Char>& chars) {
  Subgroup out;
  for (std::int64_t i = 0; i < h.order(); ++i) {
    Element g = h.element_at(i);
    bool in_all_kernels = true;
    for (const auto& chi : chars)
      if (!char_eval(h, chi, g).is_one()) {
        in_all_kernels = false;
        break;
      }
    if (in_all_kernels) out.elements.push_back(std::move(g));
  }
  out.generators = greedy_element_generators(h, out.elements);
  return out;
}

std::vector<Char> perp_of_subgroup(const AbelianGroup& h, const std::vector<Element>& l) {
  if (!is_subgroup(h, l)) throw validation_error("element set is not a subgroup");
  std::vector<Char> out;
  for (std::int64_t i = 0; i < h.order(); ++i) {
    Char chi = h.element_at(i);
    bool trivial_on_l = true;
    for (const auto& g : l)
      if (!char_eval(h, chi, g).is_one()) {
        trivial_on_l = false;
        break;
      }
    if (trivial_on_l) out.push_back(std::move(chi));
  }
  std::set<Element> distinct(l.begin(), l.end());
  if (out.size() * distinct.size() != static_cast<std::size_t>(h.order()))
    throw solver_failure("duality |L|*|L perp| = |H| violated");
  return out;
}

std::vector<Char> subgroup_generated_by_chars(const AbelianGroup& h,
                                              const std::vector<Char>& chars) {
  return subgroup_closure(h, chars);  // H* has the same tuple arithmetic
}

AbelianIso abelianize(const PermGroup& h, std::int64_t cap) {
  if (!h.is_abelian()) throw validation_error("group is not abelian");
  std::vector<Perm> elems = h.elements(cap);
  std::sort(elems.begin(), elems.end());

  // Greedy peeling: repeatedly pick an element of maximal order in the
  // quotient by the span found so far, then adjust it by a span element so
  // its power falls on the identity, which keeps the sum direct.
  std::vector<Perm> gens;
  std::vector<int> factors;
  std::map<Perm, Element> coords{{Perm(h.degree()), {}}};

  auto quotient_order = [&](const Perm& e) {
    Perm p = e;
    int t = 1;
    while (!coords.count(p)) {
      p = p.then(e);
      ++t;
    }
    return t;
  };

  while (coords.size() < elems.size()) {
    int best_order = 0;
    Perm best(h.degree());
    for (const auto& e : elems) {
      if (coords.count(e)) continue;
      int q = quotient_order(e);
      if (q > best_order) {
        best_order = q;
        best = e;
      }
    }
    // coordinates of best^q in the current span
    Element c = coords.at(best.power(best_order));
    Perm adjusted = best;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      // solve q*x = -c_i (mod d_i); solvable because the span is a direct summand
      std::int64_t d = factors[i];
      std::int64_t q = best_order % d;
      std::int64_t rhs = (d - c[i]) % d;
      // brute-force the smallest solution; d is desk scale
      std::int64_t x = 0;
      while (x < d && (q * x) % d != rhs) ++x;
      if (x == d) throw solver_failure("cyclic factor peeling: congruence unsolvable");
      adjusted = adjusted.then(gens[i].power(x));
    }
    gens.push_back(adjusted);
    factors.push_back(best_order);
    // extend coordinates: every old element times each power of the new gen
    std::map<Perm, Element> extended;
    for (const auto& [perm, tuple] : coords) {
      Perm p = perm;
      for (int t = 0; t < best_order; ++t) {
        Element coord = tuple;
        coord.push_back(t);
        extended.emplace(p, std::move(coord));
        p = p.then(adjusted);
      }
    }
    coords = std::move(extended);
  }

  AbelianGroup group(factors);
  if (group.order() != static_cast<std::int64_t>(elems.size()))
    throw solver_failure("cyclic factor peeling did not span the group");
  std::vector<Perm> perm_of(static_cast<std::size_t>(group.order()), Perm(h.degree()));
  for (const auto& [perm, tuple] : coords)
    perm_of[static_cast<std::size_t>(group.index_of(tuple))] = perm;
  return {std::move(group), std::move(perm_of)};
}

}  // namespace specblocks
