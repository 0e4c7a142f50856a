#include "specblocks/polyroots.hpp"

#include <algorithm>
#include <cmath>

#include "specblocks/error.hpp"

namespace specblocks {

namespace {

cplx horner(const std::vector<cplx>& c, cplx z) {
  cplx v = c.back();
  for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) v = v * z + c[i];
  return v;
}

std::vector<cplx> derivative(const std::vector<cplx>& c) {
  std::vector<cplx> d(c);
  for (std::size_t i = 1; i < d.size(); ++i) d[i - 1] = d[i] * static_cast<double>(i);
  d.pop_back();
  return d;
}

// sum of |c_i| |z|^i; the rounding-noise scale of evaluating p at z
double value_scale(const std::vector<cplx>& c, cplx z) {
  double az = std::abs(z), pw = 1.0, total = 0.0;
  for (const auto& coeff : c) {
    total += std::abs(coeff) * pw;
    pw *= az;
  }
  return total;
}

}  // namespace

std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs) {
  int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 0 || std::abs(coeffs.back() - cplx{1.0, 0.0}) > 1e-12)
    throw validation_error("polynomial must be monic");
  if (n == 0) return {};
  if (n == 1) return {-coeffs[0]};

  // Cauchy bound on root magnitude
  double radius = 0.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(coeffs[i]));
  radius = 1.0 + radius;

  std::vector<cplx> z(n);
  for (int i = 0; i < n; ++i) {
    double angle = 6.283185307179586 * (i + 0.25) / n;
    z[i] = 0.7 * radius * cplx{std::cos(angle), std::sin(angle)};
  }

  // simultaneous (Durand-Kerner) iteration; converges quadratically at
  // simple roots and stalls on a noise-floor circle around multiple ones
  double limit = 1e-14 * radius;
  for (int iter = 0; iter < 600; ++iter) {
    double max_step = 0.0;
    for (int i = 0; i < n; ++i) {
      cplx denom{1.0, 0.0};
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= (z[i] - z[j]);
      if (std::abs(denom) < 1e-300) {
        z[i] += cplx{1e-8 * radius, 1e-8 * radius};
        max_step = radius;
        continue;
      }
      cplx step = horner(coeffs, z[i]) / denom;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step < limit) break;
  }

  // Refine each root: a k-fold root of p is a simple root of p^(k-1), where
  // Newton reaches full precision instead of the eps^(1/k) noise floor the
  // simultaneous iteration stalls on. The multiplicity is found by trying
  // k = n down to 1 and accepting the largest k whose refined point
  // annihilates every lower derivative.
  std::vector<std::vector<cplx>> derivs{coeffs};
  for (int k = 1; k <= n; ++k) derivs.push_back(derivative(derivs.back()));

  std::vector<cplx> refined(z);
  for (int i = 0; i < n; ++i) {
    for (int k = n; k >= 1; --k) {
      const auto& target = derivs[static_cast<std::size_t>(k - 1)];
      const auto& target_d = derivs[static_cast<std::size_t>(k)];
      cplx cand = z[i];
      for (int it = 0; it < 60; ++it) {
        cplx dv = horner(target_d, cand);
        if (std::abs(dv) < 1e-300) break;
        cplx step = horner(target, cand) / dv;
        cand -= step;
        if (std::abs(step) < 1e-16 * radius) break;
      }
      // a true k-fold root evaluates at rounding noise (~1e-16 times the
      // value scale), so the margin here still rejects distinct roots as
      // close as ~1e-5 while accepting genuine multiples comfortably
      bool plausible = std::abs(cand - z[i]) < 1e-2 * radius;
      for (int j = 0; j < k && plausible; ++j)
        plausible = std::abs(horner(derivs[static_cast<std::size_t>(j)], cand)) <=
                    1e-10 * (1.0 + value_scale(derivs[static_cast<std::size_t>(j)], cand));
      if (plausible) {
        refined[i] = cand;
        break;
      }
      // all k rejected: refined[i] keeps the raw iterate and the residual
      // check below decides whether that is acceptable
    }
  }

  // residual sanity on every root
  for (int i = 0; i < n; ++i)
    if (std::abs(horner(coeffs, refined[i])) >
        1e-6 * (1.0 + value_scale(coeffs, refined[i])))
      throw solver_failure("polynomial root iteration stalled");

  // members of a multiple root now coincide to near machine precision;
  // cluster tightly and replace each cluster by its mean
  double scale = 1.0;
  for (const auto& r : refined) scale = std::max(scale, std::abs(r));
  double cluster_radius = 3e-6 * scale;
  std::vector<int> cluster_of(n, -1);
  std::vector<cplx> out;
  out.reserve(n);
  std::vector<std::vector<int>> clusters;
  for (int i = 0; i < n; ++i) {
    if (cluster_of[i] >= 0) continue;
    std::vector<int> members{i};
    cluster_of[i] = static_cast<int>(clusters.size());
    for (int j = i + 1; j < n; ++j) {
      if (cluster_of[j] >= 0) continue;
      for (int mem : members)
        if (std::abs(refined[j] - refined[mem]) < cluster_radius) {
          members.push_back(j);
          cluster_of[j] = cluster_of[i];
          break;
        }
    }
    clusters.push_back(std::move(members));
  }
  for (const auto& members : clusters) {
    cplx mean{0, 0};
    for (int mem : members) mean += refined[mem];
    mean /= static_cast<double>(members.size());
    for (std::size_t rep = 0; rep < members.size(); ++rep) out.push_back(mean);
  }
  std::sort(out.begin(), out.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return out;
}

std::vector<cplx> small_eigenvalues(const CMat& m) {
  if (m.rows != m.cols) throw validation_error("eigenvalues need a square matrix");
  int n = m.rows;
  if (n == 0) return {};
  if (n == 1) return {m.at(0, 0)};
  if (n == 2) {
    cplx tr = m.at(0, 0) + m.at(1, 1);
    cplx det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    cplx disc = std::sqrt(tr * tr - 4.0 * det);
    return {(tr + disc) / 2.0, (tr - disc) / 2.0};
  }
  return polynomial_roots(characteristic_polynomial(m));
}

}  // namespace specblocks
