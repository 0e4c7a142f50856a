#include "specblocks/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "specblocks/polyroots.hpp"

namespace specblocks {

CMat char_matrix(const Symbol& s, const Char& chi) {
  int m = s.m();
  CMat out(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.at(i, j) = char_sum(s.group(), chi, s.entry(i, j));
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::string format_complex(cplx z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
  return os.str();
}

}  // namespace

SpectrumResult spectrum(const Symbol& s, double tol, Exec exec) {
  if (tol <= 0) throw validation_error("tolerance must be positive");
  const AbelianGroup& h = s.group();
  std::int64_t chars = h.order();

  // per-character eigenvalues; slots keep the merge deterministic
  std::vector<std::vector<cplx>> eigs(static_cast<std::size_t>(chars));
  parallel_for(chars, exec, [&](std::int64_t c) {
    eigs[static_cast<std::size_t>(c)] =
        small_eigenvalues(char_matrix(s, h.element_at(c)));
  });

  struct Pooled {
    cplx lambda;
    std::int64_t char_index;
  };
  std::vector<Pooled> pool;
  pool.reserve(static_cast<std::size_t>(chars) * s.m());
  double scale = 1.0;
  for (std::int64_t c = 0; c < chars; ++c)
    for (const auto& lam : eigs[static_cast<std::size_t>(c)]) {
      pool.push_back({lam, c});
      scale = std::max(scale, std::abs(lam));
    }

  double radius = tol * scale;
  UnionFind uf(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      if (std::abs(pool[i].lambda - pool[j].lambda) <= radius)
        uf.unite(static_cast<int>(i), static_cast<int>(j));

  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < pool.size(); ++i)
    groups[uf.find(static_cast<int>(i))].push_back(i);

  SpectrumResult result;
  for (const auto& [root, members] : groups) {
    SpectrumEntry entry;
    cplx mean{0.0, 0.0};
    std::map<std::int64_t, std::pair<int, cplx>> per_char;  // char -> (count, sum)
    for (std::size_t idx : members) {
      mean += pool[idx].lambda;
      auto& slot = per_char[pool[idx].char_index];
      slot.first += 1;
      slot.second += pool[idx].lambda;
    }
    entry.lambda = mean / static_cast<double>(members.size());
    for (const auto& [char_index, slot] : per_char) {
      entry.k_set.push_back(h.element_at(char_index));
      entry.multiplicity.push_back(slot.first);
      entry.char_lambda.push_back(slot.second / static_cast<double>(slot.first));
    }
    result.entries.push_back(std::move(entry));
  }
  std::sort(result.entries.begin(), result.entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) {
              if (a.lambda.real() != b.lambda.real())
                return a.lambda.real() > b.lambda.real();
              return a.lambda.imag() > b.lambda.imag();
            });

  // A cluster pair separated by less than 10x the merge radius is numerically
  // borderline; report it rather than silently merging.
  for (std::size_t i = 0; i < result.entries.size(); ++i)
    for (std::size_t j = i + 1; j < result.entries.size(); ++j) {
      double gap = std::abs(result.entries[i].lambda - result.entries[j].lambda);
      if (gap < 10.0 * radius) {
        std::ostringstream os;
        os << "eigenvalue clusters " << format_complex(result.entries[i].lambda) << " and "
           << format_complex(result.entries[j].lambda) << " are separated by only " << gap;
        result.warnings.push_back(os.str());
      }
    }
  return result;
}

const SpectrumEntry& find_eigenvalue(const SpectrumResult& spec, cplx lambda, double tol) {
  double scale = 1.0;
  for (const auto& e : spec.entries) scale = std::max(scale, std::abs(e.lambda));
  const SpectrumEntry* best = nullptr;
  double best_dist = 0.0;
  for (const auto& e : spec.entries) {
    double dist = std::abs(e.lambda - lambda);
    if (!best || dist < best_dist) {
      best = &e;
      best_dist = dist;
    }
  }
  // membership at a slightly relaxed radius so that a caller-provided
  // nominal value (say, an integer) finds its cluster
  if (!best || best_dist > 100.0 * tol * scale)
    throw validation_error("not an eigenvalue: " + format_complex(lambda));
  return *best;
}

std::vector<CVec> eigenspace_V(const Symbol& s, const Char& chi, cplx lambda, double tol) {
  CMat m = char_matrix(s, chi);
  std::vector<cplx> eigs = small_eigenvalues(m);
  double scale = 1.0;
  for (const auto& e : eigs) scale = std::max(scale, std::abs(e));
  // Re-center on this character's own eigenvalue(s) near lambda. The caller
  // may pass a cluster representative whose distance from the member is set
  // by the global spectrum scale, so the radius here is deliberately looser
  // than tol while staying far below any genuine eigenvalue gap.
  double radius = std::max({100.0 * tol, 1e-4}) * std::max({1.0, scale, std::abs(lambda)});
  cplx centered{0.0, 0.0};
  int members = 0;
  for (const auto& e : eigs)
    if (std::abs(e - lambda) <= radius) {
      centered += e;
      ++members;
    }
  if (members == 0)
    throw validation_error("character is not in K for this eigenvalue");
  centered /= static_cast<double>(members);

  CMat shifted = m;
  for (int i = 0; i < m.rows; ++i) shifted.at(i, i) -= centered;
  double threshold = tol * std::max(1.0, inf_norm(m));
  std::vector<CVec> basis = nullspace_basis(shifted, threshold);
  if (basis.empty())
    throw validation_error("character is not in K for this eigenvalue");
  return basis;
}

CVec character_vector(const AbelianGroup& h, const Char& chi) {
  CVec v(static_cast<std::size_t>(h.order()));
  for (std::int64_t e = 0; e < h.order(); ++e)
    v[static_cast<std::size_t>(e)] = char_eval(h, chi, h.element_at(e)).value();
  return v;
}

std::vector<CVec> eigenspace_W(const Symbol& s, const SemiregularFrame& f, cplx lambda,
                               double tol) {
  if (!(f.abstract() == s.group()) || f.orbit_count() != s.m())
    throw validation_error("frame does not match the symbol");
  SpectrumResult spec = spectrum(s, tol);
  const SpectrumEntry& entry = find_eigenvalue(spec, lambda, tol);
  std::int64_t n = f.group_order();
  double unit = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<CVec> basis;
  for (std::size_t c = 0; c < entry.k_set.size(); ++c) {
    const Char& chi = entry.k_set[c];
    CVec vchi = character_vector(s.group(), chi);
    for (const auto& u : eigenspace_V(s, chi, entry.char_lambda[c], tol)) {
      CVec w(static_cast<std::size_t>(s.m()) * n);
      for (int i = 0; i < s.m(); ++i)
        for (std::int64_t e = 0; e < n; ++e)
          w[static_cast<std::size_t>(i) * n + e] = u[i] * vchi[static_cast<std::size_t>(e)] * unit;
      basis.push_back(std::move(w));
    }
  }
  return basis;
}

}  // namespace specblocks
