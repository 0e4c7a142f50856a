#include "specblocks/cmatrix.hpp"

#include <algorithm>
#include <cmath>

#include "specblocks/error.hpp"

namespace specblocks {

CMat CMat::identity(int n) {
  CMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CVec matvec(const CMat& m, const CVec& v) {
  if (static_cast<int>(v.size()) != m.cols) throw validation_error("matvec size mismatch");
  CVec out(static_cast<std::size_t>(m.rows));
  for (int i = 0; i < m.rows; ++i) {
    cplx acc{0.0, 0.0};
    for (int j = 0; j < m.cols; ++j) acc += m.at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

CMat matmul(const CMat& x, const CMat& y) {
  if (x.cols != y.rows) throw validation_error("matmul size mismatch");
  CMat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      cplx v = x.at(i, k);
      if (v == cplx{0.0, 0.0}) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
    }
  return out;
}

double inf_norm(const CMat& m) {
  double best = 0.0;
  for (int i = 0; i < m.rows; ++i) {
    double row = 0.0;
    for (int j = 0; j < m.cols; ++j) row += std::abs(m.at(i, j));
    best = std::max(best, row);
  }
  return best;
}

double inf_norm(const CVec& v) {
  double best = 0.0;
  for (const auto& x : v) best = std::max(best, std::abs(x));
  return best;
}

double two_norm(const CVec& v) {
  double acc = 0.0;
  for (const auto& x : v) acc += std::norm(x);
  return std::sqrt(acc);
}

cplx dot_conj(const CVec& a, const CVec& b) {
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

cplx lu_determinant(CMat m) {
  if (m.rows != m.cols) throw validation_error("determinant needs a square matrix");
  int n = m.rows;
  cplx det{1.0, 0.0};
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m.at(r, col)) > std::abs(m.at(pivot, col))) pivot = r;
    if (std::abs(m.at(pivot, col)) == 0.0) return {0.0, 0.0};
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      cplx f = m.at(r, col) / m.at(col, col);
      if (f == cplx{0.0, 0.0}) continue;
      for (int j = col; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return det;
}

std::vector<CVec> gram_schmidt(std::vector<CVec> vs, double drop_tol) {
  std::vector<CVec> out;
  for (auto& v : vs) {
    for (const auto& u : out) {
      cplx coeff = dot_conj(u, v);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= coeff * u[i];
    }
    double norm = two_norm(v);
    if (norm <= drop_tol) continue;
    for (auto& x : v) x /= norm;
    out.push_back(std::move(v));
  }
  return out;
}

void fix_phase(CVec& v, double tol) {
  for (const auto& x : v) {
    if (std::abs(x) > tol) {
      cplx rot = std::conj(x) / std::abs(x);
      for (auto& y : v) y *= rot;
      return;
    }
  }
}

std::vector<CVec> nullspace_basis(CMat m, double pivot_threshold) {
  int rows = m.rows, cols = m.cols;
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int best = row;
    for (int r = row + 1; r < rows; ++r)
      if (std::abs(m.at(r, col)) > std::abs(m.at(best, col))) best = r;
    if (std::abs(m.at(best, col)) <= pivot_threshold) continue;
    if (best != row)
      for (int j = 0; j < cols; ++j) std::swap(m.at(best, j), m.at(row, j));
    cplx p = m.at(row, col);
    for (int j = 0; j < cols; ++j) m.at(row, j) /= p;
    for (int r = 0; r < rows; ++r) {
      if (r == row) continue;
      cplx f = m.at(r, col);
      if (f == cplx{0.0, 0.0}) continue;
      for (int j = 0; j < cols; ++j) m.at(r, j) -= f * m.at(row, j);
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivot_col_of_row) is_pivot[c] = 1;
  std::vector<CVec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    CVec v(static_cast<std::size_t>(cols), cplx{0.0, 0.0});
    v[free] = 1.0;
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
      v[pivot_col_of_row[r]] = -m.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  basis = gram_schmidt(std::move(basis), 1e-12);
  for (auto& v : basis) fix_phase(v, 1e-12);
  return basis;
}

std::vector<cplx> characteristic_polynomial(const CMat& m) {
  if (m.rows != m.cols) throw validation_error("characteristic polynomial needs a square matrix");
  int n = m.rows;
  // Faddeev-LeVerrier: p(x) = x^n + c[n-1] x^(n-1) + ... + c[0]
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx{0.0, 0.0});
  c[n] = 1.0;
  CMat acc = m;
  for (int k = 1; k <= n; ++k) {
    cplx trace{0.0, 0.0};
    for (int i = 0; i < n; ++i) trace += acc.at(i, i);
    cplx coeff = -trace / static_cast<double>(k);
    c[n - k] = coeff;
    if (k == n) break;
    for (int i = 0; i < n; ++i) acc.at(i, i) += coeff;
    acc = matmul(m, acc);
  }
  return c;
}

}  // namespace specblocks
