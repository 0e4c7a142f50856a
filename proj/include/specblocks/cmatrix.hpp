#pragma once

#include <complex>
#include <vector>

namespace specblocks {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

// Dense row-major complex matrix; only the small sizes this library needs.
struct CMat {
  int rows = 0, cols = 0;
  std::vector<cplx> a;

  CMat() = default;
  CMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  cplx& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const cplx& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  static CMat identity(int n);
};

CVec matvec(const CMat& m, const CVec& v);
CMat matmul(const CMat& x, const CMat& y);
double inf_norm(const CMat& m);   // max row sum of absolute values
double inf_norm(const CVec& v);
double two_norm(const CVec& v);
cplx dot_conj(const CVec& a, const CVec& b);  // sum conj(a_i) * b_i

// Determinant by LU with partial pivoting.
cplx lu_determinant(CMat m);

// Orthonormal nullspace basis of m; rank decisions at the given absolute
// pivot threshold. Deterministic: Gaussian elimination with partial
// pivoting, modified Gram-Schmidt, then each vector's phase fixed so its
// first nonzero coordinate is real positive.
std::vector<CVec> nullspace_basis(CMat m, double pivot_threshold);

// Monic characteristic polynomial coefficients c[0..n], c[n] = 1, by the
// Faddeev-LeVerrier recurrence.
std::vector<cplx> characteristic_polynomial(const CMat& m);

std::vector<CVec> gram_schmidt(std::vector<CVec> vs, double drop_tol);
void fix_phase(CVec& v, double tol);

}  // namespace specblocks
