#pragma once

#include "specblocks/cmatrix.hpp"

namespace specblocks {

// All roots (with multiplicity) of a monic polynomial given by coefficients
// c[0..n] with c[n] = 1, via Durand-Kerner simultaneous iteration with
// Newton polishing. Near-coincident roots, the simultaneous iteration's
// weak spot, are detected and collapsed to their cluster centroid when the
// low-order derivatives confirm the multiplicity. Throws solver_failure
// when the iteration stalls.
std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs);

// Eigenvalues of a small dense complex matrix: closed forms for n <= 2,
// characteristic polynomial roots otherwise.
std::vector<cplx> small_eigenvalues(const CMat& m);

}  // namespace specblocks
