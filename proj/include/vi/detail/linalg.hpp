#pragma once

#include <vector>

namespace vi::detail {

// Spectral norm (largest singular value) of a dense row-major dim x dim
// matrix, via power iteration on M^T M. Converges from below; callers add
// their own safety margin.
double spectral_norm_power(const std::vector<double>& matrix, int dim, int iterations = 200,
                           double tol = 1e-10);

// Smallest eigenvalue of the symmetric part (M + M^T)/2, via cyclic Jacobi
// sweeps. Intended for small matrices.
double symmetric_part_min_eigenvalue(const std::vector<double>& matrix, int dim);

}  // namespace vi::detail
