#include "vi/detail/linalg.hpp"

#include <cmath>
#include <cstdlib>

namespace vi::detail {

namespace {

// y = M x for row-major M.
void matvec(const std::vector<double>& m, int dim, const std::vector<double>& x,
            std::vector<double>& y) {
  for (int r = 0; r < dim; ++r) {
    double acc = 0.0;
    const double* row = m.data() + static_cast<size_t>(r) * dim;
    for (int c = 0; c < dim; ++c) acc += row[c] * x[static_cast<size_t>(c)];
    y[static_cast<size_t>(r)] = acc;
  }
}

void matvec_transposed(const std::vector<double>& m, int dim, const std::vector<double>& x,
                       std::vector<double>& y) {
  for (int c = 0; c < dim; ++c) y[static_cast<size_t>(c)] = 0.0;
  for (int r = 0; r < dim; ++r) {
    const double* row = m.data() + static_cast<size_t>(r) * dim;
    const double xr = x[static_cast<size_t>(r)];
    for (int c = 0; c < dim; ++c) y[static_cast<size_t>(c)] += row[c] * xr;
  }
}

double vec_norm(const std::vector<double>& x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return std::sqrt(acc);
}

}  // namespace

double spectral_norm_power(const std::vector<double>& matrix, int dim, int iterations,
                           double tol) {
  // Deterministic start with uneven coordinates so no single eigendirection
  // is systematically missed.
  std::vector<double> v(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) v[static_cast<size_t>(i)] = 1.0 + 0.5 * i / (dim + 1.0);
  double vn = vec_norm(v);
  for (double& c : v) c /= vn;

  std::vector<double> mv(static_cast<size_t>(dim)), bv(static_cast<size_t>(dim));
  double rayleigh = 0.0;
  for (int it = 0; it < iterations; ++it) {
    matvec(matrix, dim, v, mv);
    matvec_transposed(matrix, dim, mv, bv);  // bv = M^T M v
    double next = 0.0;
    for (int i = 0; i < dim; ++i) next += v[static_cast<size_t>(i)] * bv[static_cast<size_t>(i)];
    const double bn = vec_norm(bv);
    if (bn == 0.0) return 0.0;  // M v = 0 from a generic start: zero matrix
    for (int i = 0; i < dim; ++i) v[static_cast<size_t>(i)] = bv[static_cast<size_t>(i)] / bn;
    if (it > 0 && std::abs(next - rayleigh) <= tol * std::max(1.0, std::abs(next))) {
      rayleigh = next;
      break;
    }
    rayleigh = next;
  }
  return std::sqrt(std::max(rayleigh, 0.0));
}

double symmetric_part_min_eigenvalue(const std::vector<double>& matrix, int dim) {
  const size_t n = static_cast<size_t>(dim);
  std::vector<double> s(n * n);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      s[static_cast<size_t>(r) * n + c] =
          0.5 * (matrix[static_cast<size_t>(r) * n + c] + matrix[static_cast<size_t>(c) * n + r]);
    }
  }
  auto at = [&](int r, int c) -> double& { return s[static_cast<size_t>(r) * n + c]; };

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int r = 0; r < dim; ++r)
      for (int c = r + 1; c < dim; ++c) off += at(r, c) * at(r, c);
    if (off <= 1e-30) break;

    for (int p = 0; p < dim; ++p) {
      for (int q = p + 1; q < dim; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (int k = 0; k < dim; ++k) {
          const double skp = at(k, p), skq = at(k, q);
          at(k, p) = c * skp - sn * skq;
          at(k, q) = sn * skp + c * skq;
        }
        for (int k = 0; k < dim; ++k) {
          const double spk = at(p, k), sqk = at(q, k);
          at(p, k) = c * spk - sn * sqk;
          at(q, k) = sn * spk + c * sqk;
        }
      }
    }
  }

  double min_eig = at(0, 0);
  for (int i = 1; i < dim; ++i) min_eig = std::min(min_eig, at(i, i));
  return min_eig;
}

}  // namespace vi::detail
