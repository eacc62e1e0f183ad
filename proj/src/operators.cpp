#include "vi/operators.hpp"

#include <cmath>

#include "vi/detail/linalg.hpp"
#include "vi/errors.hpp"

namespace vi {

namespace {
constexpr double kEigenTol = 1e-10;
constexpr double kSpectralSafety = 1.01;
}  // namespace

Operator Operator::identity(SpacePtr space) {
  if (!space) throw Error::usage("operator requires a space");
  Operator op(Kind::identity, std::move(space));
  op.lipschitz_bound_ = 1.0;
  op.modulus_ = 1.0;
  op.monotone_ = true;
  return op;
}

Operator Operator::constant(Vector value) {
  Operator op(Kind::constant, value.space());
  op.value_ = std::move(value);
  op.lipschitz_bound_ = 0.0;
  op.modulus_ = 0.0;
  op.monotone_ = true;
  return op;
}

Operator Operator::affine(SpacePtr space, std::vector<double> matrix_row_major, Vector offset,
                          std::optional<double> declared_lipschitz) {
  if (!space) throw Error::usage("operator requires a space");
  if (space->kind() != Space::Kind::euclidean) {
    throw Error::usage("affine operators are supported on Euclidean spaces only");
  }
  const int d = space->dim();
  if (matrix_row_major.size() != static_cast<size_t>(d) * static_cast<size_t>(d)) {
    throw Error::usage("affine matrix must be dim x dim");
  }
  for (double m : matrix_row_major) {
    if (!std::isfinite(m)) throw Error::usage("affine matrix entries must be finite");
  }
  if (!offset.space()->same(*space)) throw Error::usage("affine offset space mismatch");
  if (declared_lipschitz && !(*declared_lipschitz > 0.0)) {
    throw Error::usage("declared Lipschitz bound must be positive");
  }

  Operator op(Kind::affine, space);
  op.modulus_ = detail::symmetric_part_min_eigenvalue(matrix_row_major, d);
  op.monotone_ = op.modulus_ >= -kEigenTol;
  op.declared_ = declared_lipschitz;
  op.lipschitz_bound_ =
      declared_lipschitz ? *declared_lipschitz
                         : kSpectralSafety * detail::spectral_norm_power(matrix_row_major, d);
  op.matrix_ = std::move(matrix_row_major);
  op.value_ = std::move(offset);
  return op;
}

Operator Operator::scalar_affine(double slope, double offset) {
  if (!std::isfinite(slope) || !std::isfinite(offset)) {
    throw Error::usage("scalar_affine parameters must be finite");
  }
  Operator op(Kind::scalar_affine, Space::euclidean(1));
  op.slope_ = slope;
  op.scalar_offset_ = offset;
  op.lipschitz_bound_ = std::abs(slope);
  op.modulus_ = slope;
  op.monotone_ = slope >= -kEigenTol;
  return op;
}

Vector Operator::apply(const Vector& x) const {
  if (!x.space()->same(*space_)) throw Error::usage("operator applied to a vector from another space");
  switch (kind_) {
    case Kind::identity:
      return x;
    case Kind::constant:
      return *value_;
    case Kind::affine: {
      const int d = space_->dim();
      Coords out(static_cast<size_t>(d), 0.0);
      const auto xv = x.coords();
      const auto off = value_->coords();
      for (int r = 0; r < d; ++r) {
        double acc = 0.0;
        const double* row = matrix_.data() + static_cast<size_t>(r) * d;
        for (int c = 0; c < d; ++c) acc += row[c] * xv[static_cast<size_t>(c)];
        out[static_cast<size_t>(r)] = acc + off[static_cast<size_t>(r)];
      }
      return detail::make_unchecked(space_, std::move(out));
    }
    case Kind::scalar_affine: {
      Coords out{slope_ * x[0] + scalar_offset_};
      return detail::make_unchecked(space_, std::move(out));
    }
  }
  throw Error{ErrorCode::internal, "unreachable operator kind"};
}

Contraction Contraction::constant(Vector value) {
  return Contraction(Kind::constant, std::move(value), 0.0, 0.0);
}

Contraction Contraction::affine_scale(double scale, Vector offset, std::optional<double> rho) {
  if (!std::isfinite(scale)) throw Error::usage("contraction scale must be finite");
  const double r = rho.value_or(std::abs(scale));
  if (!(r >= 0.0 && r < 1.0)) throw Error::usage("contraction modulus rho must lie in [0,1)");
  if (std::abs(scale) > r) throw Error::usage("contraction requires |scale| <= rho");
  return Contraction(Kind::affine_scale, std::move(offset), scale, r);
}

Vector Contraction::apply(const Vector& x) const {
  if (!x.space()->same(*value_.space())) {
    throw Error::usage("contraction applied to a vector from another space");
  }
  if (kind_ == Kind::constant) return value_;
  Coords out(x.coords().begin(), x.coords().end());
  const auto off = value_.coords();
  for (size_t i = 0; i < out.size(); ++i) out[i] = scale_ * out[i] + off[i];
  return detail::make_unchecked(x.space(), std::move(out));
}

}  // namespace vi
