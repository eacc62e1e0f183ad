#pragma once

#include <optional>
#include <vector>

#include "vi/hilbert.hpp"

namespace vi {

/// Operator A of the inequality, restricted to closed forms so a Lipschitz
/// upper bound is always certifiable: identity, a constant map, a dense
/// affine map x -> Mx + b (Euclidean spaces), or its scalar special case.
///
/// Monotonicity is decided at construction: an affine map is monotone
/// exactly when the symmetric part of M is positive semidefinite (checked to
/// eigenvalue tolerance 1e-10).
class Operator {
public:
  enum class Kind { identity, constant, affine, scalar_affine };

  static Operator identity(SpacePtr space);
  static Operator constant(Vector value);
  static Operator affine(SpacePtr space, std::vector<double> matrix_row_major, Vector offset,
                         std::optional<double> declared_lipschitz = std::nullopt);
  static Operator scalar_affine(double slope, double offset);

  Kind kind() const noexcept { return kind_; }
  const SpacePtr& space() const noexcept { return space_; }

  Vector apply(const Vector& x) const;

  /// Certified upper bound on the Lipschitz constant. Declared bounds win;
  /// otherwise identity -> 1, constant -> 0, scalar -> |slope|, affine ->
  /// power-iteration spectral norm of M times a 1.01 safety factor.
  double lipschitz_upper_bound() const noexcept { return lipschitz_bound_; }

  bool monotone() const noexcept { return monotone_; }

  /// Smallest eigenvalue of the symmetric part; > 0 means strongly monotone.
  double monotonicity_modulus() const noexcept { return modulus_; }

  const std::vector<double>& matrix() const noexcept { return matrix_; }
  const Vector& constant_value() const { return *value_; }
  const Vector& affine_offset() const { return *value_; }
  double slope() const noexcept { return slope_; }
  double scalar_offset() const noexcept { return scalar_offset_; }
  std::optional<double> declared_lipschitz() const noexcept { return declared_; }

private:
  Operator(Kind kind, SpacePtr space) : kind_(kind), space_(std::move(space)) {}

  Kind kind_;
  SpacePtr space_;
  std::optional<Vector> value_;  // constant value, or affine offset
  std::vector<double> matrix_;   // row-major, affine only
  double slope_ = 0.0, scalar_offset_ = 0.0;
  std::optional<double> declared_;
  double lipschitz_bound_ = 0.0;
  double modulus_ = 0.0;
  bool monotone_ = false;
};

/// Strict contraction f with modulus rho in [0,1): a constant map (rho = 0)
/// or x -> scale*x + offset with |scale| <= rho.
class Contraction {
public:
  enum class Kind { constant, affine_scale };

  static Contraction constant(Vector value);
  static Contraction affine_scale(double scale, Vector offset,
                                  std::optional<double> rho = std::nullopt);

  Kind kind() const noexcept { return kind_; }
  const SpacePtr& space() const { return value_.space(); }
  double rho() const noexcept { return rho_; }
  double scale() const noexcept { return scale_; }
  const Vector& value() const noexcept { return value_; }

  Vector apply(const Vector& x) const;

private:
  Contraction(Kind kind, Vector value, double scale, double rho)
      : kind_(kind), value_(std::move(value)), scale_(scale), rho_(rho) {}

  Kind kind_;
  Vector value_;  // constant value, or affine offset
  double scale_;
  double rho_;
};

}  // namespace vi
