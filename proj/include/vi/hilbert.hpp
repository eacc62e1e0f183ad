#pragma once

#include <boost/container/small_vector.hpp>

#include <initializer_list>
#include <memory>
#include <span>
#include <utility>

namespace vi {

// Coordinate storage. Inline up to 4 entries so scalar and low-dimensional
// problems never touch the heap inside the iteration loop.
using Coords = boost::container::small_vector<double, 4>;

class Space;
using SpacePtr = std::shared_ptr<const Space>;

/// Real Hilbert space. Two concrete instances: d-dimensional Euclidean space
/// and a uniform-grid discretization of L2[0,1] whose inner product carries
/// composite trapezoid quadrature weights (sum of weights = 1).
class Space {
public:
  enum class Kind { euclidean, grid_l2 };

  static constexpr int kDefaultGridDim = 257;

  static SpacePtr euclidean(int dim);
  static SpacePtr grid_l2(int dim = kDefaultGridDim);

  Kind kind() const noexcept { return kind_; }
  int dim() const noexcept { return dim_; }

  /// Quadrature weights; empty for Euclidean spaces.
  std::span<const double> quad_weights() const noexcept {
    return {weights_.data(), weights_.size()};
  }

  /// Structural equality: two spaces of the same kind and dimension are
  /// interchangeable.
  bool same(const Space& other) const noexcept {
    return kind_ == other.kind_ && dim_ == other.dim_;
  }

private:
  Space(Kind kind, int dim, Coords weights)
      : kind_(kind), dim_(dim), weights_(std::move(weights)) {}

  Kind kind_;
  int dim_;
  Coords weights_;
};

class Vector;

namespace detail {
Vector make_unchecked(SpacePtr space, Coords coords);
}

/// Element of a Space. Coordinates are validated finite on public
/// construction; vectors are immutable values.
class Vector {
public:
  Vector(SpacePtr space, Coords coords);

  static Vector zeros(const SpacePtr& space);
  static Vector constant(const SpacePtr& space, double value);
  static Vector basis(const SpacePtr& space, int index);

  const SpacePtr& space() const noexcept { return space_; }
  int dim() const noexcept { return static_cast<int>(coords_.size()); }
  std::span<const double> coords() const noexcept {
    return {coords_.data(), coords_.size()};
  }
  double operator[](int i) const noexcept { return coords_[static_cast<size_t>(i)]; }

private:
  struct Unchecked {};
  Vector(Unchecked, SpacePtr space, Coords coords)
      : space_(std::move(space)), coords_(std::move(coords)) {}

  friend Vector detail::make_unchecked(SpacePtr, Coords);

  SpacePtr space_;
  Coords coords_;
};

/// Space inner product: plain dot product (Euclidean) or quadrature-weighted
/// sum (grid_l2). Throws on a space mismatch.
double inner(const Vector& a, const Vector& b);

double norm(const Vector& a);

bool is_finite(const Vector& a);

/// Linear combination sum_k c_k v_k, accumulated coordinatewise in term
/// order.
Vector combine(std::span<const std::pair<double, const Vector*>> terms);
Vector combine(std::initializer_list<std::pair<double, const Vector*>> terms);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double c, const Vector& a);

}  // namespace vi
