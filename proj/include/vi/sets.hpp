#pragma once

#include <optional>
#include <span>

#include "vi/hilbert.hpp"

namespace vi {

/// Closed convex feasible set with an exact metric projection.
///
/// Supported kinds: the whole space, coordinate boxes (infinite bounds
/// allowed), balls, and halfspaces {z : <normal, z - anchor> <= 0}. All
/// geometry uses the space inner product, so halfspace and ball projections
/// are correct in the weighted grid_l2 metric as well.
class ConvexSet {
public:
  enum class Kind { whole, box, ball, halfspace };

  static ConvexSet whole(SpacePtr space);
  static ConvexSet box(SpacePtr space, Coords lower, Coords upper);
  static ConvexSet ball(Vector center, double radius);
  static ConvexSet halfspace(Vector normal, Vector anchor);

  Kind kind() const noexcept { return kind_; }
  const SpacePtr& space() const noexcept { return space_; }

  /// Nearest point of the set. Points already inside are returned unchanged
  /// (bitwise), including ball boundary points.
  Vector project(const Vector& x) const;

  /// Membership by projection distance: ||x - P(x)|| <= tol.
  bool contains(const Vector& x, double tol) const;

  std::span<const double> box_lower() const noexcept { return {lower_.data(), lower_.size()}; }
  std::span<const double> box_upper() const noexcept { return {upper_.data(), upper_.size()}; }
  const Vector& ball_center() const { return *center_; }
  double ball_radius() const noexcept { return radius_; }
  const Vector& halfspace_normal() const { return *normal_; }
  const Vector& halfspace_anchor() const { return *anchor_; }

private:
  explicit ConvexSet(Kind kind, SpacePtr space) : kind_(kind), space_(std::move(space)) {}

  Kind kind_;
  SpacePtr space_;
  Coords lower_, upper_;                    // box
  std::optional<Vector> center_;            // ball
  double radius_ = 0.0;                     // ball
  std::optional<Vector> normal_, anchor_;   // halfspace
  double normal_sq_ = 0.0;                  // cached <normal, normal>
};

}  // namespace vi
