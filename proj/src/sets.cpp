#include "vi/sets.hpp"

#include <algorithm>
#include <cmath>

#include "vi/errors.hpp"

namespace vi {

ConvexSet ConvexSet::whole(SpacePtr space) {
  if (!space) throw Error::usage("set requires a space");
  return ConvexSet(Kind::whole, std::move(space));
}

ConvexSet ConvexSet::box(SpacePtr space, Coords lower, Coords upper) {
  if (!space) throw Error::usage("set requires a space");
  const size_t d = static_cast<size_t>(space->dim());
  if (lower.size() != d || upper.size() != d) {
    throw Error::usage("box bounds must match the space dimension");
  }
  for (size_t i = 0; i < d; ++i) {
    if (std::isnan(lower[i]) || std::isnan(upper[i])) {
      throw Error::usage("box bounds must not be NaN");
    }
    if (!(lower[i] <= upper[i])) throw Error::usage("box requires lower <= upper per coordinate");
  }
  ConvexSet s(Kind::box, std::move(space));
  s.lower_ = std::move(lower);
  s.upper_ = std::move(upper);
  return s;
}

ConvexSet ConvexSet::ball(Vector center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw Error::usage("ball radius must be positive");
  ConvexSet s(Kind::ball, center.space());
  s.center_ = std::move(center);
  s.radius_ = radius;
  return s;
}

ConvexSet ConvexSet::halfspace(Vector normal, Vector anchor) {
  if (!normal.space()->same(*anchor.space())) {
    throw Error::usage("halfspace normal and anchor must share a space");
  }
  const double sq = inner(normal, normal);
  if (!(sq > 0.0)) throw Error::usage("halfspace normal must be nonzero");
  ConvexSet s(Kind::halfspace, normal.space());
  s.normal_ = std::move(normal);
  s.anchor_ = std::move(anchor);
  s.normal_sq_ = sq;
  return s;
}

Vector ConvexSet::project(const Vector& x) const {
  if (!x.space()->same(*space_)) throw Error::usage("project: vector space mismatch");
  switch (kind_) {
    case Kind::whole:
      return x;
    case Kind::box: {
      Coords c(x.coords().begin(), x.coords().end());
      for (size_t i = 0; i < c.size(); ++i) {
        c[i] = std::min(std::max(c[i], lower_[i]), upper_[i]);
      }
      return detail::make_unchecked(space_, std::move(c));
    }
    case Kind::ball: {
      const Vector d = x - *center_;
      const double dist = norm(d);
      if (dist <= radius_) return x;
      return *center_ + (radius_ / dist) * d;
    }
    case Kind::halfspace: {
      const double s = inner(*normal_, x - *anchor_);
      if (s <= 0.0) return x;
      return x - (s / normal_sq_) * *normal_;
    }
  }
  throw Error{ErrorCode::internal, "unreachable set kind"};
}

bool ConvexSet::contains(const Vector& x, double tol) const {
  if (tol < 0.0) throw Error::usage("membership tolerance must be nonnegative");
  return norm(x - project(x)) <= tol;
}

}  // namespace vi
