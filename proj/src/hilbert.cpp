#include "vi/hilbert.hpp"

#include <cmath>
#include <sstream>

#include "vi/errors.hpp"

namespace vi {

namespace {

Coords trapezoid_weights(int dim) {
  // Composite trapezoid rule on a uniform grid over [0,1]. Exact on
  // constants: the weights sum to the interval length, 1.
  Coords w(static_cast<size_t>(dim), 0.0);
  const double h = 1.0 / static_cast<double>(dim - 1);
  w.front() = 0.5 * h;
  w.back() = 0.5 * h;
  for (int i = 1; i + 1 < dim; ++i) w[static_cast<size_t>(i)] = h;
  return w;
}

void require_same_space(const Vector& a, const Vector& b, const char* op) {
  if (!a.space()->same(*b.space())) {
    std::ostringstream msg;
    msg << op << ": vectors belong to different spaces (dims " << a.dim() << " and "
        << b.dim() << ")";
    throw Error::usage(msg.str());
  }
}

}  // namespace

SpacePtr Space::euclidean(int dim) {
  if (dim < 1) throw Error::usage("space dimension must be at least 1");
  return SpacePtr(new Space(Kind::euclidean, dim, Coords{}));
}

SpacePtr Space::grid_l2(int dim) {
  if (dim < 2) throw Error::usage("grid_l2 space needs at least 2 grid points");
  return SpacePtr(new Space(Kind::grid_l2, dim, trapezoid_weights(dim)));
}

Vector::Vector(SpacePtr space, Coords coords)
    : space_(std::move(space)), coords_(std::move(coords)) {
  if (!space_) throw Error::usage("vector requires a space");
  if (static_cast<int>(coords_.size()) != space_->dim()) {
    std::ostringstream msg;
    msg << "vector has " << coords_.size() << " coordinates but the space has dimension "
        << space_->dim();
    throw Error::usage(msg.str());
  }
  for (double c : coords_) {
    if (!std::isfinite(c)) throw Error::usage("vector coordinates must be finite");
  }
}

Vector Vector::zeros(const SpacePtr& space) {
  return detail::make_unchecked(space, Coords(static_cast<size_t>(space->dim()), 0.0));
}

Vector Vector::constant(const SpacePtr& space, double value) {
  if (!std::isfinite(value)) throw Error::usage("vector coordinates must be finite");
  return detail::make_unchecked(space, Coords(static_cast<size_t>(space->dim()), value));
}

Vector Vector::basis(const SpacePtr& space, int index) {
  if (index < 0 || index >= space->dim()) throw Error::usage("basis index out of range");
  Coords c(static_cast<size_t>(space->dim()), 0.0);
  c[static_cast<size_t>(index)] = 1.0;
  return detail::make_unchecked(space, std::move(c));
}

namespace detail {
Vector make_unchecked(SpacePtr space, Coords coords) {
  return Vector(Vector::Unchecked{}, std::move(space), std::move(coords));
}
}  // namespace detail

double inner(const Vector& a, const Vector& b) {
  require_same_space(a, b, "inner");
  const auto av = a.coords();
  const auto bv = b.coords();
  double acc = 0.0;
  if (a.space()->kind() == Space::Kind::grid_l2) {
    const auto w = a.space()->quad_weights();
    for (size_t i = 0; i < av.size(); ++i) acc += w[i] * av[i] * bv[i];
  } else {
    for (size_t i = 0; i < av.size(); ++i) acc += av[i] * bv[i];
  }
  return acc;
}

double norm(const Vector& a) { return std::sqrt(inner(a, a)); }

bool is_finite(const Vector& a) {
  for (double c : a.coords()) {
    if (!std::isfinite(c)) return false;
  }
  return true;
}

Vector combine(std::span<const std::pair<double, const Vector*>> terms) {
  if (terms.empty()) throw Error::usage("combine requires at least one term");
  const SpacePtr& space = terms.front().second->space();
  Coords acc(static_cast<size_t>(space->dim()), 0.0);
  for (const auto& [c, v] : terms) {
    require_same_space(*terms.front().second, *v, "combine");
    const auto vc = v->coords();
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += c * vc[i];
  }
  return detail::make_unchecked(space, std::move(acc));
}

Vector combine(std::initializer_list<std::pair<double, const Vector*>> terms) {
  return combine(std::span<const std::pair<double, const Vector*>>(terms.begin(), terms.size()));
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_space(a, b, "operator+");
  Coords c(a.coords().begin(), a.coords().end());
  const auto bv = b.coords();
  for (size_t i = 0; i < c.size(); ++i) c[i] += bv[i];
  return detail::make_unchecked(a.space(), std::move(c));
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_space(a, b, "operator-");
  Coords c(a.coords().begin(), a.coords().end());
  const auto bv = b.coords();
  for (size_t i = 0; i < c.size(); ++i) c[i] -= bv[i];
  return detail::make_unchecked(a.space(), std::move(c));
}

Vector operator*(double c, const Vector& a) {
  Coords out(a.coords().begin(), a.coords().end());
  for (double& x : out) x *= c;
  return detail::make_unchecked(a.space(), std::move(out));
}

}  // namespace vi
