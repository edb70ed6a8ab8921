#include <cmath>
#include <complex>
#include <random>

#include "gaf/error.hpp"
#include "gaf/geo/hyperbolic.hpp"

namespace gaf::geo {

namespace {

void check_pair(const Point& x, const Point& y) {
  if (x.size() != y.size() || x.size() == 0) throw Error("DIMENSION_MISMATCH", "points differ in dimension");
}

void check_half_space(const Point& x) {
  if (!(x[x.size() - 1] > 0)) throw Error("NOT_IN_HALF_SPACE", "last coordinate must be positive");
}

double acosh1p(double u) { return std::log1p(u + std::sqrt(u * (u + 2))); }

using Cx = std::complex<double>;

}  // namespace

double hyperbolic_distance(const Point& x, const Point& y) {
  check_pair(x, y);
  check_half_space(x);
  check_half_space(y);
  const auto n = x.size() - 1;
  return acosh1p((x - y).squaredNorm() / (2 * x[n] * y[n]));
}

double distance(const Point& x, const Point& y, Space s) {
  if (s == Space::HYPERBOLIC) return hyperbolic_distance(x, y);
  check_pair(x, y);
  return (x - y).norm();
}

Eigen::VectorXd to_hyperboloid(const Point& x) {
  check_half_space(x);
  const auto n = x.size();
  const double t = x[n - 1];
  const double s = x.head(n - 1).squaredNorm() + t * t;
  Eigen::VectorXd X(n + 1);
  X[0] = (1 + s) / (2 * t);
  for (Eigen::Index i = 0; i + 1 < n; ++i) X[i + 1] = x[i] / t;
  X[n] = (1 - s) / (2 * t);
  return X;
}

Point from_hyperboloid(const Eigen::VectorXd& X) {
  const auto n = X.size() - 1;
  const double t = 1 / (X[0] + X[n]);
  Point x(n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) x[i] = X[i + 1] * t;
  x[n - 1] = t;
  return x;
}

double minkowski(const Eigen::VectorXd& X, const Eigen::VectorXd& Y) {
  return -X[0] * Y[0] + X.tail(X.size() - 1).dot(Y.tail(Y.size() - 1));
}

Point midpoint(const Point& x, const Point& y, Space s) {
  check_pair(x, y);
  if (s == Space::EUCLIDEAN) return (x + y) / 2;
  Eigen::VectorXd S = to_hyperboloid(x) + to_hyperboloid(y);
  return from_hyperboloid(S / std::sqrt(-minkowski(S, S)));
}

Point geodesic_point(const Point& x, const Point& y, double t, Space s) {
  check_pair(x, y);
  if (s == Space::EUCLIDEAN) return x + t * (y - x);
  const double d = hyperbolic_distance(x, y);
  if (d == 0) return x;
  const Eigen::VectorXd X = to_hyperboloid(x), Y = to_hyperboloid(y);
  const Eigen::VectorXd U = (Y - std::cosh(d) * X) / std::sinh(d);
  return from_hyperboloid(std::cosh(t * d) * X + std::sinh(t * d) * U);
}

double median_inequality_slack(const Point& x, const Point& y, const Point& z, Space s) {
  const Point m = midpoint(x, y, s);
  const double dzx = distance(z, x, s), dzy = distance(z, y, s), dxy = distance(x, y, s), dzm = distance(z, m, s);
  return (dzx * dzx + dzy * dzy) / 2 - dxy * dxy / 4 - dzm * dzm;
}

MedianMidpoint hyperbolic_midpoint(const Point& x, const Point& y, int samples, unsigned seed) {
  MedianMidpoint r;
  r.m = midpoint(x, y, Space::HYPERBOLIC);
  r.slack = 0;
  std::mt19937 rng(seed);
  const auto n = x.size();
  std::uniform_real_distribution<double> u(-1, 1);
  for (int k = 0; k < samples; ++k) {
    Point z(n);
    for (Eigen::Index i = 0; i + 1 < n; ++i) z[i] = r.m[i] + 4 * u(rng) * r.m[n - 1];
    z[n - 1] = r.m[n - 1] * std::exp(3 * u(rng));
    const double sl = median_inequality_slack(x, y, z, Space::HYPERBOLIC);
    if (k == 0 || sl < r.slack) r.slack = sl;
  }
  return r;
}

double Hyperplane::eval(const Point& p) const {
  if (kind == Kind::VERTICAL) return normal.dot(p) - offset;
  return (p - center).squaredNorm() - radius * radius;
}

Hyperplane mediator_hn(const Point& a, const Point& b) {
  check_pair(a, b);
  check_half_space(a);
  check_half_space(b);
  if ((a - b).norm() == 0) throw Error("EQUAL_POINTS", "mediator of a point with itself");
  const auto n = a.size() - 1;
  const double an = a[n], bn = b[n];
  Hyperplane h;
  if (an == bn) {
    h.kind = Hyperplane::Kind::VERTICAL;
    h.normal = b - a;
    h.normal[n] = 0;
    h.offset = (b.squaredNorm() - a.squaredNorm()) / 2;
    return h;
  }
  // b_n |x - a|^2 = a_n |x - b|^2
  h.kind = Hyperplane::Kind::SPHERE;
  h.center = (bn * a - an * b) / (bn - an);
  h.center[n] = 0;
  const double r2 = h.center.squaredNorm() - (bn * a.squaredNorm() - an * b.squaredNorm()) / (bn - an);
  h.radius = std::sqrt(std::max(0.0, r2));
  return h;
}

bool Geodesic::contains(const Point& p, double tol) const {
  if (kind == Kind::VERTICAL) return std::abs(p[0] - foot) <= tol;
  return std::abs(std::hypot(p[0] - center, p[1]) - radius) <= tol;
}

Geodesic geodesic_through(const Point& x, const Point& y) {
  if (x.size() != 2 || y.size() != 2) throw Error("DIMENSION_MISMATCH", "geodesics are described in H_2");
  check_half_space(x);
  check_half_space(y);
  if ((x - y).norm() == 0) throw Error("EQUAL_POINTS", "geodesic through a single point");
  Geodesic g;
  if (x[0] == y[0]) {
    g.kind = Geodesic::Kind::VERTICAL;
    g.foot = x[0];
    return g;
  }
  g.kind = Geodesic::Kind::CIRCLE;
  g.center = (y.squaredNorm() - x.squaredNorm()) / (2 * (y[0] - x[0]));
  g.radius = std::hypot(x[0] - g.center, x[1]);
  return g;
}

Point project_to_line_h2(const Point& x, const Geodesic& line) {
  if (x.size() != 2) throw Error("DIMENSION_MISMATCH", "projection is defined in H_2");
  check_half_space(x);
  const Cx z(x[0], x[1]);
  Cx w;
  if (line.kind == Geodesic::Kind::VERTICAL) {
    w = z - line.foot;
    w = Cx(0, std::abs(w));
    w += line.foot;
  } else {
    if (!(line.radius > 0)) throw Error("BAD_GEODESIC", "circle radius must be positive");
    const double lo = line.center - line.radius, hi = line.center + line.radius;
    const Cx u = (z - lo) / (hi - z);  // endpoints to 0 and infinity
    const Cx v(0, std::abs(u));
    w = (hi * v + lo) / (v + 1.0);
  }
  Point p(2);
  p << w.real(), w.imag();
  return p;
}

}  // namespace gaf::geo
