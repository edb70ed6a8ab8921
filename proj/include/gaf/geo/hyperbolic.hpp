#pragma once

#include <Eigen/Dense>
#include <optional>

namespace gaf::geo {

using Point = Eigen::VectorXd;

inline constexpr double kDistanceTol = 1e-9;
inline constexpr double kMatrixTol = 1e-12;

enum class Space { EUCLIDEAN, HYPERBOLIC };

/// Half-space model: last coordinate > 0. Throws DIMENSION_MISMATCH, NOT_IN_HALF_SPACE.
double hyperbolic_distance(const Point& x, const Point& y);
double distance(const Point& x, const Point& y, Space s);

/// Hyperboloid coordinates (X_0, ..., X_n) with <X, X> = -1, <X, Y> = -X_0 Y_0 + sum X_i Y_i.
Eigen::VectorXd to_hyperboloid(const Point& x);
Point from_hyperboloid(const Eigen::VectorXd& X);
double minkowski(const Eigen::VectorXd& X, const Eigen::VectorXd& Y);

struct MedianMidpoint {
  Point m;
  double slack = 0;  // minimum over the sampled z of the median inequality slack
};

/// Midpoint of the geodesic segment; slack sampled over `samples` random z (seeded).
MedianMidpoint hyperbolic_midpoint(const Point& x, const Point& y, int samples = 64, unsigned seed = 1);
Point midpoint(const Point& x, const Point& y, Space s);

/// (d(z,x)^2 + d(z,y)^2) / 2 - d(x,y)^2 / 4 - d(z,m)^2 with m the midpoint of x, y.
double median_inequality_slack(const Point& x, const Point& y, const Point& z, Space s);

/// Point at arclength fraction t in [0, 1] along the geodesic from x to y.
Point geodesic_point(const Point& x, const Point& y, double t, Space s);

/// Vertical hyperplane {p : normal . p = offset} (normal has zero last entry) or a half-sphere
/// centered on the boundary.
struct Hyperplane {
  enum class Kind { VERTICAL, SPHERE } kind = Kind::VERTICAL;
  Eigen::VectorXd normal;
  double offset = 0;
  Point center;  // last coordinate 0
  double radius = 0;
  /// Signed defining function: zero exactly on the hyperplane.
  double eval(const Point& p) const;
};

/// Points equidistant from a and b. Throws EQUAL_POINTS.
Hyperplane mediator_hn(const Point& a, const Point& b);

/// Geodesic of H_2: vertical half-line {Re z = foot} or half-circle centered on the real axis.
struct Geodesic {
  enum class Kind { VERTICAL, CIRCLE } kind = Kind::VERTICAL;
  double foot = 0;
  double center = 0;
  double radius = 0;
  bool contains(const Point& p, double tol = kDistanceTol) const;
};

/// Geodesic through two distinct points of H_2. Throws EQUAL_POINTS.
Geodesic geodesic_through(const Point& x, const Point& y);

/// Nearest point of the line; a point on the line is returned unchanged. Throws BAD_GEODESIC.
Point project_to_line_h2(const Point& x, const Geodesic& line);

}  // namespace gaf::geo
