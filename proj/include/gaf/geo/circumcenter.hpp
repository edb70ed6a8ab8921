#pragma once

#include <functional>
#include <vector>

#include "gaf/geo/hyperbolic.hpp"

namespace gaf::geo {

struct CircumcenterResult {
  Point center;
  double radius = 0;
  int iterations = 0;   // support-set ball evaluations
  double residual = 0;  // optimality certificate: containment excess and hull-weight deficit
  std::vector<std::size_t> support;
};

struct CircumcenterOptions {
  double tolerance = kDistanceTol;
  unsigned seed = 0;  // order in which points are inserted
};

/// Center of the smallest closed ball containing the points. Throws EMPTY_SET, DIMENSION_MISMATCH.
CircumcenterResult circumcenter(const std::vector<Point>& points, Space s, const CircumcenterOptions& opt = {});

/// max_i d(x, p_i).
double max_distance(const Point& x, const std::vector<Point>& points, Space s);

using PointMap = std::function<Point(const Point&)>;

struct InvariantSetResult {
  CircumcenterResult ball;
  double max_displacement = 0;  // max over generators of d(g(center), center)
  bool fixed = false;
};

/// Circumcenter of a finite invariant set and its displacement under each generator. Throws NOT_INVARIANT.
InvariantSetResult fixed_point_from_invariant_set(const std::vector<PointMap>& gens, const std::vector<Point>& set,
                                                  Space s, double tol = kDistanceTol);

}  // namespace gaf::geo
