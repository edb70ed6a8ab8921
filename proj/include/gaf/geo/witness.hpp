#pragma once

#include <optional>
#include <string>

#include "gaf/geo/euclidean.hpp"
#include "gaf/geo/mobius.hpp"

namespace gaf::geo {

struct R3Witness {
  bool common_point = false;
  std::optional<Point> point;           // a common fixed point when common_point
  std::optional<RigidMotion> witness;   // an element without fixed point otherwise
  std::string word;                     // "f^-1 g" or "[f,g]"
};

/// Throws NOT_ROTATION (not orientation-preserving, or no fixed point), NO_WITNESS.
R3Witness eccentricity_witness_r3(const RigidMotion& f, const RigidMotion& g, double tol = kDistanceTol);

struct H3Witness {
  bool common_point = false;
  std::optional<Point> point;
  std::optional<CSl2> witness;
  std::string word;  // "f^-1 g", "[g,f]" or "gfgf^-1"
  Complex trace;
};

/// Throws NOT_ELLIPTIC, NO_WITNESS.
H3Witness eccentricity_witness_h3(const CSl2& f, const CSl2& g, double tol = kDistanceTol);

/// Has no fixed point in H_3: trace (normalized to det 1) not real in (-2, 2), and not +-I.
bool fixed_point_free_h3(const CSl2& m, double tol = kDistanceTol);

}  // namespace gaf::geo
