#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gaf/audit.hpp"
#include "gaf/geo/hyperbolic.hpp"

namespace gaf::geo {

/// x -> rotation * x + translation.
struct RigidMotion {
  Eigen::MatrixXd rotation;
  Eigen::VectorXd translation;

  static RigidMotion identity(int n);
  static RigidMotion linear(const Eigen::MatrixXd& r);
  /// Rotation by angle in the plane of coordinates (i, j), about the point c.
  static RigidMotion plane_rotation(int n, int i, int j, double angle, const Point& c);
  int dim() const { return static_cast<int>(translation.size()); }
  Point operator()(const Point& x) const { return rotation * x + translation; }
  RigidMotion operator*(const RigidMotion& o) const;
  RigidMotion inverse() const;
  bool is_rigid(double tol = 1e-10) const;
  bool orientation_preserving(double tol = 1e-10) const;
  /// Max entrywise difference of the affine parts.
  double distance_to(const RigidMotion& o) const;
};

/// point + span(basis); basis columns orthonormal.
struct AffineSubspace {
  Point point;
  Eigen::MatrixXd basis;

  static AffineSubspace whole(int n);
  int dim() const { return static_cast<int>(basis.cols()); }
  Point project(const Point& x) const;
  bool contains(const Point& x, double tol = kDistanceTol) const;
};

/// Fixed set of f, or nullopt when empty (residual above tol). Singular values below 1e-9 count as zero.
std::optional<AffineSubspace> fixed_subspace(const RigidMotion& f, double tol = kDistanceTol);

/// Common fixed point of pairwise commuting isometries with fixed points. Throws NOT_COMMUTING, NOT_GAF.
Point abelian_gag_solver(const std::vector<RigidMotion>& gens, double tol = kDistanceTol);

/// Projection onto fix_h of a fixed point of epsilon. Throws SUBSPACE_NOT_INVARIANT, NOT_GAF.
Point cyclic_quotient_gag(const RigidMotion& epsilon, const AffineSubspace& fix_h, double tol = kDistanceTol);

/// F(x, t) = (f(x), t) on the half-space of one more dimension.
std::function<Point(const Point&)> lift_to_half_space(const RigidMotion& f);

/// sigma, tau rotations of R^4 at angle theta and tau~ = tau + (1,0,0,0): every alternating word of length
/// <= max_len starting with sigma and ending with tau~ has no eigenvalue 1 (min singular value of L - I >= margin).
AuditReport isom_r4_numeric_audit(double theta = 1.0, int max_len = 6, double margin = 1e-6);
RigidMotion so4_sigma(double theta);
RigidMotion so4_tau_shifted(double theta);

}  // namespace gaf::geo
