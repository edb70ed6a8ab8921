#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "gaf/audit.hpp"
#include "gaf/geo/hyperbolic.hpp"

namespace gaf::geo {

using Complex = std::complex<double>;

/// z -> (az + b) / (cz + d).
struct Sl2 {
  double a = 1, b = 0, c = 0, d = 1;
  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }
  Sl2 operator*(const Sl2& o) const;
  Sl2 inverse() const;  // adjugate, exact for det 1
  Complex apply(Complex z) const;
};

enum class IsometryKind { IDENTITY, ELLIPTIC, PARABOLIC, HYPERBOLIC };
std::string to_string(IsometryKind k);

struct ClassifiedIsometry {
  Sl2 element;
  IsometryKind kind = IsometryKind::IDENTITY;
  std::optional<Point> fixed_point;     // elliptic only
  std::vector<double> boundary_fixed;   // parabolic and hyperbolic; infinity as +inf
  std::optional<double> angle;          // elliptic rotation angle in (-pi, pi]
};

/// Throws NOT_UNIMODULAR when |det - 1| > tol.
ClassifiedIsometry classify_h2(const Sl2& m, double tol = kMatrixTol);

/// Rotation by theta about i*x.
Sl2 rotation_about(double x, double theta);

/// Trace of f * D f^-1 D^-1 with f the rotation by theta about i and D: z -> x z.
/// Throws BAD_PRECONDITION when x = 1, x <= 0 or theta is a multiple of 2 pi.
double commutator_trace_h2(double theta, double x);
double commutator_trace_closed_form(double theta, double x);

struct LineFixedPoints {
  enum class Kind { NONE, ONE, TWO, ALL } kind = Kind::NONE;
  std::vector<double> points;  // infinity as +inf
};

/// Fixed points on the extended real line of z -> (az + b) / (cz + d), ad - bc = +-1.
LineFixedPoints mobius_line_fixed_points(const Sl2& m, double tol = kMatrixTol);

/// Exact audit of the group generated by f: x -> 1/(-x+3) and g: x -> (-x-1)/(5x+4) on the projective line:
/// every reduced word up to max_len has discriminant >= 5 and Fix f, Fix g are disjoint.
AuditReport mobius_eccentric_audit(int max_len);

/// Complex unimodular matrix acting on H_3 = {(z, t) : t > 0}, points stored as (Re z, Im z, t).
struct CSl2 {
  Complex a = 1, b = 0, c = 0, d = 1;
  Complex det() const { return a * d - b * c; }
  Complex trace() const { return a + d; }
  CSl2 operator*(const CSl2& o) const;
  CSl2 inverse() const;
  Point apply(const Point& p) const;
  bool is_scalar(double tol = kMatrixTol) const;  // +-I
};

/// Elliptic: trace real and |tr| < 2 within tol.
bool is_elliptic(const CSl2& m, double tol = kMatrixTol);

/// Boundary fixed points in the Riemann sphere; infinity as nullopt.
std::vector<std::optional<Complex>> boundary_fixed_points(const CSl2& m, double tol = kMatrixTol);

/// Rotation by theta about the vertical geodesic above the boundary point p.
CSl2 vertical_rotation(Complex p, double theta);

}  // namespace gaf::geo
