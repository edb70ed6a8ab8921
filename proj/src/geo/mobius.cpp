#include <cmath>
#include <numbers>

#include "gaf/error.hpp"
#include "gaf/exact/sl2z.hpp"
#include "gaf/geo/mobius.hpp"

namespace gaf::geo {

using exact::Integer;
using exact::IntMatrix;

Sl2 Sl2::operator*(const Sl2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}
Sl2 Sl2::inverse() const { return {d, -b, -c, a}; }
Complex Sl2::apply(Complex z) const { return (a * z + b) / (c * z + d); }

std::string to_string(IsometryKind k) {
  switch (k) {
    case IsometryKind::IDENTITY: return "IDENTITY";
    case IsometryKind::ELLIPTIC: return "ELLIPTIC";
    case IsometryKind::PARABOLIC: return "PARABOLIC";
    case IsometryKind::HYPERBOLIC: return "HYPERBOLIC";
  }
  return "?";
}

ClassifiedIsometry classify_h2(const Sl2& m, double tol) {
  if (std::abs(m.det() - 1) > tol)
    throw Error("NOT_UNIMODULAR", "determinant " + std::to_string(m.det()) + " is not 1");
  ClassifiedIsometry r;
  r.element = m;
  const double tr = m.trace();
  const bool scalar = std::abs(m.b) <= tol && std::abs(m.c) <= tol && std::abs(m.a - m.d) <= tol;
  if (scalar) {
    r.kind = IsometryKind::IDENTITY;
    return r;
  }
  if (std::abs(tr) < 2 - tol) {
    r.kind = IsometryKind::ELLIPTIC;
    // root of c z^2 + (d - a) z - b = 0 with positive imaginary part
    const double x0 = (m.a - m.d) / (2 * m.c);
    const double y0 = std::sqrt(4 - tr * tr) / (2 * std::abs(m.c));
    r.fixed_point = Point{{x0, y0}};
    // conjugate by z -> y0 z + x0 to a rotation about i
    const Sl2 phi{std::sqrt(y0), x0 / std::sqrt(y0), 0, 1 / std::sqrt(y0)};
    const Sl2 n = phi.inverse() * m * phi;
    double theta = 2 * std::atan2(n.c, n.a);
    if (theta > std::numbers::pi) theta -= 2 * std::numbers::pi;
    if (theta <= -std::numbers::pi) theta += 2 * std::numbers::pi;
    r.angle = theta;
    return r;
  }
  r.kind = std::abs(tr) <= 2 + tol ? IsometryKind::PARABOLIC : IsometryKind::HYPERBOLIC;
  r.boundary_fixed = mobius_line_fixed_points(m, tol).points;
  return r;
}

Sl2 rotation_about(double x, double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {c, -x * s, s / x, c};
}

double commutator_trace_closed_form(double theta, double x) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return 2 * c * c + (x + 1 / x) * s * s;
}

double commutator_trace_h2(double theta, double x) {
  if (!(x > 0) || x == 1) throw Error("BAD_PRECONDITION", "scale must be positive and different from 1");
  if (std::abs(std::remainder(theta, 2 * std::numbers::pi)) < 1e-15)
    throw Error("BAD_PRECONDITION", "angle is a multiple of 2 pi");
  const Sl2 f = rotation_about(1, theta);
  const double r = std::sqrt(x);
  const Sl2 dil{r, 0, 0, 1 / r};
  const Sl2 h = dil * f.inverse() * dil.inverse();
  return (f * h).trace();
}

LineFixedPoints mobius_line_fixed_points(const Sl2& m, double tol) {
  LineFixedPoints r;
  const double e = m.d - m.a;
  if (std::abs(m.c) <= tol) {
    if (std::abs(e) <= tol) {
      r.kind = std::abs(m.b) <= tol ? LineFixedPoints::Kind::ALL : LineFixedPoints::Kind::ONE;
      if (r.kind == LineFixedPoints::Kind::ONE) r.points = {INFINITY};
      return r;
    }
    r.kind = LineFixedPoints::Kind::TWO;
    r.points = {m.b / e, INFINITY};
    return r;
  }
  const double disc = e * e + 4 * m.b * m.c;
  if (disc < -tol) return r;
  if (disc <= tol) {
    r.kind = LineFixedPoints::Kind::ONE;
    r.points = {-e / (2 * m.c)};
    return r;
  }
  r.kind = LineFixedPoints::Kind::TWO;
  const double s = std::sqrt(disc);
  r.points = {(-e - s) / (2 * m.c), (-e + s) / (2 * m.c)};
  if (r.points[0] > r.points[1]) std::swap(r.points[0], r.points[1]);
  return r;
}

namespace {

/// (p + k sqrt(m)) / q with the largest square pulled out of the discriminant.
std::string quadratic_roots_str(const IntMatrix& x) {
  Integer p = x(0, 0) - x(1, 1), q = 2 * x(1, 0), disc = (x(1, 1) - x(0, 0)) * (x(1, 1) - x(0, 0)) + 4 * x(0, 1) * x(1, 0);
  if (q == 0) return "degenerate";
  if (q < 0) {
    p = -p;
    q = -q;
  }
  Integer k = 1, m = disc;
  for (Integer f = 2; f * f <= m; ++f)
    while (m % (f * f) == 0) {
      m /= f * f;
      k *= f;
    }
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), k.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_mpz_t());
  p /= g;
  k /= g;
  q /= g;
  std::string root = (k == 1 ? std::string() : k.get_str()) + (m == 1 ? "" : "√" + m.get_str());
  if (root.empty()) root = "1";
  return "(" + p.get_str() + "±" + root + ")/" + q.get_str();
}

/// Resultant of c z^2 + (d - a) z - b for two matrices (Sylvester determinant).
Integer fixed_point_resultant(const IntMatrix& x, const IntMatrix& y) {
  const Integer p2 = x(1, 0), p1 = x(1, 1) - x(0, 0), p0 = -x(0, 1);
  const Integer q2 = y(1, 0), q1 = y(1, 1) - y(0, 0), q0 = -y(0, 1);
  const Integer z = 0;
  IntMatrix s{{p2, p1, p0, z}, {z, p2, p1, p0}, {q2, q1, q0, z}, {z, q2, q1, q0}};
  return exact::determinant(s);
}

}  // namespace

AuditReport mobius_eccentric_audit(int max_len) {
  AuditReport r;
  r.name = "mobius-eccentric";
  const IntMatrix a = exact::matrix_A(), b = exact::matrix_B();
  r.facts["fix_f"] = quadratic_roots_str(a);
  r.facts["fix_g"] = quadratic_roots_str(b);
  const Integer res = fixed_point_resultant(a, b);
  r.facts["resultant"] = res.get_str();
  r.expect(res != 0, "Fix f and Fix g share a point");
  r.expect(a(1, 0) != 0 && b(1, 0) != 0, "a generator fixes infinity");
  const auto lookup = [&](const std::string& g, long e) { return exact::sl2_power(g == "A" ? a : b, e); };
  const auto words = exact::reduced_words({"A", "B"}, max_len);
  Integer min_disc = -1;
  for (const auto& w : words) {
    const IntMatrix m = exact::evaluate_word(w, IntMatrix::identity(2, Integer(0)), lookup);
    const Integer tr = m.trace();
    const Integer disc = tr * tr - 4;
    if (min_disc < 0 || disc < min_disc) min_disc = disc;
    r.expect(exact::determinant(m) == 1, w.str() + " is not unimodular");
    r.expect(disc >= 5, w.str() + " has discriminant " + disc.get_str());
  }
  r.facts["words"] = std::to_string(words.size());
  r.facts["min_discriminant"] = min_disc.get_str();
  return r;
}

CSl2 CSl2::operator*(const CSl2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}
CSl2 CSl2::inverse() const {
  const Complex D = det();
  return {d / D, -b / D, -c / D, a / D};
}

Point CSl2::apply(const Point& p) const {
  if (p.size() != 3) throw Error("DIMENSION_MISMATCH", "H_3 points have 3 coordinates");
  const Complex z(p[0], p[1]);
  const double t = p[2];
  const Complex w = c * z + d;
  const double den = std::norm(w) + std::norm(c) * t * t;
  const Complex num = (a * z + b) * std::conj(w) + a * std::conj(c) * t * t;
  const Complex nz = num / den;
  return Point{{nz.real(), nz.imag(), t * std::abs(det()) / den}};
}

bool CSl2::is_scalar(double tol) const {
  return std::abs(b) <= tol && std::abs(c) <= tol && std::abs(a - d) <= tol;
}

bool is_elliptic(const CSl2& m, double tol) {
  const Complex tr = m.trace() / std::sqrt(m.det());
  return std::abs(tr.imag()) <= tol && std::abs(tr.real()) < 2 - tol;
}

std::vector<std::optional<Complex>> boundary_fixed_points(const CSl2& m, double tol) {
  const Complex e = m.d - m.a;
  if (std::abs(m.c) <= tol) {
    if (std::abs(e) <= tol) return {std::nullopt};
    return {m.b / e, std::nullopt};
  }
  const Complex s = std::sqrt(e * e + 4.0 * m.b * m.c);
  if (std::abs(s) <= tol) return {-e / (2.0 * m.c)};
  return {(-e - s) / (2.0 * m.c), (-e + s) / (2.0 * m.c)};
}

CSl2 vertical_rotation(Complex p, double theta) {
  const Complex u = std::polar(1.0, theta / 2);
  const CSl2 rot{u, 0, 0, 1.0 / u};
  const CSl2 tr{1, p, 0, 1}, back{1, -p, 0, 1};
  return tr * rot * back;
}

}  // namespace gaf::geo
