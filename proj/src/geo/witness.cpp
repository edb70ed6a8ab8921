#include <cmath>

#include "gaf/error.hpp"
#include "gaf/geo/witness.hpp"

namespace gaf::geo {

R3Witness eccentricity_witness_r3(const RigidMotion& f, const RigidMotion& g, double tol) {
  for (const auto* m : {&f, &g}) {
    if (m->dim() != 3 || !m->is_rigid() || !m->orientation_preserving())
      throw Error("NOT_ROTATION", "expected an orientation-preserving isometry of R^3");
    if (!fixed_subspace(*m, tol)) throw Error("NOT_ROTATION", "isometry has no fixed point");
  }
  R3Witness r;
  Eigen::MatrixXd a(6, 3);
  a << f.rotation - Eigen::Matrix3d::Identity(), g.rotation - Eigen::Matrix3d::Identity();
  Eigen::VectorXd b(6);
  b << -f.translation, -g.translation;
  const Eigen::VectorXd x = a.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
  if ((f(x) - x).norm() <= tol && (g(x) - x).norm() <= tol) {
    r.common_point = true;
    r.point = x;
    return r;
  }
  const RigidMotion candidates[] = {f.inverse() * g, f * g * f.inverse() * g.inverse()};
  const char* names[] = {"f^-1 g", "[f,g]"};
  for (int i = 0; i < 2; ++i)
    if (!fixed_subspace(candidates[i], tol)) {
      r.witness = candidates[i];
      r.word = names[i];
      return r;
    }
  throw Error("NO_WITNESS", "no candidate is fixed-point free");
}

bool fixed_point_free_h3(const CSl2& m, double tol) {
  const CSl2 n = m;
  if (n.is_scalar(tol)) return false;
  const Complex tr = m.trace() / std::sqrt(m.det());
  return std::abs(tr.imag()) > tol || std::abs(tr.real()) >= 2 - tol;
}

namespace {

/// Moebius map sending p to 0 and q to infinity (q = nullopt means infinity).
CSl2 normalizer(Complex p, std::optional<Complex> q) {
  if (!q) return {1, -p, 0, 1};
  return {1, -p, 1, -*q};
}

}  // namespace

H3Witness eccentricity_witness_h3(const CSl2& f, const CSl2& g, double tol) {
  if (!is_elliptic(f, tol) || f.is_scalar(tol) || !is_elliptic(g, tol) || g.is_scalar(tol))
    throw Error("NOT_ELLIPTIC", "expected elliptic elements");
  H3Witness r;
  // move the axis of f to the vertical line over 0, then minimize the convex displacement of g along it
  const auto ends = boundary_fixed_points(f, tol);
  if (ends.size() != 2 || !ends[0]) throw Error("NOT_ELLIPTIC", "axis endpoints not found");
  const CSl2 phi = normalizer(*ends[0], ends[1]);
  const CSl2 gg = phi * g * phi.inverse();
  const auto at = [](double s) { return Point{{0.0, 0.0, std::exp(s)}}; };
  const auto disp = [&](double s) { return hyperbolic_distance(at(s), gg.apply(at(s))); };
  constexpr double kRange = 15;  // search heights e^-15 .. e^15 along the normalized axis
  double lo = -kRange, hi = kRange;
  const double golden = (std::sqrt(5.0) - 1) / 2;
  double x1 = hi - golden * (hi - lo), x2 = lo + golden * (hi - lo);
  double f1 = disp(x1), f2 = disp(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - golden * (hi - lo);
      f1 = disp(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + golden * (hi - lo);
      f2 = disp(x2);
    }
  }
  const double s = (lo + hi) / 2;
  if (disp(s) <= tol) {
    r.common_point = true;
    r.point = phi.inverse().apply(at(s));
    return r;
  }
  const CSl2 fi = f.inverse(), gi = g.inverse();
  const CSl2 candidates[] = {fi * g, g * f * gi * fi, g * f * g * fi};
  const char* names[] = {"f^-1 g", "[g,f]", "gfgf^-1"};
  for (int i = 0; i < 3; ++i)
    if (fixed_point_free_h3(candidates[i], tol)) {
      r.witness = candidates[i];
      r.word = names[i];
      r.trace = candidates[i].trace();
      return r;
    }
  throw Error("NO_WITNESS", "no candidate has a fixed-point free trace");
}

}  // namespace gaf::geo
