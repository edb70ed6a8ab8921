#include <cmath>

#include "gaf/error.hpp"
#include "gaf/exact/so4.hpp"
#include "gaf/geo/euclidean.hpp"

namespace gaf::geo {

RigidMotion RigidMotion::identity(int n) { return {Eigen::MatrixXd::Identity(n, n), Eigen::VectorXd::Zero(n)}; }

RigidMotion RigidMotion::linear(const Eigen::MatrixXd& r) { return {r, Eigen::VectorXd::Zero(r.rows())}; }

RigidMotion RigidMotion::plane_rotation(int n, int i, int j, double angle, const Point& c) {
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
  r(i, i) = std::cos(angle);
  r(i, j) = -std::sin(angle);
  r(j, i) = std::sin(angle);
  r(j, j) = std::cos(angle);
  return {r, c - r * c};
}

RigidMotion RigidMotion::operator*(const RigidMotion& o) const {
  return {rotation * o.rotation, rotation * o.translation + translation};
}

RigidMotion RigidMotion::inverse() const {
  const Eigen::MatrixXd rt = rotation.transpose();
  return {rt, -rt * translation};
}

bool RigidMotion::is_rigid(double tol) const {
  const auto n = rotation.rows();
  if (rotation.cols() != n || translation.size() != n) return false;
  return (rotation.transpose() * rotation - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <= tol;
}

bool RigidMotion::orientation_preserving(double tol) const { return std::abs(rotation.determinant() - 1) <= tol; }

double RigidMotion::distance_to(const RigidMotion& o) const {
  return std::max((rotation - o.rotation).cwiseAbs().maxCoeff(), (translation - o.translation).cwiseAbs().maxCoeff());
}

AffineSubspace AffineSubspace::whole(int n) { return {Point::Zero(n), Eigen::MatrixXd::Identity(n, n)}; }

Point AffineSubspace::project(const Point& x) const { return point + basis * (basis.transpose() * (x - point)); }

bool AffineSubspace::contains(const Point& x, double tol) const { return (project(x) - x).norm() <= tol; }

namespace {

constexpr double kKernelTol = 1e-9;

/// Least-squares solution of a y = b and an orthonormal basis of ker a.
struct KernelSolve {
  Eigen::VectorXd y;
  Eigen::MatrixXd kernel;
  double residual = 0;
};

KernelSolve kernel_solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  svd.setThreshold(kKernelTol);
  KernelSolve k;
  k.y = svd.solve(b);
  k.residual = (a * k.y - b).norm();
  const auto rank = svd.rank();
  k.kernel = svd.matrixV().rightCols(a.cols() - rank);
  return k;
}

/// Fixed set of f inside the f-invariant subspace s.
std::optional<AffineSubspace> fixed_within(const RigidMotion& f, const AffineSubspace& s, double tol) {
  // f(p + B y) = p + B y  <=>  (R B - B) y = p - f(p)
  const Eigen::MatrixXd a = f.rotation * s.basis - s.basis;
  const Eigen::VectorXd b = s.point - f(s.point);
  const KernelSolve k = kernel_solve(a, b);
  if (k.residual > tol) return std::nullopt;
  return AffineSubspace{s.point + s.basis * k.y, s.basis * k.kernel};
}

}  // namespace

std::optional<AffineSubspace> fixed_subspace(const RigidMotion& f, double tol) {
  return fixed_within(f, AffineSubspace::whole(f.dim()), tol);
}

Point abelian_gag_solver(const std::vector<RigidMotion>& gens, double tol) {
  if (gens.empty()) throw Error("EMPTY_SET", "no generators");
  const int n = gens[0].dim();
  std::vector<AffineSubspace> fixes;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].dim() != n || !gens[i].is_rigid()) throw Error("NOT_ISOMETRY", "generator " + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j)
      if ((gens[i] * gens[j]).distance_to(gens[j] * gens[i]) > tol)
        throw Error("NOT_COMMUTING", "generators " + std::to_string(j) + " and " + std::to_string(i));
    auto fx = fixed_subspace(gens[i], tol);
    if (!fx) throw Error("NOT_GAF", "generator " + std::to_string(i) + " has no fixed point");
    fixes.push_back(*fx);
  }
  AffineSubspace f = AffineSubspace::whole(n);
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto& g = gens[i];
      const bool trivial = (g(f.point) - f.point).norm() <= tol &&
                           (f.basis.cols() == 0 || (g.rotation * f.basis - f.basis).cwiseAbs().maxCoeff() <= tol);
      if (trivial) continue;
      // the projection of a fixed point of g onto the g-invariant subspace f is fixed by g
      const Point q = f.project(fixes[i].point);
      if ((g(q) - q).norm() > tol) throw Error("NOT_GAF", "projected fixed point of generator " + std::to_string(i) + " moves");
      const Eigen::MatrixXd a = g.rotation * f.basis - f.basis;
      const KernelSolve k = kernel_solve(a, Eigen::VectorXd::Zero(n));
      f = AffineSubspace{q, f.basis * k.kernel};
      progress = true;
    }
  }
  const Point p = f.project(Point::Zero(n));
  for (std::size_t i = 0; i < gens.size(); ++i)
    if ((gens[i](p) - p).norm() > tol) throw Error("NOT_GAF", "result moved by generator " + std::to_string(i));
  return p;
}

Point cyclic_quotient_gag(const RigidMotion& epsilon, const AffineSubspace& fix_h, double tol) {
  if (!fix_h.contains(epsilon(fix_h.point), tol))
    throw Error("SUBSPACE_NOT_INVARIANT", "epsilon moves the base point off the subspace");
  const Eigen::MatrixXd moved = epsilon.rotation * fix_h.basis;
  if (fix_h.basis.cols() > 0 &&
      (moved - fix_h.basis * (fix_h.basis.transpose() * moved)).cwiseAbs().maxCoeff() > tol)
    throw Error("SUBSPACE_NOT_INVARIANT", "epsilon moves the direction space");
  const auto fx = fixed_subspace(epsilon, tol);
  if (!fx) throw Error("NOT_GAF", "epsilon has no fixed point");
  const Point p = fix_h.project(fx->point);
  if ((epsilon(p) - p).norm() > tol) throw Error("NOT_GAF", "projection is not fixed");
  return p;
}

std::function<Point(const Point&)> lift_to_half_space(const RigidMotion& f) {
  return [f](const Point& p) {
    if (p.size() != f.dim() + 1) throw Error("DIMENSION_MISMATCH", "lift acts on one more coordinate");
    Point out(p.size());
    out.head(f.dim()) = f(p.head(f.dim()));
    out[f.dim()] = p[f.dim()];
    return out;
  };
}

RigidMotion so4_sigma(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  Eigen::Matrix4d m;
  m << c, -s, 0, 0, s, c, 0, 0, 0, 0, c, -s, 0, 0, s, c;
  return RigidMotion::linear(m);
}

RigidMotion so4_tau_shifted(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  Eigen::Matrix4d m;
  m << c, 0, 0, -s, 0, c, -s, 0, 0, s, c, 0, s, 0, 0, c;
  RigidMotion t = RigidMotion::linear(m);
  t.translation = Eigen::Vector4d(1, 0, 0, 0);
  return t;
}

AuditReport isom_r4_numeric_audit(double theta, int max_len, double margin) {
  AuditReport r;
  r.name = "isom-r4-numeric";
  const RigidMotion sigma = so4_sigma(theta), tau = so4_tau_shifted(theta);
  double worst = INFINITY;
  const auto words = exact::alternating_words(max_len);
  for (const auto& w : words) {
    RigidMotion m = RigidMotion::identity(4);
    for (const auto& s : w.syllables()) {
      const RigidMotion base = s.gen == "sigma" ? sigma : tau;
      const RigidMotion step = s.exp < 0 ? base.inverse() : base;
      for (long k = 0; k < std::labs(s.exp); ++k) m = m * step;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m.rotation - Eigen::MatrixXd::Identity(4, 4));
    const double smin = svd.singularValues().minCoeff();
    worst = std::min(worst, smin);
    r.expect(smin >= margin, w.str() + " has an eigenvalue near 1 (min singular value " + std::to_string(smin) + ")");
    r.expect(fixed_subspace(m).has_value(), w.str() + " has no fixed point");
  }
  r.facts["theta"] = std::to_string(theta);
  r.facts["words"] = std::to_string(words.size());
  r.facts["min_singular_value"] = std::to_string(worst);
  return r;
}

}  // namespace gaf::geo
