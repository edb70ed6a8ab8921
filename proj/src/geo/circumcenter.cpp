#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "gaf/error.hpp"
#include "gaf/geo/circumcenter.hpp"

namespace gaf::geo {

namespace {

/// Balls in a model where the ball through a support set is a linear solve.
class Model {
 public:
  Model(const std::vector<Point>& pts, Space s) : space_(s) {
    for (const auto& p : pts) emb_.push_back(s == Space::HYPERBOLIC ? to_hyperboloid(p) : Eigen::VectorXd(p));
  }

  struct Ball {
    Eigen::VectorXd c;
    double r = -1;  // Euclidean radius or cosh of the hyperbolic radius; negative means empty
  };

  bool inside(const Ball& b, std::size_t i, double tol) const {
    if (b.r < 0) return false;
    if (space_ == Space::EUCLIDEAN) return (emb_[i] - b.c).norm() <= b.r + tol;
    // cosh d <= cosh r, compared through distances for a uniform tolerance
    const double ch = std::max(1.0, -minkowski(b.c, emb_[i]));
    return std::acosh(ch) <= std::acosh(std::max(1.0, b.r)) + tol;
  }

  Ball through(const std::vector<std::size_t>& s) const {
    Ball b;
    if (s.empty()) return b;
    const auto k = static_cast<Eigen::Index>(s.size());
    if (space_ == Space::EUCLIDEAN) {
      const Eigen::VectorXd& p0 = emb_[s[0]];
      if (k == 1) return {p0, 0};
      Eigen::MatrixXd a(k - 1, k - 1);
      Eigen::VectorXd rhs(k - 1);
      for (Eigen::Index i = 1; i < k; ++i) {
        const Eigen::VectorXd di = emb_[s[i]] - p0;
        rhs[i - 1] = di.squaredNorm();
        for (Eigen::Index j = 1; j < k; ++j) a(i - 1, j - 1) = 2 * di.dot(emb_[s[j]] - p0);
      }
      const Eigen::VectorXd lam = a.completeOrthogonalDecomposition().solve(rhs);
      Eigen::VectorXd c = p0;
      for (Eigen::Index i = 1; i < k; ++i) c += lam[i - 1] * (emb_[s[i]] - p0);
      double r = 0;
      for (auto i : s) r = std::max(r, (emb_[i] - c).norm());
      return {c, r};
    }
    if (k == 1) return {emb_[s[0]], 1};
    Eigen::MatrixXd g(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j) g(i, j) = -minkowski(emb_[s[i]], emb_[s[j]]);
    const Eigen::VectorXd mu = g.completeOrthogonalDecomposition().solve(Eigen::VectorXd::Ones(k));
    Eigen::VectorXd x = Eigen::VectorXd::Zero(emb_[0].size());
    for (Eigen::Index i = 0; i < k; ++i) x += mu[i] * emb_[s[i]];
    const double q = -minkowski(x, x);
    if (!(q > 0)) return through({s.front(), s.back()});
    x /= std::sqrt(q);
    double r = 1;
    for (auto i : s) r = std::max(r, -minkowski(x, emb_[i]));
    return {x, r};
  }

  /// Weights w >= 0 expressing the center through the support (hyperbolic: up to scale).
  Eigen::VectorXd weights(const Ball& b, const std::vector<std::size_t>& s) const {
    const auto k = static_cast<Eigen::Index>(s.size());
    const auto dim = emb_[0].size();
    Eigen::MatrixXd a(dim + (space_ == Space::EUCLIDEAN ? 1 : 0), k);
    Eigen::VectorXd rhs(a.rows());
    for (Eigen::Index j = 0; j < k; ++j) a.col(j).head(dim) = emb_[s[j]];
    rhs.head(dim) = b.c;
    if (space_ == Space::EUCLIDEAN) {
      a.row(dim).setOnes();
      rhs[dim] = 1;
    }
    return a.completeOrthogonalDecomposition().solve(rhs);
  }

  Point point(const Ball& b) const { return space_ == Space::HYPERBOLIC ? from_hyperboloid(b.c) : Point(b.c); }
  double radius(const Ball& b) const { return space_ == Space::HYPERBOLIC ? std::acosh(std::max(1.0, b.r)) : b.r; }
  std::size_t max_support() const { return static_cast<std::size_t>(emb_[0].size()) + 1; }

 private:
  Space space_;
  std::vector<Eigen::VectorXd> emb_;
};

struct Welzl {
  const Model& model;
  std::vector<std::size_t>& order;
  double tol;
  int evaluations = 0;

  Model::Ball run(std::size_t end, std::vector<std::size_t>& support) {
    Model::Ball b = model.through(support);
    ++evaluations;
    if (support.size() == model.max_support()) return b;
    for (std::size_t i = 0; i < end; ++i) {
      const std::size_t p = order[i];
      if (model.inside(b, p, tol)) continue;
      support.push_back(p);
      b = run(i, support);
      support.pop_back();
      std::rotate(order.begin(), order.begin() + i, order.begin() + i + 1);  // move to front
    }
    return b;
  }
};

}  // namespace

double max_distance(const Point& x, const std::vector<Point>& points, Space s) {
  double r = 0;
  for (const auto& p : points) r = std::max(r, distance(x, p, s));
  return r;
}

CircumcenterResult circumcenter(const std::vector<Point>& points, Space s, const CircumcenterOptions& opt) {
  if (points.empty()) throw Error("EMPTY_SET", "circumcenter of an empty set");
  for (const auto& p : points)
    if (p.size() != points[0].size() || p.size() == 0) throw Error("DIMENSION_MISMATCH", "points differ in dimension");
  CircumcenterResult r;
  if (points.size() == 1) {
    r.center = points[0];
    r.support = {0};
    return r;
  }
  Model model(points, s);
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937 rng(opt.seed);
  std::shuffle(order.begin(), order.end(), rng);
  Welzl w{model, order, opt.tolerance * 1e-3};
  std::vector<std::size_t> support;
  Model::Ball b = w.run(order.size(), support);

  r.center = model.point(b);
  r.radius = model.radius(b);
  r.iterations = w.evaluations;
  double excess = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double d = distance(r.center, points[i], s);
    excess = std::max(excess, d - r.radius);
    if (std::abs(d - r.radius) <= opt.tolerance) r.support.push_back(i);
  }
  const Eigen::VectorXd wts = model.weights(b, r.support);
  r.residual = std::max({excess, -wts.minCoeff(), 0.0});
  return r;
}

InvariantSetResult fixed_point_from_invariant_set(const std::vector<PointMap>& gens, const std::vector<Point>& set,
                                                  Space s, double tol) {
  if (set.empty()) throw Error("EMPTY_SET", "invariant set is empty");
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (const auto& a : set) {
      const Point ga = gens[g](a);
      double best = INFINITY;
      for (const auto& b : set) best = std::min(best, distance(ga, b, s));
      if (best > tol)
        throw Error("NOT_INVARIANT", "generator " + std::to_string(g) + " moves a point off the set (gap " +
                                         std::to_string(best) + ")");
    }
  InvariantSetResult r;
  r.ball = circumcenter(set, s);
  for (const auto& g : gens) r.max_displacement = std::max(r.max_displacement, distance(g(r.ball.center), r.ball.center, s));
  r.fixed = r.max_displacement <= tol;
  return r;
}

}  // namespace gaf::geo
