#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "gaf/perm.hpp"

namespace gaf::tree {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 1..n.
class Graph {
 public:
  Graph() = default;
  /// Throws OUT_OF_RANGE, BAD_GRAPH (loop or repeated edge).
  Graph(int n, const std::vector<Edge>& edges);

  int size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;
  /// Breadth-first distances from v; -1 for unreachable vertices. Index 0 unused.
  std::vector<int> distances_from(int v) const;
  bool connected() const;
  void check_vertex(int v) const;  // throws OUT_OF_RANGE

 private:
  int n_ = 0;
  std::vector<Edge> edges_;  // normalized u < v, input order
  std::vector<std::vector<int>> adj_;
  std::set<Edge> edge_set_;
};

/// Distance-preserving bijection of the vertices of a graph.
class GraphIsometry {
 public:
  /// Throws NOT_ISOMETRY unless images is a graph automorphism.
  static GraphIsometry of(const Graph& g, std::vector<int> images);
  static GraphIsometry identity(int n);

  int operator()(int v) const { return p_(v); }
  const perm::Permutation& permutation() const { return p_; }
  GraphIsometry operator*(const GraphIsometry& o) const { return GraphIsometry(p_ * o.p_); }
  GraphIsometry inverse() const { return GraphIsometry(p_.inverse()); }
  std::vector<int> fixed_points() const { return perm::fixed_points(p_); }
  bool operator==(const GraphIsometry& o) const { return p_ == o.p_; }

 private:
  explicit GraphIsometry(perm::Permutation p) : p_(std::move(p)) {}
  perm::Permutation p_;
};

class Tree : public Graph {
 public:
  Tree() = default;
  /// Throws NOT_A_TREE, OUT_OF_RANGE, BAD_GRAPH.
  Tree(int n, const std::vector<Edge>& edges);

  int distance(int x, int y) const;
  /// Vertex sequence from x to y.
  std::vector<int> geodesic(int x, int y) const;

 private:
  std::vector<int> parent_, depth_;
};

int tree_distance(const Tree& t, int x, int y);
std::vector<int> tree_geodesic(const Tree& t, int x, int y);

/// Midpoint of [x, s(x)]. Throws NO_FIXED_POINT, ODD_DISTANCE.
int nearest_fixed_vertex(const Tree& t, const GraphIsometry& s, int x);

/// Vertex fixed by every generator, by induction over the generators in input order.
/// Throws NOT_GAF naming an element without fixed point.
int tree_global_fixed_point(const Tree& t, const std::vector<GraphIsometry>& gens,
                            std::size_t cap = perm::kDefaultCap);

/// Common fixed vertex of f and g when f, g and fg all have fixed points. Throws HYPOTHESIS_FAILED.
int gaf_from_three(const Tree& t, const GraphIsometry& f, const GraphIsometry& g);

/// One central vertex or the two ends of the central edge.
std::vector<int> finite_tree_center(const Tree& t);

/// Center of the convex hull of the orbit of seed. Throws INVERSION_DETECTED, ORBIT_UNBOUNDED.
int bounded_orbit_fixed_point(const Tree& t, const std::vector<GraphIsometry>& gens, int seed,
                              std::size_t cap = perm::kDefaultCap);

/// Up to cap elements of the group generated by gens, identity first.
std::vector<GraphIsometry> enumerate_elements(const std::vector<GraphIsometry>& gens, int n, std::size_t cap);

}  // namespace gaf::tree
