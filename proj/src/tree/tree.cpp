#include <algorithm>
#include <deque>
#include <string>

#include "gaf/error.hpp"
#include "gaf/tree/tree.hpp"

namespace gaf::tree {

using perm::Permutation;

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(n + 1) {
  if (n < 1) throw Error("OUT_OF_RANGE", "graph needs at least one vertex");
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error("BAD_GRAPH", "loop at " + std::to_string(u));
    const Edge e{std::min(u, v), std::max(u, v)};
    if (!edge_set_.insert(e).second)
      throw Error("BAD_GRAPH", "repeated edge " + std::to_string(e.first) + "-" + std::to_string(e.second));
    edges_.push_back(e);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) throw Error("OUT_OF_RANGE", "vertex " + std::to_string(v) + " not in 1.." + std::to_string(n_));
}

bool Graph::has_edge(int u, int v) const { return edge_set_.count({std::min(u, v), std::max(u, v)}) > 0; }

std::vector<int> Graph::distances_from(int v) const {
  check_vertex(v);
  std::vector<int> d(n_ + 1, -1);
  std::deque<int> q{v};
  d[v] = 0;
  while (!q.empty()) {
    const int u = q.front();
    q.pop_front();
    for (int w : adj_[u])
      if (d[w] < 0) {
        d[w] = d[u] + 1;
        q.push_back(w);
      }
  }
  return d;
}

bool Graph::connected() const {
  const auto d = distances_from(1);
  return std::none_of(d.begin() + 1, d.end(), [](int x) { return x < 0; });
}

GraphIsometry GraphIsometry::of(const Graph& g, std::vector<int> images) {
  if (static_cast<int>(images.size()) != g.size())
    throw Error("NOT_ISOMETRY", "expected " + std::to_string(g.size()) + " images");
  Permutation p = [&] {
    try {
      return Permutation(std::move(images));
    } catch (const Error& e) {
      throw Error("NOT_ISOMETRY", e.what());
    }
  }();
  // a bijection mapping edges onto edges preserves path distances
  for (auto [u, v] : g.edges())
    if (!g.has_edge(p(u), p(v)))
      throw Error("NOT_ISOMETRY", "edge " + std::to_string(u) + "-" + std::to_string(v) + " is not mapped to an edge");
  return GraphIsometry(std::move(p));
}

GraphIsometry GraphIsometry::identity(int n) { return GraphIsometry(Permutation::identity(n)); }

Tree::Tree(int n, const std::vector<Edge>& edges) : Graph(n, edges), parent_(n + 1, 0), depth_(n + 1, -1) {
  if (static_cast<int>(edges.size()) != n - 1) throw Error("NOT_A_TREE", "a tree on n vertices has n - 1 edges");
  std::deque<int> q{1};
  depth_[1] = 0;
  while (!q.empty()) {
    const int u = q.front();
    q.pop_front();
    for (int w : neighbors(u))
      if (depth_[w] < 0) {
        depth_[w] = depth_[u] + 1;
        parent_[w] = u;
        q.push_back(w);
      }
  }
  if (std::any_of(depth_.begin() + 1, depth_.end(), [](int d) { return d < 0; }))
    throw Error("NOT_A_TREE", "graph is not connected");
}

std::vector<int> Tree::geodesic(int x, int y) const {
  check_vertex(x);
  check_vertex(y);
  std::vector<int> front{x}, back{y};
  while (x != y) {
    if (depth_[x] >= depth_[y]) {
      x = parent_[x];
      front.push_back(x);
    } else {
      y = parent_[y];
      back.push_back(y);
    }
  }
  back.pop_back();
  front.insert(front.end(), back.rbegin(), back.rend());
  return front;
}

int Tree::distance(int x, int y) const { return static_cast<int>(geodesic(x, y).size()) - 1; }

int tree_distance(const Tree& t, int x, int y) { return t.distance(x, y); }
std::vector<int> tree_geodesic(const Tree& t, int x, int y) { return t.geodesic(x, y); }

int nearest_fixed_vertex(const Tree& t, const GraphIsometry& s, int x) {
  t.check_vertex(x);
  if (s.permutation().degree() != t.size()) throw Error("OUT_OF_RANGE", "isometry acts on another vertex set");
  if (s.fixed_points().empty()) throw Error("NO_FIXED_POINT", "isometry " + s.permutation().to_cycles() + " fixes no vertex");
  const auto path = t.geodesic(x, s(x));
  const int d = static_cast<int>(path.size()) - 1;
  if (d % 2) throw Error("ODD_DISTANCE", "d(x, s(x)) = " + std::to_string(d));
  const int z = path[d / 2];
  if (s(z) != z) throw Error("NO_FIXED_POINT", "midpoint is not fixed");
  return z;
}

std::vector<GraphIsometry> enumerate_elements(const std::vector<GraphIsometry>& gens, int n, std::size_t cap) {
  std::vector<GraphIsometry> out{GraphIsometry::identity(n)};
  std::set<Permutation> seen{out[0].permutation()};
  for (std::size_t i = 0; i < out.size() && out.size() < cap; ++i)
    for (const auto& g : gens) {
      GraphIsometry p = g * out[i];
      if (seen.insert(p.permutation()).second) {
        out.push_back(p);
        if (out.size() >= cap) break;
      }
    }
  return out;
}

namespace {

[[noreturn]] void not_gaf(const std::string& name, const GraphIsometry& g) {
  throw Error("NOT_GAF", name + " = " + g.permutation().to_cycles() + " fixes no vertex");
}

}  // namespace

int tree_global_fixed_point(const Tree& t, const std::vector<GraphIsometry>& gens, std::size_t cap) {
  for (const auto& g : gens)
    if (g.permutation().degree() != t.size()) throw Error("OUT_OF_RANGE", "isometry acts on another vertex set");
  int x0 = 1;
  std::vector<GraphIsometry> base;  // generators of G0, which fixes x0
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const GraphIsometry& s = gens[k];
    const std::string name = "g" + std::to_string(k + 1);
    if (s(x0) != x0) {
      if (s.fixed_points().empty()) not_gaf(name, s);
      const auto path = t.geodesic(x0, s(x0));
      const int d = static_cast<int>(path.size()) - 1;
      if (d % 2) not_gaf(name, s);
      const int z = path[d / 2];
      // z must be fixed by s t for every t in G0
      for (const auto& tt : enumerate_elements(base, t.size(), cap)) {
        const GraphIsometry st = s * tt;
        if (st(z) != z) not_gaf(name + " * " + tt.permutation().to_cycles(), st);
      }
      x0 = z;
    }
    base.push_back(s);
  }
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (gens[k](x0) != x0) not_gaf("g" + std::to_string(k + 1), gens[k]);
  return x0;
}

int gaf_from_three(const Tree& t, const GraphIsometry& f, const GraphIsometry& g) {
  const GraphIsometry h = f * g;
  if (f.fixed_points().empty()) throw Error("HYPOTHESIS_FAILED", "f fixes no vertex");
  if (g.fixed_points().empty()) throw Error("HYPOTHESIS_FAILED", "g fixes no vertex");
  if (h.fixed_points().empty()) throw Error("HYPOTHESIS_FAILED", "fg fixes no vertex");
  const int q = g.fixed_points().front();
  const int p = nearest_fixed_vertex(t, f, q);  // also fixed by fg, hence by g
  if (f(p) != p || g(p) != p) throw Error("HYPOTHESIS_FAILED", "derived vertex is not common");
  return p;
}

namespace {

/// Leaf stripping restricted to the vertices flagged in keep.
std::vector<int> center_of(const Tree& t, std::vector<char> keep) {
  std::vector<int> deg(t.size() + 1, 0);
  int remaining = 0;
  for (int v = 1; v <= t.size(); ++v)
    if (keep[v]) {
      ++remaining;
      for (int w : t.neighbors(v)) deg[v] += keep[w];
    }
  std::vector<int> layer;
  for (int v = 1; v <= t.size(); ++v)
    if (keep[v] && deg[v] <= 1) layer.push_back(v);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      keep[v] = 0;
      --remaining;
      for (int w : t.neighbors(v))
        if (keep[w] && --deg[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::vector<int> out;
  for (int v = 1; v <= t.size(); ++v)
    if (keep[v]) out.push_back(v);
  return out;
}

}  // namespace

std::vector<int> finite_tree_center(const Tree& t) { return center_of(t, std::vector<char>(t.size() + 1, 1)); }

int bounded_orbit_fixed_point(const Tree& t, const std::vector<GraphIsometry>& gens, int seed, std::size_t cap) {
  t.check_vertex(seed);
  std::vector<int> orbit{seed};
  std::vector<char> in_orbit(t.size() + 1, 0);
  in_orbit[seed] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& g : gens)
      for (int y : {g(orbit[i]), g.inverse()(orbit[i])})
        if (!in_orbit[y]) {
          in_orbit[y] = 1;
          orbit.push_back(y);
          if (orbit.size() > cap) throw Error("ORBIT_UNBOUNDED", "orbit exceeds cap " + std::to_string(cap));
        }
  std::vector<char> hull(t.size() + 1, 0);
  for (int y : orbit)
    for (int v : t.geodesic(seed, y)) hull[v] = 1;
  const auto c = center_of(t, hull);
  if (c.size() == 1) return c[0];
  for (const auto& g : gens)
    if (g(c[0]) == c[1])
      throw Error("INVERSION_DETECTED", g.permutation().to_cycles() + " swaps " + std::to_string(c[0]) + " and " +
                                            std::to_string(c[1]));
  return c[0];
}

}  // namespace gaf::tree
