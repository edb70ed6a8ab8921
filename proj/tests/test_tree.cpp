#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "gaf/error.hpp"
#include "gaf/tree/colored.hpp"
#include "gaf/tree/tree.hpp"

using namespace gaf;
using namespace gaf::tree;

namespace {

template <class F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

Tree path_tree(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  return Tree(n, e);
}

// Center 1, legs 2-3, 4-5, 6-7.
Tree spider() { return Tree(7, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}}); }

Tree random_tree(std::mt19937& rng, int n) {
  std::vector<Edge> e;
  for (int v = 2; v <= n; ++v) e.push_back({std::uniform_int_distribution<int>(1, v - 1)(rng), v});
  // relabel so vertex 1 is not always the root
  std::vector<int> lab(n);
  std::iota(lab.begin(), lab.end(), 1);
  std::shuffle(lab.begin(), lab.end(), rng);
  for (auto& [a, b] : e) {
    a = lab[a - 1];
    b = lab[b - 1];
  }
  return Tree(n, e);
}

// Every automorphism by backtracking over adjacency; stops after cap.
std::vector<std::vector<int>> automorphisms(const Graph& g, std::size_t cap = 2000000) {
  const int n = g.size();
  std::vector<std::vector<int>> out;
  std::vector<int> img(n + 1, 0);
  std::vector<char> used(n + 1, 0);
  std::function<void(int)> rec = [&](int v) {
    if (out.size() >= cap) return;
    if (v > n) {
      out.emplace_back(img.begin() + 1, img.end());
      return;
    }
    for (int w = 1; w <= n; ++w) {
      if (used[w] || g.neighbors(w).size() != g.neighbors(v).size()) continue;
      bool ok = true;
      for (int u = 1; u < v && ok; ++u) ok = g.has_edge(u, v) == g.has_edge(img[u], w);
      if (!ok) continue;
      img[v] = w;
      used[w] = 1;
      rec(v + 1);
      used[w] = 0;
    }
  };
  rec(1);
  return out;
}

std::vector<int> brute_fix(const GraphIsometry& s, int n) {
  std::vector<int> f;
  for (int v = 1; v <= n; ++v)
    if (s(v) == v) f.push_back(v);
  return f;
}

bool induced_connected(const Graph& g, const std::vector<int>& vs) {
  if (vs.empty()) return true;
  std::set<int> in(vs.begin(), vs.end()), seen{vs[0]};
  std::vector<int> stack{vs[0]};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u))
      if (in.count(w) && seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == in.size();
}

// Brute force: the group generated by gens is GAF, and its common fixed set.
struct Brute {
  bool gaf = true;
  std::vector<int> common;
};
Brute brute_group(const std::vector<GraphIsometry>& gens, int n) {
  Brute b;
  const auto elems = enumerate_elements(gens, n, 1000000);
  std::vector<char> c(n + 1, 1);
  for (const auto& e : elems) {
    bool any = false;
    for (int v = 1; v <= n; ++v) {
      const bool f = e(v) == v;
      any |= f;
      if (!f) c[v] = 0;
    }
    b.gaf &= any;
  }
  for (int v = 1; v <= n; ++v)
    if (c[v]) b.common.push_back(v);
  return b;
}

// Graph made of cliques glued along single vertices in a tree pattern; each cell gets its own color.
struct CellTree {
  int n = 1;
  std::vector<Edge> edges;
  std::vector<std::string> colors;
};
CellTree random_cell_tree(std::mt19937& rng, int cells, int max_cell) {
  CellTree t;
  for (int c = 0; c < cells; ++c) {
    const int at = std::uniform_int_distribution<int>(1, t.n)(rng);
    const int k = std::uniform_int_distribution<int>(2, max_cell)(rng);
    std::vector<int> vs{at};
    for (int i = 1; i < k; ++i) vs.push_back(++t.n);
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        t.edges.push_back({vs[i], vs[j]});
        t.colors.push_back("c" + std::to_string(c));
      }
  }
  return t;
}

// Exhaustive elementary-cycle and cell-completeness check on small graphs.
bool brute_colored_valid(int n, const std::vector<Edge>& edges, const std::vector<std::string>& colors) {
  std::map<Edge, std::string> col;
  for (std::size_t i = 0; i < edges.size(); ++i) col[{std::min(edges[i].first, edges[i].second), std::max(edges[i].first, edges[i].second)}] = colors[i];
  const auto c = [&](int a, int b) { return col.at({std::min(a, b), std::max(a, b)}); };
  Graph g(n, edges);
  bool ok = true;
  std::vector<int> path;
  std::vector<char> on(n + 1, 0);
  std::function<void(int, int)> dfs = [&](int start, int u) {
    for (int w : g.neighbors(u)) {
      if (!ok) return;
      if (w == start && path.size() >= 3) {
        std::set<std::string> cs{c(u, start)};
        for (std::size_t i = 0; i + 1 < path.size(); ++i) cs.insert(c(path[i], path[i + 1]));
        if (cs.size() > 1) ok = false;
      }
      if (on[w] || w < start) continue;
      on[w] = 1;
      path.push_back(w);
      dfs(start, w);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (int s = 1; s <= n && ok; ++s) {
    path = {s};
    on[s] = 1;
    dfs(s, s);
    on[s] = 0;
  }
  if (!ok) return false;
  std::set<std::string> all(colors.begin(), colors.end());
  for (const auto& color : all) {
    std::vector<Edge> sub;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (colors[i] == color) sub.push_back(edges[i]);
    std::vector<int> comp(n + 1, 0);
    int next = 0;
    for (auto [a, b] : sub)
      for (int v : {a, b})
        if (!comp[v]) {
          comp[v] = ++next;
          std::vector<int> st{v};
          while (!st.empty()) {
            const int u = st.back();
            st.pop_back();
            for (auto [x, y] : sub)
              for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}})
                if (p == u && !comp[q]) {
                  comp[q] = next;
                  st.push_back(q);
                }
          }
        }
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        if (comp[a] && comp[a] == comp[b]) {
          const Edge e{a, b};
          if (!col.count(e) || col.at(e) != color) return false;
        }
  }
  return true;
}

}  // namespace

TEST_CASE("tree distances and geodesics") {
  const Tree p = path_tree(5);
  CHECK(tree_distance(p, 1, 5) == 4);
  CHECK(tree_distance(p, 3, 3) == 0);
  CHECK(tree_geodesic(p, 1, 5) == std::vector<int>{1, 2, 3, 4, 5});
  const Tree star(3, {{1, 2}, {1, 3}});
  CHECK(tree_geodesic(star, 2, 3) == std::vector<int>{2, 1, 3});
  CHECK(error_code([&] { tree_distance(p, 0, 2); }) == "OUT_OF_RANGE");
  CHECK(error_code([] { Tree(3, {{1, 2}}); }) == "NOT_A_TREE");
  CHECK(error_code([] { Tree(4, {{1, 2}, {2, 3}, {3, 1}}); }) == "NOT_A_TREE");
  CHECK(error_code([] { Tree(2, {{1, 1}}); }) == "BAD_GRAPH");

  std::mt19937 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const Tree t = random_tree(rng, 1 + trial % 60);
    for (int x = 1; x <= t.size(); ++x) {
      const auto d = t.distances_from(x);
      for (int y = 1; y <= t.size(); ++y) {
        const auto g = t.geodesic(x, y);
        REQUIRE(static_cast<int>(g.size()) - 1 == d[y]);
        REQUIRE(g.front() == x);
        REQUIRE(g.back() == y);
        for (std::size_t i = 0; i + 1 < g.size(); ++i) REQUIRE(t.has_edge(g[i], g[i + 1]));
      }
    }
  }
}

TEST_CASE("isometries are verified") {
  const Tree p = path_tree(5);
  CHECK(GraphIsometry::of(p, {5, 4, 3, 2, 1})(1) == 5);
  CHECK(error_code([&] { GraphIsometry::of(p, {2, 1, 3, 4, 5}); }) == "NOT_ISOMETRY");
  CHECK(error_code([&] { GraphIsometry::of(p, {1, 1, 3, 4, 5}); }) == "NOT_ISOMETRY");
  CHECK(error_code([&] { GraphIsometry::of(p, {1, 2, 3}); }) == "NOT_ISOMETRY");
}

TEST_CASE("nearest fixed vertex") {
  const Tree p = path_tree(5);
  const auto refl = GraphIsometry::of(p, {5, 4, 3, 2, 1});
  CHECK(nearest_fixed_vertex(p, refl, 1) == 3);
  CHECK(nearest_fixed_vertex(p, refl, 3) == 3);
  const Tree s = spider();
  const auto rot = GraphIsometry::of(s, {1, 4, 5, 2, 3, 6, 7});
  CHECK(nearest_fixed_vertex(s, rot, 3) == 1);
  CHECK(nearest_fixed_vertex(s, rot, 7) == 7);
  const Tree edge(2, {{1, 2}});
  CHECK(error_code([&] { nearest_fixed_vertex(edge, GraphIsometry::of(edge, {2, 1}), 1); }) == "NO_FIXED_POINT");

  std::mt19937 rng(2);
  for (int trial = 0; trial < 150; ++trial) {
    const Tree t = random_tree(rng, 2 + trial % 11);
    const auto autos = automorphisms(t);
    REQUIRE(autos.size() < 2000000);
    for (const auto& a : autos) {
      const auto s = GraphIsometry::of(t, a);
      const auto fix = brute_fix(s, t.size());
      if (fix.empty()) {
        REQUIRE(error_code([&] { nearest_fixed_vertex(t, s, 1); }) == "NO_FIXED_POINT");
        continue;
      }
      REQUIRE(induced_connected(t, fix));
      for (int x = 1; x <= t.size(); ++x) {
        const int z = nearest_fixed_vertex(t, s, x);
        const auto d = t.distances_from(x);
        int best = 1 << 30, count = 0;
        for (int f : fix) best = std::min(best, d[f]);
        for (int f : fix) count += d[f] == best;
        REQUIRE(count == 1);
        REQUIRE(d[z] == best);
        REQUIRE(s(z) == z);
      }
    }
  }
}

TEST_CASE("nearest fixed vertex on large symmetric trees") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    // k copies of a random rooted tree hung from a new root 1
    const Tree base = random_tree(rng, 2 + trial % 38);
    const int m = base.size(), k = 2 + trial % 4;
    std::vector<Edge> e;
    const auto shift = [&](int c, int v) { return 1 + c * m + v; };
    for (int c = 0; c < k; ++c) {
      e.push_back({1, shift(c, 1)});
      for (auto [a, b] : base.edges()) e.push_back({shift(c, a), shift(c, b)});
    }
    const Tree t(1 + k * m, e);
    REQUIRE(t.size() <= 200);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> img(t.size());
    img[0] = 1;
    for (int c = 0; c < k; ++c)
      for (int v = 1; v <= m; ++v) img[shift(c, v) - 1] = shift(perm[c], v);
    const auto s = GraphIsometry::of(t, img);
    const auto fix = brute_fix(s, t.size());
    REQUIRE(induced_connected(t, fix));
    for (int x = 1; x <= t.size(); ++x) {
      const int z = nearest_fixed_vertex(t, s, x);
      const auto d = t.distances_from(x);
      for (int f : fix) REQUIRE(d[f] >= d[z]);
      REQUIRE(s(z) == z);
    }
  }
}

TEST_CASE("global fixed point on trees") {
  const Tree p = path_tree(5);
  CHECK(tree_global_fixed_point(p, {GraphIsometry::of(p, {5, 4, 3, 2, 1})}) == 3);
  const Tree s = spider();
  const auto swap12 = GraphIsometry::of(s, {1, 4, 5, 2, 3, 6, 7});
  const auto swap23 = GraphIsometry::of(s, {1, 2, 3, 6, 7, 4, 5});
  CHECK(tree_global_fixed_point(s, {swap12, swap23}) == 1);
  CHECK(tree_global_fixed_point(s, {GraphIsometry::identity(7), GraphIsometry::identity(7)}) == 1);
  CHECK(tree_global_fixed_point(s, {}) == 1);
  const Tree edge(2, {{1, 2}});
  CHECK(error_code([&] { tree_global_fixed_point(edge, {GraphIsometry::of(edge, {2, 1})}); }) == "NOT_GAF");

  std::mt19937 rng(4);
  int gaf_cases = 0, other = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const Tree t = random_tree(rng, 3 + trial % 10);
    const auto autos = automorphisms(t);
    std::uniform_int_distribution<std::size_t> pick(0, autos.size() - 1);
    std::vector<GraphIsometry> gens;
    for (int i = 0; i < 1 + trial % 3; ++i) gens.push_back(GraphIsometry::of(t, autos[pick(rng)]));
    const Brute b = brute_group(gens, t.size());
    if (b.gaf) {
      ++gaf_cases;
      REQUIRE(!b.common.empty());  // finitely generated GAF on a tree is GAG
      const int v = tree_global_fixed_point(t, gens);
      REQUIRE(std::binary_search(b.common.begin(), b.common.end(), v));
    } else {
      ++other;
      REQUIRE(error_code([&] { tree_global_fixed_point(t, gens); }) == "NOT_GAF");
    }
  }
  CHECK(gaf_cases > 100);
  CHECK(other > 20);
}

TEST_CASE("GAF from three fixed sets") {
  const Tree p = path_tree(5);
  const auto refl = GraphIsometry::of(p, {5, 4, 3, 2, 1});
  CHECK(gaf_from_three(p, refl, refl) == 3);
  const Tree star(4, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(gaf_from_three(star, GraphIsometry::of(star, {1, 3, 2, 4}), GraphIsometry::of(star, {1, 2, 4, 3})) == 1);
  const Tree edge(2, {{1, 2}});
  CHECK(error_code([&] { gaf_from_three(edge, GraphIsometry::of(edge, {2, 1}), GraphIsometry::identity(2)); }) ==
        "HYPOTHESIS_FAILED");

  std::mt19937 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const Tree t = random_tree(rng, 3 + trial % 10);
    const auto autos = automorphisms(t);
    std::uniform_int_distribution<std::size_t> pick(0, autos.size() - 1);
    const auto f = GraphIsometry::of(t, autos[pick(rng)]), g = GraphIsometry::of(t, autos[pick(rng)]);
    const auto ff = brute_fix(f, t.size()), fg = brute_fix(g, t.size()), fh = brute_fix(f * g, t.size());
    if (ff.empty() || fg.empty() || fh.empty()) {
      REQUIRE(error_code([&] { gaf_from_three(t, f, g); }) == "HYPOTHESIS_FAILED");
      continue;
    }
    const int v = gaf_from_three(t, f, g);
    REQUIRE(std::binary_search(ff.begin(), ff.end(), v));
    REQUIRE(std::binary_search(fg.begin(), fg.end(), v));
    REQUIRE(brute_group({f, g}, t.size()).gaf);
  }
}

TEST_CASE("finite tree center") {
  CHECK(finite_tree_center(path_tree(5)) == std::vector<int>{3});
  CHECK(finite_tree_center(path_tree(4)) == std::vector<int>{2, 3});
  CHECK(finite_tree_center(Tree(6, {{4, 1}, {4, 2}, {4, 3}, {4, 5}, {4, 6}})) == std::vector<int>{4});
  CHECK(finite_tree_center(Tree(1, {})) == std::vector<int>{1});

  std::mt19937 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const Tree t = random_tree(rng, 1 + trial % 12);
    const auto c = finite_tree_center(t);
    REQUIRE((c.size() == 1 || (c.size() == 2 && t.has_edge(c[0], c[1]))));
    // eccentricity oracle: the center minimizes the largest distance
    int best = 1 << 30;
    std::vector<int> ecc(t.size() + 1);
    for (int v = 1; v <= t.size(); ++v) {
      const auto d = t.distances_from(v);
      ecc[v] = *std::max_element(d.begin() + 1, d.end());
      best = std::min(best, ecc[v]);
    }
    for (int v : c) REQUIRE(ecc[v] == best);
    const auto autos = automorphisms(t);
    REQUIRE(autos.size() < 2000000);
    for (const auto& a : autos) {
      std::vector<int> img;
      for (int v : c) img.push_back(a[v - 1]);
      std::sort(img.begin(), img.end());
      REQUIRE(img == c);
    }
  }
}

TEST_CASE("bounded orbits") {
  const Tree p = path_tree(5);
  CHECK(bounded_orbit_fixed_point(p, {}, 2) == 2);
  CHECK(bounded_orbit_fixed_point(p, {GraphIsometry::identity(5)}, 4) == 4);
  CHECK(bounded_orbit_fixed_point(p, {GraphIsometry::of(p, {5, 4, 3, 2, 1})}, 1) == 3);
  const Tree edge(2, {{1, 2}});
  CHECK(error_code([&] { bounded_orbit_fixed_point(edge, {GraphIsometry::of(edge, {2, 1})}, 1); }) ==
        "INVERSION_DETECTED");
  const Tree p4 = path_tree(4);
  CHECK(error_code([&] { bounded_orbit_fixed_point(p4, {GraphIsometry::of(p4, {4, 3, 2, 1})}, 1, 1); }) ==
        "ORBIT_UNBOUNDED");

  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const Tree t = random_tree(rng, 2 + trial % 11);
    const auto autos = automorphisms(t);
    std::uniform_int_distribution<std::size_t> pick(0, autos.size() - 1);
    std::vector<GraphIsometry> gens;
    for (int i = 0; i < 1 + trial % 2; ++i) gens.push_back(GraphIsometry::of(t, autos[pick(rng)]));
    const int seed = 1 + trial % t.size();
    // the group has an inversion iff some element swaps the ends of an edge
    bool inversion = false;
    for (const auto& e : enumerate_elements(gens, t.size(), 1000000))
      for (auto [a, b] : t.edges()) inversion |= e(a) == b && e(b) == a;
    std::string code = error_code([&] { bounded_orbit_fixed_point(t, gens, seed); });
    if (code.empty()) {
      const int v = bounded_orbit_fixed_point(t, gens, seed);
      for (const auto& g : gens) REQUIRE(g(v) == v);
    } else {
      REQUIRE(code == "INVERSION_DETECTED");
      REQUIRE(inversion);
    }
    if (!inversion) REQUIRE(code.empty());
  }
}

TEST_CASE("colored graph validation") {
  auto x = validate_colored_graph(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}},
                                  {"blue", "blue", "blue", "red", "red", "red"});
  CHECK(x.cells().size() == 2);
  CHECK(x.max_cell_size() == 3);
  CHECK(x.color(4, 5) == "red");
  CHECK(error_code([] {
          validate_colored_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}, {"blue", "red", "blue", "red"});
        }) == "POLYCHROMATIC_CYCLE");
  try {
    validate_colored_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}, {"blue", "red", "blue", "red"});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("1-") != std::string::npos);
  }
  // two blue triangles joined by a red edge: same color, distinct cells
  x = validate_colored_graph(6, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}},
                             {"blue", "blue", "blue", "red", "blue", "blue", "blue"});
  CHECK(x.cells().size() == 3);
  CHECK(x.cell_of(1, 2) != x.cell_of(5, 6));
  x = validate_colored_graph(4, {{1, 2}, {2, 3}, {3, 4}}, {"a", "b", "c"});
  CHECK(x.cells().size() == 3);
  CHECK(x.max_cell_size() == 2);
  // monochromatic 4-cycle: not a complete cell
  CHECK(error_code([] { validate_colored_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}, {"a", "a", "a", "a"}); }) ==
        "INCOMPLETE_CELL");
  // same color on a path: component {1,2,3} is not complete
  CHECK(error_code([] { validate_colored_graph(3, {{1, 2}, {2, 3}}, {"a", "a"}); }) == "INCOMPLETE_CELL");
  CHECK(error_code([] { validate_colored_graph(4, {{1, 2}, {3, 4}}, {"a", "b"}); }) == "NOT_CONNECTED");

  // exact validator against exhaustive elementary-cycle enumeration
  std::mt19937 rng(8);
  int valid = 0, invalid = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 2 + trial % 7;
    std::vector<Edge> e;
    std::vector<std::string> c;
    if (trial % 2) {
      const CellTree t = random_cell_tree(rng, 1 + trial % 4, 4);
      if (t.n > 9) continue;
      e = t.edges;
      c = t.colors;
      if (trial % 4 == 1 && !e.empty()) {
        // perturb one color
        c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)] = "z";
      }
      const int nn = t.n;
      const bool expect = brute_colored_valid(nn, e, c);
      const auto code = error_code([&] { validate_colored_graph(nn, e, c); });
      REQUIRE(code.empty() == expect);
      (expect ? valid : invalid)++;
      continue;
    }
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        if (std::bernoulli_distribution(0.45)(rng)) {
          e.push_back({a, b});
          c.push_back(std::string(1, static_cast<char>('a' + std::uniform_int_distribution<int>(0, 1)(rng))));
        }
    Graph g(n, e);
    if (!g.connected()) continue;
    const bool expect = brute_colored_valid(n, e, c);
    const auto code = error_code([&] { validate_colored_graph(n, e, c); });
    REQUIRE(code.empty() == expect);
    (expect ? valid : invalid)++;
  }
  CHECK(valid > 100);
  CHECK(invalid > 100);
}

TEST_CASE("colored geodesics") {
  const auto x = validate_colored_graph(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}},
                                        {"blue", "blue", "blue", "red", "red", "red"});
  CHECK(colored_geodesic(x, 1, 5) == std::vector<int>{1, 3, 5});
  CHECK(colored_geodesic(x, 2, 2) == std::vector<int>{2});
  CHECK(colored_geodesic(x, 4, 5) == std::vector<int>{4, 5});

  std::mt19937 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const CellTree t = random_cell_tree(rng, 20 + trial * 4, 2 + trial % 4);
    REQUIRE(t.n <= 500);
    const auto g = validate_colored_graph(t.n, t.edges, t.colors);
    for (int s = 1; s <= g.size(); s += 1 + g.size() / 25) {
      const auto d = g.distances_from(s);
      for (int y = 1; y <= g.size(); ++y) {
        const auto p = colored_geodesic(g, s, y);
        REQUIRE(static_cast<int>(p.size()) - 1 == d[y]);
        for (std::size_t i = 0; i + 2 < p.size(); ++i) REQUIRE(g.color(p[i], p[i + 1]) != g.color(p[i + 1], p[i + 2]));
      }
    }
  }
}

TEST_CASE("colored fixed structures") {
  const auto k4 = validate_colored_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
                                         {"a", "a", "a", "a", "a", "a"});
  const auto s = GraphIsometry::of(k4, {2, 1, 3, 4});
  auto fs = colored_fixed_structure(k4, s, 3);
  CHECK(fs.kind == FixedStructure::Kind::VERTEX);
  CHECK(fs.parity == FixedStructure::Parity::EVEN);
  CHECK(*fs.vertex == 3);
  fs = colored_fixed_structure(k4, s, 1);
  CHECK(fs.kind == FixedStructure::Kind::CELL);
  CHECK(fs.parity == FixedStructure::Parity::ODD);
  CHECK(*fs.cell == 0);
  CHECK(fs.cell_stable);
  CHECK(fs.middle_swapped);

  const auto p5 = validate_colored_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}, {"a", "b", "a", "b"});
  fs = colored_fixed_structure(p5, GraphIsometry::of(p5, {5, 4, 3, 2, 1}), 1);
  CHECK(fs.kind == FixedStructure::Kind::VERTEX);
  CHECK(*fs.vertex == 3);
  CHECK(fs.vertex_fixed);
}

TEST_CASE("colored global fixed point") {
  // two triangles sharing vertex 3
  const auto x = validate_colored_graph(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}},
                                        {"blue", "blue", "blue", "red", "red", "red"});
  const auto k2 = validate_colored_graph(2, {{1, 2}}, {"a"});
  CHECK(error_code([&] { colored_global_fixed_point(k2, {GraphIsometry::of(k2, {2, 1})}); }) == "NOT_GAF");
  // (1 2)(4 5) fixes only 3
  const auto cyc = GraphIsometry::of(x, {2, 1, 3, 5, 4});
  CHECK(colored_global_fixed_point(x, {cyc}) == 3);
  const auto t1 = GraphIsometry::of(x, {2, 1, 3, 4, 5});
  const auto t2 = GraphIsometry::of(x, {1, 2, 3, 5, 4});
  CHECK(colored_global_fixed_point(x, {t1, t2}) == 3);
  CHECK(colored_global_fixed_point(x, {t1}) == 3);
  const auto k5 = validate_colored_graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}},
                                         std::vector<std::string>(10, "a"));
  CHECK(error_code([&] { colored_global_fixed_point(k5, {GraphIsometry::identity(5)}); }) == "CELL_TOO_LARGE");

  std::mt19937 rng(10);
  int gag = 0, not_gaf = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const CellTree t = random_cell_tree(rng, 1 + trial % 4, 4);
    if (t.n > 10) continue;
    const auto g = validate_colored_graph(t.n, t.edges, t.colors);
    const auto autos = automorphisms(g);
    std::uniform_int_distribution<std::size_t> pick(0, autos.size() - 1);
    std::vector<GraphIsometry> gens;
    for (int i = 0; i < 1 + trial % 3; ++i) gens.push_back(GraphIsometry::of(g, autos[pick(rng)]));
    const Brute b = brute_group(gens, g.size());
    if (b.gaf) {
      ++gag;
      const int v = colored_global_fixed_point(g, gens);
      REQUIRE(std::binary_search(b.common.begin(), b.common.end(), v));
    } else {
      ++not_gaf;
      REQUIRE(error_code([&] { colored_global_fixed_point(g, gens); }) == "NOT_GAF");
    }
  }
  CHECK(gag > 50);
  CHECK(not_gaf > 10);
}

TEST_CASE("size-2 cells reproduce the tree operations") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const Tree t = random_tree(rng, 2 + trial % 11);
    std::vector<std::string> colors;
    for (std::size_t i = 0; i < t.edges().size(); ++i) colors.push_back("e" + std::to_string(i));
    const auto x = validate_colored_graph(t.size(), t.edges(), colors);
    REQUIRE(x.max_cell_size() == 2);
    for (int a = 1; a <= t.size(); ++a)
      for (int b = 1; b <= t.size(); ++b) REQUIRE(colored_geodesic(x, a, b) == t.geodesic(a, b));
    const auto autos = automorphisms(t);
    std::uniform_int_distribution<std::size_t> pick(0, autos.size() - 1);
    std::vector<GraphIsometry> gens;
    for (int i = 0; i < 1 + trial % 3; ++i) gens.push_back(GraphIsometry::of(t, autos[pick(rng)]));
    for (const auto& s : gens) {
      if (brute_fix(s, t.size()).empty()) continue;
      for (int v = 1; v <= t.size(); ++v) {
        const auto fs = colored_fixed_structure(x, s, v);
        REQUIRE(fs.kind == FixedStructure::Kind::VERTEX);
        REQUIRE(*fs.vertex == nearest_fixed_vertex(t, s, v));
      }
    }
    const auto tc = error_code([&] { tree_global_fixed_point(t, gens); });
    const auto cc = error_code([&] { colored_global_fixed_point(x, gens); });
    REQUIRE(tc == cc);
    if (tc.empty()) REQUIRE(tree_global_fixed_point(t, gens) == colored_global_fixed_point(x, gens));
  }
}
