#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "gaf/error.hpp"
#include "gaf/tree/colored.hpp"

namespace gaf::tree {

using perm::Permutation;

const std::string& ColoredGraph::color(int u, int v) const { return cells_[cell_of(u, v)].color; }

int ColoredGraph::cell_of(int u, int v) const {
  const auto it = edge_cell_.find({std::min(u, v), std::max(u, v)});
  if (it == edge_cell_.end()) throw Error("NOT_AN_EDGE", std::to_string(u) + "-" + std::to_string(v));
  return it->second;
}

std::size_t ColoredGraph::max_cell_size() const {
  std::size_t m = 0;
  for (const auto& c : cells_) m = std::max(m, c.vertices.size());
  return m;
}

namespace {

std::string path_str(const std::vector<int>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "-" : "") + std::to_string(p[i]);
  return s;
}

/// Biconnected components as lists of edge indices.
std::vector<std::vector<std::size_t>> blocks(const Graph& g) {
  std::map<Edge, std::size_t> index;
  for (std::size_t i = 0; i < g.edges().size(); ++i) index[g.edges()[i]] = i;
  const auto id = [&](int u, int v) { return index.at({std::min(u, v), std::max(u, v)}); };
  std::vector<int> disc(g.size() + 1, 0), low(g.size() + 1, 0);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = ++timer;
    for (int w : g.neighbors(u)) {
      if (!disc[w]) {
        stack.push_back(id(u, w));
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          const std::size_t stop = id(u, w);
          std::vector<std::size_t> b;
          while (true) {
            const std::size_t e = stack.back();
            stack.pop_back();
            b.push_back(e);
            if (e == stop) break;
          }
          out.push_back(std::move(b));
        }
      } else if (w != parent && disc[w] < disc[u]) {
        stack.push_back(id(u, w));
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (int v = 1; v <= g.size(); ++v)
    if (!disc[v]) dfs(v, 0);
  return out;
}

/// An elementary cycle of the block through two adjacent edges of different colors.
std::vector<int> polychromatic_cycle(const Graph& g, const std::vector<std::size_t>& block,
                                     const std::vector<std::string>& colors) {
  std::map<int, std::vector<std::size_t>> incident;
  for (auto e : block) {
    incident[g.edges()[e].first].push_back(e);
    incident[g.edges()[e].second].push_back(e);
  }
  for (const auto& [v, es] : incident)
    for (auto e1 : es)
      for (auto e2 : es) {
        if (colors[e1] == colors[e2]) continue;
        const auto other = [&](std::size_t e) { return g.edges()[e].first == v ? g.edges()[e].second : g.edges()[e].first; };
        const int u = other(e1), w = other(e2);
        // path u -> w inside the block avoiding v
        std::map<int, std::vector<int>> adj;
        for (auto e : block) {
          const auto [a, b] = g.edges()[e];
          if (a == v || b == v) continue;
          adj[a].push_back(b);
          adj[b].push_back(a);
        }
        std::map<int, int> prev{{u, u}};
        std::deque<int> q{u};
        while (!q.empty() && !prev.count(w)) {
          const int x = q.front();
          q.pop_front();
          for (int y : adj[x])
            if (!prev.count(y)) {
              prev[y] = x;
              q.push_back(y);
            }
        }
        if (!prev.count(w)) continue;
        std::vector<int> cyc{v};
        std::vector<int> back;
        for (int x = w; x != u; x = prev[x]) back.push_back(x);
        back.push_back(u);
        cyc.insert(cyc.end(), back.rbegin(), back.rend());
        cyc.push_back(v);
        return cyc;
      }
  return {};
}

}  // namespace

ColoredGraph validate_colored_graph(int n, const std::vector<Edge>& edges, const std::vector<std::string>& colors) {
  if (colors.size() != edges.size()) throw Error("BAD_GRAPH", "one color per edge expected");
  ColoredGraph x(n, edges);
  if (!x.connected()) throw Error("NOT_CONNECTED", "graph is not connected");
  // Graph normalizes edges but keeps input order, so colors stay aligned.
  for (const auto& b : blocks(x)) {
    const bool mono = std::all_of(b.begin(), b.end(), [&](std::size_t e) { return colors[e] == colors[b[0]]; });
    if (mono) continue;
    throw Error("POLYCHROMATIC_CYCLE", "cycle " + path_str(polychromatic_cycle(x, b, colors)) + " has several colors");
  }
  // cells: connected components of each color class
  std::vector<std::size_t> uf(edges.size());
  std::iota(uf.begin(), uf.end(), 0);
  const std::function<std::size_t(std::size_t)> find = [&](std::size_t a) { return uf[a] == a ? a : uf[a] = find(uf[a]); };
  std::map<std::pair<int, std::string>, std::size_t> seen;  // (vertex, color) -> an edge
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (int v : {x.edges()[i].first, x.edges()[i].second}) {
      auto [it, fresh] = seen.emplace(std::make_pair(v, colors[i]), i);
      if (!fresh) uf[find(i)] = find(it->second);
    }
  std::map<std::size_t, int> root_cell;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::size_t r = find(i);
    auto [it, fresh] = root_cell.emplace(r, static_cast<int>(x.cells_.size()));
    if (fresh) x.cells_.push_back({it->second, colors[i], {}});
    Cell& c = x.cells_[it->second];
    c.vertices.push_back(x.edges()[i].first);
    c.vertices.push_back(x.edges()[i].second);
    x.edge_cell_[x.edges()[i]] = it->second;
  }
  std::vector<std::size_t> edge_count(x.cells_.size(), 0);
  for (const auto& [e, c] : x.edge_cell_) ++edge_count[c];
  for (auto& c : x.cells_) {
    std::sort(c.vertices.begin(), c.vertices.end());
    c.vertices.erase(std::unique(c.vertices.begin(), c.vertices.end()), c.vertices.end());
    const std::size_t k = c.vertices.size();
    if (edge_count[c.id] != k * (k - 1) / 2)
      throw Error("INCOMPLETE_CELL", "component " + path_str(c.vertices) + " of color " + c.color + " is not complete");
  }
  return x;
}

std::vector<int> colored_geodesic(const ColoredGraph& x, int from, int to) {
  x.check_vertex(from);
  const auto d = x.distances_from(to);
  std::vector<int> path{from};
  for (int v = from; v != to;) {
    for (int w : x.neighbors(v))
      if (d[w] == d[v] - 1) {
        v = w;
        break;
      }
    path.push_back(v);
  }
  return path;
}

FixedStructure colored_fixed_structure(const ColoredGraph& x, const GraphIsometry& s, int v) {
  x.check_vertex(v);
  FixedStructure r;
  const auto path = colored_geodesic(x, v, s(v));
  const std::size_t d = path.size() - 1;
  if (d % 2 == 0) {
    r.vertex = path[d / 2];
    r.vertex_fixed = s(*r.vertex) == *r.vertex;
    return r;
  }
  r.kind = FixedStructure::Kind::CELL;
  r.parity = FixedStructure::Parity::ODD;
  const int a = path[d / 2], b = path[d / 2 + 1];
  r.middle_edge = Edge{a, b};
  r.cell = x.cell_of(a, b);
  const auto& ys = x.cells()[*r.cell].vertices;
  std::vector<int> img;
  for (int y : ys) img.push_back(s(y));
  std::sort(img.begin(), img.end());
  r.cell_stable = img == ys;
  r.middle_swapped = s(a) == b;
  return r;
}

namespace {

[[noreturn]] void not_gaf(const std::string& name, const GraphIsometry& g) {
  throw Error("NOT_GAF", name + " = " + g.permutation().to_cycles() + " fixes no vertex");
}

bool stabilizes(const GraphIsometry& g, const std::vector<int>& ys) {
  return std::all_of(ys.begin(), ys.end(), [&](int y) { return std::binary_search(ys.begin(), ys.end(), g(y)); });
}

bool small_symmetric_fixating(int k) {
  static const auto table = [] {
    std::vector<bool> t(5);
    for (int i = 1; i <= 4; ++i) t[i] = perm::is_fixating(perm::symmetric_group(i)).fixating;
    return t;
  }();
  return k >= 1 && k <= 4 && table[k];
}

}  // namespace

int colored_global_fixed_point(const ColoredGraph& x, const std::vector<GraphIsometry>& gens, std::size_t cap) {
  for (const auto& c : x.cells())
    if (c.vertices.size() >= 5)
      throw Error("CELL_TOO_LARGE", "cell " + path_str(c.vertices) + " has " + std::to_string(c.vertices.size()) + " vertices");
  for (const auto& g : gens)
    if (g.permutation().degree() != x.size()) throw Error("OUT_OF_RANGE", "isometry acts on another vertex set");
  int x0 = 1;
  std::vector<GraphIsometry> base;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const GraphIsometry& s = gens[k];
    const std::string name = "g" + std::to_string(k + 1);
    if (s(x0) != x0) {
      if (s.fixed_points().empty()) not_gaf(name, s);
      const auto elems = enumerate_elements(base, x.size(), cap);
      const FixedStructure fs = colored_fixed_structure(x, s, x0);
      if (fs.kind == FixedStructure::Kind::VERTEX) {
        const int z = *fs.vertex;
        for (const auto& t : elems) {
          const GraphIsometry st = s * t;
          if (st(z) != z) not_gaf(name + " * " + t.permutation().to_cycles(), st);
        }
        x0 = z;
      } else {
        const auto& ys = x.cells()[*fs.cell].vertices;
        for (const auto& t : elems) {
          const GraphIsometry st = s * t;
          if (!stabilizes(st, ys)) not_gaf(name + " * " + t.permutation().to_cycles(), st);
        }
        // restrict the group to the stable cell and take a global fixed point there
        const int m = static_cast<int>(ys.size());
        const auto local = [&](int v) { return static_cast<int>(std::lower_bound(ys.begin(), ys.end(), v) - ys.begin()) + 1; };
        std::vector<Permutation> restricted;
        std::vector<const GraphIsometry*> all{&s};
        for (const auto& b : base) all.push_back(&b);
        for (const auto* g : all) {
          std::vector<int> img;
          for (int y : ys) img.push_back(local((*g)(y)));
          restricted.emplace_back(std::move(img));
        }
        if (!small_symmetric_fixating(m)) throw Error("CELL_TOO_LARGE", "cell permutation group is not fixating");
        const auto verdict = perm::classify_action(perm::generate_group(restricted, cap, m));
        if (verdict.kind != perm::ActionKind::GAG) {
          const Permutation bad = verdict.gaf_violator ? *verdict.gaf_violator : restricted.front();
          throw Error("NOT_GAF", "restriction to cell " + path_str(ys) + " contains " + bad.to_cycles() + " without fixed point");
        }
        x0 = ys[*verdict.gag_witness - 1];
      }
    }
    base.push_back(s);
  }
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (gens[k](x0) != x0) not_gaf("g" + std::to_string(k + 1), gens[k]);
  return x0;
}

}  // namespace gaf::tree
