#include "gaf/io/samples.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

namespace gaf::io {

namespace {

using Lists = std::vector<std::vector<int>>;

int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Records label maps between identical copies; each entry is one automorphism as a list of (from, to) blocks.
struct Builder {
  int next = 0;
  int cells = 0;
  std::vector<tree::Edge> edges;
  std::vector<std::string> colors;
  std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>> moves;

  void record(const Lists& copies) {
    if (copies.size() < 2) return;
    moves.push_back({{copies[0], copies[1]}, {copies[1], copies[0]}});
    if (copies.size() >= 3) {
      std::vector<std::pair<std::vector<int>, std::vector<int>>> cyc;
      for (std::size_t i = 0; i < copies.size(); ++i) cyc.push_back({copies[i], copies[(i + 1) % copies.size()]});
      moves.push_back(cyc);
    }
  }
};

struct TreeShape {
  std::vector<std::pair<std::shared_ptr<const TreeShape>, int>> kids;
  int size = 1;
};

std::shared_ptr<const TreeShape> tree_shape(std::mt19937& rng, int depth, int budget) {
  auto s = std::make_shared<TreeShape>();
  if (depth == 0 || budget <= 1) return s;
  const int types = uniform(rng, 0, 3);
  for (int t = 0; t < types; ++t) {
    const int room = budget - s->size;
    if (room < 1) break;
    auto k = tree_shape(rng, depth - 1, std::max(1, room / 2));
    int mult = uniform(rng, 1, 3);
    while (mult > 1 && s->size + mult * k->size > budget) --mult;
    if (s->size + mult * k->size > budget) continue;
    s->kids.push_back({k, mult});
    s->size += mult * k->size;
  }
  return s;
}

std::vector<int> place_tree(const TreeShape& s, int parent, Builder& b) {
  const int v = ++b.next;
  if (parent) b.edges.push_back({parent, v});
  std::vector<int> list{v};
  for (const auto& [kid, mult] : s.kids) {
    Lists copies;
    for (int m = 0; m < mult; ++m) copies.push_back(place_tree(*kid, v, b));
    for (const auto& c : copies) list.insert(list.end(), c.begin(), c.end());
    b.record(copies);
  }
  return list;
}

struct CellShape;
struct VertexShape {
  std::vector<std::pair<std::shared_ptr<const CellShape>, int>> cells;
  int size = 1;
};
struct CellShape {
  std::vector<std::pair<std::shared_ptr<const VertexShape>, int>> members;
  int size = 0;
};

std::shared_ptr<const VertexShape> vertex_shape(std::mt19937& rng, int depth, int budget, int max_cell) {
  auto s = std::make_shared<VertexShape>();
  if (depth == 0 || budget <= 1) return s;
  const int types = uniform(rng, 0, 2);
  for (int t = 0; t < types; ++t) {
    const int room = budget - s->size;
    if (room < 1) break;
    auto c = std::make_shared<CellShape>();
    int slots = uniform(rng, 1, max_cell - 1);
    while (slots > 0) {
      const int left = room - c->size;
      if (left < 1) break;
      auto m = vertex_shape(rng, depth - 1, std::max(1, left / (2 * slots)), max_cell);
      int mult = uniform(rng, 1, slots);
      while (mult > 1 && c->size + mult * m->size > room) --mult;
      if (c->size + mult * m->size > room) break;
      c->members.push_back({m, mult});
      c->size += mult * m->size;
      slots -= mult;
    }
    if (c->members.empty()) continue;
    int mult = uniform(rng, 1, 3);
    while (mult > 1 && s->size + mult * c->size > budget) --mult;
    if (s->size + mult * c->size > budget) continue;
    s->cells.push_back({c, mult});
    s->size += mult * c->size;
  }
  return s;
}

std::vector<int> place_vertex(const VertexShape& s, int v, Builder& b);

std::vector<int> place_cell(const CellShape& c, int v, Builder& b) {
  const std::string color = "c" + std::to_string(b.cells++);
  std::vector<int> list, cell{v};
  for (const auto& [m, mult] : c.members) {
    Lists copies;
    for (int k = 0; k < mult; ++k) {
      const int u = ++b.next;
      cell.push_back(u);
      copies.push_back(place_vertex(*m, u, b));
    }
    for (const auto& cp : copies) list.insert(list.end(), cp.begin(), cp.end());
    b.record(copies);
  }
  for (std::size_t i = 0; i < cell.size(); ++i)
    for (std::size_t j = i + 1; j < cell.size(); ++j) {
      b.edges.push_back({cell[i], cell[j]});
      b.colors.push_back(color);
    }
  return list;
}

std::vector<int> place_vertex(const VertexShape& s, int v, Builder& b) {
  std::vector<int> list{v};
  for (const auto& [c, mult] : s.cells) {
    Lists copies;
    for (int k = 0; k < mult; ++k) copies.push_back(place_cell(*c, v, b));
    for (const auto& cp : copies) list.insert(list.end(), cp.begin(), cp.end());
    b.record(copies);
  }
  return list;
}

std::vector<int> move_images(const std::vector<std::pair<std::vector<int>, std::vector<int>>>& move, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  for (const auto& [from, to] : move)
    for (std::size_t i = 0; i < from.size(); ++i) img[from[i] - 1] = to[i];
  return img;
}

SymmetricSample finish(std::mt19937& rng, Builder& b, int max_generators) {
  SymmetricSample s;
  s.n = b.next;
  std::vector<std::vector<int>> gens;
  const int k = uniform(rng, 1, max_generators);
  for (int i = 0; i < k; ++i) {
    std::vector<int> img(s.n);
    std::iota(img.begin(), img.end(), 1);
    if (!b.moves.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, b.moves.size() - 1);
      img = move_images(b.moves[pick(rng)], s.n);
      if (uniform(rng, 0, 2) == 0) {
        const auto other = move_images(b.moves[pick(rng)], s.n);
        for (auto& x : img) x = other[x - 1];
      }
    }
    gens.push_back(img);
  }
  std::vector<int> label(s.n);
  std::iota(label.begin(), label.end(), 1);
  std::shuffle(label.begin(), label.end(), rng);
  for (auto [a, c] : b.edges) s.edges.push_back({label[a - 1], label[c - 1]});
  s.colors = b.colors;
  for (const auto& g : gens) {
    std::vector<int> img(s.n);
    for (int v = 1; v <= s.n; ++v) img[label[v - 1] - 1] = label[g[v - 1] - 1];
    s.generators.push_back(img);
  }
  return s;
}

}  // namespace

SymmetricSample random_symmetric_tree(std::mt19937& rng, int max_vertices, int max_generators) {
  auto shape = tree_shape(rng, uniform(rng, 2, 6), uniform(rng, 2, max_vertices));
  Builder b;
  place_tree(*shape, 0, b);
  return finish(rng, b, max_generators);
}

SymmetricSample random_symmetric_cell_graph(std::mt19937& rng, int max_vertices, int max_cell, int max_generators) {
  auto shape = vertex_shape(rng, uniform(rng, 2, 5), uniform(rng, 2, max_vertices), max_cell);
  Builder b;
  b.next = 1;
  place_vertex(*shape, 1, b);
  return finish(rng, b, max_generators);
}

std::vector<exact::LatticeIsometry> random_lattice_generators(std::mt19937& rng, std::size_t n) {
  std::vector<exact::Rational> c(n);
  const bool half = rng() % 2;
  for (auto& x : c) {
    x = half ? exact::Rational(2 * long(rng() % 4) - 3, 2) : exact::Rational(long(rng() % 5) - 2);
    x.canonicalize();
  }
  std::vector<exact::LatticeIsometry> gens;
  const std::size_t count = 1 + rng() % 2;
  for (std::size_t g = 0; g < count; ++g) {
    auto s = exact::SignedPerm::identity(n);
    std::shuffle(s.perm.begin(), s.perm.end(), rng);
    for (auto& x : s.sign) x = rng() % 2 ? 1 : -1;
    const auto lc = s.apply(c);
    std::vector<exact::Integer> t(n);
    for (std::size_t i = 0; i < n; ++i) {
      exact::Rational d = c[i] - lc[i];
      d.canonicalize();
      t[i] = d.get_num();
    }
    gens.push_back({s, t});
  }
  return gens;
}

}  // namespace gaf::io
