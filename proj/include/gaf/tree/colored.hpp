#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaf/tree/tree.hpp"

namespace gaf::tree {

struct Cell {
  int id = 0;
  std::string color;
  std::vector<int> vertices;  // sorted
};

/// Edge-colored graph whose elementary cycles are monochromatic and whose color components are complete.
class ColoredGraph : public Graph {
 public:
  ColoredGraph() = default;
  const std::vector<Cell>& cells() const { return cells_; }
  const std::string& color(int u, int v) const;
  /// Cell containing the edge {u, v}. Throws NOT_AN_EDGE.
  int cell_of(int u, int v) const;
  std::size_t max_cell_size() const;

 private:
  friend ColoredGraph validate_colored_graph(int, const std::vector<Edge>&, const std::vector<std::string>&);
  ColoredGraph(int n, const std::vector<Edge>& edges) : Graph(n, edges) {}
  std::map<Edge, int> edge_cell_;
  std::vector<Cell> cells_;
};

/// Throws NOT_CONNECTED, POLYCHROMATIC_CYCLE (message lists the cycle), INCOMPLETE_CELL, BAD_GRAPH.
ColoredGraph validate_colored_graph(int n, const std::vector<Edge>& edges, const std::vector<std::string>& colors);

/// The path whose consecutive edges have distinct colors; the unique geodesic.
std::vector<int> colored_geodesic(const ColoredGraph& x, int from, int to);

struct FixedStructure {
  enum class Kind { VERTEX, CELL } kind = Kind::VERTEX;
  enum class Parity { EVEN, ODD } parity = Parity::EVEN;
  std::optional<int> vertex;
  std::optional<int> cell;
  std::optional<Edge> middle_edge;  // (a, b) with s(a) = b expected
  bool vertex_fixed = false;        // s(vertex) = vertex
  bool cell_stable = false;         // s(Y) = Y
  bool middle_swapped = false;      // s(a) = b
};

FixedStructure colored_fixed_structure(const ColoredGraph& x, const GraphIsometry& s, int v);

/// Throws CELL_TOO_LARGE (a cell with 5 or more vertices), NOT_GAF.
int colored_global_fixed_point(const ColoredGraph& x, const std::vector<GraphIsometry>& gens,
                               std::size_t cap = perm::kDefaultCap);

}  // namespace gaf::tree
