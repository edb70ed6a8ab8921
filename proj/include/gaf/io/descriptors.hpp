#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaf/exact/lattice.hpp"
#include "gaf/exact/linear_fq.hpp"
#include "gaf/geo/hyperbolic.hpp"
#include "gaf/geo/mobius.hpp"
#include "gaf/perm.hpp"
#include "gaf/tree/colored.hpp"
#include "gaf/tree/tree.hpp"

namespace gaf::io {

using Json = nlohmann::json;

/// Throws PARSE_ERROR with line and column.
Json parse_json(const std::string& text, const std::string& source = "input");
/// Throws IO_ERROR, PARSE_ERROR.
Json read_json_file(const std::string& path);

/// { "degree": n, "generators": ["(1 2 3)", "(1 2)(4 5)"] }
struct PermDescriptor {
  int degree = 0;
  std::vector<perm::Permutation> generators;
};

/// { "ring": "GF(q)", "dimension": d, "generators": [[[row], ...], ...] } or
/// { "ring": "Z", "generators": [{ "linear": [[row], ...], "translation": [t] }, ...] }
struct MatrixDescriptor {
  enum class Ring { FINITE_FIELD, INTEGER } ring = Ring::FINITE_FIELD;
  std::uint32_t q = 0;
  int dimension = 0;
  std::vector<exact::FqMatrix> fq_generators;
  std::vector<exact::AffineMap<exact::Integer>> lattice_generators;
};

/// { "vertices": n, "edges": [[u, v], ...], "generators": [[images] or "(cycles)", ...] }
struct TreeDescriptor {
  tree::Tree tree;
  std::vector<tree::GraphIsometry> generators;
};

/// Edges carry a color: [[u, v, "red"], ...].
struct ColoredDescriptor {
  tree::ColoredGraph graph;
  std::vector<tree::GraphIsometry> generators;
};

/// { "space": "euclidean" | "hyperbolic", "points": [[x, ...], ...] }; space may be absent.
struct PointsDescriptor {
  std::optional<geo::Space> space;
  std::vector<geo::Point> points;
};

/// Schema violations throw SCHEMA_ERROR naming the offending path, e.g. "$.generators[1]".
/// Malformed cycle strings throw PARSE_ERROR.
PermDescriptor perm_descriptor(const Json& j);
MatrixDescriptor matrix_descriptor(const Json& j);
TreeDescriptor tree_descriptor(const Json& j);
ColoredDescriptor colored_descriptor(const Json& j);
PointsDescriptor points_descriptor(const Json& j);
/// { "matrix": [[a, b], [c, d]] }
geo::Sl2 sl2_descriptor(const Json& j);

geo::Space parse_space(const std::string& name);  // throws SCHEMA_ERROR
std::string to_string(geo::Space s);

Json to_json(const geo::Point& p);
Json to_json(const perm::ActionVerdict& v, int degree, std::size_t order);

}  // namespace gaf::io
