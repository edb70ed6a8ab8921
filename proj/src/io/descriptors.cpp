#include "gaf/io/descriptors.hpp"

#include <fstream>
#include <sstream>

namespace gaf::io {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error("SCHEMA_ERROR", path + ": " + what);
}

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) schema(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(path, std::string("missing key \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const std::string& path, const char* key) {
  const Json& a = field(j, path, key);
  if (!a.is_array()) schema(path + "." + key, "expected an array");
  return a;
}

long integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected an integer");
  return j.get<long>();
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) schema(path, "expected a number");
  return j.get<double>();
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

perm::Permutation permutation(const Json& j, int degree, const std::string& path) {
  if (j.is_string()) {
    try {
      return perm::parse_permutation(j.get<std::string>(), degree);
    } catch (const Error& e) {
      if (e.code() != "MALFORMED_CYCLES") throw;
      throw Error("PARSE_ERROR", path + ": " + e.what());
    }
  }
  if (!j.is_array()) schema(path, "expected a cycle string or an image list");
  if (static_cast<int>(j.size()) != degree) schema(path, "image list must have " + std::to_string(degree) + " entries");
  std::vector<int> images;
  for (std::size_t i = 0; i < j.size(); ++i) images.push_back(static_cast<int>(integer(j[i], at(path, i))));
  try {
    return perm::Permutation(images);
  } catch (const Error& e) {
    schema(path, e.what());
  }
}

int positive(const Json& j, const char* key) {
  const long n = integer(field(j, "$", key), std::string("$.") + key);
  if (n < 1) schema(std::string("$.") + key, "must be positive");
  return static_cast<int>(n);
}

std::vector<tree::GraphIsometry> isometries(const Json& j, const tree::Graph& g) {
  std::vector<tree::GraphIsometry> out;
  if (!j.contains("generators")) return out;
  const Json& gens = array_field(j, "$", "generators");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string path = at("$.generators", i);
    const auto p = permutation(gens[i], g.size(), path);
    try {
      out.push_back(tree::GraphIsometry::of(g, p.images()));
    } catch (const Error& e) {
      schema(path, e.what());
    }
  }
  return out;
}

std::vector<tree::Edge> edges_of(const Json& j, bool colored, std::vector<std::string>* colors) {
  const Json& es = array_field(j, "$", "edges");
  std::vector<tree::Edge> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string path = at("$.edges", i);
    const std::size_t want = colored ? 3 : 2;
    if (!es[i].is_array() || es[i].size() != want)
      schema(path, colored ? "expected [u, v, color]" : "expected [u, v]");
    edges.push_back({static_cast<int>(integer(es[i][0], path + "[0]")), static_cast<int>(integer(es[i][1], path + "[1]"))});
    if (colored) {
      if (!es[i][2].is_string()) schema(path + "[2]", "expected a color string");
      colors->push_back(es[i][2].get<std::string>());
    }
  }
  return edges;
}

template <class F>
auto structural(F f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == "OUT_OF_RANGE" || e.code() == "BAD_GRAPH" || e.code() == "NOT_A_TREE") schema("$.edges", e.what());
    throw;
  }
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw Error("PARSE_ERROR", source + ": line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IO_ERROR", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

PermDescriptor perm_descriptor(const Json& j) {
  PermDescriptor d;
  d.degree = positive(j, "degree");
  const Json& gens = array_field(j, "$", "generators");
  for (std::size_t i = 0; i < gens.size(); ++i) d.generators.push_back(permutation(gens[i], d.degree, at("$.generators", i)));
  return d;
}

MatrixDescriptor matrix_descriptor(const Json& j) {
  MatrixDescriptor d;
  const Json& ring = field(j, "$", "ring");
  if (!ring.is_string()) schema("$.ring", "expected \"Z\" or \"GF(q)\"");
  const std::string r = ring.get<std::string>();
  const Json& gens = array_field(j, "$", "generators");
  if (r == "Z") {
    d.ring = MatrixDescriptor::Ring::INTEGER;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string path = at("$.generators", i);
      const Json& lin = field(gens[i], path, "linear");
      const Json& tr = field(gens[i], path, "translation");
      if (!lin.is_array() || lin.empty()) schema(path + ".linear", "expected a nonempty square matrix");
      const std::size_t n = lin.size();
      if (!tr.is_array() || tr.size() != n) schema(path + ".translation", "expected " + std::to_string(n) + " entries");
      exact::Matrix<exact::Integer> m(n, n, exact::Integer(0));
      std::vector<exact::Integer> t(n);
      for (std::size_t a = 0; a < n; ++a) {
        const std::string rp = at(path + ".linear", a);
        if (!lin[a].is_array() || lin[a].size() != n) schema(rp, "expected " + std::to_string(n) + " entries");
        for (std::size_t b = 0; b < n; ++b) m(a, b) = exact::Integer(integer(lin[a][b], at(rp, b)));
        t[a] = exact::Integer(integer(tr[a], at(path + ".translation", a)));
      }
      if (d.dimension == 0) d.dimension = static_cast<int>(n);
      if (d.dimension != static_cast<int>(n)) schema(path, "dimension differs from the first generator");
      d.lattice_generators.push_back({m, t});
    }
    return d;
  }
  unsigned long q = 0;
  if (r.size() < 5 || r.rfind("GF(", 0) != 0 || r.back() != ')') schema("$.ring", "expected \"Z\" or \"GF(q)\"");
  try {
    std::size_t used = 0;
    q = std::stoul(r.substr(3, r.size() - 4), &used);
    if (used != r.size() - 4) throw std::invalid_argument(r);
  } catch (const std::exception&) {
    schema("$.ring", "expected \"Z\" or \"GF(q)\"");
  }
  std::shared_ptr<const exact::FiniteField> f;
  try {
    f = std::make_shared<const exact::FiniteField>(static_cast<std::uint32_t>(q));
  } catch (const Error& e) {
    schema("$.ring", e.what());
  }
  d.q = f->q();
  d.dimension = positive(j, "dimension");
  const std::size_t n = static_cast<std::size_t>(d.dimension);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string path = at("$.generators", i);
    if (!gens[i].is_array() || gens[i].size() != n) schema(path, "expected " + std::to_string(n) + " rows");
    std::vector<exact::FqVector> rows;
    for (std::size_t a = 0; a < n; ++a) {
      const std::string rp = at(path, a);
      if (!gens[i][a].is_array() || gens[i][a].size() != n) schema(rp, "expected " + std::to_string(n) + " entries");
      exact::FqVector row;
      for (std::size_t b = 0; b < n; ++b) {
        const long v = integer(gens[i][a][b], at(rp, b));
        if (v < 0 || v >= static_cast<long>(d.q)) schema(at(rp, b), "field element out of range");
        row.push_back(static_cast<std::uint32_t>(v));
      }
      rows.push_back(row);
    }
    d.fq_generators.push_back(exact::fq_matrix(f, rows));
  }
  return d;
}

TreeDescriptor tree_descriptor(const Json& j) {
  const int n = positive(j, "vertices");
  const auto edges = edges_of(j, false, nullptr);
  TreeDescriptor d;
  d.tree = structural([&] { return tree::Tree(n, edges); });
  d.generators = isometries(j, d.tree);
  return d;
}

ColoredDescriptor colored_descriptor(const Json& j) {
  const int n = positive(j, "vertices");
  std::vector<std::string> colors;
  const auto edges = edges_of(j, true, &colors);
  ColoredDescriptor d;
  d.graph = structural([&] { return tree::validate_colored_graph(n, edges, colors); });
  d.generators = isometries(j, d.graph);
  return d;
}

PointsDescriptor points_descriptor(const Json& j) {
  PointsDescriptor d;
  if (j.is_object() && j.contains("space")) {
    if (!j["space"].is_string()) schema("$.space", "expected \"euclidean\" or \"hyperbolic\"");
    d.space = parse_space(j["space"].get<std::string>());
  }
  const Json& pts = array_field(j, "$", "points");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string path = at("$.points", i);
    if (!pts[i].is_array() || pts[i].empty()) schema(path, "expected a nonempty coordinate list");
    geo::Point p(static_cast<Eigen::Index>(pts[i].size()));
    for (std::size_t k = 0; k < pts[i].size(); ++k) p(static_cast<Eigen::Index>(k)) = number(pts[i][k], at(path, k));
    d.points.push_back(p);
  }
  return d;
}

geo::Sl2 sl2_descriptor(const Json& j) {
  const Json& m = field(j, "$", "matrix");
  if (!m.is_array() || m.size() != 2) schema("$.matrix", "expected [[a, b], [c, d]]");
  for (std::size_t i = 0; i < 2; ++i)
    if (!m[i].is_array() || m[i].size() != 2) schema(at("$.matrix", i), "expected two entries");
  return {number(m[0][0], "$.matrix[0][0]"), number(m[0][1], "$.matrix[0][1]"), number(m[1][0], "$.matrix[1][0]"),
          number(m[1][1], "$.matrix[1][1]")};
}

geo::Space parse_space(const std::string& name) {
  if (name == "euclidean") return geo::Space::EUCLIDEAN;
  if (name == "hyperbolic") return geo::Space::HYPERBOLIC;
  schema("$.space", "unknown space \"" + name + "\"");
}

std::string to_string(geo::Space s) { return s == geo::Space::EUCLIDEAN ? "euclidean" : "hyperbolic"; }

Json to_json(const geo::Point& p) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) a.push_back(p(i));
  return a;
}

Json to_json(const perm::ActionVerdict& v, int degree, std::size_t order) {
  Json j;
  j["kind"] = perm::to_string(v.kind);
  j["degree"] = degree;
  j["order"] = order;
  Json table = Json::object();
  for (const auto& [g, fix] : v.fix_table) table[g.to_cycles()] = fix;
  j["fix_table"] = table;
  j["witness"] = v.gag_witness ? Json(*v.gag_witness) : Json(nullptr);
  j["violator"] = v.gaf_violator ? Json(v.gaf_violator->to_cycles()) : Json(nullptr);
  return j;
}

}  // namespace gaf::io
