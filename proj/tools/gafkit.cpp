#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gaf/exact/lattice.hpp"
#include "gaf/exact/linear_fq.hpp"
#include "gaf/geo/circumcenter.hpp"
#include "gaf/geo/mobius.hpp"
#include "gaf/io/checks.hpp"
#include "gaf/io/descriptors.hpp"
#include "gaf/io/report.hpp"
#include "gaf/tree/colored.hpp"
#include "gaf/tree/tree.hpp"

using namespace gaf;
using io::Json;

namespace {

struct Global {
  io::RunOptions run;
  bool json = false;
};

int usage_code(const std::string& code) {
  return code == "PARSE_ERROR" || code == "SCHEMA_ERROR" || code == "IO_ERROR" || code == "UNKNOWN_CHECK" ||
                 code == "NOT_CORRUPTIBLE" || code == "NO_CHECKS" || code == "USAGE"
             ? 2
             : 1;
}

void emit(const Json& j, const Global& g) { std::cout << (g.json ? j.dump() : j.dump(2)) << '\n'; }

Json fixating_json(const perm::FiniteGroup& g, std::size_t cap) {
  const auto r = perm::is_fixating(g, cap);
  Json j{{"fixating", r.fixating}, {"gaf_subgroups_examined", r.gaf_subgroups_examined}};
  if (r.witness) {
    Json gens = Json::array();
    for (const auto& x : r.witness->generators()) gens.push_back(x.to_cycles());
    j["witness"] = {{"order", r.witness->order()}, {"generators", gens}};
  }
  return j;
}

Json analyze_perm(const Json& in, bool fix, const Global& g) {
  const auto d = io::perm_descriptor(in);
  const auto grp = perm::generate_group(d.generators, g.run.cap, d.degree);
  Json out = io::to_json(perm::classify_action(grp), d.degree, grp.order());
  if (fix) out["fixating"] = fixating_json(grp, g.run.cap);
  return out;
}

Json analyze_matrix(const Json& in, bool fix, const Global& g) {
  const auto d = io::matrix_descriptor(in);
  if (d.ring == io::MatrixDescriptor::Ring::FINITE_FIELD) {
    const auto act = exact::gl_fq_to_permutation(d.dimension, d.q, d.fq_generators, g.run.cap);
    Json out = io::to_json(perm::classify_action(act.group), act.group.degree(), act.group.order());
    out["ring"] = "GF(" + std::to_string(d.q) + ")";
    out["dimension"] = d.dimension;
    Json points = Json::array();
    for (const auto& v : act.points) {
      Json p = Json::array();
      for (const auto& x : v) p.push_back(x);
      points.push_back(p);
    }
    out["points"] = points;
    if (fix) out["fixating"] = fixating_json(act.group, g.run.cap);
    return out;
  }
  if (fix) throw Error("USAGE", "--fixating applies to finite permutation actions only");
  const auto r = exact::zn_global_fixed_point(d.lattice_generators, g.run.cap);
  Json p = Json::array(), c = Json::array();
  for (const auto& x : r.point) p.push_back(x.get_str());
  for (const auto& x : r.centroid) c.push_back(x.get_str());
  return {{"kind", "GAG"}, {"ring", "Z"}, {"order", r.group_order}, {"fixed_point", p}, {"centroid", c}};
}

Json analyze_tree(const Json& in, bool fix, const Global& g) {
  if (fix) throw Error("USAGE", "--fixating applies to finite permutation actions only");
  const auto d = io::tree_descriptor(in);
  const int v = tree::tree_global_fixed_point(d.tree, d.generators, g.run.cap);
  return {{"kind", "GAG"}, {"fixed_vertex", v}};
}

Json analyze_colored(const Json& in, bool fix, const Global& g) {
  if (fix) throw Error("USAGE", "--fixating applies to finite permutation actions only");
  const auto d = io::colored_descriptor(in);
  const int v = tree::colored_global_fixed_point(d.graph, d.generators, g.run.cap);
  return {{"kind", "GAG"}, {"fixed_vertex", v}, {"max_cell_size", d.graph.max_cell_size()}};
}

Json classify(const geo::Sl2& m, double tol) {
  const auto r = geo::classify_h2(m, tol);
  Json out{{"kind", geo::to_string(r.kind)}, {"trace", m.trace()}};
  if (r.fixed_point) out["fixed_point"] = io::to_json(*r.fixed_point);
  if (r.angle) out["angle"] = *r.angle;
  if (!r.boundary_fixed.empty()) {
    Json b = Json::array();
    for (double x : r.boundary_fixed) b.push_back(std::isinf(x) ? Json("inf") : Json(x));
    out["boundary_fixed"] = b;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed-point analysis of group actions"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  std::string only;
  bool list = false;
  app.add_option("--tolerance", g.run.tolerance, "numeric tolerance")->check(CLI::PositiveNumber);
  app.add_option("--cap", g.run.cap, "maximum group or enumeration size");
  app.add_option("--seed", g.run.seed, "random seed");
  app.add_option("--word-len", g.run.word_len, "maximum word length")->check(CLI::Range(1, 12));
  app.add_option("--jobs", g.run.jobs, "worker threads")->check(CLI::Range(1, 256));
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_flag("--timings", g.run.timings, "include elapsed_ms");
  app.add_option("--inject-fault", g.run.fault, "corrupt the generators of one check");
  app.add_option("--only", only, "comma-separated check id prefixes");
  app.add_flag("--list", list, "list check ids and exit");

  auto* verify = app.add_subcommand("verify-paper", "run every registered check");

  auto* analyze = app.add_subcommand("analyze", "classify an action from a descriptor");
  std::string kind, file;
  bool fixating = false;
  analyze->add_option("kind", kind, "perm | matrix | tree | colored-graph")
      ->required()
      ->check(CLI::IsMember({"perm", "matrix", "tree", "colored-graph"}));
  analyze->add_option("file", file, "JSON descriptor")->required();
  analyze->add_flag("--fixating", fixating, "also decide whether the group is fixating");

  auto* circ = app.add_subcommand("circumcenter", "smallest enclosing ball of a point set");
  std::string space_name, circ_file;
  circ->add_option("--space", space_name, "euclidean | hyperbolic");
  circ->add_option("file", circ_file, "JSON points descriptor")->required();

  auto* cls = app.add_subcommand("classify-isometry", "classify an element of SL(2,R) acting on H_2");
  std::string cls_file;
  std::vector<double> entries;
  cls->add_option("file", cls_file, "JSON matrix descriptor");
  cls->add_option("--matrix", entries, "entries a b c d")->expected(4);

  auto* tfp = app.add_subcommand("tree-fixpoint", "vertex fixed by a group of tree isometries");
  std::string tree_file;
  int orbit_seed = 0;
  tfp->add_option("file", tree_file, "JSON tree descriptor")->required();
  tfp->add_option("--orbit-seed", orbit_seed, "use the orbit of this vertex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  for (std::size_t start = 0; !only.empty() && start <= only.size();) {
    const auto end = only.find(',', start);
    const auto part = only.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (!part.empty()) g.run.only.push_back(part);
    if (end == std::string::npos) break;
    start = end + 1;
  }

  try {
    if (*verify) {
      if (list) {
        for (const auto& c : io::checks())
          std::cout << c.id << "  [" << c.anchor << "]" << (c.corruptible ? "  corruptible" : "") << '\n';
        return 0;
      }
      const auto results = io::run_checks(g.run);
      std::cout << (g.json ? io::render_jsonl(results, g.run) : io::render_text(results, g.run));
      return io::any_failure(results) ? 1 : 0;
    }
    if (*analyze) {
      const Json in = io::read_json_file(file);
      Json out;
      if (kind == "perm") out = analyze_perm(in, fixating, g);
      else if (kind == "matrix") out = analyze_matrix(in, fixating, g);
      else if (kind == "tree") out = analyze_tree(in, fixating, g);
      else out = analyze_colored(in, fixating, g);
      emit(out, g);
      return 0;
    }
    if (*circ) {
      const auto d = io::points_descriptor(io::read_json_file(circ_file));
      geo::Space s = geo::Space::EUCLIDEAN;
      if (!space_name.empty()) s = io::parse_space(space_name);
      else if (d.space) s = *d.space;
      const auto r = geo::circumcenter(d.points, s, {g.run.tolerance, g.run.seed});
      Json support = Json::array();
      for (auto i : r.support) support.push_back(i);
      emit({{"space", io::to_string(s)},
            {"center", io::to_json(r.center)},
            {"radius", r.radius},
            {"iterations", r.iterations},
            {"residual", r.residual},
            {"support", support}},
           g);
      return r.residual <= g.run.tolerance ? 0 : 1;
    }
    if (*cls) {
      geo::Sl2 m;
      if (!entries.empty()) m = {entries[0], entries[1], entries[2], entries[3]};
      else if (!cls_file.empty()) m = io::sl2_descriptor(io::read_json_file(cls_file));
      else throw Error("USAGE", "classify-isometry needs a file or --matrix a b c d");
      emit(classify(m, g.run.tolerance), g);
      return 0;
    }
    if (*tfp) {
      const auto d = io::tree_descriptor(io::read_json_file(tree_file));
      Json out{{"kind", "GAG"}};
      if (orbit_seed) {
        out["fixed_vertex"] = tree::bounded_orbit_fixed_point(d.tree, d.generators, orbit_seed, g.run.cap);
        out["orbit_seed"] = orbit_seed;
      } else {
        out["fixed_vertex"] = tree::tree_global_fixed_point(d.tree, d.generators, g.run.cap);
      }
      emit(out, g);
      return 0;
    }
  } catch (const Error& e) {
    if (g.json) std::cout << Json{{"error", e.code()}, {"message", e.what()}}.dump() << '\n';
    std::cerr << "error: " << e.what() << '\n';
    return usage_code(e.code());
  }
  return 2;
}
