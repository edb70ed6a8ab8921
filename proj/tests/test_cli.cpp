#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>

#include <json.hpp>

using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run gafkit(const std::string& args) {
  const std::string cmd = std::string(GAFKIT_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct Scratch {
  fs::path dir = fs::temp_directory_path() / ("gafkit_cli_" + std::to_string(getpid()));
  Scratch() { fs::create_directories(dir); }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
};

fs::path scratch() {
  static const Scratch s;
  return s.dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::vector<Json> lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(Json::parse(line));
  return out;
}

double h_dist(double x1, double y1, double x2, double y2) {
  return std::acosh(1 + ((x1 - x2) * (x1 - x2) + (y1 - y2) * (y1 - y2)) / (2 * y1 * y2));
}

}  // namespace

TEST_CASE("verify-paper passes with byte-identical reports across runs and job counts") {
  const auto a = gafkit("verify-paper --json");
  const auto b = gafkit("verify-paper --json");
  const auto c = gafkit("verify-paper --json --jobs 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  const auto recs = lines(a.out);
  REQUIRE(recs.size() > 1);
  const Json summary = recs.back()["summary"];
  CHECK(summary["fail"] == 0);
  CHECK(summary["skipped"] == 0);
  CHECK(summary["total"] == recs.size() - 1);
  std::set<std::string> ids;
  for (std::size_t i = 0; i + 1 < recs.size(); ++i) {
    const auto id = recs[i]["check_id"].get<std::string>();
    CHECK(ids.insert(id).second);
    CHECK(recs[i]["status"] == "PASS");
    CHECK(summary["anchors"].contains(id));
    CHECK_FALSE(recs[i].contains("elapsed_ms"));
  }
  CHECK(summary["anchors"].size() == ids.size());
}

TEST_CASE("a different seed changes randomized details but not verdicts") {
  const auto a = gafkit("verify-paper --json --only tree.,lattice.zn.n2");
  const auto b = gafkit("verify-paper --json --seed 7 --only tree.,lattice.zn.n2");
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.out != b.out);
}

TEST_CASE("a low cap surfaces as SKIPPED entries") {
  const auto r = gafkit("verify-paper --json --cap 10");
  CHECK(r.code == 0);
  const auto recs = lines(r.out);
  int skipped = 0;
  for (std::size_t i = 0; i + 1 < recs.size(); ++i)
    if (recs[i]["status"] == "SKIPPED") {
      ++skipped;
      CHECK(recs[i]["details"]["reason"].get<std::string>().find("CAP_EXCEEDED") != std::string::npos);
    }
  CHECK(skipped > 0);
  CHECK(recs.back()["summary"]["skipped"] == skipped);
  CHECK(recs.back()["summary"]["fail"] == 0);
}

TEST_CASE("an injected fault yields exactly one FAIL naming the check") {
  for (const std::string id : {"perm.symmetric.s5.eccentric-witness", "linear.gl3.q02.cyclic-shift-witness",
                               "trace.powers.B", "tree.global-fixed-point.random"}) {
    CAPTURE(id);
    const auto r = gafkit("verify-paper --json --inject-fault " + id);
    CHECK(r.code == 1);
    const auto recs = lines(r.out);
    int fails = 0;
    for (std::size_t i = 0; i + 1 < recs.size(); ++i)
      if (recs[i]["status"] == "FAIL") {
        ++fails;
        CHECK(recs[i]["check_id"] == id);
        CHECK(recs[i]["details"].contains("counterexample"));
      }
    CHECK(fails == 1);
    CHECK(recs.back()["summary"]["manifest"]["fault"] == id);
  }
  CHECK(gafkit("verify-paper --inject-fault no.such.check").code == 2);
  CHECK(gafkit("verify-paper --inject-fault trace.alpha.recurrence-and-bound").code == 2);
}

TEST_CASE("text report and check listing") {
  const auto r = gafkit("verify-paper --only perm.symmetric.s5");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS  perm.symmetric.s5.eccentric-witness") != std::string::npos);
  CHECK(r.out.find("total 2, pass 2, fail 0, skipped 0") != std::string::npos);
  const auto l = gafkit("verify-paper --list");
  CHECK(l.code == 0);
  CHECK(l.out.find("trace.powers.A") != std::string::npos);
  CHECK(gafkit("verify-paper --only zzz").code == 2);
}

TEST_CASE("analyze perm") {
  const auto s5 = write_file("s5.json", R"J({"degree": 5, "generators": ["(1 2 3)", "(1 2)(4 5)"]})J");
  auto r = gafkit("analyze perm " + s5 + " --json");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["kind"] == "ECCENTRIC");
  CHECK(j["order"] == 6);

  const auto s4 = write_file("s4.json", R"J({"degree": 4, "generators": ["(1 2 3 4)", "(1 2)"]})J");
  r = gafkit("analyze perm " + s4 + " --fixating --json");
  j = Json::parse(r.out);
  CHECK(j["kind"] == "NOT_GAF");
  CHECK(j["fixating"]["fixating"] == true);

  const auto gag = write_file("gag.json", R"J({"degree": 4, "generators": [[2, 1, 3, 4]]})J");
  j = Json::parse(gafkit("analyze perm " + gag + " --json").out);
  CHECK(j["kind"] == "GAG");

  const auto bad = write_file("bad.json", R"J({"degree": 5, "generators": ["(1 2 3", "(1 2)"]})J");
  r = gafkit("analyze perm " + bad + " --json");
  CHECK(r.code == 2);
  CHECK(Json::parse(r.out)["error"] == "PARSE_ERROR");

  const auto broken = write_file("broken.json", "{\"degree\": 5,\n \"generators\": [\"(1 2)\",]}");
  r = gafkit("analyze perm " + broken + " --json");
  CHECK(r.code == 2);
  j = Json::parse(r.out);
  CHECK(j["error"] == "PARSE_ERROR");
  CHECK(j["message"].get<std::string>().find("line 2") != std::string::npos);

  const auto schema = write_file("schema.json", R"J({"degree": 5, "generators": [7]})J");
  r = gafkit("analyze perm " + schema + " --json");
  CHECK(r.code == 2);
  j = Json::parse(r.out);
  CHECK(j["error"] == "SCHEMA_ERROR");
  CHECK(j["message"].get<std::string>().find("$.generators[0]") != std::string::npos);

  CHECK(gafkit("analyze perm " + (scratch() / "missing.json").string()).code == 2);
  CHECK(gafkit("analyze group " + s5).code == 2);
}

TEST_CASE("analyze matrix") {
  const auto gl = write_file("gl23.json", R"J({"ring": "GF(3)", "dimension": 2,
      "generators": [[[1, 1], [0, 1]], [[2, 0], [0, 1]]]})J");
  auto r = gafkit("analyze matrix " + gl + " --json");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["kind"] == "ECCENTRIC");

  const auto z = write_file("z2.json", R"J({"ring": "Z", "dimension": 2,
      "generators": [{"linear": [[0, 1], [1, 0]], "translation": [1, -1]}]})J");
  r = gafkit("analyze matrix " + z + " --json");
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  const long x = std::stol(j["fixed_point"][0].get<std::string>());
  const long y = std::stol(j["fixed_point"][1].get<std::string>());
  CHECK(y + 1 == x);

  const auto free = write_file("z1.json", R"J({"ring": "Z", "dimension": 1,
      "generators": [{"linear": [[-1]], "translation": [1]}]})J");
  r = gafkit("analyze matrix " + free + " --json");
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["error"] == "NOT_GAF");
}

TEST_CASE("analyze tree, colored graph and tree-fixpoint") {
  const auto t = write_file("tree.json", R"J({"vertices": 5, "edges": [[1, 2], [2, 3], [3, 4], [4, 5]],
      "generators": [[5, 4, 3, 2, 1]]})J");
  auto r = gafkit("analyze tree " + t + " --json");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["fixed_vertex"] == 3);
  r = gafkit("tree-fixpoint " + t + " --json --orbit-seed 1");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["fixed_vertex"] == 3);

  const auto inv = write_file("inv.json", R"J({"vertices": 2, "edges": [[1, 2]], "generators": [[2, 1]]})J");
  r = gafkit("tree-fixpoint " + inv + " --json");
  CHECK(r.code == 1);

  const auto notree = write_file("cycle.json", R"J({"vertices": 3, "edges": [[1, 2], [2, 3], [3, 1]], "generators": []})J");
  r = gafkit("analyze tree " + notree + " --json");
  CHECK(r.code == 2);
  CHECK(Json::parse(r.out)["error"] == "SCHEMA_ERROR");

  const auto cg = write_file("colored.json", R"J({"vertices": 5,
      "edges": [[1, 2, "a"], [1, 3, "a"], [2, 3, "a"], [1, 4, "b"], [1, 5, "b"], [4, 5, "b"]],
      "generators": [[1, 3, 2, 5, 4]]})J");
  r = gafkit("analyze colored-graph " + cg + " --json");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["fixed_vertex"] == 1);
}

TEST_CASE("circumcenter command") {
  const auto e = write_file("e.json", R"J({"points": [[0, 0], [2, 0]]})J");
  auto r = gafkit("circumcenter --space euclidean " + e + " --json");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(std::abs(j["center"][0].get<double>() - 1) < 1e-12);
  CHECK(std::abs(j["center"][1].get<double>()) < 1e-12);
  CHECK(std::abs(j["radius"].get<double>() - 1) < 1e-12);
  CHECK(j.contains("iterations"));

  const auto h = write_file("h.json", R"J({"space": "hyperbolic", "points": [[0, 1], [0, 4]]})J");
  j = Json::parse(gafkit("circumcenter " + h + " --json").out);
  CHECK(std::abs(j["center"][0].get<double>()) < 1e-9);
  CHECK(std::abs(j["center"][1].get<double>() - 2) < 1e-9);
  CHECK(std::abs(j["radius"].get<double>() - std::log(2.0)) < 1e-9);

  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-4, 4), v(-2, 2);
  Json pts = Json::array();
  for (int i = 0; i < 1000; ++i) pts.push_back({u(rng), std::exp(v(rng))});
  const auto many = write_file("many.json", Json{{"points", pts}}.dump());
  r = gafkit("circumcenter --space hyperbolic " + many + " --json");
  CHECK(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["residual"].get<double>() < 1e-9);
  const double cx = j["center"][0], cy = j["center"][1], rad = j["radius"];
  double reach = 0;
  for (const auto& p : pts) reach = std::max(reach, h_dist(cx, cy, p[0], p[1]));
  CHECK(std::abs(reach - rad) < 1e-9);
  // no nearby center does better
  for (int k = 0; k < 64; ++k) {
    const double a = 2 * M_PI * k / 64;
    const double x = cx + 1e-4 * std::cos(a), y = cy * std::exp(1e-4 * std::sin(a));
    double rr = 0;
    for (const auto& p : pts) rr = std::max(rr, h_dist(x, y, p[0], p[1]));
    CHECK(rr >= rad - 1e-12);
  }

  const auto empty = write_file("empty.json", R"J({"points": []})J");
  CHECK(gafkit("circumcenter " + empty).code != 0);
  CHECK(gafkit("circumcenter --space spherical " + e).code == 2);
}

TEST_CASE("classify-isometry command") {
  auto j = Json::parse(gafkit("classify-isometry --matrix 1 1 0 1 --json").out);
  CHECK(j["kind"] == "PARABOLIC");
  j = Json::parse(gafkit("classify-isometry --matrix 2 0 0 0.5 --json").out);
  CHECK(j["kind"] == "HYPERBOLIC");
  const double c = std::cos(0.5), s = std::sin(0.5);
  const auto f = write_file("rot.json", Json{{"matrix", {{c, s}, {-s, c}}}}.dump());
  const auto r = gafkit("classify-isometry " + f + " --json");
  CHECK(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["kind"] == "ELLIPTIC");
  CHECK(std::abs(j["fixed_point"][0].get<double>()) < 1e-9);
  CHECK(std::abs(j["fixed_point"][1].get<double>() - 1) < 1e-9);
  CHECK(gafkit("classify-isometry").code == 2);
  CHECK(gafkit("classify-isometry --matrix 1 2 3").code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(gafkit("").code == 2);
  CHECK(gafkit("frobnicate").code == 2);
  CHECK(gafkit("verify-paper --word-len 0").code == 2);
  CHECK(gafkit("--help").code == 0);
}
