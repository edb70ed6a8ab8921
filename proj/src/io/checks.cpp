#include "gaf/io/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <set>
#include <thread>

#include "gaf/exact/lattice.hpp"
#include "gaf/exact/linear_fq.hpp"
#include "gaf/exact/sl2z.hpp"
#include "gaf/exact/so4.hpp"
#include "gaf/exact/transvection.hpp"
#include "gaf/geo/circumcenter.hpp"
#include "gaf/geo/euclidean.hpp"
#include "gaf/geo/mobius.hpp"
#include "gaf/geo/sphere.hpp"
#include "gaf/geo/witness.hpp"
#include "gaf/io/samples.hpp"
#include "gaf/tree/colored.hpp"

namespace gaf::io {

namespace {

using perm::ActionKind;
using perm::Permutation;
constexpr double kPi = std::numbers::pi;

/// Counts cases and keeps the first counterexample.
struct Tally {
  std::size_t checked = 0;
  Json counterexample;

  void expect(bool ok, const Json& ce) {
    ++checked;
    if (!ok && counterexample.is_null()) counterexample = ce;
  }
  bool ok() const { return counterexample.is_null(); }
  Outcome done(Json details = Json::object()) const {
    details["cases"] = checked;
    if (!ok()) details["counterexample"] = counterexample;
    return {ok(), details};
  }
};

Outcome from_audit(const AuditReport& r, Json details = Json::object()) {
  details["cases"] = r.checked;
  Json facts = Json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  details["facts"] = facts;
  if (!r.pass()) {
    details["counterexample"] = r.violations.front();
    details["violations"] = r.violations.size();
  }
  return {r.pass(), details};
}

// ---------------------------------------------------------------- permutations

bool is_even(const Permutation& p) {
  std::vector<char> seen(p.degree() + 1, 0);
  int transpositions = 0;
  for (int x = 1; x <= p.degree(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (int y = x; !seen[y]; y = p(y)) {
      seen[y] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

Permutation full_cycle(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 2 > n ? 1 : i + 2;
  return Permutation(img);
}

std::string run_cycle(int from, int to) {
  std::string s = "(";
  for (int x = from; x <= to; ++x) s += (x > from ? " " : "") + std::to_string(x);
  return s + ")";
}

/// The group generated by gens is eccentric, of the expected order when given, inside A_n when asked.
Outcome eccentric_witness(const CheckContext& c, int n, const std::vector<std::string>& cycles, std::size_t order,
                          bool even) {
  std::vector<Permutation> gens;
  for (const auto& s : cycles) gens.push_back(perm::parse_permutation(s, n));
  if (c.corrupt) gens.back() = full_cycle(n);
  const auto g = perm::generate_group(gens, c.cap, n);
  const auto v = perm::classify_action(g);
  Json d;
  d["degree"] = n;
  d["generators"] = cycles;
  d["order"] = g.order();
  d["kind"] = perm::to_string(v.kind);
  Json ce;
  if (v.kind == ActionKind::NOT_GAF) ce = "element without fixed point: " + v.gaf_violator->to_cycles();
  else if (v.kind == ActionKind::GAG) ce = "common fixed point " + std::to_string(*v.gag_witness);
  else if (order && g.order() != order) ce = "order " + std::to_string(g.order()) + ", expected " + std::to_string(order);
  if (even && ce.is_null())
    for (const auto& e : g.elements())
      if (!is_even(e)) {
        ce = "odd element " + e.to_cycles();
        break;
      }
  if (even) d["alternating"] = ce.is_null();
  if (!ce.is_null()) d["counterexample"] = ce;
  return {ce.is_null(), d};
}

Outcome fixating(const CheckContext& c, const perm::FiniteGroup& g, bool expect, std::size_t witness_order = 0) {
  const auto r = perm::is_fixating(g, c.cap);
  Json d;
  d["order"] = g.order();
  d["fixating"] = r.fixating;
  d["gaf_subgroups_examined"] = r.gaf_subgroups_examined;
  if (r.witness) {
    d["witness_order"] = r.witness->order();
    Json gens = Json::array();
    for (const auto& x : r.witness->generators()) gens.push_back(x.to_cycles());
    d["witness_generators"] = gens;
  }
  bool ok = r.fixating == expect;
  if (ok && witness_order) ok = r.witness && r.witness->order() == witness_order;
  if (!ok)
    d["counterexample"] = r.witness ? "eccentric subgroup of order " + std::to_string(r.witness->order())
                                    : std::string("no eccentric subgroup");
  return {ok, d};
}

Outcome induced_s5(const CheckContext& c) {
  auto P = [](const char* s) { return perm::parse_permutation(s, 5); };
  const auto s5 = perm::symmetric_group(5);
  const std::vector<Permutation> reps{P("(15)"), P("(25)"), P("(35)"), P("(45)"), Permutation::identity(5)};
  const auto ia = perm::induce_action(s5, 5, reps, c.cap);
  auto fixes = [&](const Permutation& g) {
    std::vector<std::pair<int, int>> out;
    for (int x : perm::fixed_points(ia.induce(g))) out.push_back(ia.decode(x));
    return out;
  };
  Tally t;
  t.expect(fixes(P("(12)(45)")) == std::vector<std::pair<int, int>>{{3, 5}}, "Fix (12)(45) differs from {(r3,5)}");
  t.expect(fixes(P("(123)")) == std::vector<std::pair<int, int>>{{4, 4}, {4, 5}, {5, 4}, {5, 5}},
           "Fix (123) differs from {(r4,4),(r4,5),(r5,4),(r5,5)}");
  t.expect(fixes(P("(132)")) == fixes(P("(123)")), "Fix (132) differs from Fix (123)");
  for (const auto& a : s5.elements()) t.expect(ia.induce(a * a) == ia.induce(a) * ia.induce(a), "not a morphism at " + a.to_cycles());
  const auto k = perm::generate_group({ia.induce(P("(123)")), ia.induce(P("(12)(45)"))}, c.cap);
  t.expect(perm::classify_action(k).kind == ActionKind::ECCENTRIC, "induced step-3 group is not eccentric");
  return t.done({{"induced_order", ia.group.order()}});
}

void add_perm_checks(std::vector<Check>& out) {
  for (int n = 1; n <= 4; ++n) {
    out.push_back({"perm.symmetric.s" + std::to_string(n) + ".fixating", "fixating symmetric groups", false,
                   [n](const CheckContext& c) { return fixating(c, perm::symmetric_group(n), true); }});
    out.push_back({"perm.alternating.a" + std::to_string(n) + ".fixating", "fixating alternating groups", false,
                   [n](const CheckContext& c) { return fixating(c, perm::alternating_group(n), true); }});
  }
  out.push_back({"perm.symmetric.s5.eccentric-witness", "fixating symmetric groups", true,
                 [](const CheckContext& c) { return eccentric_witness(c, 5, {"(1 2 3)", "(1 2)(4 5)"}, 6, false); }});
  out.push_back({"perm.symmetric.s6.eccentric-witness", "fixating symmetric groups", true,
                 [](const CheckContext& c) { return eccentric_witness(c, 6, {"(1 2)(3 4)", "(1 2)(5 6)"}, 4, false); }});
  out.push_back({"perm.symmetric.s5.smallest-witness", "fixating symmetric groups", false,
                 [](const CheckContext& c) { return fixating(c, perm::symmetric_group(5), false, 6); }});
  out.push_back({"perm.symmetric.s6.smallest-witness", "fixating symmetric groups", false,
                 [](const CheckContext& c) { return fixating(c, perm::symmetric_group(6), false, 4); }});
  for (int n = 7; n <= 9; ++n)
    out.push_back({"perm.symmetric.s" + std::to_string(n) + ".eccentric-witness", "fixating symmetric groups", true,
                   [n](const CheckContext& c) {
                     const std::string tail = run_cycle(6, n);
                     return eccentric_witness(c, n, {"(1 2 3)" + tail, "(1 2)(4 5)" + tail}, 0, false);
                   }});
  out.push_back({"perm.alternating.a5.eccentric-witness", "fixating alternating groups", true,
                 [](const CheckContext& c) { return eccentric_witness(c, 5, {"(1 2 3)", "(1 2)(4 5)"}, 6, true); }});
  out.push_back({"perm.alternating.a6.eccentric-witness", "fixating alternating groups", true,
                 [](const CheckContext& c) { return eccentric_witness(c, 6, {"(1 2)(3 4)", "(1 2)(5 6)"}, 4, true); }});
  out.push_back({"perm.alternating.a7.klein-by-cyclic-witness", "fixating alternating groups", true,
                 [](const CheckContext& c) { return eccentric_witness(c, 7, {"(1 2)(3 4)", "(1 2 3)(5 6 7)"}, 12, true); }});
  out.push_back({"perm.alternating.a7.gl32-witness", "fixating alternating groups", true,
                 [](const CheckContext& c) { return eccentric_witness(c, 7, {"(1 2 3)(5 6 7)", "(1 4)(6 7)"}, 24, true); }});
  out.push_back({"perm.alternating.a7.smallest-witness", "fixating alternating groups", false,
                 [](const CheckContext& c) { return fixating(c, perm::alternating_group(7), false, 12); }});
  out.push_back({"perm.alternating.a8.eccentric-witness", "fixating alternating groups", true,
                 [](const CheckContext& c) {
                   return eccentric_witness(c, 8, {"(1 2 3)(6 7 8)", "(1 2)(4 5)(6 7 8)"}, 0, true);
                 }});
  out.push_back({"perm.alternating.a9.eccentric-witness", "fixating alternating groups", true,
                 [](const CheckContext& c) {
                   return eccentric_witness(c, 9, {"(1 2)(3 4)(7 8 9)", "(1 2)(5 6)(7 8 9)"}, 0, true);
                 }});
  out.push_back({"perm.induced.s5-on-product", "induced actions", false, induced_s5});
}

// ---------------------------------------------------------------- linear groups

std::shared_ptr<const exact::FiniteField> field(std::uint32_t q) { return std::make_shared<const exact::FiniteField>(q); }

std::size_t gl_order(int d, std::size_t q) {
  std::size_t o = 1, qd = 1, qi = 1;
  for (int i = 0; i < d; ++i) qd *= q;
  for (int i = 0; i < d; ++i, qi *= q) o *= qd - qi;
  return o;
}

Outcome gl_verdict(const CheckContext& c, int d, std::uint32_t q, bool expect) {
  const auto act = exact::gl_fq_to_permutation(d, q, exact::gl_generators(d, field(q)), c.cap);
  auto o = fixating(c, act.group, expect);
  o.details["d"] = d;
  o.details["q"] = q;
  if (act.group.order() != gl_order(d, q)) {
    o.pass = false;
    o.details["counterexample"] = "group order " + std::to_string(act.group.order());
  }
  return o;
}

Outcome upper_affine(const CheckContext& c, std::uint32_t q) {
  const auto f = field(q);
  auto gens = exact::upper_affine_pair(f, 2);
  if (c.corrupt) gens.back() = exact::fq_matrix(f, {{0, 1}, {1, 0}});
  const auto act = exact::gl_fq_to_permutation(2, q, gens, c.cap);
  const auto v = perm::classify_action(act.group);
  Json d{{"q", q}, {"order", act.group.order()}, {"kind", perm::to_string(v.kind)}};
  const bool ok = v.kind == ActionKind::ECCENTRIC;
  if (!ok) d["counterexample"] = v.gaf_violator ? "element without fixed point: " + v.gaf_violator->to_cycles()
                                                : "common fixed point " + std::to_string(v.gag_witness.value_or(0));
  return {ok, d};
}

Outcome gl32_witness(const CheckContext& c) {
  auto gens = exact::gl32_pair();
  if (c.corrupt) gens.back() = gens.front() * gens.front();
  const auto act = exact::gl_fq_to_permutation(3, 2, gens, c.cap, exact::gl32_point_order());
  const auto v = perm::classify_action(act.group);
  Json d{{"order", act.group.order()}, {"kind", perm::to_string(v.kind)},
         {"f", act.generators[0].to_cycles()}, {"g", act.generators[1].to_cycles()}};
  Json ce;
  if (act.generators[0] != perm::parse_permutation("(123)(567)", 7)) ce = "f acts as " + act.generators[0].to_cycles();
  else if (act.generators[1] != perm::parse_permutation("(14)(67)", 7)) ce = "g acts as " + act.generators[1].to_cycles();
  else if (v.kind != ActionKind::ECCENTRIC) ce = "verdict " + perm::to_string(v.kind);
  else if (act.group.order() != 24) ce = "order " + std::to_string(act.group.order());
  if (!ce.is_null()) d["counterexample"] = ce;
  return {ce.is_null(), d};
}

Outcome lifted_gl33(const CheckContext& c) {
  const auto act = exact::gl_fq_to_permutation(3, 3, exact::lift_generators(exact::upper_affine_pair(field(3), 2)), c.cap);
  const auto v = perm::classify_action(act.group);
  Json d{{"order", act.group.order()}, {"kind", perm::to_string(v.kind)}};
  const bool ok = v.kind == ActionKind::ECCENTRIC;
  if (!ok) d["counterexample"] = "verdict " + perm::to_string(v.kind);
  return {ok, d};
}

void add_linear_checks(std::vector<Check>& out) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    const std::string qs = (q < 10 ? "0" : "") + std::to_string(q);
    out.push_back({"linear.gl1.q" + qs + ".fixating", "linear groups over finite fields", false,
                   [q](const CheckContext& c) { return gl_verdict(c, 1, q, true); }});
  }
  out.push_back({"linear.gl2.q02.fixating", "linear groups over finite fields", false,
                 [](const CheckContext& c) { return gl_verdict(c, 2, 2, true); }});
  out.push_back({"linear.gl2.q03.nonfixating", "linear groups over finite fields", false,
                 [](const CheckContext& c) { return gl_verdict(c, 2, 3, false); }});
  out.push_back({"linear.gl3.q02.nonfixating", "linear groups over finite fields", false,
                 [](const CheckContext& c) { return gl_verdict(c, 3, 2, false); }});
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const std::string qs = "0" + std::to_string(q);
    out.push_back({"linear.gl2.q" + qs + ".upper-affine-witness", "linear groups over finite fields", true,
                   [q](const CheckContext& c) { return upper_affine(c, q); }});
  }
  out.push_back({"linear.gl3.q02.cyclic-shift-witness", "linear groups over finite fields", true, gl32_witness});
  out.push_back({"linear.gl3.q03.block-lift-witness", "linear groups over finite fields", false, lifted_gl33});
}

// ---------------------------------------------------------------- trace certificates and words

Outcome trace_powers(const CheckContext& c, const exact::IntMatrix& base) {
  exact::IntMatrix m = base;
  if (c.corrupt) m(0, 1) += 1;
  Tally t;
  exact::IntMatrix p = m;
  for (int n = 1; n <= 20; ++n) {
    const auto cert = exact::trace_certificate(m, n);
    t.expect(cert.power == p && cert.recurrence_holds && cert.trace_formula_holds && cert.bound_holds,
             Json{{"n", n}, {"power", cert.power.str()}, {"trace", cert.trace.get_str()}});
    p = p * m;
  }
  return t.done({{"matrix", m.str()}, {"max_n", 20}});
}

Outcome word_traces(const std::vector<exact::SignedWord>& words) {
  Tally t;
  exact::Integer smallest = -1;
  for (const auto& w : words) {
    const auto r = exact::word_trace_bound(w);
    exact::Integer a = abs(r.trace);
    if (smallest < 0 || a < smallest) smallest = a;
    t.expect(r.bound_holds, Json{{"word", w.str()}, {"trace", r.trace.get_str()}});
  }
  return t.done({{"words", words.size()}, {"min_abs_trace", smallest.get_str()}});
}

Outcome so4_words(const CheckContext& c) {
  Tally t;
  const auto words = exact::alternating_words(c.word_len);
  for (const auto& w : words) {
    const auto a = exact::so4_symbolic_audit(w);
    t.expect(a.pass() && a.p_degree == w.length(), Json{{"word", w.str()}, {"p_degree", a.p_degree}});
  }
  return t.done({{"max_len", c.word_len}, {"words", words.size()}});
}

void add_exact_checks(std::vector<Check>& out) {
  out.push_back({"trace.alpha.recurrence-and-bound", "trace certificates", false,
                 [](const CheckContext&) { return from_audit(exact::TraceSequence::up_to(64).audit(), {{"max_n", 64}}); }});
  const std::vector<std::pair<std::string, exact::IntMatrix>> ms{
      {"A", exact::matrix_A()},
      {"B", exact::matrix_B()},
      {"A-inverse", exact::inverse_sl2(exact::matrix_A())},
      {"B-inverse", exact::inverse_sl2(exact::matrix_B())}};
  for (const auto& [name, m] : ms)
    out.push_back({"trace.powers." + name, "trace certificates", true,
                   [m](const CheckContext& c) { return trace_powers(c, m); }});
  out.push_back({"trace.words.reduced", "trace certificates", false, [](const CheckContext& c) {
                   return word_traces(exact::reduced_words({"A", "B"}, c.word_len));
                 }});
  out.push_back({"trace.words.syllables", "trace certificates", false, [](const CheckContext& c) {
                   return word_traces(exact::syllable_words("A", "B", c.word_len, 3));
                 }});
  out.push_back({"trace.dominance.product-order", "trace certificates", false, [](const CheckContext& c) {
                   auto rng = c.rng();
                   return from_audit(exact::product_order_audit(static_cast<unsigned>(rng()), 500));
                 }});
  out.push_back({"affine.free-group.eccentric", "free affine group", false, [](const CheckContext& c) {
                   return from_audit(exact::free_affine_eccentric_audit(c.word_len));
                 }});
  out.push_back({"so4.symbolic.alternating-words", "rotations of R^4", false, so4_words});
  out.push_back({"so4.numeric.shifted-words", "rotations of R^4", false, [](const CheckContext& c) {
                   return from_audit(geo::isom_r4_numeric_audit(1.0, c.word_len));
                 }});
  out.push_back({"transvection.lines.disjoint", "commuting transvections", false,
                 [](const CheckContext&) { return from_audit(exact::transvection_lines_audit(3)); }});
}

// ---------------------------------------------------------------- lattices and cubes

Outcome zn_random(const CheckContext& c, std::size_t n) {
  auto rng = c.rng();
  Tally t;
  int gaf = 0, not_gaf = 0, over_cap = 0;
  for (int attempt = 0; attempt < 2000 && gaf < 40; ++attempt) {
    const auto gens = random_lattice_generators(rng, n);
    std::vector<exact::LatticeIsometry> group;
    try {
      group = exact::lattice_group(gens, c.cap);
    } catch (const Error& e) {
      if (e.code() != "CAP_EXCEEDED") throw;
      ++over_cap;
      continue;
    }
    bool is_gaf = true;
    for (const auto& e : group) is_gaf = is_gaf && exact::integer_fixed_point(e).has_value();
    if (!is_gaf) {
      ++not_gaf;
      std::string code;
      try {
        exact::zn_global_fixed_point(gens, c.cap);
      } catch (const Error& e) {
        code = e.code();
      }
      t.expect(code == "NOT_GAF", Json{{"attempt", attempt}, {"expected", "NOT_GAF"}, {"got", code}});
      continue;
    }
    ++gaf;
    const auto r = exact::zn_global_fixed_point(gens, c.cap);
    bool fixed = true;
    for (const auto& e : group) fixed = fixed && e(r.point) == r.point;
    Json p = Json::array();
    for (const auto& x : r.point) p.push_back(x.get_str());
    t.expect(fixed, Json{{"attempt", attempt}, {"point", p}});
  }
  if (gaf == 0 && over_cap > 0) throw Error("CAP_EXCEEDED", "every sampled group exceeded the cap");
  return t.done({{"n", n}, {"gaf_groups", gaf}, {"not_gaf_groups", not_gaf}, {"over_cap", over_cap}});
}

Outcome hypercube(const CheckContext& c, int n) {
  const auto a = exact::hypercube_isometry_analysis(n, c.cap);
  std::size_t expect = 1;
  for (int i = 1; i <= n; ++i) expect *= 2 * static_cast<std::size_t>(i);
  Json d{{"n", n}, {"order", a.order}};
  Json ce;
  if (a.order != expect) ce = "order " + std::to_string(a.order);
  if (n <= 3) {
    d["fixating"] = a.fixating.value_or(false);
    if (!a.fixating || !*a.fixating) ce = "eccentric subgroup found";
  }
  if (!ce.is_null()) d["counterexample"] = ce;
  return {ce.is_null(), d};
}

Outcome hypercube_subgroups(const CheckContext& c) {
  const auto h3 = exact::hypercube_isometry_analysis(3, c.cap);
  Tally t;
  int gaf = 0;
  for (const auto& sub : perm::enumerate_subgroups(h3.group, c.cap)) {
    if (perm::classify_action(sub).kind == ActionKind::NOT_GAF) continue;
    ++gaf;
    std::vector<exact::SignedPerm> gens;
    for (const auto& p : sub.elements()) gens.push_back(exact::hypercube_signed_perm(p, 3));
    const auto v = exact::hypercube_fixed_vertex(gens, c.cap);
    const int index = 1 + v[0] + 2 * v[1] + 4 * v[2];
    bool ok = true;
    for (const auto& p : sub.elements()) ok = ok && p(index) == index;
    t.expect(ok, Json{{"subgroup_order", sub.order()}, {"vertex", v}});
  }
  return t.done({{"gaf_subgroups", gaf}});
}

void add_lattice_checks(std::vector<Check>& out) {
  for (std::size_t n = 1; n <= 6; ++n)
    out.push_back({"lattice.zn.n" + std::to_string(n) + ".random-groups", "lattice isometries", false,
                   [n](const CheckContext& c) { return zn_random(c, n); }});
  for (int n = 1; n <= 5; ++n)
    out.push_back({"lattice.hypercube.n" + std::to_string(n), "hypercube isometries", false,
                   [n](const CheckContext& c) { return hypercube(c, n); }});
  out.push_back({"lattice.hypercube.n3.fixed-vertices", "hypercube isometries", false, hypercube_subgroups});
}

// ---------------------------------------------------------------- geometry

geo::Point P(std::initializer_list<double> xs) {
  geo::Point p(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) p(i++) = x;
  return p;
}

geo::Point random_h(std::mt19937& rng, int dim) {
  std::uniform_real_distribution<double> u(-3, 3), h(-3, 2);
  geo::Point p(dim);
  for (int i = 0; i + 1 < dim; ++i) p(i) = u(rng);
  p(dim - 1) = std::exp(h(rng));
  return p;
}

Outcome median_suite(const CheckContext& c, int dim) {
  auto rng = c.rng();
  Tally t;
  double worst = 1e300;
  for (int i = 0; i < 10000; ++i) {
    const auto x = random_h(rng, dim), y = random_h(rng, dim), z = random_h(rng, dim);
    const double s = geo::median_inequality_slack(x, y, z, geo::Space::HYPERBOLIC);
    worst = std::min(worst, s);
    t.expect(s >= -c.tolerance, Json{{"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}, {"slack", s}});
  }
  return t.done({{"dimension", dim}, {"min_slack", worst}});
}

Outcome midpoint_suite(const CheckContext& c) {
  auto rng = c.rng();
  Tally t;
  double worst = 0;
  for (int i = 0; i < 2000; ++i) {
    const int dim = 2 + i % 2;
    const auto x = random_h(rng, dim), y = random_h(rng, dim);
    const auto m = geo::hyperbolic_midpoint(x, y, 4, static_cast<unsigned>(i)).m;
    const double half = geo::hyperbolic_distance(x, y) / 2;
    const double err = std::max(std::abs(geo::hyperbolic_distance(x, m) - half), std::abs(geo::hyperbolic_distance(m, y) - half));
    worst = std::max(worst, err);
    t.expect(err <= c.tolerance, Json{{"x", to_json(x)}, {"y", to_json(y)}, {"error", err}});
  }
  return t.done({{"max_error", worst}});
}

Outcome commutator_suite(const CheckContext& c) {
  auto rng = c.rng();
  std::uniform_real_distribution<double> th(0.05, 2 * kPi - 0.05), lx(-3, 3);
  Tally t;
  for (int i = 0; i < 1000; ++i) {
    const double theta = th(rng);
    double x = std::exp(lx(rng));
    if (std::abs(x - 1) < 1e-3) x = 2;
    const double tr = geo::commutator_trace_h2(theta, x);
    const double cf = geo::commutator_trace_closed_form(theta, x);
    t.expect(std::abs(tr - cf) <= c.tolerance * std::max(1.0, std::abs(cf)) && tr > 2,
             Json{{"theta", theta}, {"x", x}, {"trace", tr}, {"closed_form", cf}});
  }
  return t.done();
}

Outcome projection_check(const CheckContext&) {
  geo::Geodesic line;
  line.kind = geo::Geodesic::Kind::VERTICAL;
  line.foot = 0;
  const auto p = geo::project_to_line_h2(P({3, 4}), line);
  const double err = (p - P({0, 5})).norm();
  Json d{{"projection", to_json(p)}, {"error", err}};
  if (err > 1e-12) d["counterexample"] = "projection of 3+4i is not 5i";
  return {err <= 1e-12, d};
}

Outcome mediator_suite(const CheckContext& c) {
  auto rng = c.rng();
  Tally t;
  for (int i = 0; i < 1000; ++i) {
    const int dim = 2 + i % 2;
    const auto a = random_h(rng, dim), b = random_h(rng, dim);
    const auto h = geo::mediator_hn(a, b);
    const auto m = geo::midpoint(a, b, geo::Space::HYPERBOLIC);
    // a point of the mediator off the segment: move from m along the geodesic to the other side
    t.expect(std::abs(h.eval(m)) <= 1e-6 * std::max(1.0, h.radius) && h.eval(a) * h.eval(b) < 0,
             Json{{"a", to_json(a)}, {"b", to_json(b)}});
  }
  return t.done();
}

Outcome classify_examples(const CheckContext& c) {
  Tally t;
  const auto e = geo::classify_h2(geo::rotation_about(2, 1.0));
  t.expect(e.kind == geo::IsometryKind::ELLIPTIC && e.fixed_point && (*e.fixed_point - P({0, 2})).norm() <= 1e-9 &&
               e.angle && std::abs(*e.angle - 1.0) <= 1e-9,
           "rotation about 2i is not elliptic with center 2i and angle 1");
  const auto p = geo::classify_h2({1, 1, 0, 1});
  t.expect(p.kind == geo::IsometryKind::PARABOLIC && p.boundary_fixed.size() == 1 && std::isinf(p.boundary_fixed[0]),
           "z + 1 is not parabolic fixing infinity");
  const auto h = geo::classify_h2({2, 0, 0, 0.5});
  t.expect(h.kind == geo::IsometryKind::HYPERBOLIC && h.boundary_fixed.size() == 2, "4z is not hyperbolic");
  auto rng = c.rng();
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 1000; ++i) {
    const double a = u(rng), b = u(rng), cc = u(rng);
    if (std::abs(a) < 0.05) continue;
    const geo::Sl2 m{a, b, cc, (1 + b * cc) / a};
    const auto r = geo::classify_h2(m, 1e-9);
    const double tr = std::abs(m.trace());
    geo::IsometryKind want = tr < 2 ? geo::IsometryKind::ELLIPTIC : geo::IsometryKind::HYPERBOLIC;
    if (std::abs(tr - 2) < 1e-6) continue;
    bool ok = r.kind == want;
    if (ok && want == geo::IsometryKind::ELLIPTIC) {
      const auto z = m.apply({(*r.fixed_point)(0), (*r.fixed_point)(1)});
      ok = std::abs(z - geo::Complex((*r.fixed_point)(0), (*r.fixed_point)(1))) <= 1e-6;
    }
    t.expect(ok, Json{{"matrix", {a, b, cc, m.d}}, {"kind", geo::to_string(r.kind)}});
  }
  return t.done();
}

Outcome circumcenter_euclidean(const CheckContext& c) {
  auto rng = c.rng();
  std::uniform_real_distribution<double> u(-5, 5);
  Tally t;
  double worst = 0;
  for (int i = 0; i < 300; ++i) {
    const int dim = 1 + i % 5;
    const int count = 1 + static_cast<int>(rng() % 30);
    std::vector<geo::Point> pts;
    for (int k = 0; k < count; ++k) {
      geo::Point p(dim);
      for (int j = 0; j < dim; ++j) p(j) = u(rng);
      pts.push_back(p);
    }
    const auto a = geo::circumcenter(pts, geo::Space::EUCLIDEAN, {c.tolerance, 0});
    const auto b = geo::circumcenter(pts, geo::Space::EUCLIDEAN, {c.tolerance, 17});
    const double reach = geo::max_distance(a.center, pts, geo::Space::EUCLIDEAN);
    const double gap = (a.center - b.center).norm();
    worst = std::max(worst, a.residual);
    t.expect(a.residual <= c.tolerance && std::abs(reach - a.radius) <= c.tolerance && gap <= 1e-6,
             Json{{"case", i}, {"residual", a.residual}, {"restart_gap", gap}});
  }
  return t.done({{"max_residual", worst}});
}

Outcome circumcenter_hyperbolic(const CheckContext& c) {
  auto rng = c.rng();
  Tally t;
  for (int i = 0; i < 300; ++i) {
    const int dim = 2 + i % 2;
    const auto x = random_h(rng, dim), y = random_h(rng, dim);
    const auto r = geo::circumcenter({x, y}, geo::Space::HYPERBOLIC, {c.tolerance, 0});
    const auto m = geo::midpoint(x, y, geo::Space::HYPERBOLIC);
    const double err = geo::hyperbolic_distance(r.center, m);
    t.expect(err <= 1e-6, Json{{"x", to_json(x)}, {"y", to_json(y)}, {"distance_to_midpoint", err}});
  }
  for (int i = 0; i < 100; ++i) {
    std::vector<geo::Point> pts;
    for (int k = 0; k < 12; ++k) pts.push_back(random_h(rng, 2));
    const auto a = geo::circumcenter(pts, geo::Space::HYPERBOLIC, {c.tolerance, 0});
    const auto b = geo::circumcenter(pts, geo::Space::HYPERBOLIC, {c.tolerance, 5});
    const double gap = geo::hyperbolic_distance(a.center, b.center);
    t.expect(gap <= 1e-6 && a.residual <= 1e-6, Json{{"case", i}, {"restart_gap", gap}, {"residual", a.residual}});
  }
  const auto ex = geo::circumcenter({P({0, 1}), P({0, 4})}, geo::Space::HYPERBOLIC);
  t.expect((ex.center - P({0, 2})).norm() <= 1e-9 && std::abs(ex.radius - std::log(2.0)) <= 1e-9,
           "center of {i, 4i} is not 2i with radius ln 2");
  return t.done();
}

Outcome invariant_set_check(const CheckContext& c) {
  Tally t;
  // dihedral orbit of a point in the plane about (1, 2)
  const geo::Point center = P({1, 2});
  const auto rot = geo::RigidMotion::plane_rotation(2, 0, 1, 2 * kPi / 5, center);
  std::vector<geo::Point> orbit{P({4, 3})};
  for (int k = 1; k < 5; ++k) orbit.push_back(rot(orbit.back()));
  const auto r = geo::fixed_point_from_invariant_set({[rot](const geo::Point& x) { return rot(x); }}, orbit,
                                                     geo::Space::EUCLIDEAN, c.tolerance);
  t.expect(r.fixed && (r.ball.center - center).norm() <= 1e-8, "pentagon orbit center is not the rotation center");
  // elliptic rotation of H_2 about 2i acting on an orbit
  const auto m = geo::rotation_about(2, 2 * kPi / 3);
  auto act = [m](const geo::Point& x) {
    const auto z = m.apply({x(0), x(1)});
    return P({z.real(), z.imag()});
  };
  std::vector<geo::Point> horb{P({1, 1})};
  for (int k = 1; k < 3; ++k) horb.push_back(act(horb.back()));
  const auto h = geo::fixed_point_from_invariant_set({act}, horb, geo::Space::HYPERBOLIC, 1e-7);
  t.expect(h.fixed && geo::hyperbolic_distance(h.ball.center, P({0, 2})) <= 1e-6, "orbit center is not 2i");
  return t.done();
}

Outcome mobius_audit(const CheckContext& c) { return from_audit(geo::mobius_eccentric_audit(c.word_len)); }

Outcome witness_r3(const CheckContext& c) {
  const auto f = geo::RigidMotion::plane_rotation(3, 0, 1, kPi / 2, P({0, 0, 0}));
  const auto g = geo::RigidMotion::plane_rotation(3, 0, 1, -kPi / 2, P({1, 0, 0}));
  const auto w = geo::eccentricity_witness_r3(f, g, c.tolerance);
  Json d{{"word", w.word}, {"common_point", w.common_point}};
  bool ok = !w.common_point && w.witness;
  if (ok) {
    const double lin = (w.witness->rotation - Eigen::Matrix3d::Identity()).norm();
    const double tr = w.witness->translation.norm();
    d["linear_defect"] = lin;
    d["translation_norm"] = tr;
    ok = lin <= 1e-10 && tr > 1e-3;
  }
  if (!ok) d["counterexample"] = "witness is not a pure translation";
  return {ok, d};
}

Outcome witness_h3(const CheckContext& c) {
  const auto f = geo::vertical_rotation(0, kPi / 2);
  const auto g = geo::vertical_rotation({1, 0}, kPi / 3);
  const auto w = geo::eccentricity_witness_h3(f, g, c.tolerance);
  Json d{{"word", w.word}, {"common_point", w.common_point}};
  const bool ok = !w.common_point && w.witness && geo::fixed_point_free_h3(*w.witness);
  if (!ok) d["counterexample"] = "no fixed-point-free witness for rotations about disjoint vertical axes";
  return {ok, d};
}

Outcome abelian_check(const CheckContext& c) {
  auto rng = c.rng();
  std::uniform_real_distribution<double> u(-3, 3);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const geo::Point c1 = P({u(rng), u(rng), u(rng), u(rng)}), c2 = P({u(rng), u(rng), u(rng), u(rng)});
    const auto f1 = geo::RigidMotion::plane_rotation(4, 0, 1, u(rng), c1);
    const auto f2 = geo::RigidMotion::plane_rotation(4, 2, 3, u(rng), c2);
    const auto q = geo::abelian_gag_solver({f1, f2, f1 * f2}, c.tolerance);
    t.expect((f1(q) - q).norm() <= 1e-8 && (f2(q) - q).norm() <= 1e-8, Json{{"case", i}, {"point", to_json(q)}});
  }
  return t.done();
}

void add_geo_checks(std::vector<Check>& out) {
  out.push_back({"hyperbolic.median-inequality.h2", "median inequality", false,
                 [](const CheckContext& c) { return median_suite(c, 2); }});
  out.push_back({"hyperbolic.median-inequality.h3", "median inequality", false,
                 [](const CheckContext& c) { return median_suite(c, 3); }});
  out.push_back({"hyperbolic.midpoint.bisection", "median inequality", false, midpoint_suite});
  out.push_back({"hyperbolic.commutator-trace", "rotations of H_2", false, commutator_suite});
  out.push_back({"hyperbolic.projection.vertical-line", "projection onto geodesics", false, projection_check});
  out.push_back({"hyperbolic.mediator", "mediators", false, mediator_suite});
  out.push_back({"isometry.classify-h2", "isometries of H_2", false, classify_examples});
  out.push_back({"isometry.mobius.eccentric", "Moebius maps of the projective line", false, mobius_audit});
  out.push_back({"circumcenter.euclidean.random-sets", "circumcenters", false, circumcenter_euclidean});
  out.push_back({"circumcenter.hyperbolic.random-sets", "circumcenters", false, circumcenter_hyperbolic});
  out.push_back({"circumcenter.invariant-sets", "circumcenters", false, invariant_set_check});
  out.push_back({"witness.r3.parallel-quarter-turns", "eccentricity witnesses", false, witness_r3});
  out.push_back({"witness.h3.vertical-axes", "eccentricity witnesses", false, witness_h3});
  out.push_back({"euclidean.abelian-solver", "Abelian isometry groups", false, abelian_check});
  out.push_back({"sphere.projective.audits", "spheres and projective spaces", false,
                 [](const CheckContext&) { return from_audit(geo::sphere_projective_audits()); }});
}

// ---------------------------------------------------------------- trees and colored graphs

std::vector<int> fixed_by_all(const std::vector<tree::GraphIsometry>& gens, int n) {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v) {
    bool all = true;
    for (const auto& g : gens) all = all && g(v) == v;
    if (all) out.push_back(v);
  }
  return out;
}

/// Swaps a vertex of minimum degree with one of maximum degree; empty when all degrees agree.
std::vector<int> broken_images(const tree::Graph& g) {
  std::vector<int> img(g.size());
  int lo = 1, hi = 1;
  for (int v = 1; v <= g.size(); ++v) {
    img[v - 1] = v;
    if (g.neighbors(v).size() < g.neighbors(lo).size()) lo = v;
    if (g.neighbors(v).size() > g.neighbors(hi).size()) hi = v;
  }
  if (g.neighbors(lo).size() == g.neighbors(hi).size()) return {};
  std::swap(img[lo - 1], img[hi - 1]);
  return img;
}

/// Runs the orbit construction; an orbit past the cap on a finite tree is a cap limit, not a failure.
int orbit_center(const tree::Tree& t, const std::vector<tree::GraphIsometry>& gens, int seed, std::size_t cap) {
  try {
    return tree::bounded_orbit_fixed_point(t, gens, seed, cap);
  } catch (const Error& e) {
    if (e.code() == "ORBIT_UNBOUNDED") throw Error("CAP_EXCEEDED", e.what());
    throw;
  }
}

Outcome tree_random(const CheckContext& c) {
  auto rng = c.rng();
  Tally t;
  bool corrupted = false;
  for (int i = 0; i < 300; ++i) {
    const auto s = random_symmetric_tree(rng, 200);
    const tree::Tree tr(s.n, s.edges);
    std::vector<tree::GraphIsometry> gens;
    for (const auto& img : s.generators) gens.push_back(tree::GraphIsometry::of(tr, img));
    if (c.corrupt && !corrupted) {
      const auto bad = broken_images(tr);
      if (!bad.empty()) {
        corrupted = true;
        gens.push_back(tree::GraphIsometry::of(tr, bad));
      }
    }
    const int v = tree::tree_global_fixed_point(tr, gens, c.cap);
    const auto common = fixed_by_all(gens, s.n);
    t.expect(std::binary_search(common.begin(), common.end(), v), Json{{"case", i}, {"vertex", v}});
    const int b = orbit_center(tr, gens, 1 + static_cast<int>(rng() % s.n), c.cap);
    t.expect(std::binary_search(common.begin(), common.end(), b), Json{{"case", i}, {"orbit_vertex", b}});
  }
  return t.done();
}

Outcome tree_three(const CheckContext& c) {
  auto rng = c.rng();
  Tally t;
  int applied = 0;
  for (int i = 0; i < 300; ++i) {
    const auto s = random_symmetric_tree(rng, 60, 2);
    if (s.generators.size() < 2) continue;
    const tree::Tree tr(s.n, s.edges);
    const auto f = tree::GraphIsometry::of(tr, s.generators[0]);
    const auto g = tree::GraphIsometry::of(tr, s.generators[1]);
    const int p = tree::gaf_from_three(tr, f, g);
    ++applied;
    t.expect(f(p) == p && g(p) == p, Json{{"case", i}, {"vertex", p}});
  }
  return t.done({{"pairs", applied}});
}

Outcome tree_center(const CheckContext& c) {
  auto rng = c.rng();
  Tally t;
  for (int i = 0; i < 300; ++i) {
    const auto s = random_symmetric_tree(rng, 200);
    const tree::Tree tr(s.n, s.edges);
    const auto center = tree::finite_tree_center(tr);
    // the center minimizes the eccentricity
    int best = s.n;
    std::vector<int> ecc(s.n + 1);
    for (int v = 1; v <= s.n; ++v) {
      const auto d = tr.distances_from(v);
      ecc[v] = *std::max_element(d.begin() + 1, d.end());
      best = std::min(best, ecc[v]);
    }
    std::vector<int> want;
    for (int v = 1; v <= s.n; ++v)
      if (ecc[v] == best) want.push_back(v);
    t.expect(center == want, Json{{"case", i}, {"center", center}, {"expected", want}});
  }
  return t.done();
}

Outcome colored_random(const CheckContext& c) {
  auto rng = c.rng();
  Tally t;
  int cells4 = 0;
  bool corrupted = false;
  for (int i = 0; i < 200; ++i) {
    const auto s = random_symmetric_cell_graph(rng, 120, 4);
    const auto g = tree::validate_colored_graph(s.n, s.edges, s.colors);
    cells4 += g.max_cell_size() == 4;
    std::vector<tree::GraphIsometry> gens;
    for (const auto& img : s.generators) gens.push_back(tree::GraphIsometry::of(g, img));
    if (c.corrupt && !corrupted) {
      const auto bad = broken_images(g);
      if (!bad.empty()) {
        corrupted = true;
        gens.push_back(tree::GraphIsometry::of(g, bad));
      }
    }
    const int v = tree::colored_global_fixed_point(g, gens, c.cap);
    const auto common = fixed_by_all(gens, s.n);
    t.expect(std::binary_search(common.begin(), common.end(), v), Json{{"case", i}, {"vertex", v}});
  }
  return t.done({{"graphs_with_4_cells", cells4}});
}

Outcome colored_k5(const CheckContext& c) {
  auto rng = c.rng();
  Tally t;
  for (int i = 0; i < 50; ++i) {
    auto s = random_symmetric_cell_graph(rng, 60, 4);
    // glue a K5 cell at vertex 1
    const int base = s.n;
    std::vector<int> cell{1, base + 1, base + 2, base + 3, base + 4};
    for (std::size_t a = 0; a < cell.size(); ++a)
      for (std::size_t b = a + 1; b < cell.size(); ++b) {
        s.edges.push_back({cell[a], cell[b]});
        s.colors.push_back("k5");
      }
    const auto g = tree::validate_colored_graph(base + 4, s.edges, s.colors);
    std::string code;
    try {
      tree::colored_global_fixed_point(g, {tree::GraphIsometry::identity(base + 4)}, c.cap);
    } catch (const Error& e) {
      code = e.code();
    }
    t.expect(code == "CELL_TOO_LARGE", Json{{"case", i}, {"got", code}});
  }
  return t.done();
}

void add_tree_checks(std::vector<Check>& out) {
  out.push_back({"tree.global-fixed-point.random", "isometries of trees", true, tree_random});
  out.push_back({"tree.gaf-from-three.random", "isometries of trees", false, tree_three});
  out.push_back({"tree.center.random", "isometries of trees", false, tree_center});
  out.push_back({"colored.global-fixed-point.random", "colored graphs", true, colored_random});
  out.push_back({"colored.cell-too-large", "colored graphs", false, colored_k5});
}

std::vector<Check> build() {
  std::vector<Check> out;
  add_perm_checks(out);
  add_linear_checks(out);
  add_exact_checks(out);
  add_lattice_checks(out);
  add_geo_checks(out);
  add_tree_checks(out);
  std::sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return out;
}

bool selected(const std::string& id, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  for (const auto& p : only)
    if (id.rfind(p, 0) == 0) return true;
  return false;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::PASS: return "PASS";
    case Status::FAIL: return "FAIL";
    case Status::SKIPPED: return "SKIPPED";
  }
  return "FAIL";
}

std::mt19937 CheckContext::rng() const {
  std::vector<std::uint32_t> data{seed};
  for (unsigned char ch : id) data.push_back(ch);
  std::seed_seq seq(data.begin(), data.end());
  return std::mt19937(seq);
}

const std::vector<Check>& checks() {
  static const std::vector<Check> all = build();
  return all;
}

CheckResult run_check(const Check& c, const RunOptions& opt) {
  CheckResult r;
  r.check_id = c.id;
  r.anchor = c.anchor;
  CheckContext ctx{opt.tolerance, opt.cap, opt.seed, opt.word_len, opt.fault == c.id, c.id};
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = c.run(ctx);
    r.status = o.pass ? Status::PASS : Status::FAIL;
    r.details = std::move(o.details);
    if (!o.pass && !r.details.contains("counterexample")) r.details["counterexample"] = nullptr;
  } catch (const Error& e) {
    if (e.code() == "CAP_EXCEEDED") {
      r.status = Status::SKIPPED;
      r.details = {{"reason", e.what()}};
    } else {
      r.status = Status::FAIL;
      r.details = {{"counterexample", {{"error", e.code()}, {"message", e.what()}}}};
    }
  } catch (const std::exception& e) {
    r.status = Status::FAIL;
    r.details = {{"counterexample", {{"error", "EXCEPTION"}, {"message", e.what()}}}};
  }
  if (ctx.corrupt) r.details["fault_injected"] = true;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckResult> run_checks(const RunOptions& opt) {
  std::vector<const Check*> todo;
  for (const auto& c : checks())
    if (selected(c.id, opt.only)) todo.push_back(&c);
  if (todo.empty()) throw Error("NO_CHECKS", "no check matches the filter");
  if (!opt.fault.empty()) {
    auto it = std::find_if(checks().begin(), checks().end(), [&](const Check& c) { return c.id == opt.fault; });
    if (it == checks().end()) throw Error("UNKNOWN_CHECK", "no check named " + opt.fault);
    if (!it->corruptible) throw Error("NOT_CORRUPTIBLE", opt.fault + " has no generator to corrupt");
  }
  std::vector<CheckResult> results(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) results[i] = run_check(*todo[i], opt);
  };
  const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(todo.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
  return results;
}

}  // namespace gaf::io
