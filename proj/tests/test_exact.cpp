#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>
#include <set>

#include "gaf/exact/lattice.hpp"
#include "gaf/exact/linear_fq.hpp"
#include "gaf/exact/sl2z.hpp"
#include "gaf/exact/so4.hpp"
#include "gaf/exact/transvection.hpp"

using namespace gaf;
using namespace gaf::exact;

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

using M2 = std::array<long long, 4>;
M2 mul(const M2& x, const M2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

// Plain 64-bit evaluation of a word in A, B.
M2 naive_word(const SignedWord& w) {
  const M2 a{0, 1, -1, 3}, ai{3, -1, 1, 0}, b{-1, -1, 5, 4}, bi{4, 1, -5, -1};
  M2 m{1, 0, 0, 1};
  for (const auto& s : w.syllables()) {
    const M2& g = s.gen == "A" ? (s.exp > 0 ? a : ai) : (s.exp > 0 ? b : bi);
    for (long k = 0; k < std::abs(s.exp); ++k) m = mul(m, g);
  }
  return m;
}

SignedWord word(std::vector<Syllable> s) { return SignedWord(std::move(s)); }

std::vector<Rational> rv(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("trace sequence matches matrix powers") {
  auto seq = TraceSequence::up_to(64);
  std::vector<long> first{0, 1, 3, 8, 21, 55};
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(seq.alphas[i] == first[i]);
  // A^n = alpha_n A - alpha_{n-1} I, so the (1,2) entry of A^n is alpha_n.
  IntMatrix p = IntMatrix::identity(2, Integer(0));
  for (int n = 0; n <= 64; ++n) {
    CHECK(p(0, 1) == seq.alphas[n]);
    p = p * matrix_A();
  }
  auto audit = seq.audit();
  CHECK(audit.pass());
  CHECK(audit.checked > 0);
}

TEST_CASE("trace certificate examples") {
  auto c1 = trace_certificate(matrix_A(), 1);
  CHECK(c1.trace == 3);
  CHECK(c1.alpha_n == 1);
  auto c5 = trace_certificate(matrix_A(), 5);
  CHECK(c5.alpha_n == 55);
  CHECK(c5.trace == 123);
  CHECK(c5.bound == 63);
  CHECK(c5.bound_holds);
  auto b2 = trace_certificate(matrix_B(), 2);
  CHECK(b2.trace == 7);
  CHECK(b2.bound_holds);
  CHECK(b2.power == matrix_B() * matrix_B());
  CHECK(error_code([] { trace_certificate(IntMatrix{{1, 1}, {0, 1}}, 2); }) == "NOT_IN_T");
  CHECK(error_code([] { trace_certificate(IntMatrix{{3, 0}, {0, 1}}, 2); }) == "NOT_IN_T");
}

TEST_CASE("recurrence for A, B and inverses up to n = 20") {
  for (const auto& m : {matrix_A(), matrix_B(), inverse_sl2(matrix_A()), inverse_sl2(matrix_B())}) {
    IntMatrix p = m;
    for (int n = 1; n <= 20; ++n) {
      auto c = trace_certificate(m, n);
      CHECK(c.power == p);
      CHECK(c.recurrence_holds);
      CHECK(c.trace_formula_holds);
      CHECK(c.bound_holds);
      p = p * m;
    }
  }
  CHECK(inverse_sl2(matrix_A()) == IntMatrix{{3, -1}, {1, 0}});
  CHECK(inverse_sl2(matrix_B()) == IntMatrix{{4, 1}, {-5, -1}});
}

TEST_CASE("word trace examples") {
  auto ab = word_trace_bound(word({{"A", 1}, {"B", 1}}));
  CHECK(ab.matrix == IntMatrix{{5, 4}, {16, 13}});
  CHECK(ab.trace == 18);
  auto abi = word_trace_bound(word({{"A", -1}, {"B", -1}}));
  CHECK(abi.matrix == IntMatrix{{17, 4}, {4, 1}});
  CHECK(abi.trace == 18);
  CHECK(word_trace_bound(word({{"A", 1}})).trace == 3);
  CHECK(word_trace_bound(word({{"A", 1}, {"B", -1}})).matrix == IntMatrix{{-5, -1}, {-19, -4}});
  CHECK(word_trace_bound(word({{"A", -1}, {"B", 1}})).matrix == IntMatrix{{-8, -7}, {-1, -1}});
  CHECK(error_code([] { word_trace_bound(SignedWord()); }) == "EMPTY_WORD");
  CHECK(error_code([] { word({{"A", 1}, {"A", 2}}); }) == "BAD_WORD");
  CHECK(error_code([] { word({{"A", 0}}); }) == "BAD_WORD");
}

TEST_CASE("every reduced word of length <= 6 has |trace| >= 3") {
  auto words = reduced_words({"A", "B"}, 6);
  CHECK(words.size() == 1456);  // 4 * (1 + 3 + ... + 3^5)
  std::set<std::string> distinct;
  for (const auto& w : words) {
    distinct.insert(w.str());
    auto t = word_trace_bound(w);
    M2 m = naive_word(w);
    CHECK(t.trace == static_cast<long>(m[0] + m[3]));
    CHECK(t.bound_holds);
    CHECK(std::llabs(m[0] + m[3]) >= 3);
    CHECK(t.dominance_holds);
  }
  CHECK(distinct.size() == words.size());
}

TEST_CASE("dominance on A^k B^l blocks") {
  const IntMatrix floor{{5, 0}, {0, 1}};
  for (int k = -6; k <= 6; ++k)
    for (int l = -6; l <= 6; ++l) {
      if (!k || !l) continue;
      M2 m = naive_word(word({{"A", k}, {"B", l}}));
      const long long s = (long long)k * l < 0 ? -1 : 1;
      CHECK(s * m[0] >= 5);
      CHECK(s * m[1] >= 0);
      CHECK(s * m[2] >= 0);
      CHECK(s * m[3] >= 1);
      CHECK(word_trace_bound(word({{"A", k}, {"B", l}})).dominance_holds);
    }
}

TEST_CASE("syllable words") {
  auto ws = syllable_words("A", "B", 2, 2);
  // 2 starting letters * (4 + 4 * 4)
  CHECK(ws.size() == 40);
  for (const auto& w : ws) CHECK(word_trace_bound(w).bound_holds);
}

TEST_CASE("affine fixed point examples") {
  AffineMap<Rational> shift{Matrix<Rational>{{1}}, rv({1})};
  CHECK(affine_fixed_point(shift).kind == AffineSolution<Rational>::Kind::EMPTY);
  AffineMap<Rational> g{Matrix<Rational>{{-1, -1}, {5, 4}}, rv({1, 0})};
  auto s = affine_fixed_point(g);
  REQUIRE(s.kind == AffineSolution<Rational>::Kind::POINT);
  CHECK(s.point == rv({3, -5}));
  CHECK(g(s.point) == s.point);
  auto id = affine_fixed_point(AffineMap<Rational>::identity(3, Rational(0)));
  CHECK(id.kind == AffineSolution<Rational>::Kind::SUBSPACE);
  CHECK(id.dimension() == 3);
}

TEST_CASE("linear part is a morphism") {
  std::mt19937 rng(7);
  auto rnd = [&] {
    AffineMap<Rational> f{Matrix<Rational>(3, 3, Rational(0)), std::vector<Rational>(3)};
    do {
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) f.linear(i, j) = Rational(long(rng() % 7) - 3);
        f.translation[i] = Rational(long(rng() % 9) - 4, long(rng() % 3) + 1);
        f.translation[i].canonicalize();
      }
    } while (determinant(f.linear) == 0);
    return f;
  };
  for (int k = 0; k < 50; ++k) {
    auto f = rnd(), g = rnd();
    auto comm = f * g * inverse(f) * inverse(g);
    auto lin = f.linear * g.linear * inverse(f.linear) * inverse(g.linear);
    CHECK(comm.linear == lin);
    std::vector<Rational> x{Rational(k), Rational(1, 3), Rational(-2)};
    CHECK((f * g)(x) == f(g(x)));
    CHECK((inverse(f) * f)(x) == x);
  }
}

TEST_CASE("free affine eccentric audit") {
  auto one = free_affine_eccentric_audit(1);
  CHECK(one.pass());
  CHECK(one.facts["fix_f"] == "(0,0)");
  CHECK(one.facts["fix_g"] == "(3,-5)");
  CHECK(one.facts["words"] == "4");
  auto four = free_affine_eccentric_audit(4);
  CHECK(four.pass());
  CHECK(four.facts["words"] == "160");
  auto zero = free_affine_eccentric_audit(0);
  CHECK(zero.pass());
  CHECK(zero.facts["words"] == "0");
}

TEST_CASE("product order audit") {
  auto r = product_order_audit(11, 500);
  CHECK(r.pass());
  CHECK(r.checked == 500);
}

TEST_CASE("so4 symbolic examples") {
  auto a = so4_symbolic_audit(word({{"sigma", 1}, {"tau", 1}}));
  CHECK(a.p_degree == 2);
  CHECK(a.pass());
  auto b = so4_symbolic_audit(word({{"sigma", 1}, {"tau", -1}}));
  CHECK(b.p_degree == 2);
  CHECK(b.char_poly);
  CHECK(b.pass());
  auto c = so4_symbolic_audit(word({{"sigma", 2}, {"tau", 1}}));
  CHECK(c.p_degree == 3);
  CHECK(c.pass());
  CHECK(error_code([] { so4_symbolic_audit(word({{"tau", 1}, {"sigma", 1}})); }) == "BAD_WORD_SHAPE");
  CHECK(error_code([] { so4_symbolic_audit(word({{"sigma", 1}})); }) == "BAD_WORD_SHAPE");
  CHECK(error_code([] { so4_symbolic_audit(SignedWord()); }) == "BAD_WORD_SHAPE");
}

TEST_CASE("so4 audit agrees with numeric rotations") {
  auto words = alternating_words(6);
  // compositions of n into an even number of parts, times 2^parts
  std::size_t expected = 0;
  std::function<void(int, int)> count = [&](int left, int parts) {
    if (parts > 0 && parts % 2 == 0) expected += std::size_t{1} << parts;
    for (int l = 1; l <= left; ++l) count(left - l, parts + 1);
  };
  count(6, 0);
  CHECK(words.size() == expected);
  const double theta = 0.7;
  const double cs = std::cos(theta), sn = std::sin(theta);
  using M4 = std::array<std::array<double, 4>, 4>;
  const M4 sig{{{cs, -sn, 0, 0}, {sn, cs, 0, 0}, {0, 0, cs, -sn}, {0, 0, sn, cs}}};
  const M4 tau{{{cs, 0, 0, -sn}, {0, cs, -sn, 0}, {0, sn, cs, 0}, {sn, 0, 0, cs}}};
  auto mm = [](const M4& x, const M4& y) {
    M4 r{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) r[i][j] += x[i][k] * y[k][j];
    return r;
  };
  auto tr = [](const M4& x) {
    M4 r{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r[i][j] = x[j][i];
    return r;
  };
  auto eval = [&](const Poly& p) {
    double v = 0, pw = 1;
    for (const auto& c : p.coeffs()) {
      v += c.get_d() * pw;
      pw *= cs;
    }
    return v;
  };
  for (const auto& w : words) {
    auto a = so4_symbolic_audit(w);
    CHECK(a.pass());
    CHECK(a.p_degree == w.length());
    M4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1;
    for (const auto& s : w.syllables()) {
      M4 g = s.gen == "sigma" ? sig : tau;
      if (s.exp < 0) g = tr(g);
      for (long k = 0; k < std::abs(s.exp); ++k) m = mm(m, g);
    }
    CHECK(eval(a.P.poly) == doctest::Approx(m[0][0]).epsilon(1e-9));
    CHECK(sn * eval(a.Q.poly) == doctest::Approx(m[1][0]).epsilon(1e-9));
    CHECK(eval(a.R.poly) == doctest::Approx(m[2][0]).epsilon(1e-9));
    CHECK(sn * eval(a.S.poly) == doctest::Approx(m[3][0]).epsilon(1e-9));
  }
}

TEST_CASE("poly and trig arithmetic") {
  Poly c = Poly::c();
  CHECK((c * c - Poly({0, 0, 1})).is_zero());
  TrigElem s{Poly(), Poly::constant(1)};
  CHECK(s * s == TrigElem(Poly({1, 0, -1}), Poly()));
  CHECK(Poly({1, -2, 1}).str() == "c^2 - 2*c + 1");
}

namespace {

LatticeIsometry iso(std::vector<int> perm, std::vector<int> sign, std::vector<long> t) {
  std::vector<Integer> tt(t.begin(), t.end());
  return {SignedPerm{std::move(perm), std::move(sign)}, tt};
}

// Every point of the box [-r, r]^n fixed by all maps.
std::vector<std::vector<Integer>> box_fixed(const std::vector<LatticeIsometry>& maps, std::size_t n, long r) {
  std::vector<std::vector<Integer>> out;
  std::vector<long> x(n, -r);
  while (true) {
    std::vector<Integer> p(x.begin(), x.end());
    bool ok = true;
    for (const auto& f : maps) ok = ok && f(p) == p;
    if (ok) out.push_back(p);
    std::size_t i = 0;
    while (i < n && ++x[i] > r) x[i++] = -r;
    if (i == n) break;
  }
  return out;
}

}  // namespace

TEST_CASE("signed permutation detection") {
  CHECK(as_signed_perm(IntMatrix{{0, -1}, {1, 0}}).has_value());
  CHECK(!as_signed_perm(IntMatrix{{0, 2}, {1, 0}}).has_value());
  CHECK(!as_signed_perm(IntMatrix{{1, 1}, {0, 1}}).has_value());
  CHECK(!as_signed_perm(IntMatrix{{1, 0}, {1, 0}}).has_value());
  auto s = *as_signed_perm(IntMatrix{{0, -1, 0}, {0, 0, 1}, {1, 0, 0}});
  CHECK(s.matrix() == IntMatrix{{0, -1, 0}, {0, 0, 1}, {1, 0, 0}});
  CHECK(s * s.inverse() == SignedPerm::identity(3));
  AffineMap<Integer> bad{IntMatrix{{2}}, {Integer(0)}};
  CHECK(error_code([&] { zn_global_fixed_point(std::vector<AffineMap<Integer>>{bad}); }) == "NOT_SIGNED_PERM");
}

TEST_CASE("zn fixed point examples") {
  auto r1 = zn_global_fixed_point(std::vector<LatticeIsometry>{iso({0}, {-1}, {0})});
  CHECK(r1.point == std::vector<Integer>{0});
  CHECK(r1.centroid_integral);

  auto f = iso({1, 0}, {-1, -1}, {1, 1});  // (x, y) -> (1 - y, 1 - x)
  auto r2 = zn_global_fixed_point(std::vector<LatticeIsometry>{f});
  CHECK(f(r2.point) == r2.point);
  auto box = box_fixed({f}, 2, 3);
  CHECK(std::find(box.begin(), box.end(), r2.point) != box.end());
  CHECK(!r2.centroid_integral);
  CHECK(r2.half_coordinates.size() == 2);

  // (x, y, z) -> (y, x, z) and (x, y, z) -> (x, y, 1 - z) ... composed with a swap.
  auto g = iso({1, 0, 2}, {1, 1, 1}, {0, 0, 0});
  auto h = iso({0, 2, 1}, {1, 1, 1}, {0, 1, -1});
  auto r3 = zn_global_fixed_point(std::vector<LatticeIsometry>{g, h});
  for (const auto& e : lattice_group({g, h})) CHECK(e(r3.point) == r3.point);
  auto box3 = box_fixed({g, h}, 3, 4);
  CHECK(std::find(box3.begin(), box3.end(), r3.point) != box3.end());

  auto a = iso({1, 0, 2}, {1, 1, 1}, {0, 0, 0});
  auto b = iso({1, 0, 2}, {-1, -1, 1}, {1, 1, 0});
  CHECK(error_code([&] { zn_global_fixed_point(std::vector<LatticeIsometry>{a, b}); }) == "NOT_GAF");
  auto shift = iso({0}, {1}, {1});
  CHECK(error_code([&] { zn_global_fixed_point(std::vector<LatticeIsometry>{shift}, 50); }) == "CAP_EXCEEDED");
}

TEST_CASE("integer fixed point agrees with box search") {
  std::mt19937 rng(3);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + rng() % 3;
    SignedPerm s = SignedPerm::identity(n);
    std::shuffle(s.perm.begin(), s.perm.end(), rng);
    for (auto& x : s.sign) x = rng() % 2 ? 1 : -1;
    std::vector<Integer> t(n);
    for (auto& x : t) x = long(rng() % 5) - 2;
    LatticeIsometry f{s, t};
    auto fp = integer_fixed_point(f);
    auto box = box_fixed({f}, n, 6);
    CHECK(fp.has_value() == !box.empty());
    if (fp) CHECK(f(*fp) == *fp);
  }
}

TEST_CASE("zn fixed point on random finite groups") {
  std::mt19937 rng(5);
  int gaf = 0, not_gaf = 0;
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + rng() % 3;
    // conjugate of a linear group by a half-integral center c: f(x) = L(x - c) + c
    std::vector<Rational> c(n);
    const bool half = rng() % 2;
    for (auto& x : c) {
      x = half ? Rational(2 * long(rng() % 4) - 3, 2) : Rational(long(rng() % 5) - 2);
      x.canonicalize();
    }
    std::vector<LatticeIsometry> gens;
    for (std::size_t g = 0; g < 1 + rng() % 2; ++g) {
      SignedPerm s = SignedPerm::identity(n);
      std::shuffle(s.perm.begin(), s.perm.end(), rng);
      for (auto& x : s.sign) x = rng() % 2 ? 1 : -1;
      auto lc = s.apply(c);
      std::vector<Integer> t(n);
      for (std::size_t i = 0; i < n; ++i) {
        Rational d = c[i] - lc[i];
        REQUIRE(d.get_den() == 1);
        t[i] = d.get_num();
      }
      gens.push_back({s, t});
    }
    auto group = lattice_group(gens);
    bool is_gaf = true;
    for (const auto& e : group) is_gaf = is_gaf && !box_fixed({e}, n, 4).empty();
    if (is_gaf) {
      ++gaf;
      auto r = zn_global_fixed_point(gens);
      for (const auto& e : group) CHECK(e(r.point) == r.point);
      auto common = box_fixed(group, n, 4);
      CHECK(!common.empty());
      CHECK(std::find(common.begin(), common.end(), r.point) != common.end());
    } else {
      ++not_gaf;
      CHECK(error_code([&] { zn_global_fixed_point(gens); }) == "NOT_GAF");
    }
  }
  CHECK(gaf > 20);
  CHECK(not_gaf > 20);
}

TEST_CASE("hypercube analysis") {
  auto h3 = hypercube_isometry_analysis(3);
  CHECK(h3.order == 48);
  REQUIRE(h3.fixating.has_value());
  CHECK(*h3.fixating);
  auto h2 = hypercube_isometry_analysis(2);
  CHECK(h2.order == 8);
  CHECK(*h2.fixating);
  auto h1 = hypercube_isometry_analysis(1);
  CHECK(h1.order == 2);
  CHECK(*h1.fixating);
  CHECK(perm::classify_action(h1.group).kind == perm::ActionKind::NOT_GAF);
  auto h4 = hypercube_isometry_analysis(4);
  CHECK(h4.order == 384);
  CHECK(!h4.fixating.has_value());
  CHECK(error_code([] { hypercube_isometry_analysis(6); }) == "CAP_EXCEEDED");
  CHECK(hypercube_isometry_analysis(6, 50000).order == 46080);
  CHECK(error_code([] { hypercube_isometry_analysis(7); }) == "BAD_DIMENSION");
}

TEST_CASE("hypercube fixed vertex for every GAF subgroup of the 3-cube") {
  auto h3 = hypercube_isometry_analysis(3);
  int gaf = 0;
  for (const auto& sub : perm::enumerate_subgroups(h3.group)) {
    const bool is_gaf = perm::classify_action(sub).kind != perm::ActionKind::NOT_GAF;
    std::vector<SignedPerm> gens;
    for (const auto& p : sub.elements()) gens.push_back(hypercube_signed_perm(p, 3));
    if (!is_gaf) {
      CHECK(error_code([&] { hypercube_fixed_vertex(gens); }) == "NOT_GAF");
      continue;
    }
    ++gaf;
    auto v = hypercube_fixed_vertex(gens);
    const int index = 1 + v[0] + 2 * v[1] + 4 * v[2];
    for (const auto& p : sub.elements()) CHECK(p.images()[index - 1] == index);
  }
  CHECK(gaf > 10);
}

TEST_CASE("hypercube fixed vertex for larger cubes") {
  std::mt19937 rng(9);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 4 + rng() % 3;
    std::vector<SignedPerm> gens;
    for (int g = 0; g < 2; ++g) {
      SignedPerm s = SignedPerm::identity(n);
      std::shuffle(s.perm.begin(), s.perm.end(), rng);
      for (auto& x : s.sign) x = rng() % 3 ? 1 : -1;
      gens.push_back(s);
    }
    std::vector<perm::Permutation> perms;
    for (const auto& s : gens) perms.push_back(hypercube_vertex_permutation(s));
    auto g = perm::generate_group(perms, 50000);
    const auto kind = perm::classify_action(g).kind;
    if (kind == perm::ActionKind::NOT_GAF) {
      CHECK(error_code([&] { hypercube_fixed_vertex(gens, 50000); }) == "NOT_GAF");
      continue;
    }
    CHECK(kind == perm::ActionKind::GAG);
    auto v = hypercube_fixed_vertex(gens, 50000);
    int index = 1;
    for (std::size_t i = 0; i < n; ++i) index += v[i] << i;
    for (const auto& p : g.elements()) CHECK(p.images()[index - 1] == index);
  }
}

TEST_CASE("finite field actions") {
  auto pair = gl32_pair();
  auto act = gl_fq_to_permutation(3, 2, pair, perm::kDefaultCap, gl32_point_order());
  CHECK(act.generators[0] == perm::parse_permutation("(123)(567)", 7));
  CHECK(act.generators[1] == perm::parse_permutation("(14)(67)", 7));
  CHECK(act.group.order() == 24);
  CHECK(perm::classify_action(act.group).kind == perm::ActionKind::ECCENTRIC);

  auto f3 = std::make_shared<const FiniteField>(3);
  auto e17 = gl_fq_to_permutation(2, 3, upper_affine_pair(f3, 2));
  CHECK(e17.points.size() == 8);
  CHECK(perm::classify_action(e17.group).kind == perm::ActionKind::ECCENTRIC);
  auto lifted = gl_fq_to_permutation(3, 3, lift_generators(upper_affine_pair(f3, 2)));
  CHECK(lifted.group.order() == 54);
  CHECK(perm::classify_action(lifted.group).kind == perm::ActionKind::ECCENTRIC);

  CHECK(error_code([&] { gl_fq_to_permutation(2, 3, {fq_matrix(f3, {{1, 2}, {2, 1}})}); }) == "SINGULAR_GENERATOR");
  CHECK(error_code([&] { gl_fq_to_permutation(2, 6, {}); }) == "NOT_A_PRIME_POWER");
}

TEST_CASE("general linear groups") {
  auto order_gl = [](int d, long q) {
    long o = 1, qd = 1;
    for (int i = 0; i < d; ++i) qd *= q;
    long qi = 1;
    for (int i = 0; i < d; ++i) {
      o *= qd - qi;
      qi *= q;
    }
    return static_cast<std::size_t>(o);
  };
  for (auto [d, q] : std::vector<std::pair<int, std::uint32_t>>{{1, 5}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {2, 5}}) {
    auto field = std::make_shared<const FiniteField>(q);
    auto act = gl_fq_to_permutation(d, q, gl_generators(d, field));
    CHECK(act.group.order() == order_gl(d, q));
  }
  auto f2 = std::make_shared<const FiniteField>(2);
  CHECK(perm::is_fixating(gl_fq_to_permutation(2, 2, gl_generators(2, f2)).group).fixating);
  auto f3 = std::make_shared<const FiniteField>(3);
  CHECK(!perm::is_fixating(gl_fq_to_permutation(2, 3, gl_generators(2, f3)).group).fixating);
  auto f5 = std::make_shared<const FiniteField>(5);
  CHECK(perm::is_fixating(gl_fq_to_permutation(1, 5, gl_generators(1, f5)).group).fixating);
}

TEST_CASE("prime field action matches naive arithmetic") {
  auto f5 = std::make_shared<const FiniteField>(5);
  std::vector<FqVector> rows{{2, 3}, {1, 1}};
  auto act = gl_fq_to_permutation(2, 5, {fq_matrix(f5, rows)});
  for (std::size_t i = 0; i < act.points.size(); ++i) {
    const auto& v = act.points[i];
    FqVector w{(2 * v[0] + 3 * v[1]) % 5, (v[0] + v[1]) % 5};
    CHECK(act.points[act.generators[0].images()[i] - 1] == w);
  }
}

TEST_CASE("transvection lines") {
  const Quadratic sqrt2(0, 1, 2);
  CHECK(transvection_line(1, 0).y == Quadratic(-1, 0, 2));
  CHECK(transvection_line(0, 1).y.is_zero());
  CHECK(!(transvection_line(1, 0).y == transvection_line(0, 1).y));
  CHECK(transvection_line(1, 1).y == Quadratic(-1, 0, 2) / (Quadratic(1, 0, 2) + sqrt2));
  CHECK(transvection_line(2, 2).y == transvection_line(1, 1).y);
  auto r = transvection_lines_audit(3);
  CHECK(r.pass());
  CHECK(r.facts["lines"] == "48");
  auto f = transvection_f(), g = transvection_g();
  CHECK(f * g == g * f);
}
