#include <functional>
#include <random>

#include "gaf/exact/sl2z.hpp"

namespace gaf::exact {

IntMatrix matrix_A() { return IntMatrix{{0, 1}, {-1, 3}}; }
IntMatrix matrix_B() { return IntMatrix{{-1, -1}, {5, 4}}; }

IntMatrix inverse_sl2(const IntMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2 || determinant(m) != 1)
    throw Error("NOT_UNIMODULAR", "expected a 2x2 integer matrix of determinant 1");
  return IntMatrix{{m(1, 1), -m(0, 1)}, {-m(1, 0), m(0, 0)}};
}

IntMatrix sl2_power(const IntMatrix& m, long e) {
  IntMatrix base = e < 0 ? inverse_sl2(m) : m;
  IntMatrix acc = IntMatrix::identity(2, Integer(0));
  for (long k = 0; k < (e < 0 ? -e : e); ++k) acc = acc * base;
  return acc;
}

TraceSequence TraceSequence::up_to(int n) {
  TraceSequence t;
  t.alphas.push_back(0);
  if (n >= 1) t.alphas.push_back(1);
  for (int k = 2; k <= n; ++k) t.alphas.push_back(3 * t.alphas[k - 1] - t.alphas[k - 2]);
  return t;
}

AuditReport TraceSequence::audit() const {
  AuditReport r;
  r.name = "trace-sequence";
  r.expect(!alphas.empty() && alphas[0] == 0, "alpha_0 != 0");
  if (alphas.size() > 1) r.expect(alphas[1] == 1, "alpha_1 != 1");
  Integer pow2 = 1;  // 2^n
  for (std::size_t n = 0; n < alphas.size(); ++n) {
    if (n >= 2)
      r.expect(alphas[n] == 3 * alphas[n - 1] - alphas[n - 2], "recurrence fails at n=" + std::to_string(n));
    r.expect(alphas[n] >= pow2 - 1, "alpha_n < 2^n - 1 at n=" + std::to_string(n));
    if (n + 1 < alphas.size())
      r.expect(alphas[n + 1] - alphas[n] >= pow2, "increment below 2^n at n=" + std::to_string(n));
    if (n >= 1 && n + 1 < alphas.size())
      r.expect(alphas[n + 1] > alphas[n], "not strictly increasing at n=" + std::to_string(n));
    pow2 *= 2;
  }
  return r;
}

TraceCertificate trace_certificate(const IntMatrix& m, int n) {
  if (m.rows() != 2 || m.cols() != 2 || determinant(m) != 1 || m.trace() != 3)
    throw Error("NOT_IN_T", "matrix must lie in SL(2,Z) with trace 3");
  if (n < 1) throw Error("NOT_IN_T", "exponent must be positive");
  auto seq = TraceSequence::up_to(n);
  TraceCertificate c;
  c.power = sl2_power(m, n);
  c.alpha_n = seq.alphas[n];
  c.alpha_prev = seq.alphas[n - 1];
  c.trace = c.power.trace();
  IntMatrix rhs = m.scaled(c.alpha_n) - IntMatrix::identity(2, Integer(0)).scaled(c.alpha_prev);
  c.recurrence_holds = c.power == rhs;
  c.trace_formula_holds = c.trace == 3 * c.alpha_n - 2 * c.alpha_prev;
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n) + 1);
  c.bound = two_pow - 1;
  c.bound_holds = c.trace >= c.bound;
  return c;
}

SignedWord::SignedWord(std::vector<Syllable> s) : s_(std::move(s)) {
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (s_[i].exp == 0) throw Error("BAD_WORD", "zero exponent in syllable " + std::to_string(i));
    if (i && s_[i].gen == s_[i - 1].gen) throw Error("BAD_WORD", "adjacent syllables share a generator");
  }
}

long SignedWord::length() const {
  long l = 0;
  for (const auto& s : s_) l += s.exp < 0 ? -s.exp : s.exp;
  return l;
}

std::string SignedWord::str() const {
  if (s_.empty()) return "id";
  std::string out;
  for (const auto& s : s_) out += s.gen + "^" + std::to_string(s.exp) + " ";
  out.pop_back();
  return out;
}

std::vector<SignedWord> reduced_words(const std::vector<std::string>& gens, int max_len) {
  std::vector<SignedWord> out;
  std::vector<Syllable> cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (!cur.empty()) out.emplace_back(cur);
    if (remaining == 0) return;
    for (const auto& g : gens)
      for (int sgn : {1, -1}) {
        if (!cur.empty() && cur.back().gen == g) {
          if ((cur.back().exp > 0) != (sgn > 0)) continue;  // would cancel
          cur.back().exp += sgn;
          rec(remaining - 1);
          cur.back().exp -= sgn;
        } else {
          cur.push_back({g, sgn});
          rec(remaining - 1);
          cur.pop_back();
        }
      }
  };
  rec(max_len);
  return out;
}

std::vector<SignedWord> syllable_words(const std::string& a, const std::string& b, int max_syllables,
                                       int max_exp) {
  std::vector<SignedWord> out;
  std::vector<Syllable> cur;
  std::function<void(const std::string&, int)> rec = [&](const std::string& next, int left) {
    if (!cur.empty()) out.emplace_back(cur);
    if (left == 0) return;
    const std::string& other = next == a ? b : a;
    for (int e = -max_exp; e <= max_exp; ++e) {
      if (e == 0) continue;
      cur.push_back({next, e});
      rec(other, left - 1);
      cur.pop_back();
    }
  };
  rec(a, max_syllables);
  rec(b, max_syllables);
  return out;
}

bool dominates(const IntMatrix& x, const IntMatrix& y) {
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x(i, j) < y(i, j)) return false;
  return true;
}

namespace {

IntMatrix ab_power(const std::string& g, long e) {
  if (g == "A") return sl2_power(matrix_A(), e);
  if (g == "B") return sl2_power(matrix_B(), e);
  throw Error("BAD_WORD", "unknown generator '" + g + "' (expected A or B)");
}

}  // namespace

WordTrace word_trace_bound(const SignedWord& w) {
  if (w.empty()) throw Error("EMPTY_WORD", "trace bound needs a nonempty word");
  WordTrace t;
  t.matrix = evaluate_word(w, IntMatrix::identity(2, Integer(0)), ab_power);
  t.trace = t.matrix.trace();
  t.bound_holds = abs(t.trace) >= 3;
  t.dominance_holds = true;
  const IntMatrix floor{{5, 0}, {0, 1}};
  const auto& s = w.syllables();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i].gen != "A" || s[i + 1].gen != "B") continue;
    IntMatrix block = ab_power("A", s[i].exp) * ab_power("B", s[i + 1].exp);
    if (s[i].exp * s[i + 1].exp < 0) block = -block;
    t.dominance_holds &= dominates(block, floor);
  }
  return t;
}

AuditReport free_affine_eccentric_audit(int max_len) {
  AuditReport r;
  r.name = "free-affine-eccentric";
  using Map = AffineMap<Rational>;
  auto to_q = [](const Integer& x) { return Rational(x); };
  const Map f{convert<Rational>(matrix_A(), to_q), {0, 0}};
  const Map g{convert<Rational>(matrix_B(), to_q), {1, 0}};
  const Map fi = inverse(f), gi = inverse(g);
  auto power = [&](const std::string& s, long e) {
    const Map& base = s == "f" ? (e > 0 ? f : fi) : (e > 0 ? g : gi);
    Map m = Map::identity(2, Rational(0));
    for (long k = 0; k < (e < 0 ? -e : e); ++k) m = m * base;
    return m;
  };
  auto ff = affine_fixed_point(f), fg = affine_fixed_point(g);
  r.expect(ff.kind == AffineSolution<Rational>::Kind::POINT, "Fix f is not a single point");
  r.expect(fg.kind == AffineSolution<Rational>::Kind::POINT, "Fix g is not a single point");
  if (r.pass()) {
    r.facts["fix_f"] = "(" + ff.point[0].get_str() + "," + ff.point[1].get_str() + ")";
    r.facts["fix_g"] = "(" + fg.point[0].get_str() + "," + fg.point[1].get_str() + ")";
    r.expect(ff.point != fg.point, "Fix f and Fix g intersect");
  }
  std::size_t words = 0;
  if (max_len >= 1) {
    for (const auto& w : reduced_words({"f", "g"}, max_len)) {
      Map h = Map::identity(2, Rational(0));
      for (const auto& s : w.syllables()) h = h * power(s.gen, s.exp);
      ++words;
      r.expect(h.linear.trace() != 2, "trace 2 for word " + w.str());
      auto fix = affine_fixed_point(h);
      bool unique = fix.kind == AffineSolution<Rational>::Kind::POINT;
      r.expect(unique, "no unique fixed point for " + w.str());
      if (unique) r.expect(h(fix.point) == fix.point, "fixed point check fails for " + w.str());
    }
  }
  r.facts["words"] = std::to_string(words);
  return r;
}

AuditReport product_order_audit(unsigned seed, int samples) {
  AuditReport r;
  r.name = "product-order";
  std::mt19937 rng(seed);
  auto rnd = [&] {
    IntMatrix m(2, 2, Integer(0));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = static_cast<long>(rng() % 50);
    return m;
  };
  for (int k = 0; k < samples; ++k) {
    IntMatrix y = rnd(), yp = rnd();
    IntMatrix x = y + rnd(), xp = yp + rnd();
    r.expect(dominates(x * xp, y * yp), "product order violated at sample " + std::to_string(k));
  }
  return r;
}

}  // namespace gaf::exact
