#include <functional>
#include <numeric>

#include "gaf/exact/so4.hpp"

namespace gaf::exact {

Poly::Poly(std::vector<Rational> coeffs) : a_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!a_.empty() && a_.back() == 0) a_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> r(std::max(a_.size(), o.a_.size()), Rational(0));
  for (std::size_t i = 0; i < a_.size(); ++i) r[i] += a_[i];
  for (std::size_t i = 0; i < o.a_.size(); ++i) r[i] += o.a_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-() const {
  std::vector<Rational> r = a_;
  for (auto& x : r) x = -x;
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (a_.empty() || o.a_.empty()) return Poly();
  std::vector<Rational> r(a_.size() + o.a_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a_.size(); ++i)
    for (std::size_t j = 0; j < o.a_.size(); ++j) r[i + j] += a_[i] * o.a_[j];
  return Poly(std::move(r));
}

std::string Poly::str() const {
  if (a_.empty()) return "0";
  std::string s;
  for (std::size_t i = a_.size(); i-- > 0;) {
    if (a_[i] == 0) continue;
    std::string coef = a_[i].get_str();
    if (!s.empty()) s += a_[i] > 0 ? " + " : " - ";
    else if (a_[i] < 0) s += "-";
    if (coef[0] == '-') coef.erase(0, 1);
    if (i == 0 || coef != "1") s += coef;
    if (i >= 1) s += (i == 0 || coef != "1") ? "*c" : "c";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

TrigElem TrigElem::operator*(const TrigElem& o) const {
  static const Poly s2 = Poly({1, 0, -1});  // 1 - c^2
  return {a * o.a + s2 * (b * o.b), a * o.b + b * o.a};
}

std::string TrigElem::str() const {
  if (b.is_zero()) return a.str();
  if (a.is_zero()) return "s*(" + b.str() + ")";
  return a.str() + " + s*(" + b.str() + ")";
}

namespace {

TrigElem cc() { return {Poly::c(), Poly()}; }
TrigElem ss() { return {Poly(), Poly::constant(1)}; }

TrigMatrix build(const std::vector<std::vector<TrigElem>>& rows) {
  TrigMatrix m(4, 4, TrigElem(0));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = rows[i][j];
  return m;
}

TrigMatrix power(const std::string& gen, long e) {
  TrigMatrix base;
  if (gen == "sigma") base = sigma_matrix();
  else if (gen == "tau") base = tau_matrix();
  else throw Error("BAD_WORD_SHAPE", "unknown generator '" + gen + "' (expected sigma or tau)");
  if (e < 0) base = base.transpose();  // orthogonal
  TrigMatrix m = TrigMatrix::identity(4, TrigElem(0));
  for (long k = 0; k < (e < 0 ? -e : e); ++k) m = m * base;
  return m;
}

TrigElem det(const TrigMatrix& m, const std::vector<std::size_t>& idx) {
  // Leibniz expansion over the principal submatrix on idx.
  std::vector<std::size_t> perm(idx.size());
  std::iota(perm.begin(), perm.end(), 0);
  TrigElem total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    TrigElem term(1);
    for (std::size_t i = 0; i < perm.size(); ++i) term = term * m(idx[i], idx[perm[i]]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

TrigElem principal_minor_sum(const TrigMatrix& m, std::size_t k) {
  TrigElem sum(0);
  for (unsigned mask = 0; mask < 16; ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 4; ++i)
      if (mask >> i & 1) idx.push_back(i);
    sum += det(m, idx);
  }
  return sum;
}

}  // namespace

TrigMatrix sigma_matrix() {
  TrigElem c = cc(), s = ss(), z(0);
  return build({{c, -s, z, z}, {s, c, z, z}, {z, z, c, -s}, {z, z, s, c}});
}

TrigMatrix tau_matrix() {
  TrigElem c = cc(), s = ss(), z(0);
  return build({{c, z, z, -s}, {z, c, -s, z}, {z, s, c, z}, {s, z, z, c}});
}

So4Audit so4_symbolic_audit(const SignedWord& w) {
  const auto& syl = w.syllables();
  if (syl.empty() || syl.front().gen != "sigma" || syl.back().gen != "tau")
    throw Error("BAD_WORD_SHAPE", "word must start with sigma and end with tau: " + w.str());
  for (const auto& s : syl)
    if (s.gen != "sigma" && s.gen != "tau") throw Error("BAD_WORD_SHAPE", "unknown generator " + s.gen);

  So4Audit a;
  a.word = w.str();
  a.length = w.length();
  TrigMatrix m = evaluate_word(w, TrigMatrix::identity(4, TrigElem(0)), power);
  const TrigElem P = m(0, 0), Q = m(1, 0), R = m(2, 0), S = m(3, 0);
  TrigMatrix expected = build({{P, -Q, -R, -S}, {Q, P, -S, R}, {R, S, P, -Q}, {S, -R, Q, P}});
  a.quadruple_form = m == expected;
  a.entry_types = P.b.is_zero() && R.b.is_zero() && Q.a.is_zero() && S.a.is_zero();
  a.P = {P.a, false};
  a.Q = {Q.b, true};
  a.R = {R.a, false};
  a.S = {S.b, true};
  a.orthogonality = P * P + Q * Q + R * R + S * S == TrigElem(1);

  const TrigElem four_p = TrigElem(4) * P;
  const TrigElem e1 = m.trace(), e2 = principal_minor_sum(m, 2), e3 = principal_minor_sum(m, 3),
                 e4 = principal_minor_sum(m, 4);
  a.char_poly = e1 == four_p && e2 == TrigElem(4) * P * P + TrigElem(2) && e3 == four_p && e4 == TrigElem(1);

  a.p_degree = P.a.degree();
  a.degree_matches = a.p_degree == a.length;
  const TrigElem q = TrigElem(4) * P * P - TrigElem(8) * P + TrigElem(4);
  a.one_not_eigenvalue = a.entry_types && !q.is_zero();
  return a;
}

std::vector<SignedWord> alternating_words(int max_len) {
  std::vector<SignedWord> out;
  std::vector<Syllable> cur;
  std::function<void(bool, int)> rec = [&](bool sigma_next, int left) {
    if (!cur.empty() && cur.back().gen == "tau") out.emplace_back(cur);
    for (int len = 1; len <= left; ++len)
      for (int sgn : {1, -1}) {
        cur.push_back({sigma_next ? "sigma" : "tau", sgn * len});
        rec(!sigma_next, left - len);
        cur.pop_back();
      }
  };
  rec(true, max_len);
  return out;
}

}  // namespace gaf::exact
