#include <cmath>
#include <regex>

#include "gaf/exact/scalar.hpp"

namespace gaf::exact {

Quadratic::Quadratic(Rational u, Rational v, long d) : u_(std::move(u)), v_(std::move(v)), d_(d) {
  u_.canonicalize();
  v_.canonicalize();
}

long Quadratic::merge_d(const Quadratic& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw Error("FIELD_MISMATCH", "sqrt(" + std::to_string(d_) + ") mixed with sqrt(" + std::to_string(o.d_) + ")");
}

Quadratic Quadratic::operator+(const Quadratic& o) const { return {u_ + o.u_, v_ + o.v_, merge_d(o)}; }
Quadratic Quadratic::operator-(const Quadratic& o) const { return {u_ - o.u_, v_ - o.v_, merge_d(o)}; }
Quadratic Quadratic::operator-() const { return {-u_, -v_, d_}; }

Quadratic Quadratic::operator*(const Quadratic& o) const {
  long d = merge_d(o);
  return {u_ * o.u_ + v_ * o.v_ * d, u_ * o.v_ + v_ * o.u_, d};
}

Quadratic Quadratic::operator/(const Quadratic& o) const {
  Rational n = o.norm();
  if (n == 0) throw Error("DIVISION_BY_ZERO", "division by zero in Q(sqrt d)");
  Quadratic num = *this * o.conjugate();
  return {num.u_ / n, num.v_ / n, num.d_};
}

bool Quadratic::operator==(const Quadratic& o) const {
  if (v_ != 0 && o.v_ != 0 && d_ != o.d_) return false;
  return u_ == o.u_ && v_ == o.v_;
}

Quadratic Quadratic::conjugate() const { return {u_, -v_, d_}; }
Rational Quadratic::norm() const { return u_ * u_ - v_ * v_ * d_; }

int Quadratic::sign() const {
  int su = sgn(u_), sv = sgn(v_);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // u and v*sqrt(d) have opposite signs: compare squares.
  Rational a = u_ * u_, b = v_ * v_ * d_;
  if (a == b) return 0;
  return a > b ? su : sv;
}

double Quadratic::to_double() const { return u_.get_d() + v_.get_d() * std::sqrt(static_cast<double>(d_)); }

std::string Quadratic::str() const {
  if (v_ == 0) return u_.get_str();
  std::string s = u_.get_str();
  s += v_ > 0 ? "+" : "-";
  Rational av = abs(v_);
  s += av.get_str() + "√" + std::to_string(d_);
  return s;
}

Rational parse_rational(const std::string& text) {
  static const std::regex re(R"(\s*([+-]?\d+)(\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw Error("PARSE_ERROR", "not a rational: '" + text + "'");
  Rational r(Integer(m[1].str()), m[3].matched ? Integer(m[3].str()) : Integer(1));
  if (r.get_den() == 0) throw Error("PARSE_ERROR", "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

Quadratic parse_quadratic(const std::string& text) {
  // u+v√d, u-v*sqrt(d), v√d, u; v may be omitted ("1+√2").
  static const std::regex re(
      R"(\s*([+-]?\d+(?:/\d+)?)?\s*(?:([+-])?\s*(\d+(?:/\d+)?)?\s*\*?\s*(?:√|sqrt)\s*\(?\s*(\d+)\s*\)?)?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re) || (!m[1].matched && !m[4].matched))
    throw Error("PARSE_ERROR", "not a quadratic number: '" + text + "'");
  Rational u = m[1].matched ? parse_rational(m[1].str()) : Rational(0);
  if (!m[4].matched) return Quadratic(u, 0, 0);
  Rational v = m[3].matched ? parse_rational(m[3].str()) : Rational(1);
  if (m[1].matched && !m[2].matched) {
    if (m[3].matched) throw Error("PARSE_ERROR", "missing sign in '" + text + "'");
    v = u;  // "3√2"
    u = 0;
  }
  if (m[2].str() == "-") v = -v;
  long d = std::stol(m[4].str());
  long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(d))));
  if (r * r == d) throw Error("PARSE_ERROR", "sqrt(" + std::to_string(d) + ") is rational");
  return Quadratic(u, v, d);
}

}  // namespace gaf::exact
