#pragma once

#include <string>
#include <vector>

#include "gaf/exact/matrix.hpp"
#include "gaf/exact/sl2z.hpp"

namespace gaf::exact {

/// Polynomial in c = cos(theta) with rational coefficients, low degree first.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& x) { return Poly({x}); }
  static Poly c() { return Poly({0, 1}); }

  int degree() const { return static_cast<int>(a_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return a_.empty(); }
  const std::vector<Rational>& coeffs() const { return a_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return a_ == o.a_; }
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> a_;
};

/// a(c) + s * b(c) with s = sin(theta), reduced by s^2 = 1 - c^2.
struct TrigElem {
  Poly a, b;
  TrigElem() = default;
  TrigElem(long x) : a(Poly::constant(x)) {}  // NOLINT
  TrigElem(Poly a_, Poly b_) : a(std::move(a_)), b(std::move(b_)) {}

  TrigElem operator+(const TrigElem& o) const { return {a + o.a, b + o.b}; }
  TrigElem operator-(const TrigElem& o) const { return {a - o.a, b - o.b}; }
  TrigElem operator-() const { return {-a, -b}; }
  TrigElem operator*(const TrigElem& o) const;
  TrigElem& operator+=(const TrigElem& o) { return *this = *this + o; }
  TrigElem& operator-=(const TrigElem& o) { return *this = *this - o; }
  TrigElem& operator*=(const TrigElem& o) { return *this = *this * o; }
  bool operator==(const TrigElem& o) const { return a == o.a && b == o.b; }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  std::string str() const;
};

template <>
struct Scalar<TrigElem> {
  static TrigElem zero(const TrigElem&) { return TrigElem(0); }
  static TrigElem one(const TrigElem&) { return TrigElem(1); }
  static bool is_zero(const TrigElem& x) { return x.is_zero(); }
  static std::string str(const TrigElem& x) { return x.str(); }
};

/// Entry of the form poly(c) or sin(theta) * poly(c).
struct SymbolicEntry {
  Poly poly;
  bool sin_factor = false;
};

using TrigMatrix = Matrix<TrigElem>;

/// Symbolic rotation matrices; generator names "sigma" and "tau".
TrigMatrix sigma_matrix();
TrigMatrix tau_matrix();

struct So4Audit {
  std::string word;
  long length = 0;
  int p_degree = -1;
  SymbolicEntry P, Q, R, S;
  bool quadruple_form = false;
  bool entry_types = false;  // P, R polynomial; Q, S sin-multiples
  bool orthogonality = false;
  bool char_poly = false;
  bool degree_matches = false;
  bool one_not_eigenvalue = false;  // 4P^2 - 8P + 4 is a nonzero polynomial
  bool pass() const {
    return quadruple_form && entry_types && orthogonality && char_poly && degree_matches && one_not_eigenvalue;
  }
};

/// Throws BAD_WORD_SHAPE unless w alternates sigma/tau blocks, starting with sigma and ending with tau.
So4Audit so4_symbolic_audit(const SignedWord& w);

/// Every word sigma^{..} tau^{..} ... tau^{..} with total length <= max_len.
std::vector<SignedWord> alternating_words(int max_len);

}  // namespace gaf::exact
