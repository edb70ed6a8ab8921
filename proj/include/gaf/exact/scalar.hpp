#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gaf/error.hpp"

namespace gaf::exact {

using Integer = mpz_class;
using Rational = mpq_class;

/// u + v*sqrt(d) with rational u, v and a fixed non-square integer d.
class Quadratic {
 public:
  Quadratic() = default;
  Quadratic(Rational u, Rational v, long d);
  Quadratic(long u) : u_(u) {}  // NOLINT: integers embed in every quadratic field

  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }
  long d() const { return d_; }

  Quadratic operator+(const Quadratic& o) const;
  Quadratic operator-(const Quadratic& o) const;
  Quadratic operator*(const Quadratic& o) const;
  Quadratic operator/(const Quadratic& o) const;
  Quadratic operator-() const;
  Quadratic& operator+=(const Quadratic& o) { return *this = *this + o; }
  Quadratic& operator-=(const Quadratic& o) { return *this = *this - o; }
  Quadratic& operator*=(const Quadratic& o) { return *this = *this * o; }
  bool operator==(const Quadratic& o) const;
  bool is_zero() const { return u_ == 0 && v_ == 0; }
  Quadratic conjugate() const;
  Rational norm() const;
  int sign() const;
  double to_double() const;
  std::string str() const;

 private:
  long merge_d(const Quadratic& o) const;
  Rational u_ = 0, v_ = 0;
  long d_ = 0;  // 0 while v = 0 and no field has been fixed
};

/// GF(p^k) with elements stored as base-p digit strings of polynomial coefficients.
class FiniteField {
 public:
  /// Throws NOT_A_PRIME_POWER when q is not a prime power or exceeds 2^16.
  explicit FiniteField(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;
  /// Smallest element (in integer encoding) generating the multiplicative group.
  std::uint32_t primitive() const;

 private:
  std::uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;  // monic, degree k, low coefficient first
};

class FqElem {
 public:
  FqElem() = default;
  FqElem(std::shared_ptr<const FiniteField> f, std::uint32_t v) : f_(std::move(f)), v_(v) {}

  std::uint32_t value() const { return v_; }
  const std::shared_ptr<const FiniteField>& field() const { return f_; }

  FqElem operator+(const FqElem& o) const { return {pick(o), fld(o).add(v_, o.v_)}; }
  FqElem operator-(const FqElem& o) const { return {pick(o), fld(o).sub(v_, o.v_)}; }
  FqElem operator*(const FqElem& o) const { return {pick(o), fld(o).mul(v_, o.v_)}; }
  FqElem operator/(const FqElem& o) const;
  FqElem operator-() const { return {f_, f_ ? f_->neg(v_) : 0}; }
  FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
  FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
  FqElem& operator*=(const FqElem& o) { return *this = *this * o; }
  bool operator==(const FqElem& o) const { return v_ == o.v_; }
  bool is_zero() const { return v_ == 0; }
  std::string str() const { return std::to_string(v_); }

 private:
  const std::shared_ptr<const FiniteField>& pick(const FqElem& o) const { return f_ ? f_ : o.f_; }
  const FiniteField& fld(const FqElem& o) const;
  std::shared_ptr<const FiniteField> f_;
  std::uint32_t v_ = 0;
};

/// zero/one/equality helpers so matrix code can stay generic across domains.
template <class T>
struct Scalar;

template <>
struct Scalar<Integer> {
  static Integer zero(const Integer&) { return 0; }
  static Integer one(const Integer&) { return 1; }
  static bool is_zero(const Integer& x) { return x == 0; }
  static std::string str(const Integer& x) { return x.get_str(); }
};

template <>
struct Scalar<Rational> {
  static Rational zero(const Rational&) { return 0; }
  static Rational one(const Rational&) { return 1; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static std::string str(const Rational& x) { return x.get_str(); }
};

template <>
struct Scalar<Quadratic> {
  static Quadratic zero(const Quadratic& l) { return Quadratic(0, 0, l.d()); }
  static Quadratic one(const Quadratic& l) { return Quadratic(1, 0, l.d()); }
  static bool is_zero(const Quadratic& x) { return x.is_zero(); }
  static std::string str(const Quadratic& x) { return x.str(); }
};

template <>
struct Scalar<FqElem> {
  static FqElem zero(const FqElem& l) { return {l.field(), 0}; }
  static FqElem one(const FqElem& l) { return {l.field(), 1}; }
  static bool is_zero(const FqElem& x) { return x.is_zero(); }
  static std::string str(const FqElem& x) { return x.str(); }
};

/// Parses "7", "-3/4" or "u+v√d" / "u+v*sqrt(d)". Throws PARSE_ERROR.
Rational parse_rational(const std::string& text);
Quadratic parse_quadratic(const std::string& text);

}  // namespace gaf::exact
