#include "gaf/exact/scalar.hpp"

namespace gaf::exact {
namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic-or-not b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  std::uint32_t lead_inv = 1;
  for (std::uint32_t t = 1; t < p; ++t)
    if (t * b.back() % p == 1) lead_inv = t;
  while (a.size() >= b.size()) {
    std::uint32_t factor = a.back() * lead_inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + p - factor * b[i] % p) % p;
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& m, std::uint32_t p) {
  const std::size_t k = m.size() - 1;
  // Trial division by every monic polynomial of degree 1..k/2.
  for (std::size_t deg = 1; deg <= k / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly d(deg + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < deg; ++i) {
        d[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      d[deg] = 1;
      if (poly_mod(m, d, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  if (q < 2 || q > 65536) throw Error("NOT_A_PRIME_POWER", "field order out of range: " + std::to_string(q));
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw Error("NOT_A_PRIME_POWER", std::to_string(q) + " is not a prime power");
  p_ = p;
  k_ = k;
  // Lexicographically first monic irreducible polynomial of degree k.
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly m(k + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < k; ++i) {
      m[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    m[k] = 1;
    if (k > 1 && m[0] == 0) continue;
    if (is_irreducible(m, p)) {
      modulus_ = m;
      break;
    }
  }
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return (a + b) % p_;
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

std::uint32_t FiniteField::neg(std::uint32_t a) const {
  if (k_ == 1) return (p_ - a % p_) % p_;
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  Poly x(k_), y(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    x[i] = a % p_;
    a /= p_;
    y[i] = b % p_;
    b /= p_;
  }
  Poly prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i)
    for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  Poly r = poly_mod(prod, modulus_, p_);
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t c : r) {
    out += c * scale;
    scale *= p_;
  }
  return out;
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t acc = 1;
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw Error("DIVISION_BY_ZERO", "zero has no inverse in GF(" + std::to_string(q_) + ")");
  return pow(a, q_ - 2);
}

std::uint32_t FiniteField::primitive() const {
  const std::uint32_t n = q_ - 1;
  std::vector<std::uint32_t> primes;
  std::uint32_t r = n;
  for (std::uint32_t d = 2; d * d <= r; ++d)
    if (r % d == 0) {
      primes.push_back(d);
      while (r % d == 0) r /= d;
    }
  if (r > 1) primes.push_back(r);
  for (std::uint32_t g = 1; g < q_; ++g) {
    bool ok = true;
    for (auto pr : primes) ok &= pow(g, n / pr) != 1;
    if (ok) return g;
  }
  return 1;
}

FqElem FqElem::operator/(const FqElem& o) const { return {pick(o), fld(o).mul(v_, fld(o).inv(o.v_))}; }

const FiniteField& FqElem::fld(const FqElem& o) const {
  if (f_ && o.f_ && f_ != o.f_ && f_->q() != o.f_->q()) throw Error("FIELD_MISMATCH", "mixed finite fields");
  const auto& f = f_ ? f_ : o.f_;
  if (!f) throw Error("FIELD_MISMATCH", "element without a field");
  return *f;
}

}  // namespace gaf::exact
