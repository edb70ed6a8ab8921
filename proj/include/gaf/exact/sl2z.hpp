#pragma once

#include <string>
#include <vector>

#include "gaf/audit.hpp"
#include "gaf/exact/matrix.hpp"

namespace gaf::exact {

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix matrix_A();  // [[0,1],[-1,3]]
IntMatrix matrix_B();  // [[-1,-1],[5,4]]
IntMatrix inverse_sl2(const IntMatrix& m);

/// alpha_0 = 0, alpha_1 = 1, alpha_n = 3 alpha_{n-1} - alpha_{n-2}.
struct TraceSequence {
  std::vector<Integer> alphas;
  static TraceSequence up_to(int n);
  /// Checks the recurrence, alpha_n >= 2^n - 1 and alpha_{n+1} - alpha_n >= 2^n.
  AuditReport audit() const;
};

struct TraceCertificate {
  IntMatrix power;
  Integer alpha_n, alpha_prev, trace, bound;
  bool recurrence_holds = false;  // M^n == alpha_n M - alpha_{n-1} I
  bool trace_formula_holds = false;
  bool bound_holds = false;  // trace >= 2^{n+1} - 1
};

/// Throws NOT_IN_T unless det M = 1 and tr M = 3.
TraceCertificate trace_certificate(const IntMatrix& m, int n);

struct Syllable {
  std::string gen;
  long exp = 0;
  bool operator==(const Syllable&) const = default;
};

/// Reduced word: nonzero exponents, adjacent generators distinct.
class SignedWord {
 public:
  SignedWord() = default;
  explicit SignedWord(std::vector<Syllable> s);  // throws BAD_WORD
  const std::vector<Syllable>& syllables() const { return s_; }
  bool empty() const { return s_.empty(); }
  long length() const;
  std::string str() const;
  bool operator==(const SignedWord&) const = default;

 private:
  std::vector<Syllable> s_;
};

/// All reduced words with 1..max_len letters over gens and their inverses.
std::vector<SignedWord> reduced_words(const std::vector<std::string>& gens, int max_len);
/// Words alternating between two generators with 1..max_syllables syllables and |exp| <= max_exp.
std::vector<SignedWord> syllable_words(const std::string& a, const std::string& b, int max_syllables,
                                       int max_exp);

template <class T, class Lookup>
Matrix<T> evaluate_word(const SignedWord& w, const Matrix<T>& id, Lookup gen_power) {
  Matrix<T> m = id;
  for (const auto& s : w.syllables()) m = m * gen_power(s.gen, s.exp);
  return m;
}

IntMatrix sl2_power(const IntMatrix& m, long e);

/// X >> Y entrywise.
bool dominates(const IntMatrix& x, const IntMatrix& y);

struct WordTrace {
  IntMatrix matrix;
  Integer trace;
  bool bound_holds = false;      // |trace| >= 3
  bool dominance_holds = false;  // eps(kl) A^k B^l >> diag(5,1) for each A^k B^l block
};

/// Throws EMPTY_WORD, BAD_WORD (generators other than A, B).
WordTrace word_trace_bound(const SignedWord& w);

/// f(x) = A x, g(x) = B x + (1,0); every word of length <= L has a unique fixed point.
AuditReport free_affine_eccentric_audit(int max_len);

/// Property: X >> Y >> 0 and X' >> Y' >> 0 imply XX' >> YY', on random nonnegative matrices.
AuditReport product_order_audit(unsigned seed, int samples);

}  // namespace gaf::exact
