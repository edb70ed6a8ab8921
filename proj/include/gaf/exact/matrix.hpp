#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "gaf/exact/scalar.hpp"

namespace gaf::exact {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : r_(rows), c_(cols), a_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
      if (row.size() != c_) throw Error("DIMENSION_MISMATCH", "ragged matrix literal");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n, const T& like) {
    Matrix m(n, n, Scalar<T>::zero(like));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar<T>::one(like);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  const T& like() const { return a_.front(); }

  Matrix operator+(const Matrix& o) const { return zip(o, [](const T& x, const T& y) { return T(x + y); }); }
  Matrix operator-(const Matrix& o) const { return zip(o, [](const T& x, const T& y) { return T(x - y); }); }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
  }
  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) throw Error("DIMENSION_MISMATCH", "product dimensions disagree");
    Matrix m(r_, o.c_, Scalar<T>::zero(like()));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        const T& x = (*this)(i, k);
        if (Scalar<T>::is_zero(x)) continue;
        for (std::size_t j = 0; j < o.c_; ++j) m(i, j) += x * o(k, j);
      }
    return m;
  }
  std::vector<T> operator*(const std::vector<T>& v) const {
    if (c_ != v.size()) throw Error("DIMENSION_MISMATCH", "matrix-vector dimensions disagree");
    std::vector<T> out(r_, Scalar<T>::zero(like()));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) out[i] += (*this)(i, k) * v[k];
    return out;
  }
  Matrix scaled(const T& s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x = s * x;
    return m;
  }
  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const {
    Matrix m(c_, r_, like());
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
  T trace() const {
    T t = Scalar<T>::zero(like());
    for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
  }
  bool is_identity() const { return r_ == c_ && *this == identity(r_, like()); }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < r_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < c_; ++j) s += (j ? "," : "") + Scalar<T>::str((*this)(i, j));
      s += "]";
    }
    return s + "]";
  }

 private:
  template <class F>
  Matrix zip(const Matrix& o, F f) const {
    if (r_ != o.r_ || c_ != o.c_) throw Error("DIMENSION_MISMATCH", "shapes disagree");
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = f(a_[i], o.a_[i]);
    return m;
  }

  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

template <class U, class T, class F>
Matrix<U> convert(const Matrix<T>& m, F f) {
  Matrix<U> out(m.rows(), m.cols(), f(m.like()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
  return out;
}

/// Fraction-free Bareiss elimination; valid over any integral domain with exact division.
template <class T>
T determinant(Matrix<T> m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error("DIMENSION_MISMATCH", "determinant of a non-square matrix");
  if (n == 0) throw Error("DIMENSION_MISMATCH", "determinant of an empty matrix");
  T prev = Scalar<T>::one(m.like());
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (Scalar<T>::is_zero(m(k, k))) {
      std::size_t r = k + 1;
      while (r < n && Scalar<T>::is_zero(m(r, k))) ++r;
      if (r == n) return Scalar<T>::zero(m.like());
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return sign < 0 ? T(-d) : d;
}

/// Reduced row echelon form in place over a field; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && Scalar<T>::is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
    T inv = Scalar<T>::one(m.like()) / m(row, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || Scalar<T>::is_zero(m(i, col))) continue;
      T f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& a) {
  Matrix<T> m = a;
  auto piv = rref(m);
  std::vector<char> is_piv(a.cols(), 0);
  for (auto c : piv) is_piv[c] = 1;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_piv[free]) continue;
    std::vector<T> v(a.cols(), Scalar<T>::zero(a.like()));
    v[free] = Scalar<T>::one(a.like());
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
std::size_t rank(const Matrix<T>& a) {
  Matrix<T> m = a;
  return rref(m).size();
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw Error("DIMENSION_MISMATCH", "inverse of a non-square matrix");
  Matrix<T> aug(n, 2 * n, Scalar<T>::zero(a.like()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Scalar<T>::one(a.like());
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error("SINGULAR_MATRIX", "matrix is not invertible");
  Matrix<T> out(n, n, a.like());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

/// Solution set of A x = b: empty, a single point, or point + span(basis).
template <class T>
struct AffineSolution {
  enum class Kind { EMPTY, POINT, SUBSPACE };
  Kind kind = Kind::EMPTY;
  std::vector<T> point;
  std::vector<std::vector<T>> basis;
  std::size_t dimension() const { return basis.size(); }
};

template <class T>
AffineSolution<T> solve_affine(const Matrix<T>& a, const std::vector<T>& b) {
  const std::size_t n = a.cols();
  Matrix<T> aug(a.rows(), n + 1, Scalar<T>::zero(a.like()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto piv = rref(aug);
  AffineSolution<T> s;
  if (!piv.empty() && piv.back() == n) return s;
  s.point.assign(n, Scalar<T>::zero(a.like()));
  for (std::size_t r = 0; r < piv.size(); ++r) s.point[piv[r]] = aug(r, n);
  s.basis = nullspace(a);
  s.kind = s.basis.empty() ? AffineSolution<T>::Kind::POINT : AffineSolution<T>::Kind::SUBSPACE;
  return s;
}

/// x -> L x + t.
template <class T>
struct AffineMap {
  Matrix<T> linear;
  std::vector<T> translation;

  static AffineMap identity(std::size_t n, const T& like) {
    return {Matrix<T>::identity(n, like), std::vector<T>(n, Scalar<T>::zero(like))};
  }
  std::size_t dim() const { return linear.rows(); }
  std::vector<T> operator()(const std::vector<T>& x) const {
    auto y = linear * x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += translation[i];
    return y;
  }
  /// (this o o)(x) = this(o(x)).
  AffineMap operator*(const AffineMap& o) const {
    AffineMap r{linear * o.linear, linear * o.translation};
    for (std::size_t i = 0; i < r.translation.size(); ++i) r.translation[i] += translation[i];
    return r;
  }
  bool operator==(const AffineMap& o) const { return linear == o.linear && translation == o.translation; }
  bool operator!=(const AffineMap& o) const { return !(*this == o); }
  std::string key() const {
    std::string s = linear.str() + "|";
    for (const auto& x : translation) s += Scalar<T>::str(x) + ",";
    return s;
  }
};

/// Inverse over a field.
template <class T>
AffineMap<T> inverse(const AffineMap<T>& f) {
  AffineMap<T> g{inverse(f.linear), {}};
  g.translation = g.linear * f.translation;
  for (auto& x : g.translation) x = -x;
  return g;
}

/// Fix f as the solution set of (I - L) x = t.
template <class T>
AffineSolution<T> affine_fixed_point(const AffineMap<T>& f) {
  const auto& like = f.linear.like();
  return solve_affine(Matrix<T>::identity(f.dim(), like) - f.linear, f.translation);
}

}  // namespace gaf::exact
