#pragma once

#include <optional>
#include <vector>

#include "gaf/exact/matrix.hpp"
#include "gaf/perm.hpp"

namespace gaf::exact {

/// Linear map e_j -> sign[j] * e_{perm[j]} (0-based indices).
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;

  static SignedPerm identity(std::size_t n);
  std::size_t dim() const { return perm.size(); }
  SignedPerm operator*(const SignedPerm& o) const;  // (this o o)
  SignedPerm inverse() const;
  bool operator==(const SignedPerm&) const = default;
  auto operator<=>(const SignedPerm&) const = default;
  bool has_negative_diagonal() const;
  Matrix<Integer> matrix() const;
  template <class T>
  std::vector<T> apply(const std::vector<T>& x) const {
    std::vector<T> y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) y[perm[j]] = sign[j] < 0 ? T(-x[j]) : x[j];
    return y;
  }
};

/// Verifies exactly one nonzero entry per row and column, each equal to +-1.
std::optional<SignedPerm> as_signed_perm(const Matrix<Integer>& m);

/// x -> L x + t with L a signed permutation.
struct LatticeIsometry {
  SignedPerm linear;
  std::vector<Integer> translation;

  std::size_t dim() const { return linear.dim(); }
  std::vector<Integer> operator()(const std::vector<Integer>& x) const;
  LatticeIsometry operator*(const LatticeIsometry& o) const;
  bool operator==(const LatticeIsometry&) const = default;
  bool operator<(const LatticeIsometry& o) const;
  AffineMap<Integer> affine() const;
};

/// Throws NOT_SIGNED_PERM.
LatticeIsometry to_lattice_isometry(const AffineMap<Integer>& f);

/// Some point of Fix f in Z^n, if any.
std::optional<std::vector<Integer>> integer_fixed_point(const LatticeIsometry& f);

/// Closure of gens; throws CAP_EXCEEDED, DIMENSION_MISMATCH.
std::vector<LatticeIsometry> lattice_group(const std::vector<LatticeIsometry>& gens,
                                           std::size_t cap = perm::kDefaultCap);

struct ZnFixedPoint {
  std::vector<Integer> point;
  std::vector<Rational> centroid;
  bool centroid_integral = false;
  std::vector<std::size_t> half_coordinates;  // I: coordinates of the centroid congruent to 1/2
  std::vector<int> signs;                     // sign class (+1 / -1) per coordinate of I
  bool diagonal_check = false;                // no -1 on the diagonal of the restricted linear parts
  std::size_t group_order = 0;
};

/// Global fixed point of a finite GAF group of lattice isometries.
/// Throws NOT_GAF (with the violator), NOT_SIGNED_PERM, CAP_EXCEEDED.
ZnFixedPoint zn_global_fixed_point(const std::vector<AffineMap<Integer>>& gens,
                                   std::size_t cap = perm::kDefaultCap);
ZnFixedPoint zn_global_fixed_point(const std::vector<LatticeIsometry>& gens, std::size_t cap = perm::kDefaultCap);

/// Signed permutation acting on the vertices {0,1}^n through x = 2v - 1.
/// Vertex v has index 1 + sum v_i 2^i.
perm::Permutation hypercube_vertex_permutation(const SignedPerm& s);
SignedPerm hypercube_signed_perm(const perm::Permutation& p, std::size_t n);

struct HypercubeAnalysis {
  int n = 0;
  std::size_t order = 0;
  perm::FiniteGroup group;
  std::optional<bool> fixating;  // decided for n <= 3
  std::optional<perm::FiniteGroup> witness;
};

/// Throws CAP_EXCEEDED when 2^n n! exceeds cap; BAD_DIMENSION unless 1 <= n <= 6.
HypercubeAnalysis hypercube_isometry_analysis(int n, std::size_t cap = perm::kDefaultCap);

/// Fixed vertex in {0,1}^n of a GAF group of cube isometries; throws NOT_GAF.
std::vector<int> hypercube_fixed_vertex(const std::vector<SignedPerm>& gens, std::size_t cap = perm::kDefaultCap);

}  // namespace gaf::exact
