#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "gaf/exact/matrix.hpp"
#include "gaf/perm.hpp"

namespace gaf::exact {

using FqMatrix = Matrix<FqElem>;
using FqVector = std::vector<std::uint32_t>;  // integer encodings of the coordinates

FqMatrix fq_matrix(const std::shared_ptr<const FiniteField>& field, const std::vector<FqVector>& rows);

/// Nonzero vectors of F_q^d ordered by sum v_i q^i.
std::vector<FqVector> nonzero_vectors(int d, std::uint32_t q);

struct FqAction {
  int d = 0;
  std::uint32_t q = 0;
  std::vector<FqVector> points;  // point i + 1 is points[i]
  std::vector<perm::Permutation> generators;
  perm::FiniteGroup group;
};

/// Permutation action of <gens> on F_q^d \ {0}. An explicit point order may be supplied.
/// Throws SINGULAR_GENERATOR, DIMENSION_MISMATCH, CAP_EXCEEDED, NOT_A_PRIME_POWER.
FqAction gl_fq_to_permutation(int d, std::uint32_t q, const std::vector<FqMatrix>& gens,
                              std::size_t cap = perm::kDefaultCap, const std::vector<FqVector>& order = {});

/// Generators of GL(d, q): diag(w, 1, ..., 1) and I + w^t E_ij.
std::vector<FqMatrix> gl_generators(int d, const std::shared_ptr<const FiniteField>& field);

/// A = diag(a, 1), B = [[1, 1], [0, 1]].
std::vector<FqMatrix> upper_affine_pair(const std::shared_ptr<const FiniteField>& field, std::uint32_t a);

/// Block matrices [[A, 0], [0, 1]] for each generator plus translations [[I, e_i], [0, 1]].
std::vector<FqMatrix> lift_generators(const std::vector<FqMatrix>& gens);

/// f(e1) = e2, f(e2) = e3, f(e3) = e1 and g(e1) = e123, g(e2) = e2, g(e3) = e3 over F_2.
std::vector<FqMatrix> gl32_pair();
/// e1, e2, e3, e123, e23, e13, e12.
std::vector<FqVector> gl32_point_order();

}  // namespace gaf::exact
