#pragma once

#include <vector>

#include "gaf/audit.hpp"
#include "gaf/exact/matrix.hpp"

namespace gaf::geo {

using RatMatrix = exact::Matrix<exact::Rational>;

/// All products of the generators. Throws CAP_EXCEEDED.
std::vector<RatMatrix> close_matrix_group(const std::vector<RatMatrix>& gens, std::size_t cap = 4096);

/// Sphere action: an element fixes a point iff it has eigenvalue 1.
bool sphere_gaf(const std::vector<RatMatrix>& group);
bool sphere_gag(const std::vector<RatMatrix>& gens);
/// Projective action (x identified with -x): eigenvalue 1 or -1; common fixed point iff some sign
/// character on the generators has a common eigenvector.
bool projective_gaf(const std::vector<RatMatrix>& group);
bool projective_gag(const std::vector<RatMatrix>& gens);

/// Klein group generators in O_{n+1}: diag(1,-1,-1,-1,..), diag(-1,1,-1,-1,..), diag(-1,-1,1,1,..).
std::vector<RatMatrix> klein_o(int n);
/// Same pattern with 2x2 identity blocks in SO_{2k}, k >= 3.
std::vector<RatMatrix> klein_so(int k);
/// diag(I,R,..,R), diag(R,I,R,..,R), diag(R,R,I,R,..,R) in SO_{n+1}, n odd >= 5, R the quarter turn.
std::vector<RatMatrix> quarter_turn_blocks(int n);
/// Signed 4-cycles f = (1 2 3 4), g = (1 2 -3 -4) and -id.
std::vector<RatMatrix> g3_generators();

AuditReport sphere_projective_audits();

}  // namespace gaf::geo
