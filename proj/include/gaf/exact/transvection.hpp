#pragma once

#include <vector>

#include "gaf/audit.hpp"
#include "gaf/exact/matrix.hpp"

namespace gaf::exact {

using QuadAffine = AffineMap<Quadratic>;

/// f(x, y) = (x + y + 1, y) and g(x, y) = (x + a y, y) with a = sqrt(2).
QuadAffine transvection_f();
QuadAffine transvection_g();

struct TransvectionLine {
  long m = 0, n = 0;
  Quadratic y;  // Fix f^m g^n is the horizontal line at height y
};

/// Fix f^m g^n computed by exact composition; throws NOT_A_LINE when the fixed set is not a horizontal line.
TransvectionLine transvection_line(long m, long n);

/// All (m, n) != (0, 0) with |m|, |n| <= range: the line matches -m / (m + n a), and lines with
/// m n' != m' n are disjoint. Facts record the line count and the pair count.
AuditReport transvection_lines_audit(long range);

}  // namespace gaf::exact
