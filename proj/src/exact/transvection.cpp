#include "gaf/exact/transvection.hpp"

namespace gaf::exact {

namespace {

const Quadratic kSqrt2(0, 1, 2);

Quadratic q(long x) { return Quadratic(x, 0, 2); }

QuadAffine power(const QuadAffine& f, long e) {
  QuadAffine base = e < 0 ? inverse(f) : f;
  QuadAffine r = QuadAffine::identity(2, q(0));
  for (long k = 0; k < (e < 0 ? -e : e); ++k) r = r * base;
  return r;
}

}  // namespace

QuadAffine transvection_f() { return {Matrix<Quadratic>{{q(1), q(1)}, {q(0), q(1)}}, {q(1), q(0)}}; }

QuadAffine transvection_g() { return {Matrix<Quadratic>{{q(1), kSqrt2}, {q(0), q(1)}}, {q(0), q(0)}}; }

TransvectionLine transvection_line(long m, long n) {
  QuadAffine h = power(transvection_f(), m) * power(transvection_g(), n);
  auto s = affine_fixed_point(h);
  const bool horizontal = s.kind == AffineSolution<Quadratic>::Kind::SUBSPACE && s.dimension() == 1 &&
                          s.basis[0][1].is_zero() && !s.basis[0][0].is_zero();
  if (!horizontal)
    throw Error("NOT_A_LINE", "Fix f^" + std::to_string(m) + " g^" + std::to_string(n) + " is not a horizontal line");
  return {m, n, s.point[1]};
}

AuditReport transvection_lines_audit(long range) {
  AuditReport r;
  r.name = "transvection_lines";
  std::vector<TransvectionLine> lines;
  for (long m = -range; m <= range; ++m)
    for (long n = -range; n <= range; ++n) {
      if (m == 0 && n == 0) continue;
      TransvectionLine l;
      try {
        l = transvection_line(m, n);
      } catch (const Error& e) {
        r.expect(false, e.what());
        continue;
      }
      const Quadratic expected = q(-m) / (q(m) + q(n) * kSqrt2);
      r.expect(l.y == expected, "line (" + std::to_string(m) + "," + std::to_string(n) + ") is y = " + l.y.str() +
                                    ", expected " + expected.str());
      lines.push_back(l);
    }
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& a = lines[i];
      const auto& b = lines[j];
      if (a.m * b.n == b.m * a.n) continue;
      ++pairs;
      r.expect(!(a.y == b.y), "lines (" + std::to_string(a.m) + "," + std::to_string(a.n) + ") and (" +
                                  std::to_string(b.m) + "," + std::to_string(b.n) + ") meet");
    }
  r.facts["lines"] = std::to_string(lines.size());
  r.facts["disjoint_pairs"] = std::to_string(pairs);
  return r;
}

}  // namespace gaf::exact
