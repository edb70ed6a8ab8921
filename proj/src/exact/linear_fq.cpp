#include <map>

#include "gaf/error.hpp"
#include "gaf/exact/linear_fq.hpp"

namespace gaf::exact {

FqMatrix fq_matrix(const std::shared_ptr<const FiniteField>& field, const std::vector<FqVector>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  FqMatrix m(rows.size(), c, FqElem(field, 0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error("DIMENSION_MISMATCH", "ragged matrix");
    for (std::size_t j = 0; j < c; ++j) {
      if (rows[i][j] >= field->q()) throw Error("PARSE_ERROR", "entry outside F_" + std::to_string(field->q()));
      m(i, j) = FqElem(field, rows[i][j]);
    }
  }
  return m;
}

std::vector<FqVector> nonzero_vectors(int d, std::uint32_t q) {
  std::vector<FqVector> out;
  FqVector v(d, 0);
  while (true) {
    int i = 0;
    while (i < d && ++v[i] == q) v[i++] = 0;
    if (i == d) break;
    out.push_back(v);
  }
  return out;
}

FqAction gl_fq_to_permutation(int d, std::uint32_t q, const std::vector<FqMatrix>& gens, std::size_t cap,
                              const std::vector<FqVector>& order) {
  auto field = std::make_shared<const FiniteField>(q);
  FqAction a;
  a.d = d;
  a.q = q;
  a.points = order.empty() ? nonzero_vectors(d, q) : order;
  std::map<FqVector, int> index;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    if (a.points[i].size() != static_cast<std::size_t>(d)) throw Error("DIMENSION_MISMATCH", "point order entry");
    index[a.points[i]] = static_cast<int>(i + 1);
  }
  if (index.size() != nonzero_vectors(d, q).size() || index.count(FqVector(d, 0)))
    throw Error("DIMENSION_MISMATCH", "point order must list every nonzero vector once");
  for (const auto& g : gens) {
    if (g.rows() != static_cast<std::size_t>(d) || g.cols() != static_cast<std::size_t>(d))
      throw Error("DIMENSION_MISMATCH", "generator is not " + std::to_string(d) + "x" + std::to_string(d));
    FqMatrix m(d, d, FqElem(field, 0));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = FqElem(field, g(i, j).value());
    if (determinant(m).is_zero()) throw Error("SINGULAR_GENERATOR", "singular generator " + g.str());
    std::vector<int> images;
    for (const auto& p : a.points) {
      std::vector<FqElem> x;
      for (auto c : p) x.emplace_back(field, c);
      auto y = m * x;
      FqVector w;
      for (const auto& e : y) w.push_back(e.value());
      images.push_back(index.at(w));
    }
    a.generators.emplace_back(std::move(images));
  }
  a.group = perm::generate_group(a.generators, cap, static_cast<int>(a.points.size()));
  return a;
}

std::vector<FqMatrix> gl_generators(int d, const std::shared_ptr<const FiniteField>& field) {
  std::vector<FqMatrix> out;
  const FqElem zero(field, 0);
  const std::uint32_t w = field->primitive();
  FqMatrix diag = FqMatrix::identity(d, zero);
  diag(0, 0) = FqElem(field, w);
  if (!diag.is_identity()) out.push_back(diag);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      for (std::uint32_t t = 0; t < field->k(); ++t) {
        FqMatrix m = FqMatrix::identity(d, zero);
        m(i, j) = FqElem(field, field->pow(w, t));
        out.push_back(m);
      }
    }
  if (out.empty()) out.push_back(FqMatrix::identity(d, zero));
  return out;
}

std::vector<FqMatrix> upper_affine_pair(const std::shared_ptr<const FiniteField>& field, std::uint32_t a) {
  return {fq_matrix(field, {{a, 0}, {0, 1}}), fq_matrix(field, {{1, 1}, {0, 1}})};
}

std::vector<FqMatrix> lift_generators(const std::vector<FqMatrix>& gens) {
  if (gens.empty()) throw Error("DIMENSION_MISMATCH", "no generators");
  const std::size_t d = gens.front().rows();
  const FqElem zero = Scalar<FqElem>::zero(gens.front().like());
  std::vector<FqMatrix> out;
  for (const auto& g : gens) {
    FqMatrix m = FqMatrix::identity(d + 1, zero);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = g(i, j);
    out.push_back(m);
  }
  for (std::size_t i = 0; i < d; ++i) {
    FqMatrix m = FqMatrix::identity(d + 1, zero);
    m(i, d) = Scalar<FqElem>::one(zero);
    out.push_back(m);
  }
  return out;
}

std::vector<FqMatrix> gl32_pair() {
  auto f2 = std::make_shared<const FiniteField>(2);
  // Columns are the images of e1, e2, e3.
  return {fq_matrix(f2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}), fq_matrix(f2, {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}})};
}

std::vector<FqVector> gl32_point_order() {
  return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
}

}  // namespace gaf::exact
