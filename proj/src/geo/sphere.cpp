#include <algorithm>
#include <set>

#include "gaf/error.hpp"
#include "gaf/geo/sphere.hpp"

namespace gaf::geo {

using exact::Rational;

namespace {

RatMatrix identity(std::size_t n) { return RatMatrix::identity(n, Rational(0)); }

RatMatrix diag(const std::vector<int>& d) {
  RatMatrix m(d.size(), d.size(), Rational(0));
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

/// Block diagonal of 2x2 blocks: 'I' identity, 'R' quarter turn, '-' minus identity.
RatMatrix blocks(const std::string& pattern) {
  RatMatrix m(2 * pattern.size(), 2 * pattern.size(), Rational(0));
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    const std::size_t o = 2 * k;
    if (pattern[k] == 'R') {
      m(o, o + 1) = -1;
      m(o + 1, o) = 1;
    } else {
      const int s = pattern[k] == 'I' ? 1 : -1;
      m(o, o) = s;
      m(o + 1, o + 1) = s;
    }
  }
  return m;
}

struct MatrixLess {
  bool operator()(const RatMatrix& a, const RatMatrix& b) const { return a.str() < b.str(); }
};

/// Dimension of the intersection of ker(g_i - s_i I).
std::size_t common_kernel_dim(const std::vector<RatMatrix>& gens, const std::vector<int>& signs) {
  const std::size_t n = gens.front().rows();
  RatMatrix stacked(n * gens.size(), n, Rational(0));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(k * n + i, j) = gens[k](i, j) - (i == j ? signs[k] : 0);
  return exact::nullspace(stacked).size();
}

bool has_eigenvalue(const RatMatrix& m, int s) { return common_kernel_dim({m}, {s}) > 0; }

}  // namespace

std::vector<RatMatrix> close_matrix_group(const std::vector<RatMatrix>& gens, std::size_t cap) {
  if (gens.empty()) throw Error("EMPTY_SET", "no generators");
  std::set<RatMatrix, MatrixLess> seen{identity(gens[0].rows())};
  std::vector<RatMatrix> out(seen.begin(), seen.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      RatMatrix p = out[i] * g;
      if (seen.insert(p).second) {
        out.push_back(std::move(p));
        if (out.size() > cap) throw Error("CAP_EXCEEDED", "matrix group exceeds cap " + std::to_string(cap));
      }
    }
  return out;
}

bool sphere_gaf(const std::vector<RatMatrix>& group) {
  return std::all_of(group.begin(), group.end(), [](const RatMatrix& m) { return has_eigenvalue(m, 1); });
}

bool sphere_gag(const std::vector<RatMatrix>& gens) {
  return common_kernel_dim(gens, std::vector<int>(gens.size(), 1)) > 0;
}

bool projective_gaf(const std::vector<RatMatrix>& group) {
  return std::all_of(group.begin(), group.end(),
                     [](const RatMatrix& m) { return has_eigenvalue(m, 1) || has_eigenvalue(m, -1); });
}

bool projective_gag(const std::vector<RatMatrix>& gens) {
  for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
    std::vector<int> signs(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
    if (common_kernel_dim(gens, signs) > 0) return true;
  }
  return false;
}

std::vector<RatMatrix> klein_o(int n) {
  if (n < 2) throw Error("BAD_DIMENSION", "Klein group needs n >= 2");
  std::vector<int> f(n + 1, -1), g(n + 1, -1), h(n + 1, 1);
  f[0] = 1;
  g[1] = 1;
  h[0] = h[1] = -1;
  return {diag(f), diag(g), diag(h)};
}

std::vector<RatMatrix> klein_so(int k) {
  if (k < 3) throw Error("BAD_DIMENSION", "block Klein group needs k >= 3");
  std::string f(k, '-'), g(k, '-'), h(k, 'I');
  f[0] = 'I';
  g[1] = 'I';
  h[0] = h[1] = '-';
  return {blocks(f), blocks(g), blocks(h)};
}

std::vector<RatMatrix> quarter_turn_blocks(int n) {
  if (n < 5 || n % 2 == 0) throw Error("BAD_DIMENSION", "needs n odd and >= 5");
  const int k = (n + 1) / 2;
  std::vector<RatMatrix> out;
  for (int i = 0; i < 3; ++i) {
    std::string s(k, 'R');
    s[i] = 'I';
    out.push_back(blocks(s));
  }
  return out;
}

std::vector<RatMatrix> g3_generators() {
  const Rational z(0), o(1), m(-1);
  RatMatrix f{{z, z, z, o}, {o, z, z, z}, {z, o, z, z}, {z, z, o, z}};
  RatMatrix g{{z, z, z, m}, {o, z, z, z}, {z, m, z, z}, {z, z, o, z}};
  return {f, g, -identity(4)};
}

AuditReport sphere_projective_audits() {
  AuditReport r;
  r.name = "sphere-projective";

  for (int n = 2; n <= 8; ++n) {
    const auto gens = klein_o(n);
    const auto group = close_matrix_group(gens);
    const std::string tag = "Klein group in O_" + std::to_string(n + 1);
    r.expect(group.size() == 4, tag + " has order " + std::to_string(group.size()));
    r.expect(sphere_gaf(group), tag + " is not GAF");
    r.expect(!sphere_gag(gens), tag + " has a common fixed point");
  }
  for (int k = 3; k <= 5; ++k) {
    const auto gens = klein_so(k);
    const auto group = close_matrix_group(gens);
    const std::string tag = "block Klein group in SO_" + std::to_string(2 * k);
    for (const auto& g : gens) r.expect(exact::determinant(g) == 1, tag + " has a reflection");
    r.expect(group.size() == 4, tag + " has order " + std::to_string(group.size()));
    r.expect(sphere_gaf(group), tag + " is not GAF");
    r.expect(!sphere_gag(gens), tag + " has a common fixed point");
  }

  // the 16 subgroups of G0 = {+-id, +-f1, +-f2, +-f3} in SO_4
  auto g0 = close_matrix_group({diag({1, 1, -1, -1}), diag({1, -1, 1, -1}), -identity(4)});
  r.expect(g0.size() == 8, "G0 has order " + std::to_string(g0.size()));
  const RatMatrix id = identity(4);
  std::erase(g0, id);
  std::set<std::vector<std::string>> subgroups;
  std::size_t gag = 0, not_gaf = 0, neither = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << g0.size()); ++mask) {
    std::vector<RatMatrix> h{id};
    for (std::size_t i = 0; i < g0.size(); ++i)
      if ((mask >> i) & 1) h.push_back(g0[i]);
    std::set<std::string> keys;
    for (const auto& x : h) keys.insert(x.str());
    bool closed = true;
    for (const auto& x : h)
      for (const auto& y : h) closed = closed && keys.count((x * y).str());
    if (!closed) continue;
    subgroups.insert(std::vector<std::string>(keys.begin(), keys.end()));
    const bool has_minus = keys.count((-id).str()) > 0;
    if (sphere_gag(h)) ++gag;
    else if (!sphere_gaf(h)) ++not_gaf;
    else ++neither;
    r.expect(sphere_gaf(h) != has_minus, "GAF status of a G0 subgroup disagrees with containing -id");
  }
  r.expect(subgroups.size() == 16, "G0 has " + std::to_string(subgroups.size()) + " subgroups");
  r.expect(gag == 11 && not_gaf == 5 && neither == 0, "G0 subgroup split differs");
  r.facts["g0_subgroups"] = std::to_string(subgroups.size());
  r.facts["g0_gag"] = std::to_string(gag);
  r.facts["g0_not_gaf"] = std::to_string(not_gaf);

  for (int n : {5, 7, 9}) {
    const auto gens = quarter_turn_blocks(n);
    const auto group = close_matrix_group(gens);
    const std::string tag = "G_" + std::to_string(n);
    r.facts[tag + "_order"] = std::to_string(group.size());
    if (n == 5) r.expect(group.size() == 32, tag + " has order " + std::to_string(group.size()));
    r.expect(projective_gaf(group), "psi(" + tag + ") is not GAF");
    r.expect(!projective_gag(gens), "psi(" + tag + ") has a common fixed point");
  }

  const auto g3 = g3_generators();
  const auto g3_group = close_matrix_group(g3);
  r.facts["G_3_order"] = std::to_string(g3_group.size());
  r.expect(g3_group.size() == 16, "G_3 has order " + std::to_string(g3_group.size()));
  r.expect(g3[0] * g3[1] == -(g3[1] * g3[0]), "fg != -gf");
  r.expect(g3[0] * g3[0] == -(g3[1] * g3[1]), "f^2 != -g^2");
  r.expect(projective_gaf(g3_group), "psi(G_3) is not GAF");
  r.expect(!projective_gag(g3), "psi(G_3) has a common fixed point");
  return r;
}

}  // namespace gaf::geo
