#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "gaf/error.hpp"
#include "gaf/exact/lattice.hpp"

namespace gaf::exact {

SignedPerm SignedPerm::identity(std::size_t n) {
  SignedPerm s;
  s.perm.resize(n);
  std::iota(s.perm.begin(), s.perm.end(), 0);
  s.sign.assign(n, 1);
  return s;
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  SignedPerm r;
  r.perm.resize(o.dim());
  r.sign.resize(o.dim());
  for (std::size_t j = 0; j < o.dim(); ++j) {
    r.perm[j] = perm[o.perm[j]];
    r.sign[j] = o.sign[j] * sign[o.perm[j]];
  }
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r;
  r.perm.resize(dim());
  r.sign.resize(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    r.perm[perm[j]] = static_cast<int>(j);
    r.sign[perm[j]] = sign[j];
  }
  return r;
}

bool SignedPerm::has_negative_diagonal() const {
  for (std::size_t j = 0; j < dim(); ++j)
    if (perm[j] == static_cast<int>(j) && sign[j] < 0) return true;
  return false;
}

Matrix<Integer> SignedPerm::matrix() const {
  Matrix<Integer> m(dim(), dim(), Integer(0));
  for (std::size_t j = 0; j < dim(); ++j) m(perm[j], j) = sign[j];
  return m;
}

std::optional<SignedPerm> as_signed_perm(const Matrix<Integer>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  SignedPerm s;
  s.perm.assign(n, -1);
  s.sign.assign(n, 0);
  std::vector<bool> row_used(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m(i, j) == 0) continue;
      if (s.perm[j] != -1 || row_used[i] || (m(i, j) != 1 && m(i, j) != -1)) return std::nullopt;
      s.perm[j] = static_cast<int>(i);
      s.sign[j] = m(i, j) > 0 ? 1 : -1;
      row_used[i] = true;
    }
    if (s.perm[j] == -1) return std::nullopt;
  }
  return s;
}

std::vector<Integer> LatticeIsometry::operator()(const std::vector<Integer>& x) const {
  auto y = linear.apply(x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += translation[i];
  return y;
}

LatticeIsometry LatticeIsometry::operator*(const LatticeIsometry& o) const {
  return {linear * o.linear, (*this)(o.translation)};
}

bool LatticeIsometry::operator<(const LatticeIsometry& o) const {
  if (linear != o.linear) return linear < o.linear;
  return translation < o.translation;
}

AffineMap<Integer> LatticeIsometry::affine() const { return {linear.matrix(), translation}; }

LatticeIsometry to_lattice_isometry(const AffineMap<Integer>& f) {
  auto s = as_signed_perm(f.linear);
  if (!s || f.translation.size() != f.dim())
    throw Error("NOT_SIGNED_PERM", "linear part is not a signed permutation: " + f.linear.str());
  return {*s, f.translation};
}

std::optional<std::vector<Integer>> integer_fixed_point(const LatticeIsometry& f) {
  const std::size_t n = f.dim();
  const auto& p = f.linear.perm;
  const auto& sg = f.linear.sign;
  std::vector<Integer> x(n);
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    // x_{j_k} = a_k x_{j_0} + b_k along the cycle of start.
    std::vector<std::size_t> cyc;
    std::vector<int> a;
    std::vector<Integer> b;
    std::size_t j = start;
    int ak = 1;
    Integer bk = 0;
    do {
      cyc.push_back(j);
      a.push_back(ak);
      b.push_back(bk);
      seen[j] = true;
      const std::size_t next = p[j];
      ak *= sg[j];
      bk = sg[j] * bk + f.translation[next];
      j = next;
    } while (j != start);
    Integer x0 = 0;
    if (ak == 1) {
      if (bk != 0) return std::nullopt;
    } else {
      if (bk % 2 != 0) return std::nullopt;
      x0 = bk / 2;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) x[cyc[k]] = a[k] * x0 + b[k];
  }
  return x;
}

std::vector<LatticeIsometry> lattice_group(const std::vector<LatticeIsometry>& gens, std::size_t cap) {
  if (gens.empty()) throw Error("DIMENSION_MISMATCH", "no generators");
  const std::size_t n = gens.front().dim();
  for (const auto& g : gens)
    if (g.dim() != n || g.translation.size() != n) throw Error("DIMENSION_MISMATCH", "generators differ in dimension");
  LatticeIsometry id{SignedPerm::identity(n), std::vector<Integer>(n, Integer(0))};
  std::set<LatticeIsometry> seen{id};
  std::deque<LatticeIsometry> work{id};
  while (!work.empty()) {
    LatticeIsometry cur = work.front();
    work.pop_front();
    for (const auto& g : gens) {
      LatticeIsometry nx = cur * g;
      if (seen.insert(nx).second) {
        if (seen.size() > cap) throw Error("CAP_EXCEEDED", "group exceeds cap " + std::to_string(cap));
        work.push_back(std::move(nx));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

/// Sign per coordinate: the smallest index of each class gets +1, sign(j) = s where f(e_root) = s e_j.
/// Returns nullopt on inconsistent signs.
std::optional<std::vector<int>> sign_classes(const std::vector<SignedPerm>& group, std::size_t n) {
  std::vector<int> sign(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    for (const auto& f : group) {
      const int j = f.perm[root];
      if (sign[j] == 0) sign[j] = f.sign[root];
      else if (sign[j] != f.sign[root]) return std::nullopt;
    }
  }
  return sign;
}

std::string vec_str(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string describe(const LatticeIsometry& f) {
  return "x -> " + f.linear.matrix().str() + " x + " + vec_str(f.translation);
}

}  // namespace

ZnFixedPoint zn_global_fixed_point(const std::vector<AffineMap<Integer>>& gens, std::size_t cap) {
  std::vector<LatticeIsometry> g;
  for (const auto& f : gens) g.push_back(to_lattice_isometry(f));
  return zn_global_fixed_point(g, cap);
}

ZnFixedPoint zn_global_fixed_point(const std::vector<LatticeIsometry>& gens, std::size_t cap) {
  auto group = lattice_group(gens, cap);
  for (const auto& f : group)
    if (!integer_fixed_point(f)) throw Error("NOT_GAF", "element without fixed point: " + describe(f));

  const std::size_t n = gens.front().dim();
  ZnFixedPoint r;
  r.group_order = group.size();
  r.centroid.assign(n, Rational(0));
  for (const auto& f : group)
    for (std::size_t i = 0; i < n; ++i) r.centroid[i] += f.translation[i];
  for (auto& c : r.centroid) {
    c /= static_cast<long>(group.size());
    c.canonicalize();
  }
  r.centroid_integral = std::all_of(r.centroid.begin(), r.centroid.end(),
                                    [](const Rational& c) { return c.get_den() == 1; });

  r.point.resize(n);
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& c = r.centroid[i];
    if (c.get_den() == 2) {
      pos[i] = static_cast<int>(r.half_coordinates.size());
      r.half_coordinates.push_back(i);
    } else {
      // nearest integer
      Rational shifted = c + Rational(1, 2);
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
      r.point[i] = fl;
    }
  }

  // Linear parts restricted to the half coordinates.
  const std::size_t k = r.half_coordinates.size();
  std::vector<SignedPerm> restricted;
  r.diagonal_check = true;
  for (const auto& f : group) {
    SignedPerm s;
    s.perm.resize(k);
    s.sign.resize(k);
    for (std::size_t a = 0; a < k; ++a) {
      const int img = f.linear.perm[r.half_coordinates[a]];
      if (pos[img] < 0) throw Error("INTERNAL", "linear part does not preserve the half coordinates");
      s.perm[a] = pos[img];
      s.sign[a] = f.linear.sign[r.half_coordinates[a]];
    }
    if (s.has_negative_diagonal()) r.diagonal_check = false;
    restricted.push_back(std::move(s));
  }
  if (!r.diagonal_check) throw Error("NOT_GAF", "restricted linear part has -1 on the diagonal");
  auto signs = sign_classes(restricted, k);
  if (!signs) throw Error("NOT_GAF", "inconsistent sign classes");
  r.signs = *signs;
  for (std::size_t a = 0; a < k; ++a) {
    Rational v = r.centroid[r.half_coordinates[a]] + Rational(r.signs[a], 2);
    r.point[r.half_coordinates[a]] = v.get_num();
  }
  for (const auto& f : group)
    if (f(r.point) != r.point) throw Error("INTERNAL", "constructed point is not fixed by " + describe(f));
  return r;
}

perm::Permutation hypercube_vertex_permutation(const SignedPerm& s) {
  const std::size_t n = s.dim();
  const std::size_t count = std::size_t{1} << n;
  std::vector<int> images(count);
  for (std::size_t v = 0; v < count; ++v) {
    std::vector<int> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (v >> i & 1) ? 1 : -1;
    auto y = s.apply(x);
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (y[i] > 0) w |= std::size_t{1} << i;
    images[v] = static_cast<int>(w + 1);
  }
  return perm::Permutation(std::move(images));
}

SignedPerm hypercube_signed_perm(const perm::Permutation& p, std::size_t n) {
  const auto& img = p.images();
  const std::size_t y0 = static_cast<std::size_t>(img[0] - 1);
  SignedPerm s;
  s.perm.resize(n);
  s.sign.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t yj = static_cast<std::size_t>(img[std::size_t{1} << j] - 1);
    const std::size_t diff = y0 ^ yj;
    if (diff == 0 || (diff & (diff - 1)) != 0) throw Error("NOT_SIGNED_PERM", "not a cube isometry");
    const int i = __builtin_ctzll(diff);
    s.perm[j] = i;
    s.sign[j] = (yj >> i & 1) ? 1 : -1;
  }
  if (hypercube_vertex_permutation(s) != p) throw Error("NOT_SIGNED_PERM", "not a cube isometry");
  return s;
}

HypercubeAnalysis hypercube_isometry_analysis(int n, std::size_t cap) {
  if (n < 1 || n > 6) throw Error("BAD_DIMENSION", "cube dimension must be in 1..6");
  std::size_t order = std::size_t{1} << n;
  for (int i = 2; i <= n; ++i) order *= static_cast<std::size_t>(i);
  if (order > cap)
    throw Error("CAP_EXCEEDED", "Isom of the " + std::to_string(n) + "-cube has order " + std::to_string(order) +
                                    " > cap " + std::to_string(cap));
  std::vector<perm::Permutation> gens;
  SignedPerm flip = SignedPerm::identity(n);
  flip.sign[0] = -1;
  gens.push_back(hypercube_vertex_permutation(flip));
  for (int i = 0; i + 1 < n; ++i) {
    SignedPerm sw = SignedPerm::identity(n);
    std::swap(sw.perm[i], sw.perm[i + 1]);
    gens.push_back(hypercube_vertex_permutation(sw));
  }
  HypercubeAnalysis a;
  a.n = n;
  a.group = perm::generate_group(gens, cap, 1 << n);
  a.order = a.group.order();
  if (n <= 3) {
    auto f = perm::is_fixating(a.group, cap);
    a.fixating = f.fixating;
    a.witness = f.witness;
  }
  return a;
}

std::vector<int> hypercube_fixed_vertex(const std::vector<SignedPerm>& gens, std::size_t cap) {
  if (gens.empty()) throw Error("DIMENSION_MISMATCH", "no generators");
  const std::size_t n = gens.front().dim();
  std::set<SignedPerm> seen{SignedPerm::identity(n)};
  std::deque<SignedPerm> work{SignedPerm::identity(n)};
  while (!work.empty()) {
    SignedPerm cur = work.front();
    work.pop_front();
    for (const auto& g : gens) {
      if (g.dim() != n) throw Error("DIMENSION_MISMATCH", "generators differ in dimension");
      SignedPerm nx = cur * g;
      if (seen.insert(nx).second) {
        if (seen.size() > cap) throw Error("CAP_EXCEEDED", "group exceeds cap " + std::to_string(cap));
        work.push_back(std::move(nx));
      }
    }
  }
  std::vector<SignedPerm> group(seen.begin(), seen.end());
  for (const auto& f : group)
    if (f.has_negative_diagonal()) throw Error("NOT_GAF", "element with -1 on the diagonal fixes no vertex");
  auto signs = sign_classes(group, n);
  if (!signs) throw Error("NOT_GAF", "inconsistent sign classes");
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = (*signs)[i] > 0 ? 1 : 0;
  return v;
}

}  // namespace gaf::exact
