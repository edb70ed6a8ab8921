#include <algorithm>
#include <unordered_set>

#include "gaf/perm.hpp"
#include "perm_internal.hpp"

namespace gaf::perm {

FiniteGroup::FiniteGroup(int degree, std::vector<Permutation> sorted_elements,
                         std::vector<Permutation> generators)
    : degree_(degree), elements_(std::move(sorted_elements)), generators_(std::move(generators)) {}

bool FiniteGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

long FiniteGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return it - elements_.begin();
}

FiniteGroup generate_group(const std::vector<Permutation>& gens, std::size_t cap, int degree) {
  if (degree < 0) {
    if (gens.empty()) throw Error("DEGREE_MISMATCH", "degree required for an empty generator set");
    degree = gens.front().degree();
  }
  for (const auto& g : gens)
    if (g.degree() != degree) throw Error("DEGREE_MISMATCH", "generators act on different domains");

  std::unordered_set<Permutation, PermHash> seen;
  std::vector<Permutation> order;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  order.push_back(id);
  // Right multiplication by generators from the identity reaches every element of a finite group.
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = order[head] * g;
      if (seen.insert(next).second) {
        order.push_back(std::move(next));
        if (order.size() > cap)
          throw Error("CAP_EXCEEDED", "closure exceeds cap " + std::to_string(cap));
      }
    }
  }
  std::sort(order.begin(), order.end());
  return FiniteGroup(degree, std::move(order), gens);
}

FiniteGroup symmetric_group(int n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<int> cyc(n), tr(n);
    for (int i = 0; i < n; ++i) {
      cyc[i] = (i + 1) % n + 1;
      tr[i] = i + 1;
    }
    std::swap(tr[0], tr[1]);
    gens.emplace_back(cyc);
    gens.emplace_back(tr);
  }
  return generate_group(gens, static_cast<std::size_t>(-1), n);
}

FiniteGroup alternating_group(int n) {
  // 3-cycles (1 2 k) generate A_n.
  std::vector<Permutation> gens;
  for (int k = 3; k <= n; ++k) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i + 1;
    im[0] = 2;
    im[1] = k;
    im[k - 1] = 1;
    gens.emplace_back(im);
  }
  return generate_group(gens, static_cast<std::size_t>(-1), n);
}

std::string to_string(ActionKind k) {
  switch (k) {
    case ActionKind::GAG: return "GAG";
    case ActionKind::ECCENTRIC: return "ECCENTRIC";
    case ActionKind::NOT_GAF: return "NOT_GAF";
  }
  return "?";
}

ActionVerdict classify_action(const FiniteGroup& g) {
  ActionVerdict v;
  std::vector<char> common(g.degree() + 1, 1);
  for (const auto& e : g.elements()) {
    auto fix = fixed_points(e);
    if (fix.empty() && !v.gaf_violator) v.gaf_violator = e;
    std::vector<char> mask(g.degree() + 1, 0);
    for (int x : fix) mask[x] = 1;
    for (int x = 1; x <= g.degree(); ++x) common[x] &= mask[x];
    v.fix_table.emplace_back(e, std::move(fix));
  }
  if (v.gaf_violator) {
    v.kind = ActionKind::NOT_GAF;
    return v;
  }
  for (int x = 1; x <= g.degree(); ++x) {
    if (common[x]) {
      v.kind = ActionKind::GAG;
      v.gag_witness = x;
      return v;
    }
  }
  v.kind = ActionKind::ECCENTRIC;
  return v;
}

ActionKind classify_elements(const std::vector<Permutation>& elements, int degree) {
  std::vector<char> common(degree + 1, 1);
  bool gaf = true;
  for (const auto& e : elements) {
    bool any = false;
    for (int x = 1; x <= degree; ++x) {
      bool f = e(x) == x;
      any |= f;
      if (!f) common[x] = 0;
    }
    gaf &= any;
  }
  if (!gaf) return ActionKind::NOT_GAF;
  for (int x = 1; x <= degree; ++x)
    if (common[x]) return ActionKind::GAG;
  return ActionKind::ECCENTRIC;
}

}  // namespace gaf::perm
