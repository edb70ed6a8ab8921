#include "gaf/perm.hpp"

namespace gaf::perm {

Permutation InducedAction::induce(const Permutation& g) const {
  const int n = base_group.degree();
  const int m = static_cast<int>(representatives.size());
  // Representative r is determined by r(p); g r lies in the coset of r' with r'(p) = g(r(p)).
  std::vector<int> rep_by_image(n + 1, 0);
  for (int j = 0; j < m; ++j) rep_by_image[representatives[j](stabilized_point)] = j + 1;
  std::vector<int> images(static_cast<std::size_t>(m) * y_size);
  for (int j = 1; j <= m; ++j) {
    const Permutation& r = representatives[j - 1];
    Permutation gr = g * r;
    int jp = rep_by_image[gr(stabilized_point)];
    Permutation h = representatives[jp - 1].inverse() * gr;
    for (int y = 1; y <= y_size; ++y) images[encode(j, y) - 1] = encode(jp, h(y));
  }
  return Permutation(std::move(images));
}

InducedAction induce_action(const FiniteGroup& g, int stabilized_point,
                            const std::vector<Permutation>& reps, std::size_t cap) {
  const int n = g.degree();
  if (stabilized_point < 1 || stabilized_point > n)
    throw Error("NOT_A_TRANSVERSAL", "stabilized point out of range");
  std::vector<char> orbit(n + 1, 0);
  for (const auto& e : g.elements()) orbit[e(stabilized_point)] = 1;
  std::vector<char> hit(n + 1, 0);
  for (const auto& r : reps) {
    if (r.degree() != n || !g.contains(r))
      throw Error("NOT_A_TRANSVERSAL", "representative " + r.to_cycles() + " is not in the group");
    int img = r(stabilized_point);
    if (hit[img]) throw Error("NOT_A_TRANSVERSAL", "two representatives share a coset");
    hit[img] = 1;
  }
  for (int x = 1; x <= n; ++x)
    if (orbit[x] && !hit[x]) throw Error("NOT_A_TRANSVERSAL", "coset of point " + std::to_string(x) + " missing");

  InducedAction ia;
  ia.base_group = g;
  ia.stabilized_point = stabilized_point;
  ia.representatives = reps;
  ia.y_size = n;
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(ia.induce(s));
  ia.group = generate_group(gens, cap, static_cast<int>(reps.size()) * n);
  return ia;
}

}  // namespace gaf::perm
