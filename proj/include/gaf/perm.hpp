#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaf/error.hpp"

namespace gaf::perm {

inline constexpr std::size_t kDefaultCap = 10000;

/// Bijection of {1..n}; images()[i-1] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point - 1]; }
  const std::vector<int>& images() const { return images_; }

  /// (f * g)(x) = f(g(x)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long e) const;
  bool is_identity() const;
  std::size_t order() const;
  std::string to_cycles() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

Permutation parse_permutation(std::string_view text, int degree);
std::vector<int> fixed_points(const Permutation& p);

class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(int degree, std::vector<Permutation> sorted_elements,
              std::vector<Permutation> generators);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool contains(const Permutation& p) const;
  /// Position of p in the canonical element order, or -1.
  long index_of(const Permutation& p) const;

 private:
  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

/// Throws DEGREE_MISMATCH, CAP_EXCEEDED. With no generators, degree must be given.
FiniteGroup generate_group(const std::vector<Permutation>& gens, std::size_t cap = kDefaultCap,
                           int degree = -1);

FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group(int n);

enum class ActionKind { GAG, ECCENTRIC, NOT_GAF };
std::string to_string(ActionKind k);

struct ActionVerdict {
  ActionKind kind = ActionKind::GAG;
  std::optional<int> gag_witness;
  std::optional<Permutation> gaf_violator;
  std::vector<std::pair<Permutation, std::vector<int>>> fix_table;
};

ActionVerdict classify_action(const FiniteGroup& g);
/// Same verdict for the group generated by arbitrary elements, without fix table.
ActionKind classify_elements(const std::vector<Permutation>& elements, int degree);

std::vector<FiniteGroup> enumerate_subgroups(const FiniteGroup& g, std::size_t cap = kDefaultCap);

struct FixatingResult {
  bool fixating = true;
  std::optional<FiniteGroup> witness;
  std::size_t gaf_subgroups_examined = 0;
};

/// Witness is the smallest-order eccentric subgroup, ties broken by canonical element list.
FixatingResult is_fixating(const FiniteGroup& g, std::size_t cap = kDefaultCap);

/// Every eccentric subgroup of order at most max_order, in canonical order.
std::vector<FiniteGroup> eccentric_subgroups(const FiniteGroup& g, std::size_t cap = kDefaultCap,
                                             std::size_t max_order = static_cast<std::size_t>(-1));

struct InducedAction {
  FiniteGroup base_group;
  int stabilized_point = 0;
  std::vector<Permutation> representatives;
  int y_size = 0;
  FiniteGroup group;

  int encode(int rep_index, int y) const { return (rep_index - 1) * y_size + y; }
  std::pair<int, int> decode(int point) const {
    return {(point - 1) / y_size + 1, (point - 1) % y_size + 1};
  }
  Permutation induce(const Permutation& g) const;
};

/// H is the stabilizer of stabilized_point acting on all of {1..n}; the product
/// domain is R x {1..n}. Throws NOT_A_TRANSVERSAL.
InducedAction induce_action(const FiniteGroup& g, int stabilized_point,
                            const std::vector<Permutation>& reps, std::size_t cap = kDefaultCap);

}  // namespace gaf::perm
