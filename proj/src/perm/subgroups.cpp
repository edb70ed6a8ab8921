#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "gaf/perm.hpp"
#include "perm_internal.hpp"

namespace gaf::perm {
namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : b) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

inline bool test(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1u; }
inline void set(Bits& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

struct Sub {
  Bits bits;
  std::vector<int> elems;  // sorted element indices
  std::vector<int> gens;
};

struct SubOrder {
  bool operator()(const Sub* a, const Sub* b) const {
    if (a->elems.size() != b->elems.size()) return a->elems.size() < b->elems.size();
    return a->elems < b->elems;
  }
};

class IndexedGroup {
 public:
  explicit IndexedGroup(const FiniteGroup& g) : g_(g), n_(static_cast<int>(g.order())), deg_(g.degree()) {
    words_ = (n_ + 63) / 64;
    const int fw = (deg_ + 64) / 64;
    flat_.resize(static_cast<std::size_t>(n_) * deg_);
    fix_.assign(n_, Bits(fw, 0));
    has_fix_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) {
      const auto& e = g.elements()[i];
      std::copy(e.images().begin(), e.images().end(), flat_.begin() + static_cast<std::size_t>(i) * deg_);
      for (int x = 1; x <= deg_; ++x)
        if (e(x) == x) {
          set(fix_[i], x);
          has_fix_[i] = 1;
        }
    }
    std::size_t cap = 1;
    while (cap < 2 * static_cast<std::size_t>(n_) + 2) cap <<= 1;
    slots_.assign(cap, -1);
    for (int i = 0; i < n_; ++i) {
      std::size_t h = hash(&flat_[static_cast<std::size_t>(i) * deg_]) & (cap - 1);
      while (slots_[h] >= 0) h = (h + 1) & (cap - 1);
      slots_[h] = i;
    }
    buf_.resize(deg_);
    if (n_ <= 4096) {
      table_.resize(static_cast<std::size_t>(n_) * n_);
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) table_[static_cast<std::size_t>(i) * n_ + j] = compute(i, j);
    }
    identity_ = static_cast<int>(g.index_of(Permutation::identity(deg_)));
  }

  int size() const { return n_; }
  int identity() const { return identity_; }
  bool has_fix(int i) const { return has_fix_[i]; }
  const Bits& fix(int i) const { return fix_[i]; }

  int mul(int i, int j) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(i) * n_ + j];
    return compute(i, j);
  }

  Sub trivial() const {
    Sub s;
    s.bits.assign(words_, 0);
    set(s.bits, identity_);
    s.elems = {identity_};
    return s;
  }

  enum class Ext { OK, REJECTED, TOO_LARGE };

  // Closure of <H, g>; stops when a rejected element appears or the order passes max_order.
  Ext extend(const Sub& h, int g, const std::function<bool(int)>& allowed, std::size_t max_order,
             Sub& out) const {
    out.bits = h.bits;
    out.elems = h.elems;
    out.gens = h.gens;
    out.gens.push_back(g);
    for (std::size_t head = 0; head < out.elems.size(); ++head) {
      for (int s : out.gens) {
        int y = mul(out.elems[head], s);
        if (test(out.bits, y)) continue;
        if (allowed && !allowed(y)) return Ext::REJECTED;
        set(out.bits, y);
        out.elems.push_back(y);
        if (out.elems.size() > max_order) return Ext::TOO_LARGE;
      }
    }
    std::sort(out.elems.begin(), out.elems.end());
    return Ext::OK;
  }

  // One generator per distinct cyclic subgroup, the smallest index generating it.
  std::vector<int> cyclic_reps(const std::function<bool(int)>& allowed) const {
    std::unordered_set<Bits, BitsHash> seen;
    std::vector<int> reps;
    for (int i = 0; i < n_; ++i) {
      if (i == identity_ || (allowed && !allowed(i))) continue;
      Bits b(words_, 0);
      for (int x = i; !test(b, x); x = mul(x, i)) set(b, x);
      if (seen.insert(b).second) reps.push_back(i);
    }
    return reps;
  }

  bool is_gag(const Sub& s) const {
    if (s.gens.empty()) return true;
    Bits common = fix_[s.gens[0]];
    for (std::size_t k = 1; k < s.gens.size(); ++k)
      for (std::size_t w = 0; w < common.size(); ++w) common[w] &= fix_[s.gens[k]][w];
    for (auto w : common)
      if (w) return true;
    return false;
  }

  FiniteGroup materialize(const Sub& s) const {
    std::vector<Permutation> els, gens;
    els.reserve(s.elems.size());
    for (int i : s.elems) els.push_back(g_.elements()[i]);
    for (int i : s.gens) gens.push_back(g_.elements()[i]);
    return FiniteGroup(g_.degree(), std::move(els), std::move(gens));
  }

 private:
  std::size_t hash(const int* a) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int k = 0; k < deg_; ++k) h = (h ^ static_cast<std::uint64_t>(a[k])) * 1099511628211ull;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }

  // Index of element_i * element_j, i.e. x -> e_i(e_j(x)).
  int compute(int i, int j) const {
    const int* a = &flat_[static_cast<std::size_t>(i) * deg_];
    const int* b = &flat_[static_cast<std::size_t>(j) * deg_];
    for (int k = 0; k < deg_; ++k) buf_[k] = a[b[k] - 1];
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t h = hash(buf_.data()) & mask;; h = (h + 1) & mask) {
      int c = slots_[h];
      if (c < 0) return -1;
      if (std::equal(buf_.begin(), buf_.end(), flat_.begin() + static_cast<std::size_t>(c) * deg_)) return c;
    }
  }

  const FiniteGroup& g_;
  int n_;
  int deg_;
  std::vector<int> flat_;
  std::vector<int> slots_;
  mutable std::vector<int> buf_;
  int words_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<Bits> fix_;
  std::vector<char> has_fix_;
};

void check_cap(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap)
    throw Error("CAP_EXCEEDED", "group order " + std::to_string(g.order()) + " exceeds cap " +
                                    std::to_string(cap));
}

// Visits subgroups made only of `allowed` elements with order <= max_order, in
// (order, canonical list) order. Returns true if some subgroup was cut off by max_order.
bool walk_subgroups(const IndexedGroup& ig, const std::function<bool(int)>& allowed,
                    const std::function<bool(const Sub&)>& visit,
                    std::size_t max_order = static_cast<std::size_t>(-1)) {
  bool truncated = false;
  auto reps = ig.cyclic_reps(allowed);
  std::unordered_set<Bits, BitsHash> seen;
  std::vector<std::unique_ptr<Sub>> store;
  std::set<const Sub*, SubOrder> queue;
  store.push_back(std::make_unique<Sub>(ig.trivial()));
  seen.insert(store.back()->bits);
  queue.insert(store.back().get());
  while (!queue.empty()) {
    const Sub* h = *queue.begin();
    queue.erase(queue.begin());
    if (!visit(*h)) return truncated;
    for (int r : reps) {
      if (test(h->bits, r)) continue;
      Sub k;
      auto e = ig.extend(*h, r, allowed, max_order, k);
      if (e == IndexedGroup::Ext::TOO_LARGE) truncated = true;
      if (e != IndexedGroup::Ext::OK) continue;
      if (!seen.insert(k.bits).second) continue;
      store.push_back(std::make_unique<Sub>(std::move(k)));
      queue.insert(store.back().get());
    }
  }
  return truncated;
}

}  // namespace

std::vector<FiniteGroup> enumerate_subgroups(const FiniteGroup& g, std::size_t cap) {
  check_cap(g, cap);
  IndexedGroup ig(g);
  std::vector<FiniteGroup> out;
  walk_subgroups(ig, nullptr, [&](const Sub& s) {
    out.push_back(ig.materialize(s));
    return true;
  });
  return out;
}

FixatingResult is_fixating(const FiniteGroup& g, std::size_t cap) {
  check_cap(g, cap);
  IndexedGroup ig(g);
  FixatingResult res;
  // Subgroups of a GAF group are GAF, so the search never leaves GAF subgroups.
  // Orders are explored with a doubling bound so that large closures are only
  // built once no smaller eccentric subgroup exists.
  for (std::size_t bound = 8;; bound *= 2) {
    res.gaf_subgroups_examined = 0;
    bool truncated = walk_subgroups(
        ig, [&](int i) { return ig.has_fix(i); },
        [&](const Sub& s) {
          ++res.gaf_subgroups_examined;
          if (ig.is_gag(s)) return true;
          res.fixating = false;
          res.witness = ig.materialize(s);
          return false;
        },
        bound);
    if (!res.fixating || !truncated) return res;
  }
}

std::vector<FiniteGroup> eccentric_subgroups(const FiniteGroup& g, std::size_t cap, std::size_t max_order) {
  check_cap(g, cap);
  IndexedGroup ig(g);
  std::vector<FiniteGroup> out;
  walk_subgroups(
      ig, [&](int i) { return ig.has_fix(i); },
      [&](const Sub& s) {
        if (!ig.is_gag(s)) out.push_back(ig.materialize(s));
        return true;
      },
      max_order);
  return out;
}

}  // namespace gaf::perm
