#pragma once

#include <cstdint>
#include <vector>

#include "gaf/perm.hpp"

namespace gaf::perm {

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace gaf::perm
