#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace gaf {

/// Outcome of an exhaustive audit: how many cases were examined and every violation found.
struct AuditReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> violations;
  std::map<std::string, std::string> facts;

  bool pass() const { return violations.empty(); }
  void fail(std::string why) { violations.push_back(std::move(why)); }
  void expect(bool ok, const std::string& why) {
    ++checked;
    if (!ok) fail(why);
  }
};

}  // namespace gaf
