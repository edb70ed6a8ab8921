#pragma once

#include <string>
#include <vector>

#include "gaf/io/checks.hpp"

namespace gaf::io {

Json record(const CheckResult& r, bool timings);
/// Summary object: counts, run manifest and the anchor of every check id.
Json summary(const std::vector<CheckResult>& results, const RunOptions& opt);

/// One JSON record per line, then the summary line.
std::string render_jsonl(const std::vector<CheckResult>& results, const RunOptions& opt);
/// "PASS  id  [anchor]" lines, counterexamples for failures, then totals.
std::string render_text(const std::vector<CheckResult>& results, const RunOptions& opt);

bool any_failure(const std::vector<CheckResult>& results);

}  // namespace gaf::io
