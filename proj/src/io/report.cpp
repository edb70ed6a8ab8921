#include "gaf/io/report.hpp"

#include <sstream>

namespace gaf::io {

Json record(const CheckResult& r, bool timings) {
  Json j;
  j["check_id"] = r.check_id;
  j["anchor"] = r.anchor;
  j["status"] = to_string(r.status);
  j["details"] = r.details;
  if (timings) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json summary(const std::vector<CheckResult>& results, const RunOptions& opt) {
  std::size_t pass = 0, fail = 0, skipped = 0;
  Json anchors = Json::object();
  for (const auto& r : results) {
    pass += r.status == Status::PASS;
    fail += r.status == Status::FAIL;
    skipped += r.status == Status::SKIPPED;
    anchors[r.check_id] = r.anchor;
  }
  Json manifest;
  manifest["command"] = "verify-paper";
  manifest["seed"] = opt.seed;
  manifest["tolerance"] = opt.tolerance;
  manifest["cap"] = opt.cap;
  manifest["word_len"] = opt.word_len;
  manifest["fault"] = opt.fault.empty() ? Json(nullptr) : Json(opt.fault);
  manifest["only"] = opt.only;
  Json s;
  s["total"] = results.size();
  s["pass"] = pass;
  s["fail"] = fail;
  s["skipped"] = skipped;
  s["manifest"] = manifest;
  s["anchors"] = anchors;
  return Json{{"summary", s}};
}

std::string render_jsonl(const std::vector<CheckResult>& results, const RunOptions& opt) {
  std::ostringstream out;
  for (const auto& r : results) out << record(r, opt.timings).dump() << '\n';
  out << summary(results, opt).dump() << '\n';
  return out.str();
}

std::string render_text(const std::vector<CheckResult>& results, const RunOptions& opt) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << to_string(r.status) << "  " << r.check_id << "  [" << r.anchor << "]";
    if (opt.timings) out << "  " << r.elapsed_ms << " ms";
    out << '\n';
    if (r.status == Status::FAIL && r.details.contains("counterexample"))
      out << "    counterexample: " << r.details["counterexample"].dump() << '\n';
    if (r.status == Status::SKIPPED && r.details.contains("reason"))
      out << "    reason: " << r.details["reason"].get<std::string>() << '\n';
  }
  const Json s = summary(results, opt)["summary"];
  out << "total " << s["total"] << ", pass " << s["pass"] << ", fail " << s["fail"] << ", skipped " << s["skipped"]
      << '\n';
  return out.str();
}

bool any_failure(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status == Status::FAIL) return true;
  return false;
}

}  // namespace gaf::io
