#ifndef COQE_REPORT_HPP
#define COQE_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include "coqe/manifest.hpp"
#include "coqe/version.hpp"

namespace coqe {

struct ResidualEntry {
  std::string indices;
  std::string expr;
};

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::vector<ResidualEntry> residuals;
  std::vector<std::string> notes;
};

struct Report {
  std::string version = kVersion;
  std::vector<CheckResult> checks;

  bool any_fail() const {
    for (const auto& c : checks)
      if (c.verdict == Verdict::Fail) return true;
    return false;
  }
  int flag_count() const {
    int k = 0;
    for (const auto& c : checks)
      if (c.verdict == Verdict::Flagged) ++k;
    return k;
  }
  /// 0 = all pass (flags allowed), 1 = any check failed.
  int exit_code() const { return any_fail() ? 1 : 0; }

  Json to_json() const {
    Json j;
    j["version"] = version;
    j["conventions"]["riemann_sign"] = kRiemannConvention;
    j["conventions"]["trace"] = Json::array({"plain", "metric"});
    Json arr = Json::array();
    for (const auto& c : checks) {
      Json cj;
      cj["name"] = c.name;
      cj["verdict"] = verdict_name(c.verdict);
      Json res = Json::array();
      for (const auto& r : c.residuals) {
        Json rj;
        rj["indices"] = r.indices;
        rj["expr"] = r.expr;
        res.push_back(rj);
      }
      cj["residuals"] = res;
      cj["notes"] = c.notes;
      arr.push_back(cj);
    }
    j["checks"] = arr;
    return j;
  }

  std::string render_machine() const { return to_json().dump(2) + "\n"; }

  std::string render_text() const {
    std::ostringstream out;
    out << "coqe " << version << "\n";
    out << "conventions: " << kRiemannConvention << "\n";
    out << "trace conventions reported: plain and metric\n\n";
    for (const auto& c : checks) {
      out << "[" << verdict_name(c.verdict) << "] " << c.name << "\n";
      for (const auto& n : c.notes) out << "    " << n << "\n";
      for (const auto& r : c.residuals)
        out << "    residual[" << r.indices << "] = " << r.expr << "\n";
    }
    out << "\n";
    int fails = 0;
    for (const auto& c : checks)
      if (c.verdict == Verdict::Fail) ++fails;
    out << checks.size() << " checks, " << fails << " failed, " << flag_count()
        << " flagged; exit code " << exit_code() << "\n";
    return out.str();
  }
};

inline std::string emit_report(const Report& r, const std::string& format) {
  if (format == "json" || format == "machine") return r.render_machine();
  if (format == "text" || format == "human") return r.render_text();
  throw Error("unknown report format '" + format + "'");
}

}  // namespace coqe

#endif  // COQE_REPORT_HPP
