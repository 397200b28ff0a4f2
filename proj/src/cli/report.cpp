#include "nchopf/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

namespace nchopf {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Error:
      return "error";
  }
  return "?";
}

std::size_t Report::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
}

std::string to_json(const Report& report, bool timing) {
  using json = nlohmann::ordered_json;
  json checks = json::array();
  for (const auto& c : report.checks) {
    json rec;
    rec["id"] = c.id;
    rec["anchor"] = c.anchor;
    json params = json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    rec["params"] = params;
    rec["status"] = to_string(c.status);
    if (c.status != CheckStatus::Pass) rec["witness"] = c.witness;
    rec["ms"] = timing ? std::round(c.ms * 1000.0) / 1000.0 : 0.0;
    checks.push_back(std::move(rec));
  }
  json out;
  out["checks"] = std::move(checks);
  out["summary"] = {{"total", report.checks.size()},
                    {"passed", report.count(CheckStatus::Pass)},
                    {"failed", report.count(CheckStatus::Fail)},
                    {"errors", report.count(CheckStatus::Error)}};
  return out.dump(2) + "\n";
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", c.ms);
    out << (c.status == CheckStatus::Pass ? "PASS " : c.status == CheckStatus::Fail ? "FAIL " : "ERROR") << " "
        << c.id << "  (" << ms << " ms)";
    if (!c.params.empty()) {
      out << "  [";
      for (std::size_t i = 0; i < c.params.size(); ++i)
        out << (i ? ", " : "") << c.params[i].first << "=" << c.params[i].second;
      out << "]";
    }
    out << "\n";
    if (c.status != CheckStatus::Pass) out << "      " << c.witness << "\n";
  }
  out << report.count(CheckStatus::Pass) << "/" << report.checks.size() << " checks passed";
  if (auto f = report.count(CheckStatus::Fail)) out << ", " << f << " failed";
  if (auto e = report.count(CheckStatus::Error)) out << ", " << e << " errors";
  out << "\n";
  return out.str();
}

}  // namespace nchopf
