#pragma once

#include <string>
#include <utility>
#include <vector>

namespace nchopf {

enum class CheckStatus { Pass, Fail, Error };

const char* to_string(CheckStatus s);

struct CheckRecord {
  std::string id;
  int criterion = 0;
  std::string anchor;
  std::vector<std::pair<std::string, std::string>> params;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;
  double ms = 0;
};

struct Report {
  std::vector<CheckRecord> checks;

  std::size_t count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::Pass) == checks.size(); }
};

/// {"checks": [{id, anchor, params, status, witness?, ms}], "summary": {...}}
/// with fixed field order. `timing = false` writes every ms as 0 so that
/// reports are byte-identical across runs.
std::string to_json(const Report& report, bool timing = true);

/// One line per check plus a summary line.
std::string to_text(const Report& report);

}  // namespace nchopf
