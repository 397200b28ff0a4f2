#pragma once

#include <cstdint>

#include "nchopf/report.hpp"

namespace nchopf {

struct SuiteOptions {
  int degree = 6;           // completion and isomorphism degree
  std::uint64_t seed = 1;   // parameter samples
  int growth_length = 40;   // longest length in the growth fits
  int property_instances = 100;
};

/// Runs every verification check, ordered by criterion then id. Each check
/// catches its own exceptions and reports them with status Error.
Report run_suite(const SuiteOptions& options);

/// Highest criterion number used by run_suite.
constexpr int kCriteria = 11;

}  // namespace nchopf
