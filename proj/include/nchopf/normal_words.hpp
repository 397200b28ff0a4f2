#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nchopf/completion.hpp"
#include "nchopf/rewrite.hpp"

namespace nchopf {

/// Words of length <= maxlen avoiding every leading word, grouped by length
/// and sorted ascending under the system's order. Requires a certificate
/// covering maxlen (NoCertificate otherwise).
std::vector<std::vector<Word>> enumerate_normal_words(const RewriteSystem& system,
                                                      const ConfluenceCertificate& certificate, int maxlen);

/// Number of normal words of each exact length 0..maxlen, computed by
/// dynamic programming over the Aho-Corasick automaton of the leading words.
std::vector<std::uint64_t> count_normal_words(const RewriteSystem& system, int maxlen);

/// Running sums of per-length counts.
std::vector<std::uint64_t> cumulative(std::span<const std::uint64_t> per_length);

/// Growth exponent from cumulative counts C(0..N): least-squares slope of
/// log C(n) against log(n + 1) over n in [N/2, N]. Needs at least 8 values.
double gk_estimate(std::span<const std::uint64_t> cumulative_counts);

}  // namespace nchopf
