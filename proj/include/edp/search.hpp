#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edp/signs.hpp"

namespace edp {

/// Partial sums L(n) = c(1) + ... + c(n) over 1..limit. Extrema are taken over n >= 2.
struct ScanResult {
    std::uint64_t limit = 0;
    std::optional<std::uint64_t> first_violation;  // least n >= 2 with L(n) > 0
    std::int64_t max_sum = 0;
    std::uint64_t argmax = 0;
    std::int64_t min_sum = 0;
    std::uint64_t argmin = 0;
    std::int64_t final_sum = 0;

    bool operator==(const ScanResult&) const = default;
};

struct ScanOptions {
    std::uint64_t segment_size = std::uint64_t{1} << 20;
    unsigned threads = 1;  // segments sieved concurrently, summed in order
};

/// Streams c(1..limit) through the segmented sieve.
ScanResult partial_sum_scan(const PrimeAssignment& assignment, std::uint64_t limit, const ScanOptions& options = {});

/// Liouville partial sums; the first positive L(n), n >= 2, is the first Polya violation.
ScanResult polya_scan(std::uint64_t limit, const ScanOptions& options = {});

/// Liouville with the sign of each listed prime switched to +1.
ScanResult flip_experiment(const std::vector<std::uint64_t>& flips, std::uint64_t limit,
                           const ScanOptions& options = {});

enum class BoundMode {
    upper_only,  // L(k) <= h
    two_sided,   // |L(k)| <= h
};

std::string to_string(BoundMode mode);

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct BoundedSumQuery {
    std::uint64_t horizon = 1;
    std::int64_t h = 1;
    BoundMode mode = BoundMode::upper_only;
    std::uint64_t node_budget = kDefaultNodeBudget;
};

enum class SearchStatus { satisfiable, unsatisfiable, budget_exceeded };

std::string to_string(SearchStatus status);

struct SearchOutcome {
    SearchStatus status = SearchStatus::unsatisfiable;
    std::optional<PrimeAssignment> witness;  // default -1, overrides for the +1 primes <= horizon
    std::uint64_t nodes = 0;
};

/// Depth-first search over prime signs in increasing order (-1 tried first);
/// composite signs are forced and every prefix sum up to the horizon is checked.
SearchOutcome bounded_sum_search(const BoundedSumQuery& query);

struct MinHResult {
    std::uint64_t horizon = 1;
    BoundMode mode = BoundMode::upper_only;
    std::optional<std::int64_t> h;  // empty when the budget ran out first
    std::optional<PrimeAssignment> witness;
    std::int64_t unknown_at = 0;     // the h whose search exhausted the budget
    std::uint64_t nodes = 0;
};

/// Least h >= 1 for which bounded_sum_search finds an assignment.
MinHResult min_h(std::uint64_t horizon, BoundMode mode, std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace edp
