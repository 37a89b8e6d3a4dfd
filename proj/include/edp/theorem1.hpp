#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "edp/discrepancy.hpp"
#include "edp/primes.hpp"
#include "edp/signs.hpp"

namespace edp {

enum class ConstructionStatus {
    flipped,     // base coloring plus sign flips of primes in (k/2, k]
    exhaustive,  // flip supply too small; found by enumerating prime signs <= k
    infeasible,  // neither route produced a balanced prefix
};

std::string to_string(ConstructionStatus status);

/// A completely multiplicative coloring whose restriction to {1..k} is perfectly balanced.
///
/// Starts from the base-3 coloring (p = 3 and p = 1 mod 3 positive, p = 2 mod 3
/// negative), whose prefix sum at k is the number of ternary 1-digits of k.
/// Each flipped prime lies in (k/2, k], so it is the only multiple of itself in
/// {1..k} and a flip moves the prefix sum by exactly 2.
struct BalancedConstruction {
    std::uint64_t k = 1;
    std::uint64_t initial_sum = 0;
    PrimeAssignment base = PrimeAssignment::bcc();
    std::vector<std::uint64_t> switched;  // descending
    std::map<std::uint64_t, Sign> exhaustive_signs;  // only for ConstructionStatus::exhaustive
    std::int64_t final_prefix_sum = 0;
    ConstructionStatus status = ConstructionStatus::flipped;
};

/// Prefix sum of the base-3 coloring at k, i.e. count_ones_base3(k).
std::uint64_t initial_sum(std::uint64_t k);

BalancedConstruction construct_balanced(std::uint64_t k);
/// `table` must reach k.
BalancedConstruction construct_balanced(std::uint64_t k, const PrimeTable& table);

/// The fallback route on its own: the first sign vector on the primes <= k (as a
/// flip mask over the base signs, ascending) with |prefix sum at k| <= 1.
/// Gives up (infeasible) beyond 24 primes.
BalancedConstruction construct_exhaustive(std::uint64_t k, const PrimeTable& table);

/// Primes <= k keep their constructed signs; every prime > k gets -1.
PrimeAssignment extend(const BalancedConstruction& construction);

struct FeasibilityMargin {
    std::uint64_t supply = 0;  // base-positive primes in (k/2, k]
    std::uint64_t demand = 0;  // floor(initial_sum / 2)
    std::int64_t margin() const { return static_cast<std::int64_t>(supply) - static_cast<std::int64_t>(demand); }
};

FeasibilityMargin feasibility_margin(std::uint64_t k);
FeasibilityMargin feasibility_margin(std::uint64_t k, const PrimeTable& table);

/// Max |sum_{j<=k} c(js)| over s <= N/k for c = extend(construct_balanced(k)).
/// The construction is balanced iff the result is <= 1.
BalanceReport verify_theorem1(std::uint64_t k, std::uint64_t N, unsigned threads = 1);

}  // namespace edp
