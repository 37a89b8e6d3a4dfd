#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edp/primes.hpp"
#include "edp/signs.hpp"

namespace edp {

// Greedy multiplicative coloring grown one integer at a time.
//
// Odd j arrives with prefix sum 0: a composite takes its multiplicative sign,
// a prime takes `case1_sign`. Even j is forced by multiplicativity; if the sum
// reaches +-2 the largest prime p in (j/2, j] carrying the excess sign is
// flipped. Since 2p > j, p is the only multiple of itself in {1..j}, so the
// flip changes exactly one entry and restores sum 0.

struct RejmerOptions {
    Sign case1_sign = Sign::minus;
};

struct Switch {
    std::uint64_t step = 0;
    std::uint64_t prime = 0;
    Sign new_sign = Sign::minus;

    bool operator==(const Switch&) const = default;
};

struct StepReport {
    std::uint64_t step = 0;
    Sign sign = Sign::plus;          // c(step) when first assigned
    std::int64_t pre_fix_sum = 0;    // prefix sum before any switch
    std::optional<std::uint64_t> switched;
    bool halted = false;             // no switchable prime existed
};

class RejmerState {
public:
    /// State after step 1 (c(1) = +1); can advance up to `capacity`.
    explicit RejmerState(std::uint64_t capacity, RejmerOptions options = {});

    std::uint64_t step() const { return step_; }
    std::uint64_t capacity() const { return capacity_; }
    std::int64_t running_sum() const { return sum_; }
    bool halted() const { return halted_; }
    Sign sign(std::uint64_t n) const;
    const std::vector<Switch>& switch_log() const { return log_; }

    /// Performs step j = step() + 1.
    StepReport advance();

    /// c(1..step()).
    SignSequence snapshot() const;

private:
    RejmerOptions options_;
    std::uint64_t capacity_;
    PrimeTable table_;
    std::vector<std::int8_t> signs_;  // index n holds c(n); index 0 unused
    std::uint64_t step_ = 1;
    std::int64_t sum_ = 1;
    bool halted_ = false;
    std::vector<Switch> log_;
};

struct RejmerRun {
    SignSequence final;
    std::vector<Switch> log;
    std::optional<std::uint64_t> halted_at;
    // prefix sums of the final coloring outside {-1, 0, 1}; retroactive switches
    // can disturb them even though every step's own snapshot was balanced
    std::uint64_t historical_violations = 0;
    std::optional<std::uint64_t> first_historical_violation;
};

RejmerRun run_rejmer(std::uint64_t N, RejmerOptions options = {});

/// The frozen part c(1..floor(N/2)) of a completed run.
SignSequence r_sequence(const RejmerRun& run);
SignSequence r_sequence(std::uint64_t N, RejmerOptions options = {});

/// Primes p <= N/2 where the frozen sequence differs from the Liouville function.
std::vector<std::uint64_t> liouville_disagreements(const RejmerRun& run);
std::vector<std::uint64_t> liouville_disagreements(std::uint64_t N);

/// Rebuilds c(1..N) from the switch log alone: every prime starts at its
/// first-assignment sign, the log is applied, composites follow multiplicativity.
SignSequence replay_switch_log(std::uint64_t N, const std::vector<Switch>& log, RejmerOptions options = {});

}  // namespace edp
