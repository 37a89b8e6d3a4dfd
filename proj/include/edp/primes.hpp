#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace edp {

/// Lower validity gate for the theta(x;3,1) bracket and the f(x) bound.
inline constexpr std::uint64_t kMcCurleyThreshold = 17377;

std::uint64_t isqrt(std::uint64_t n);

/// Deterministic for every 64-bit input (Miller-Rabin with a fixed base set).
bool is_prime(std::uint64_t n);

/// Ascending primes up to `limit`, optionally with a smallest-prime-factor table.
class PrimeTable {
public:
    PrimeTable() = default;

    std::uint64_t limit() const { return limit_; }
    std::span<const std::uint64_t> primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }

    bool has_spf() const { return !spf_.empty(); }
    /// Least prime factor of n, 2 <= n <= limit. Requires has_spf().
    std::uint32_t spf(std::uint64_t n) const { return spf_[n]; }

    /// Membership by binary search; n must not exceed limit().
    bool contains(std::uint64_t n) const;

    /// Primes p with lo <= p <= hi (clamped to the table).
    std::span<const std::uint64_t> range(std::uint64_t lo, std::uint64_t hi) const;

private:
    friend PrimeTable sieve_primes(std::uint64_t limit, bool with_spf);

    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> primes_;
    std::vector<std::uint32_t> spf_;
};

/// Sieve of Eratosthenes; a linear sieve when the spf table is requested.
PrimeTable sieve_primes(std::uint64_t limit, bool with_spf = false);

struct ThetaValue {
    std::uint64_t x = 0;
    double theta = 0.0;
    std::uint64_t terms = 0;  // primes p <= x with p = 1 (mod 3)
};

/// Sum of log p over primes p <= x, p = 1 (mod 3). Requires table.limit() >= x.
ThetaValue theta_3_1(std::uint64_t x, const PrimeTable& table);

/// Number of primes p = 1 (mod 3) with x < p < 2x. Requires table.limit() >= 2x.
std::uint64_t count_f(std::uint64_t x, const PrimeTable& table);

struct McCurleyReport {
    std::uint64_t x = 0;
    double theta = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double ratio = 0.0;
    bool pass = false;
};

struct FBoundReport {
    std::uint64_t x = 0;
    std::uint64_t count = 0;
    double bound = 0.0;
    bool pass = false;
};

/// 0.49x <= theta(x;3,1) <= 0.51x. Rejects x below kMcCurleyThreshold.
McCurleyReport check_mccurley(std::uint64_t x, const PrimeTable& table);

/// f(x) >= 0.47 x / log(2x). Rejects x below kMcCurleyThreshold.
FBoundReport check_f_bound(std::uint64_t x, const PrimeTable& table);

}  // namespace edp
