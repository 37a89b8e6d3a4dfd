#include "edp/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "edp/error.hpp"

namespace edp {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(long double v) {
        const long double t = sum_ + v;
        if (std::fabs(sum_) >= std::fabs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    long double value() const { return sum_ + comp_; }

private:
    long double sum_ = 0.0L;
    long double comp_ = 0.0L;
};

void require_threshold(std::uint64_t x) {
    if (x < kMcCurleyThreshold)
        throw precondition_error("x = " + std::to_string(x) + " is below the validity threshold " +
                                 std::to_string(kMcCurleyThreshold));
}

}  // namespace

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // bases 2, 3, 5, 7 are exact below 3215031751
    const int base_count = n < 3215031751ULL ? 4 : 12;
    const std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int i = 0; i < base_count; ++i) {
        const std::uint64_t a = bases[i];
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int sq = 1; sq < r; ++sq) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool PrimeTable::contains(std::uint64_t n) const {
    return std::binary_search(primes_.begin(), primes_.end(), n);
}

std::span<const std::uint64_t> PrimeTable::range(std::uint64_t lo, std::uint64_t hi) const {
    if (lo > hi) return {};
    auto first = std::lower_bound(primes_.begin(), primes_.end(), lo);
    auto last = std::upper_bound(first, primes_.end(), hi);
    return {first, last};
}

PrimeTable sieve_primes(std::uint64_t limit, bool with_spf) {
    PrimeTable table;
    table.limit_ = limit;
    if (limit < 2) return table;

    if (with_spf) {
        if (limit > UINT32_MAX) throw precondition_error("spf table limited to 32-bit indices");
        table.spf_.assign(limit + 1, 0);
        for (std::uint64_t i = 2; i <= limit; ++i) {
            if (table.spf_[i] == 0) {
                table.spf_[i] = static_cast<std::uint32_t>(i);
                table.primes_.push_back(i);
            }
            const std::uint32_t lp = table.spf_[i];
            for (std::uint64_t p : table.primes_) {
                if (p > lp || p * i > limit) break;
                table.spf_[p * i] = static_cast<std::uint32_t>(p);
            }
        }
        return table;
    }

    // odd-only Eratosthenes: index i stands for 2i+1
    const std::uint64_t half = (limit - 1) / 2;
    std::vector<std::uint8_t> composite(half + 1, 0);
    const std::uint64_t root = isqrt(limit);
    for (std::uint64_t i = 1; 2 * i + 1 <= root; ++i) {
        if (composite[i]) continue;
        const std::uint64_t p = 2 * i + 1;
        for (std::uint64_t j = (p * p - 1) / 2; j <= half; j += p) composite[j] = 1;
    }
    table.primes_.push_back(2);
    for (std::uint64_t i = 1; i <= half; ++i)
        if (!composite[i]) table.primes_.push_back(2 * i + 1);
    return table;
}

ThetaValue theta_3_1(std::uint64_t x, const PrimeTable& table) {
    if (table.limit() < x)
        throw precondition_error("prime table limit " + std::to_string(table.limit()) + " < x = " + std::to_string(x));
    CompensatedSum sum;
    ThetaValue out;
    out.x = x;
    for (std::uint64_t p : table.range(2, x)) {
        if (p % 3 != 1) continue;
        sum.add(std::log(static_cast<long double>(p)));
        ++out.terms;
    }
    out.theta = static_cast<double>(sum.value());
    return out;
}

std::uint64_t count_f(std::uint64_t x, const PrimeTable& table) {
    if (table.limit() < 2 * x)
        throw precondition_error("prime table limit " + std::to_string(table.limit()) + " < 2x = " +
                                 std::to_string(2 * x));
    if (x == 0) return 0;
    std::uint64_t count = 0;
    for (std::uint64_t p : table.range(x + 1, 2 * x - 1))
        if (p % 3 == 1) ++count;
    return count;
}

McCurleyReport check_mccurley(std::uint64_t x, const PrimeTable& table) {
    require_threshold(x);
    McCurleyReport r;
    r.x = x;
    r.theta = theta_3_1(x, table).theta;
    r.lower = 0.49 * static_cast<double>(x);
    r.upper = 0.51 * static_cast<double>(x);
    r.ratio = r.theta / static_cast<double>(x);
    r.pass = r.lower <= r.theta && r.theta <= r.upper;
    return r;
}

FBoundReport check_f_bound(std::uint64_t x, const PrimeTable& table) {
    require_threshold(x);
    FBoundReport r;
    r.x = x;
    r.count = count_f(x, table);
    r.bound = 0.47 * static_cast<double>(x) / std::log(2.0 * static_cast<double>(x));
    r.pass = static_cast<double>(r.count) >= r.bound;
    return r;
}

}  // namespace edp
