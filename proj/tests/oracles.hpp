#pragma once

// Test-only reference computations. Deliberately naive and independent of the
// library paths they check: trial division, direct enumeration, brute force.

#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// Completely multiplicative value from a rule on primes.
inline int multiplicative(u64 n, const std::function<int(u64)>& prime_sign) {
    int s = 1;
    for (auto [p, e] : factorize(n))
        if (e % 2 == 1) s *= prime_sign(p);
    return s;
}

inline int liouville(u64 n) {
    return multiplicative(n, [](u64) { return -1; });
}

inline int bcc(u64 n) {
    return multiplicative(n, [](u64 p) { return (p == 3 || p % 3 == 1) ? 1 : -1; });
}

inline unsigned ternary_ones(u64 k) {
    unsigned c = 0;
    while (k) {
        if (k % 3 == 1) ++c;
        k /= 3;
    }
    return c;
}

inline std::vector<u64> primes_upto(u64 n) {
    std::vector<u64> out;
    for (u64 p = 2; p <= n; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

/// Brute-force max |sum_{j<=k} c(js)| over s in S, k in K, sk <= N, with (s, k) tie-break.
struct BruteScan {
    long long max_abs = 0;
    u64 s = 0, k = 0, scanned = 0;
};

inline BruteScan brute_scan(const std::function<int(u64)>& c, u64 N, const std::function<bool(u64)>& in_s,
                            const std::function<bool(u64)>& in_k) {
    BruteScan r;
    for (u64 s = 1; s <= N; ++s) {
        if (!in_s(s)) continue;
        for (u64 k = 1; s * k <= N; ++k) {
            if (!in_k(k)) continue;
            long long sum = 0;
            for (u64 j = 1; j <= k; ++j) sum += c(j * s);
            const long long a = sum < 0 ? -sum : sum;
            if (r.scanned == 0 || a > r.max_abs) {
                r.max_abs = a;
                r.s = s;
                r.k = k;
            }
            ++r.scanned;
        }
    }
    return r;
}

/// Exhaustive enumeration over every sign vector of the primes <= N: is there a
/// completely multiplicative c with every prefix sum up to N satisfying `ok`?
inline bool bounded_sum_brute(u64 N, const std::function<bool(long long)>& ok) {
    const auto primes = primes_upto(N);
    for (u64 mask = 0; mask < (u64{1} << primes.size()); ++mask) {
        auto sign = [&](u64 p) {
            for (std::size_t i = 0; i < primes.size(); ++i)
                if (primes[i] == p) return (mask >> i & 1) ? 1 : -1;
            return -1;
        };
        long long sum = 0;
        bool good = true;
        for (u64 n = 1; n <= N && good; ++n) {
            sum += multiplicative(n, sign);
            good = ok(sum);
        }
        if (good) return true;
    }
    return false;
}

inline u64 graham_max_ratio(const std::vector<u64>& values) {
    u64 best = 0;
    for (u64 a : values)
        for (u64 b : values)
            if (a != b) best = std::max(best, a / std::gcd(a, b));
    return best;
}

}  // namespace oracle
