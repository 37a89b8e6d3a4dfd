#include "edp/signs.hpp"

#include <algorithm>
#include <stdexcept>

#include "edp/error.hpp"

namespace edp {

Sign sign_from_int(int v) {
    if (v == 1) return Sign::plus;
    if (v == -1) return Sign::minus;
    throw precondition_error("sign must be +1 or -1, got " + std::to_string(v));
}

std::string to_string(DefaultRule rule) {
    switch (rule) {
        case DefaultRule::all_minus: return "all_minus";
        case DefaultRule::residue_mod3: return "residue_mod3";
        case DefaultRule::constant_plus: return "constant_plus";
    }
    return "?";
}

DefaultRule default_rule_from_string(const std::string& name) {
    if (name == "all_minus") return DefaultRule::all_minus;
    if (name == "residue_mod3") return DefaultRule::residue_mod3;
    if (name == "constant_plus") return DefaultRule::constant_plus;
    throw format_error("unknown default rule '" + name + "'");
}

// ---------------------------------------------------------------------------
// PrimeAssignment
// ---------------------------------------------------------------------------

PrimeAssignment::PrimeAssignment(DefaultRule rule, std::map<std::uint64_t, Sign> overrides)
    : rule_(rule), overrides_(std::move(overrides)) {
    for (const auto& [p, s] : overrides_) {
        if (!is_prime(p)) throw precondition_error("override key " + std::to_string(p) + " is not prime");
        (void)s;
    }
}

Sign PrimeAssignment::rule_sign(std::uint64_t p) const {
    switch (rule_) {
        case DefaultRule::all_minus: return Sign::minus;
        case DefaultRule::constant_plus: return Sign::plus;
        case DefaultRule::residue_mod3: return (p == 3 || p % 3 == 1) ? Sign::plus : Sign::minus;
    }
    return Sign::minus;
}

Sign PrimeAssignment::prime_sign(std::uint64_t p) const {
    if (!overrides_.empty()) {
        if (auto it = overrides_.find(p); it != overrides_.end()) return it->second;
    }
    return rule_sign(p);
}

PrimeAssignment PrimeAssignment::with_override(std::uint64_t p, Sign s) const {
    auto copy = overrides_;
    copy[p] = s;
    return PrimeAssignment(rule_, std::move(copy));
}

// ---------------------------------------------------------------------------
// SignSequence
// ---------------------------------------------------------------------------

SignSequence::SignSequence() : cache_(std::make_shared<PrefixCache>()) {}

SignSequence::SignSequence(std::uint64_t start, std::vector<std::int8_t> signs, std::int64_t base_sum)
    : start_(start), signs_(std::move(signs)), base_sum_(base_sum), cache_(std::make_shared<PrefixCache>()) {
    if (start_ == 0) throw precondition_error("sign sequences start at n >= 1");
    for (std::int8_t v : signs_)
        if (v != 1 && v != -1) throw precondition_error("sign sequence entries must be +1 or -1");
}

Sign SignSequence::at(std::uint64_t n) const {
    if (!contains(n))
        throw range_error("n = " + std::to_string(n) + " outside table [" + std::to_string(start_) + ", " +
                          std::to_string(last()) + "]");
    return (*this)[n];
}

std::span<const std::int64_t> SignSequence::prefix_sums() const {
    std::call_once(cache_->once, [this] {
        cache_->sums.resize(signs_.size());
        std::int64_t running = base_sum_;
        for (std::size_t i = 0; i < signs_.size(); ++i) {
            running += signs_[i];
            cache_->sums[i] = running;
        }
    });
    return cache_->sums;
}

std::int64_t SignSequence::prefix_sum(std::uint64_t n) const {
    if (n + 1 == start_) return base_sum_;
    if (!contains(n)) throw range_error("prefix_sum(" + std::to_string(n) + ") outside table");
    return prefix_sums()[n - start_];
}

SignSequence SignSequence::slice(std::uint64_t lo, std::uint64_t hi) const {
    if (lo < start_ || hi > last() || lo > hi + 1) throw range_error("slice outside table");
    std::vector<std::int8_t> part(signs_.begin() + static_cast<std::ptrdiff_t>(lo - start_),
                                  signs_.begin() + static_cast<std::ptrdiff_t>(hi + 1 - start_));
    return SignSequence(lo, std::move(part), prefix_sum(lo - 1));
}

bool SignSequence::operator==(const SignSequence& other) const {
    return start_ == other.start_ && base_sum_ == other.base_sum_ && signs_ == other.signs_;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

Sign eval_multiplicative(const PrimeAssignment& a, std::uint64_t n) {
    Sign s = Sign::plus;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        const Sign ps = a.prime_sign(p);
        while (n % p == 0) {
            n /= p;
            s = s * ps;
        }
    }
    if (n > 1) s = s * a.prime_sign(n);
    return s;
}

}  // namespace

Sign eval(const Coloring& c, std::uint64_t n) {
    if (n == 0) throw precondition_error("colorings are defined on n >= 1");
    return std::visit(
        [n](const auto& kind) -> Sign {
            using T = std::decay_t<decltype(kind)>;
            if constexpr (std::is_same_v<T, PrimeAssignment>)
                return eval_multiplicative(kind, n);
            else if constexpr (std::is_same_v<T, Alternating>)
                return n % 2 == 1 ? Sign::plus : Sign::minus;
            else
                return kind.at(n);
        },
        c.kind());
}

SignSequence sieve_signs(const PrimeAssignment& assignment, std::uint64_t N) {
    if (N == 0) throw precondition_error("sieve_signs needs N >= 1");
    // 0 marks "not yet reached"; the survivors are primes
    std::vector<std::int8_t> sg(N + 1, 0);
    std::vector<std::uint64_t> primes;
    sg[1] = 1;
    for (std::uint64_t i = 2; i <= N; ++i) {
        if (sg[i] == 0) {
            sg[i] = static_cast<std::int8_t>(value(assignment.prime_sign(i)));
            primes.push_back(i);
        }
        for (std::uint64_t p : primes) {
            if (p * i > N) break;
            sg[p * i] = static_cast<std::int8_t>(sg[p] * sg[i]);
            if (i % p == 0) break;
        }
    }
    sg.erase(sg.begin());
    return SignSequence(1, std::move(sg), 0);
}

SignSequence sieve_segment(const PrimeAssignment& assignment, std::uint64_t lo, std::uint64_t hi,
                           const PrimeTable& primes, std::int64_t base_sum) {
    if (lo == 0 || lo > hi) throw precondition_error("sieve_segment needs 1 <= lo <= hi");
    const std::uint64_t root = isqrt(hi);
    if (primes.limit() < root)
        throw precondition_error("prime table covers " + std::to_string(primes.limit()) + " but isqrt(hi) = " +
                                 std::to_string(root));

    const std::uint64_t len = hi - lo + 1;
    std::vector<std::uint64_t> prod(len, 1);  // product of the prime powers found so far
    std::vector<std::int8_t> sg(len, 1);

    for (std::uint64_t p : primes.range(2, root)) {
        const bool negate = assignment.prime_sign(p) == Sign::minus;
        for (std::uint64_t q = p;; q *= p) {
            const std::uint64_t first = (lo + q - 1) / q * q;
            if (negate) {
                for (std::uint64_t m = first; m <= hi; m += q) {
                    prod[m - lo] *= p;
                    sg[m - lo] = static_cast<std::int8_t>(-sg[m - lo]);
                }
            } else {
                for (std::uint64_t m = first; m <= hi; m += q) prod[m - lo] *= p;
            }
            if (q > hi / p) break;
        }
    }

    // what remains of n after removing primes <= isqrt(hi) is 1 or a single prime
    const bool uniform = assignment.overrides().empty() && assignment.default_rule() != DefaultRule::residue_mod3;
    const std::int8_t uniform_sign = static_cast<std::int8_t>(value(assignment.rule_sign(2)));
    for (std::uint64_t i = 0; i < len; ++i) {
        const std::uint64_t n = lo + i;
        if (prod[i] == n) continue;
        if (uniform)
            sg[i] = static_cast<std::int8_t>(sg[i] * uniform_sign);
        else
            sg[i] = static_cast<std::int8_t>(sg[i] * value(assignment.prime_sign(n / prod[i])));
    }
    return SignSequence(lo, std::move(sg), base_sum);
}

SignSequence materialize(const Coloring& c, std::uint64_t N) {
    if (N == 0) throw precondition_error("materialize needs N >= 1");
    return std::visit(
        [N](const auto& kind) -> SignSequence {
            using T = std::decay_t<decltype(kind)>;
            if constexpr (std::is_same_v<T, PrimeAssignment>) {
                return sieve_signs(kind, N);
            } else if constexpr (std::is_same_v<T, Alternating>) {
                std::vector<std::int8_t> sg(N);
                for (std::uint64_t n = 1; n <= N; ++n) sg[n - 1] = n % 2 == 1 ? 1 : -1;
                return SignSequence(1, std::move(sg), 0);
            } else {
                if (kind.start() != 1 || kind.last() < N)
                    throw range_error("table does not cover 1.." + std::to_string(N));
                return kind.slice(1, N);
            }
        },
        c.kind());
}

unsigned count_ones_base3(std::uint64_t k) {
    unsigned ones = 0;
    for (; k > 0; k /= 3)
        if (k % 3 == 1) ++ones;
    return ones;
}

}  // namespace edp
