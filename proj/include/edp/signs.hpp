#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "edp/primes.hpp"

namespace edp {

/// One of the two colors, read as +1 (red) or -1 (blue).
enum class Sign : std::int8_t { minus = -1, plus = 1 };

constexpr int value(Sign s) { return static_cast<int>(s); }
constexpr Sign operator*(Sign a, Sign b) { return a == b ? Sign::plus : Sign::minus; }
constexpr Sign operator-(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr char to_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// Throws precondition_error unless v is +1 or -1.
Sign sign_from_int(int v);

/// Sign assigned to primes without an explicit override.
enum class DefaultRule {
    all_minus,     // Liouville: every prime -1
    residue_mod3,  // +1 for p = 3 and p = 1 (mod 3), -1 for p = 2 (mod 3)
    constant_plus,
};

std::string to_string(DefaultRule rule);
DefaultRule default_rule_from_string(const std::string& name);

/// A completely multiplicative coloring, given by its values on primes.
class PrimeAssignment {
public:
    explicit PrimeAssignment(DefaultRule rule = DefaultRule::all_minus, std::map<std::uint64_t, Sign> overrides = {});

    static PrimeAssignment liouville() { return PrimeAssignment(DefaultRule::all_minus); }
    static PrimeAssignment bcc() { return PrimeAssignment(DefaultRule::residue_mod3); }

    DefaultRule default_rule() const { return rule_; }
    const std::map<std::uint64_t, Sign>& overrides() const { return overrides_; }

    /// Sign of the prime p under the default rule alone.
    Sign rule_sign(std::uint64_t p) const;
    /// Sign of the prime p; p is assumed prime.
    Sign prime_sign(std::uint64_t p) const;

    PrimeAssignment with_override(std::uint64_t p, Sign s) const;

    bool operator==(const PrimeAssignment&) const = default;

private:
    DefaultRule rule_;
    std::map<std::uint64_t, Sign> overrides_;
};

/// Signs for the contiguous range start .. start+size()-1.
///
/// `base_sum` is the sum of all signs below `start` (0 when start == 1), so
/// prefix_sum(n) is the sum of c(1..n). Immutable; the prefix-sum table is
/// built once on first use and is safe to request from several threads.
class SignSequence {
public:
    SignSequence();
    SignSequence(std::uint64_t start, std::vector<std::int8_t> signs, std::int64_t base_sum = 0);

    std::uint64_t start() const { return start_; }
    std::uint64_t size() const { return signs_.size(); }
    bool empty() const { return signs_.empty(); }
    /// Last index covered; start()-1 when empty.
    std::uint64_t last() const { return start_ + signs_.size() - 1; }
    bool contains(std::uint64_t n) const { return n >= start_ && n - start_ < signs_.size(); }
    std::int64_t base_sum() const { return base_sum_; }

    Sign operator[](std::uint64_t n) const { return static_cast<Sign>(signs_[n - start_]); }
    /// Throws range_error outside [start, last].
    Sign at(std::uint64_t n) const;

    std::span<const std::int8_t> raw() const { return signs_; }

    /// Sum of c(1..n) for start-1 <= n <= last.
    std::int64_t prefix_sum(std::uint64_t n) const;
    /// Element i is prefix_sum(start + i).
    std::span<const std::int64_t> prefix_sums() const;

    SignSequence slice(std::uint64_t lo, std::uint64_t hi) const;

    bool operator==(const SignSequence& other) const;

private:
    struct PrefixCache {
        std::once_flag once;
        std::vector<std::int64_t> sums;
    };

    std::uint64_t start_ = 1;
    std::vector<std::int8_t> signs_;
    std::int64_t base_sum_ = 0;
    std::shared_ptr<PrefixCache> cache_;
};

/// +1 on odd n, -1 on even n. Not multiplicative.
struct Alternating {
    bool operator==(const Alternating&) const = default;
};

class Coloring {
public:
    using Kind = std::variant<PrimeAssignment, Alternating, SignSequence>;

    static Coloring multiplicative(PrimeAssignment assignment) { return Coloring(std::move(assignment)); }
    static Coloring alternating() { return Coloring(Alternating{}); }
    static Coloring table(SignSequence signs) { return Coloring(std::move(signs)); }
    static Coloring liouville() { return multiplicative(PrimeAssignment::liouville()); }
    static Coloring bcc() { return multiplicative(PrimeAssignment::bcc()); }

    const Kind& kind() const { return kind_; }
    bool is_multiplicative() const { return std::holds_alternative<PrimeAssignment>(kind_); }
    const PrimeAssignment* assignment() const { return std::get_if<PrimeAssignment>(&kind_); }

private:
    explicit Coloring(Kind kind) : kind_(std::move(kind)) {}
    Kind kind_;
};

/// c(n) for n >= 1. Multiplicative colorings are evaluated by factorization.
Sign eval(const Coloring& c, std::uint64_t n);

/// c(1..N) via a linear sieve.
SignSequence sieve_signs(const PrimeAssignment& assignment, std::uint64_t N);

/// c(lo..hi) with memory proportional to the window. `primes` must cover
/// every prime up to isqrt(hi). The result carries `base_sum` as its prefix context.
SignSequence sieve_segment(const PrimeAssignment& assignment, std::uint64_t lo, std::uint64_t hi,
                           const PrimeTable& primes, std::int64_t base_sum = 0);

/// Dense c(1..N) for any coloring kind.
SignSequence materialize(const Coloring& c, std::uint64_t N);

/// Number of digits equal to 1 in the base-3 expansion of k.
unsigned count_ones_base3(std::uint64_t k);

}  // namespace edp
