#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edp/signs.hpp"

namespace edp {

/// Homogeneous arithmetic progression {s, 2s, ..., ks}.
struct Hap {
    std::uint64_t step = 1;
    std::uint64_t length = 1;

    bool operator==(const Hap&) const = default;
};

/// Admissible steps S of a (S, K) pair, checkable up to a finite bound.
class StepSet {
public:
    enum class Kind { all, odd, explicit_list };

    static StepSet all() { return StepSet(Kind::all, {}); }
    static StepSet odd() { return StepSet(Kind::odd, {}); }
    static StepSet list(std::vector<std::uint64_t> steps);

    Kind kind() const { return kind_; }
    const std::vector<std::uint64_t>& values() const { return values_; }
    bool contains(std::uint64_t s) const;
    /// Members up to N in ascending order.
    std::vector<std::uint64_t> members(std::uint64_t N) const;

private:
    StepSet(Kind kind, std::vector<std::uint64_t> values) : kind_(kind), values_(std::move(values)) {}
    Kind kind_;
    std::vector<std::uint64_t> values_;
};

/// Admissible lengths K of a (S, K) pair.
class LengthSet {
public:
    enum class Kind { all, singleton, base3_no_ones, explicit_list };

    static LengthSet all() { return LengthSet(Kind::all, {}); }
    static LengthSet singleton(std::uint64_t k);
    static LengthSet base3_no_ones() { return LengthSet(Kind::base3_no_ones, {}); }
    static LengthSet list(std::vector<std::uint64_t> lengths);

    Kind kind() const { return kind_; }
    const std::vector<std::uint64_t>& values() const { return values_; }
    bool contains(std::uint64_t k) const;
    /// Largest admissible length, if the set is finite.
    std::optional<std::uint64_t> max() const;

private:
    LengthSet(Kind kind, std::vector<std::uint64_t> values) : kind_(kind), values_(std::move(values)) {}
    Kind kind_;
    std::vector<std::uint64_t> values_;
};

struct CutePairSpec {
    StepSet steps = StepSet::all();
    LengthSet lengths = LengthSet::all();
};

struct BalanceReport {
    std::int64_t max_abs_sum = 0;
    std::optional<Hap> witness;  // empty iff no progression was scanned
    std::uint64_t scanned = 0;
};

/// Per-step summary of a discrepancy scan: max |partial sum| over admissible lengths.
struct StepMax {
    std::uint64_t step = 0;
    std::int64_t max_abs_sum = 0;
    std::uint64_t length = 0;  // smallest length attaining it
    std::uint64_t scanned = 0;
};

/// sum_{j=1..k} c(j s).
std::int64_t hap_sum(const Coloring& c, Hap hap);

/// |hap_sum| <= h.
bool is_h_balanced(const Coloring& c, Hap hap, std::uint64_t h);

/// c(s) * hap_sum(c, hap). The h-majority condition is `majority_value <= h`.
std::int64_t majority_value(const Coloring& c, Hap hap);

/// Max |hap_sum| over s in S, k in K, s*k <= N. Witness tie-break: smallest s, then smallest k.
BalanceReport scan_max_discrepancy(const Coloring& c, std::uint64_t N, const CutePairSpec& filter = {},
                                   unsigned threads = 1);
BalanceReport scan_max_discrepancy(const SignSequence& table, std::uint64_t N, const CutePairSpec& filter = {},
                                   unsigned threads = 1);

/// One entry per admissible step s <= N that has at least one admissible length.
std::vector<StepMax> scan_steps(const SignSequence& table, std::uint64_t N, const CutePairSpec& filter = {},
                                unsigned threads = 1);

BalanceReport reduce(const std::vector<StepMax>& steps);

bool has_no_base3_ones(std::uint64_t k);

/// All k <= N whose ternary digits lie in {0, 2}, ascending.
std::vector<std::uint64_t> base3_no_ones_up_to(std::uint64_t N);

/// "all", "odd" or a comma list such as "3,5,12".
StepSet parse_step_set(const std::string& text);
/// "all", "base3free", "k=<k>" or a comma list.
LengthSet parse_length_set(const std::string& text);

}  // namespace edp
