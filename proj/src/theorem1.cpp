#include "edp/theorem1.hpp"

#include <algorithm>
#include <cstdlib>

#include "edp/error.hpp"

namespace edp {

namespace {

// Above this many primes <= k the exhaustive fallback is not attempted.
constexpr std::size_t kExhaustiveMaxPrimes = 24;

// Base-positive primes in (k/2, k]: p = 1 (mod 3) descending first, then any other
// positive prime (only p = 3 qualifies).
std::vector<std::uint64_t> flip_candidates(std::uint64_t k, const PrimeTable& table, const PrimeAssignment& base) {
    const auto window = table.range(k / 2 + 1, k);
    std::vector<std::uint64_t> preferred;
    std::vector<std::uint64_t> others;
    for (auto it = window.rbegin(); it != window.rend(); ++it) {
        const std::uint64_t p = *it;
        if (base.prime_sign(p) != Sign::plus) continue;
        (p % 3 == 1 ? preferred : others).push_back(p);
    }
    preferred.insert(preferred.end(), others.begin(), others.end());
    return preferred;
}

std::int64_t prefix_sum_with(std::uint64_t k, const PrimeAssignment& assignment) {
    return sieve_signs(assignment, k).prefix_sum(k);
}

void exhaustive_fallback(BalancedConstruction& out, const PrimeTable& table) {
    const auto primes = table.range(2, out.k);
    if (primes.size() > kExhaustiveMaxPrimes) {
        out.status = ConstructionStatus::infeasible;
        return;
    }
    // mask bit i flips the base sign of the i-th prime; ascending masks give a canonical answer
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << primes.size()); ++mask) {
        std::map<std::uint64_t, Sign> signs;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            const Sign s = out.base.prime_sign(primes[i]);
            signs[primes[i]] = (mask >> i & 1) ? -s : s;
        }
        const std::int64_t sum = prefix_sum_with(out.k, PrimeAssignment(DefaultRule::all_minus, signs));
        if (std::llabs(sum) <= 1) {
            out.exhaustive_signs = std::move(signs);
            out.final_prefix_sum = sum;
            out.status = ConstructionStatus::exhaustive;
            return;
        }
    }
    out.status = ConstructionStatus::infeasible;
}

}  // namespace

std::string to_string(ConstructionStatus status) {
    switch (status) {
        case ConstructionStatus::flipped: return "flipped";
        case ConstructionStatus::exhaustive: return "exhaustive";
        case ConstructionStatus::infeasible: return "infeasible";
    }
    return "?";
}

std::uint64_t initial_sum(std::uint64_t k) {
    if (k == 0) throw precondition_error("initial_sum needs k >= 1");
    return count_ones_base3(k);
}

BalancedConstruction construct_exhaustive(std::uint64_t k, const PrimeTable& table) {
    if (k == 0) throw precondition_error("construct_exhaustive needs k >= 1");
    if (table.limit() < k) throw precondition_error("prime table must reach k");
    BalancedConstruction out;
    out.k = k;
    out.initial_sum = initial_sum(k);
    exhaustive_fallback(out, table);
    return out;
}

BalancedConstruction construct_balanced(std::uint64_t k) {
    return construct_balanced(k, sieve_primes(std::max<std::uint64_t>(k, 2)));
}

BalancedConstruction construct_balanced(std::uint64_t k, const PrimeTable& table) {
    if (k == 0) throw precondition_error("construct_balanced needs k >= 1");
    if (table.limit() < k) throw precondition_error("prime table must reach k");

    BalancedConstruction out;
    out.k = k;
    out.initial_sum = initial_sum(k);
    const std::uint64_t demand = out.initial_sum / 2;
    const auto candidates = flip_candidates(k, table, out.base);

    if (candidates.size() >= demand) {
        out.switched.assign(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(demand));
        out.final_prefix_sum = static_cast<std::int64_t>(out.initial_sum - 2 * demand);
        out.status = ConstructionStatus::flipped;
        return out;
    }
    exhaustive_fallback(out, table);
    return out;
}

PrimeAssignment extend(const BalancedConstruction& construction) {
    if (construction.status == ConstructionStatus::infeasible)
        throw precondition_error("cannot extend an infeasible construction");
    if (construction.status == ConstructionStatus::exhaustive)
        return PrimeAssignment(DefaultRule::all_minus, construction.exhaustive_signs);

    std::map<std::uint64_t, Sign> signs;
    const PrimeTable table = sieve_primes(std::max<std::uint64_t>(construction.k, 2));
    for (std::uint64_t p : table.range(2, construction.k)) signs.emplace_hint(signs.end(), p, construction.base.prime_sign(p));
    for (std::uint64_t p : construction.switched) signs[p] = -signs.at(p);
    return PrimeAssignment(DefaultRule::all_minus, std::move(signs));
}

FeasibilityMargin feasibility_margin(std::uint64_t k) {
    return feasibility_margin(k, sieve_primes(std::max<std::uint64_t>(k, 2)));
}

FeasibilityMargin feasibility_margin(std::uint64_t k, const PrimeTable& table) {
    if (k < 2) throw precondition_error("feasibility_margin needs k >= 2");
    if (table.limit() < k) throw precondition_error("prime table must reach k");
    FeasibilityMargin m;
    m.supply = flip_candidates(k, table, PrimeAssignment::bcc()).size();
    m.demand = initial_sum(k) / 2;
    return m;
}

BalanceReport verify_theorem1(std::uint64_t k, std::uint64_t N, unsigned threads) {
    if (N < k) throw precondition_error("verify_theorem1 needs N >= k");
    const PrimeAssignment coloring = extend(construct_balanced(k));
    const SignSequence table = sieve_signs(coloring, N);
    return scan_max_discrepancy(table, N, CutePairSpec{StepSet::all(), LengthSet::singleton(k)}, threads);
}

}  // namespace edp
