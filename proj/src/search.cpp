#include "edp/search.hpp"

#include <algorithm>
#include <cstdlib>

#include "edp/error.hpp"
#include "parallel.hpp"

namespace edp {

std::string to_string(BoundMode mode) {
    return mode == BoundMode::upper_only ? "upper" : "two";
}

std::string to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::satisfiable: return "satisfiable";
        case SearchStatus::unsatisfiable: return "unsatisfiable";
        case SearchStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Partial-sum scans
// ---------------------------------------------------------------------------

ScanResult partial_sum_scan(const PrimeAssignment& assignment, std::uint64_t limit, const ScanOptions& options) {
    if (limit < 2) throw precondition_error("partial-sum scans need limit >= 2");
    if (options.segment_size == 0) throw precondition_error("segment size must be positive");

    const PrimeTable primes = sieve_primes(std::max<std::uint64_t>(isqrt(limit), 2));
    const unsigned batch = std::max(1u, options.threads);

    ScanResult r;
    r.limit = limit;
    std::int64_t running = 0;
    bool have_extrema = false;

    std::vector<SignSequence> window(batch);
    for (std::uint64_t lo = 1; lo <= limit;) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> bounds;
        for (unsigned b = 0; b < batch && lo <= limit; ++b) {
            const std::uint64_t hi = std::min(limit, lo + options.segment_size - 1);
            bounds.emplace_back(lo, hi);
            lo = hi + 1;
        }
        detail::parallel_for_interleaved(bounds.size(), batch, [&](std::size_t i) {
            window[i] = sieve_segment(assignment, bounds[i].first, bounds[i].second, primes);
        });

        for (std::size_t i = 0; i < bounds.size(); ++i) {
            const auto raw = window[i].raw();
            std::uint64_t n = bounds[i].first;
            for (std::int8_t s : raw) {
                running += s;
                if (n >= 2) {
                    if (!r.first_violation && running > 0) r.first_violation = n;
                    if (!have_extrema || running > r.max_sum) {
                        r.max_sum = running;
                        r.argmax = n;
                    }
                    if (!have_extrema || running < r.min_sum) {
                        r.min_sum = running;
                        r.argmin = n;
                    }
                    have_extrema = true;
                }
                ++n;
            }
        }
    }
    r.final_sum = running;
    return r;
}

ScanResult polya_scan(std::uint64_t limit, const ScanOptions& options) {
    return partial_sum_scan(PrimeAssignment::liouville(), limit, options);
}

ScanResult flip_experiment(const std::vector<std::uint64_t>& flips, std::uint64_t limit, const ScanOptions& options) {
    std::map<std::uint64_t, Sign> overrides;
    for (std::uint64_t p : flips) {
        if (!is_prime(p)) throw precondition_error(std::to_string(p) + " is not prime");
        overrides[p] = Sign::plus;
    }
    return partial_sum_scan(PrimeAssignment(DefaultRule::all_minus, std::move(overrides)), limit, options);
}

// ---------------------------------------------------------------------------
// Bounded-sum search
// ---------------------------------------------------------------------------

SearchOutcome bounded_sum_search(const BoundedSumQuery& q) {
    if (q.horizon == 0) throw precondition_error("horizon must be >= 1");
    if (q.h < 1) throw precondition_error("h must be >= 1");

    const std::uint64_t N = q.horizon;
    const PrimeTable table = sieve_primes(std::max<std::uint64_t>(N, 2), /*with_spf=*/true);
    auto ok = [&](std::int64_t sum) { return q.mode == BoundMode::upper_only ? sum <= q.h : std::llabs(sum) <= q.h; };

    std::vector<std::int8_t> sg(N + 1, 0);
    std::vector<std::int64_t> prefix(N + 1, 0);
    auto assign = [&](std::uint64_t k, std::int8_t s) {
        sg[k] = s;
        prefix[k] = prefix[k - 1] + s;
        return ok(prefix[k]);
    };

    struct ChoicePoint {
        std::uint64_t position;
        bool tried_plus;
    };
    std::vector<ChoicePoint> stack;
    SearchOutcome out;

    assign(1, 1);  // L(1) = 1 <= h
    std::uint64_t k = 2;
    for (;;) {
        if (k > N) break;
        bool good;
        if (table.spf(k) == k) {
            if (out.nodes >= q.node_budget) {
                out.status = SearchStatus::budget_exceeded;
                return out;
            }
            ++out.nodes;
            stack.push_back({k, false});
            good = assign(k, -1);
        } else {
            const std::uint32_t p = table.spf(k);
            good = assign(k, static_cast<std::int8_t>(sg[p] * sg[k / p]));
        }
        if (good) {
            ++k;
            continue;
        }
        for (;;) {
            if (stack.empty()) {
                out.status = SearchStatus::unsatisfiable;
                return out;
            }
            ChoicePoint& top = stack.back();
            if (top.tried_plus) {
                stack.pop_back();
                continue;
            }
            if (out.nodes >= q.node_budget) {
                out.status = SearchStatus::budget_exceeded;
                return out;
            }
            ++out.nodes;
            top.tried_plus = true;
            k = top.position;
            if (assign(k, 1)) {
                ++k;
                break;
            }
        }
    }

    std::map<std::uint64_t, Sign> plus_primes;
    for (const ChoicePoint& c : stack)
        if (sg[c.position] > 0) plus_primes.emplace(c.position, Sign::plus);
    out.status = SearchStatus::satisfiable;
    out.witness = PrimeAssignment(DefaultRule::all_minus, std::move(plus_primes));
    return out;
}

MinHResult min_h(std::uint64_t horizon, BoundMode mode, std::uint64_t node_budget) {
    if (horizon == 0) throw precondition_error("horizon must be >= 1");
    MinHResult r;
    r.horizon = horizon;
    r.mode = mode;
    // h = horizon is always satisfiable, so the loop ends
    for (std::int64_t h = 1;; ++h) {
        const SearchOutcome o = bounded_sum_search({horizon, h, mode, node_budget});
        r.nodes += o.nodes;
        if (o.status == SearchStatus::satisfiable) {
            r.h = h;
            r.witness = o.witness;
            return r;
        }
        if (o.status == SearchStatus::budget_exceeded) {
            r.unknown_at = h;
            return r;
        }
    }
}

}  // namespace edp
