#include "edp/rejmer.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "edp/error.hpp"

namespace edp {

RejmerState::RejmerState(std::uint64_t capacity, RejmerOptions options)
    : options_(options), capacity_(capacity) {
    if (capacity_ < 1) throw precondition_error("Rejmer state needs capacity >= 1");
    table_ = sieve_primes(std::max<std::uint64_t>(capacity_, 2), /*with_spf=*/true);
    signs_.assign(capacity_ + 1, 0);
    signs_[1] = 1;
}

Sign RejmerState::sign(std::uint64_t n) const {
    if (n == 0 || n > step_) throw range_error("c(" + std::to_string(n) + ") not assigned yet");
    return static_cast<Sign>(signs_[n]);
}

StepReport RejmerState::advance() {
    if (halted_) throw std::logic_error("Rejmer run already halted at step " + std::to_string(step_));
    const std::uint64_t j = step_ + 1;
    if (j > capacity_) throw precondition_error("Rejmer state capacity exhausted");

    std::int8_t s;
    if (j == 2) {
        s = -1;
    } else if (table_.spf(j) == j) {
        s = static_cast<std::int8_t>(value(options_.case1_sign));
    } else {
        const std::uint64_t p = table_.spf(j);
        s = static_cast<std::int8_t>(signs_[p] * signs_[j / p]);
    }
    signs_[j] = s;
    sum_ += s;
    step_ = j;

    StepReport report;
    report.step = j;
    report.sign = static_cast<Sign>(s);
    report.pre_fix_sum = sum_;

    if (std::llabs(sum_) == 2) {
        const std::int8_t excess = sum_ > 0 ? 1 : -1;
        const auto window = table_.range(j / 2 + 1, j);
        for (auto it = window.rbegin(); it != window.rend(); ++it) {
            if (signs_[*it] != excess) continue;
            signs_[*it] = static_cast<std::int8_t>(-excess);
            sum_ -= 2 * excess;
            log_.push_back(Switch{j, *it, static_cast<Sign>(-excess)});
            report.switched = *it;
            break;
        }
        if (!report.switched) {
            halted_ = true;
            report.halted = true;
        }
    }
    return report;
}

SignSequence RejmerState::snapshot() const {
    return SignSequence(1, std::vector<std::int8_t>(signs_.begin() + 1, signs_.begin() + 1 + static_cast<std::ptrdiff_t>(step_)), 0);
}

RejmerRun run_rejmer(std::uint64_t N, RejmerOptions options) {
    if (N < 2) throw precondition_error("run_rejmer needs N >= 2");
    RejmerState state(N, options);
    RejmerRun run;
    while (state.step() < N) {
        const StepReport r = state.advance();
        if (r.halted) {
            run.halted_at = r.step;
            break;
        }
    }
    run.final = state.snapshot();
    run.log = state.switch_log();

    const auto sums = run.final.prefix_sums();
    for (std::size_t i = 0; i < sums.size(); ++i) {
        if (std::llabs(sums[i]) <= 1) continue;
        ++run.historical_violations;
        if (!run.first_historical_violation) run.first_historical_violation = i + 1;
    }
    return run;
}

SignSequence r_sequence(const RejmerRun& run) {
    if (run.halted_at) throw precondition_error("r_sequence needs a run that did not halt");
    return run.final.slice(1, run.final.size() / 2);
}

SignSequence r_sequence(std::uint64_t N, RejmerOptions options) {
    return r_sequence(run_rejmer(N, options));
}

std::vector<std::uint64_t> liouville_disagreements(const RejmerRun& run) {
    const SignSequence frozen = r_sequence(run);
    std::vector<std::uint64_t> out;
    if (frozen.empty()) return out;
    const PrimeTable table = sieve_primes(std::max<std::uint64_t>(frozen.last(), 2));
    for (std::uint64_t p : table.range(2, frozen.last()))
        if (frozen[p] == Sign::plus) out.push_back(p);
    return out;
}

std::vector<std::uint64_t> liouville_disagreements(std::uint64_t N) {
    return liouville_disagreements(run_rejmer(N));
}

SignSequence replay_switch_log(std::uint64_t N, const std::vector<Switch>& log, RejmerOptions options) {
    if (N < 1) throw precondition_error("replay needs N >= 1");
    std::map<std::uint64_t, Sign> overrides;
    if (N >= 2) overrides[2] = Sign::minus;
    for (const Switch& sw : log) {
        if (sw.prime > N) throw precondition_error("switch log mentions a prime beyond N");
        overrides[sw.prime] = sw.new_sign;
    }
    const DefaultRule rule = options.case1_sign == Sign::minus ? DefaultRule::all_minus : DefaultRule::constant_plus;
    return sieve_signs(PrimeAssignment(rule, std::move(overrides)), N);
}

}  // namespace edp
