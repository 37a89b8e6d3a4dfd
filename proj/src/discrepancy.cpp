#include "edp/discrepancy.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "edp/error.hpp"
#include "parallel.hpp"

namespace edp {

namespace {

void require_hap(Hap hap) {
    if (hap.step == 0 || hap.length == 0) throw precondition_error("HAP needs step >= 1 and length >= 1");
}

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (!v.empty() && v.front() == 0) throw precondition_error("set members must be positive");
    return v;
}

}  // namespace

StepSet StepSet::list(std::vector<std::uint64_t> steps) {
    return StepSet(Kind::explicit_list, sorted_unique(std::move(steps)));
}

bool StepSet::contains(std::uint64_t s) const {
    switch (kind_) {
        case Kind::all: return s >= 1;
        case Kind::odd: return s % 2 == 1;
        case Kind::explicit_list: return std::binary_search(values_.begin(), values_.end(), s);
    }
    return false;
}

std::vector<std::uint64_t> StepSet::members(std::uint64_t N) const {
    std::vector<std::uint64_t> out;
    switch (kind_) {
        case Kind::all:
            out.resize(N);
            for (std::uint64_t s = 1; s <= N; ++s) out[s - 1] = s;
            break;
        case Kind::odd:
            for (std::uint64_t s = 1; s <= N; s += 2) out.push_back(s);
            break;
        case Kind::explicit_list:
            for (std::uint64_t s : values_)
                if (s <= N) out.push_back(s);
            break;
    }
    return out;
}

LengthSet LengthSet::singleton(std::uint64_t k) {
    if (k == 0) throw precondition_error("length must be positive");
    return LengthSet(Kind::singleton, {k});
}

LengthSet LengthSet::list(std::vector<std::uint64_t> lengths) {
    return LengthSet(Kind::explicit_list, sorted_unique(std::move(lengths)));
}

bool LengthSet::contains(std::uint64_t k) const {
    switch (kind_) {
        case Kind::all: return k >= 1;
        case Kind::singleton: return k == values_.front();
        case Kind::base3_no_ones: return has_no_base3_ones(k);
        case Kind::explicit_list: return std::binary_search(values_.begin(), values_.end(), k);
    }
    return false;
}

std::optional<std::uint64_t> LengthSet::max() const {
    switch (kind_) {
        case Kind::singleton:
        case Kind::explicit_list:
            if (values_.empty()) return 0;
            return values_.back();
        default: return std::nullopt;
    }
}

std::int64_t hap_sum(const Coloring& c, Hap hap) {
    require_hap(hap);
    std::int64_t sum = 0;
    for (std::uint64_t j = 1; j <= hap.length; ++j) sum += value(eval(c, j * hap.step));
    return sum;
}

bool is_h_balanced(const Coloring& c, Hap hap, std::uint64_t h) {
    return static_cast<std::uint64_t>(std::llabs(hap_sum(c, hap))) <= h;
}

std::int64_t majority_value(const Coloring& c, Hap hap) {
    return value(eval(c, hap.step)) * hap_sum(c, hap);
}

std::vector<StepMax> scan_steps(const SignSequence& table, std::uint64_t N, const CutePairSpec& filter,
                                unsigned threads) {
    if (N == 0) return {};
    if (table.start() != 1 || table.last() < N) throw range_error("scan table must cover 1..N");

    const std::uint64_t kcap = std::min<std::uint64_t>(N, filter.lengths.max().value_or(N));
    std::vector<std::uint8_t> admissible;
    const bool all_lengths = filter.lengths.kind() == LengthSet::Kind::all;
    if (!all_lengths) {
        admissible.assign(kcap + 1, 0);
        for (std::uint64_t k = 1; k <= kcap; ++k) admissible[k] = filter.lengths.contains(k) ? 1 : 0;
    }

    const auto steps = filter.steps.members(N);
    std::vector<StepMax> per_step(steps.size());
    const auto raw = table.raw();

    detail::parallel_for_interleaved(steps.size(), threads, [&](std::size_t i) {
        const std::uint64_t s = steps[i];
        const std::uint64_t kmax = std::min(N / s, kcap);
        StepMax out{s, 0, 0, 0};
        std::int64_t running = 0;
        for (std::uint64_t k = 1; k <= kmax; ++k) {
            running += raw[k * s - 1];
            if (!all_lengths && !admissible[k]) continue;
            const std::int64_t a = running < 0 ? -running : running;
            if (out.scanned == 0 || a > out.max_abs_sum) {
                out.max_abs_sum = a;
                out.length = k;
            }
            ++out.scanned;
        }
        per_step[i] = out;
    });

    std::erase_if(per_step, [](const StepMax& m) { return m.scanned == 0; });
    return per_step;
}

BalanceReport reduce(const std::vector<StepMax>& steps) {
    BalanceReport report;
    for (const StepMax& m : steps) {
        report.scanned += m.scanned;
        if (m.scanned == 0) continue;
        if (!report.witness || m.max_abs_sum > report.max_abs_sum) {
            report.max_abs_sum = m.max_abs_sum;
            report.witness = Hap{m.step, m.length};
        }
    }
    return report;
}

BalanceReport scan_max_discrepancy(const SignSequence& table, std::uint64_t N, const CutePairSpec& filter,
                                   unsigned threads) {
    return reduce(scan_steps(table, N, filter, threads));
}

BalanceReport scan_max_discrepancy(const Coloring& c, std::uint64_t N, const CutePairSpec& filter,
                                   unsigned threads) {
    if (N == 0) return {};
    return scan_max_discrepancy(materialize(c, N), N, filter, threads);
}

bool has_no_base3_ones(std::uint64_t k) {
    if (k == 0) return false;
    for (; k > 0; k /= 3)
        if (k % 3 == 1) return false;
    return true;
}

std::vector<std::uint64_t> base3_no_ones_up_to(std::uint64_t N) {
    // the i-th member is i written in binary, each 1-bit read as ternary digit 2;
    // the map preserves order
    std::vector<std::uint64_t> out;
    for (std::uint64_t bits = 1;; ++bits) {
        std::uint64_t v = 0;
        std::uint64_t place = 1;
        for (std::uint64_t b = bits; b > 0; b >>= 1, place *= 3)
            if (b & 1) v += 2 * place;
        if (v > N) break;
        out.push_back(v);
    }
    return out;
}

namespace {

std::vector<std::uint64_t> parse_uint_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw precondition_error("expected a comma-separated list of positive integers, got '" + text + "'");
        out.push_back(std::stoull(item));
    }
    if (out.empty()) throw precondition_error("empty list");
    return out;
}

}  // namespace

StepSet parse_step_set(const std::string& text) {
    if (text == "all") return StepSet::all();
    if (text == "odd") return StepSet::odd();
    return StepSet::list(parse_uint_list(text));
}

LengthSet parse_length_set(const std::string& text) {
    if (text == "all") return LengthSet::all();
    if (text == "base3free") return LengthSet::base3_no_ones();
    if (text.rfind("k=", 0) == 0) {
        const auto v = parse_uint_list(text.substr(2));
        if (v.size() != 1) throw precondition_error("k=<k> takes a single length");
        return LengthSet::singleton(v.front());
    }
    return LengthSet::list(parse_uint_list(text));
}

}  // namespace edp
