#include "edp/rainbow.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "edp/error.hpp"

namespace edp {

namespace {

constexpr std::uint64_t kPairwiseLimit = 5000;
constexpr std::uint32_t kUncolored = UINT32_MAX;

}  // namespace

bool gk_adjacent(std::uint64_t r, std::uint64_t s, std::uint64_t k) {
    if (r == 0 || s == 0) throw precondition_error("G_k vertices are positive integers");
    if (r == s) return false;
    const std::uint64_t g = std::gcd(r, s);
    return r / g <= k && s / g <= k;
}

GkGraph::GkGraph(std::uint64_t k, std::uint64_t N, GraphBuild method) : k_(k), n_(N), adj_(N + 1) {
    if (k == 0) throw precondition_error("G_k needs k >= 1");
    if (N > UINT32_MAX) throw precondition_error("G_k vertex bound too large");
    if (method == GraphBuild::automatic) method = N <= kPairwiseLimit ? GraphBuild::pairwise : GraphBuild::divisor;

    if (method == GraphBuild::pairwise) {
        for (std::uint64_t u = 1; u <= N; ++u)
            for (std::uint64_t v = u + 1; v <= N; ++v)
                if (gk_adjacent(u, v, k)) {
                    adj_[u].push_back(static_cast<std::uint32_t>(v));
                    adj_[v].push_back(static_cast<std::uint32_t>(u));
                }
        for (auto& list : adj_) std::sort(list.begin(), list.end());
        return;
    }

    // neighbors of v are (v/a)*b for a | v, a <= k, b <= k, b != a, gcd(a, b) = 1
    for (std::uint64_t v = 1; v <= N; ++v) {
        auto& list = adj_[v];
        for (std::uint64_t a = 1; a <= k && a <= v; ++a) {
            if (v % a != 0) continue;
            const std::uint64_t g = v / a;
            for (std::uint64_t b = 1; b <= k; ++b) {
                if (b == a || std::gcd(a, b) != 1) continue;
                const std::uint64_t u = g * b;
                if (u <= N) list.push_back(static_cast<std::uint32_t>(u));
            }
        }
        std::sort(list.begin(), list.end());
    }
}

bool GkGraph::adjacent(std::uint64_t u, std::uint64_t v) const {
    if (u == 0 || u > n_) return false;
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), static_cast<std::uint32_t>(v));
}

std::uint64_t GkGraph::edge_count() const {
    std::uint64_t twice = 0;
    for (const auto& list : adj_) twice += list.size();
    return twice / 2;
}

KColoring::KColoring(std::uint64_t k, std::vector<std::uint32_t> colors) : k_(k), colors_(std::move(colors)) {
    if (k == 0) throw precondition_error("k-coloring needs k >= 1");
    for (std::uint32_t c : colors_)
        if (c >= k) throw precondition_error("color index out of range");
}

KColoring valuation_coloring(std::uint64_t N) {
    std::vector<std::uint32_t> colors(N);
    for (std::uint64_t n = 1; n <= N; ++n) colors[n - 1] = static_cast<std::uint32_t>(std::countr_zero(n) % 2);
    return KColoring(2, std::move(colors));
}

RainbowReport verify_rainbow(const KColoring& coloring, std::uint64_t N) {
    if (coloring.size() < N) throw precondition_error("coloring does not cover 1..N");
    const std::uint64_t k = coloring.k();
    RainbowReport report;
    // seen[c] holds the multiplier j that last produced color c within the current step
    std::vector<std::uint64_t> seen(k, 0);
    std::vector<std::uint64_t> stamp(k, 0);
    for (std::uint64_t s = 1; s * k <= N; ++s) {
        for (std::uint64_t j = 1; j <= k; ++j) {
            const std::uint32_t c = coloring.color(j * s);
            if (stamp[c] == s) {
                report.ok = false;
                report.step = s;
                report.clash = std::make_pair(seen[c] * s, j * s);
                return report;
            }
            stamp[c] = s;
            seen[c] = j;
        }
    }
    return report;
}

bool is_proper(const KColoring& coloring, const GkGraph& graph) {
    if (coloring.size() < graph.size()) throw precondition_error("coloring does not cover the graph");
    for (std::uint64_t v = 1; v <= graph.size(); ++v)
        for (std::uint32_t u : graph.neighbors(v))
            if (u > v && coloring.color(u) == coloring.color(v)) return false;
    return true;
}

std::string to_string(RainbowStatus status) {
    switch (status) {
        case RainbowStatus::found: return "found";
        case RainbowStatus::exhausted: return "exhausted";
        case RainbowStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

RainbowSearch search_rainbow(std::uint64_t k, std::uint64_t N, std::uint64_t node_budget,
                             std::optional<std::uint64_t> seed) {
    if (k == 0) throw precondition_error("search_rainbow needs k >= 1");
    if (N < k) throw precondition_error("search_rainbow needs N >= k");

    const GkGraph graph(k, N);
    std::vector<std::uint32_t> colors(N + 1, kUncolored);
    std::vector<std::uint64_t> used(k, 0);
    // forward checking: blocked[u*k + c] counts colored neighbors of u holding c,
    // open[u] the colors still available to u
    std::vector<std::uint32_t> blocked((N + 1) * k, 0);
    std::vector<std::uint32_t> open(N + 1, static_cast<std::uint32_t>(k));
    std::vector<std::vector<std::uint32_t>> candidates(N + 1);
    std::vector<std::size_t> next(N + 1, 0);
    std::optional<std::mt19937_64> rng;
    if (seed) rng.emplace(*seed);

    auto build_candidates = [&](std::uint64_t v) {
        auto& cand = candidates[v];
        cand.clear();
        for (std::uint32_t c = 0; c < k; ++c)
            if (blocked[v * k + c] == 0) cand.push_back(c);
        if (rng)
            std::shuffle(cand.begin(), cand.end(), *rng);
        else
            std::stable_sort(cand.begin(), cand.end(), [&](std::uint32_t a, std::uint32_t b) { return used[a] < used[b]; });
        next[v] = 0;
    };

    auto later = [&](std::uint64_t v) {
        const auto& nb = graph.neighbors(v);
        return std::upper_bound(nb.begin(), nb.end(), static_cast<std::uint32_t>(v));
    };

    // Returns false (and leaves nothing changed) if some later neighbor loses its last color.
    auto assign = [&](std::uint64_t v, std::uint32_t c) {
        const auto& nb = graph.neighbors(v);
        const auto first = later(v);
        for (auto it = first; it != nb.end(); ++it) {
            const std::uint64_t u = *it;
            if (blocked[u * k + c]++ == 0 && --open[u] == 0) {
                for (auto back = first; back != it + 1; ++back)
                    if (--blocked[*back * k + c] == 0) ++open[*back];
                return false;
            }
        }
        colors[v] = c;
        ++used[c];
        return true;
    };

    auto unassign = [&](std::uint64_t v) {
        const std::uint32_t c = colors[v];
        const auto& nb = graph.neighbors(v);
        for (auto it = later(v); it != nb.end(); ++it)
            if (--blocked[*it * k + c] == 0) ++open[*it];
        --used[c];
        colors[v] = kUncolored;
    };

    RainbowSearch out;
    std::uint64_t v = 1;
    bool entering = true;
    while (v <= N) {
        if (entering) build_candidates(v);
        if (next[v] < candidates[v].size()) {
            if (out.nodes >= node_budget) {
                out.status = RainbowStatus::budget_exceeded;
                return out;
            }
            ++out.nodes;
            if (assign(v, candidates[v][next[v]++])) {
                ++v;
                entering = true;
            } else {
                entering = false;
            }
            continue;
        }
        if (v == 1) {
            out.status = RainbowStatus::exhausted;
            return out;
        }
        --v;
        unassign(v);
        entering = false;
    }

    out.status = RainbowStatus::found;
    out.coloring = KColoring(k, std::vector<std::uint32_t>(colors.begin() + 1, colors.end()));
    return out;
}

GrahamWitness graham_witness(std::vector<std::uint64_t> values) {
    std::sort(values.begin(), values.end());
    if (values.size() < 2) throw precondition_error("graham_witness needs at least two values");
    if (values.front() == 0) throw precondition_error("values must be positive");
    if (std::adjacent_find(values.begin(), values.end()) != values.end())
        throw precondition_error("values must be distinct");

    GrahamWitness w;
    w.n = values.size();
    for (std::uint64_t a : values) {
        for (std::uint64_t b : values) {
            if (a == b) continue;
            const std::uint64_t ratio = a / std::gcd(a, b);
            if (ratio > w.ratio) {
                w.ratio = ratio;
                w.a = a;
                w.b = b;
            }
        }
    }
    w.holds = w.ratio >= w.n;
    return w;
}

Coloring split_to_balanced(const KColoring& coloring) {
    const std::uint64_t half = (coloring.k() + 1) / 2;
    std::vector<std::int8_t> signs(coloring.size());
    for (std::uint64_t i = 0; i < coloring.size(); ++i) signs[i] = coloring.colors()[i] < half ? 1 : -1;
    return Coloring::table(SignSequence(1, std::move(signs), 0));
}

}  // namespace edp
