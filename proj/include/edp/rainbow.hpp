#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "edp/signs.hpp"

namespace edp {

/// r ~ s in G_k iff r != s, r/gcd(r,s) <= k and s/gcd(r,s) <= k.
bool gk_adjacent(std::uint64_t r, std::uint64_t s, std::uint64_t k);

enum class GraphBuild {
    automatic,  // pairwise for N <= 5000, divisor-driven above
    pairwise,
    divisor,
};

/// G_k restricted to {1..N}; neighbor lists are ascending.
class GkGraph {
public:
    GkGraph(std::uint64_t k, std::uint64_t N, GraphBuild method = GraphBuild::automatic);

    std::uint64_t k() const { return k_; }
    std::uint64_t size() const { return n_; }
    const std::vector<std::uint32_t>& neighbors(std::uint64_t v) const { return adj_[v]; }
    bool adjacent(std::uint64_t u, std::uint64_t v) const;
    std::uint64_t edge_count() const;

private:
    std::uint64_t k_;
    std::uint64_t n_;
    std::vector<std::vector<std::uint32_t>> adj_;  // index 0 unused
};

/// Colors 0..k-1 for each of 1..N.
class KColoring {
public:
    KColoring(std::uint64_t k, std::vector<std::uint32_t> colors);

    std::uint64_t k() const { return k_; }
    std::uint64_t size() const { return colors_.size(); }
    std::uint32_t color(std::uint64_t n) const { return colors_.at(n - 1); }
    const std::vector<std::uint32_t>& colors() const { return colors_; }

    bool operator==(const KColoring&) const = default;

private:
    std::uint64_t k_;
    std::vector<std::uint32_t> colors_;
};

/// n -> (2-adic valuation of n) mod 2; rainbow for k = 2.
KColoring valuation_coloring(std::uint64_t N);

struct RainbowReport {
    bool ok = true;
    std::optional<std::uint64_t> step;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> clash;  // two members of A_{step,k} sharing a color
};

/// Every A_{s,k} with s*k <= N receives k distinct colors.
RainbowReport verify_rainbow(const KColoring& coloring, std::uint64_t N);

/// No edge of `graph` joins two vertices of equal color.
bool is_proper(const KColoring& coloring, const GkGraph& graph);

enum class RainbowStatus { found, exhausted, budget_exceeded };

std::string to_string(RainbowStatus status);

struct RainbowSearch {
    RainbowStatus status = RainbowStatus::exhausted;
    std::optional<KColoring> coloring;
    std::uint64_t nodes = 0;
};

/// Backtracking proper k-coloring of G_k on {1..N}: vertices ascending,
/// least-used admissible color first (ties to the lower index). A seed
/// shuffles the color order instead. Assignments that empty the palette of a
/// later neighbor are rejected on the spot.
RainbowSearch search_rainbow(std::uint64_t k, std::uint64_t N, std::uint64_t node_budget,
                             std::optional<std::uint64_t> seed = std::nullopt);

struct GrahamWitness {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t ratio = 0;  // a / gcd(a, b), always an integer
    std::uint64_t n = 0;
    bool holds = false;       // ratio >= n
};

/// Maximizes a/gcd(a,b) over ordered pairs of distinct values (first maximizer in ascending order).
GrahamWitness graham_witness(std::vector<std::uint64_t> values);

/// Colors below ceil(k/2) become +1, the rest -1.
Coloring split_to_balanced(const KColoring& coloring);

}  // namespace edp
