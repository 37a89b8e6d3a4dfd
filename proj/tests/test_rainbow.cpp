#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "edp/discrepancy.hpp"
#include "edp/error.hpp"
#include "edp/rainbow.hpp"
#include "oracles.hpp"

using namespace edp;

namespace {

bool direct_adjacent(std::uint64_t r, std::uint64_t s, std::uint64_t k) {
    const std::uint64_t g = std::gcd(r, s);
    return r != s && r / g <= k && s / g <= k;
}

bool rainbow_brute(const KColoring& c, std::uint64_t N) {
    for (std::uint64_t s = 1; s * c.k() <= N; ++s) {
        std::set<std::uint32_t> seen;
        for (std::uint64_t j = 1; j <= c.k(); ++j) seen.insert(c.color(j * s));
        if (seen.size() != c.k()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("gk_adjacent examples") {
    CHECK(gk_adjacent(6, 9, 3));
    CHECK_FALSE(gk_adjacent(2, 5, 2));
    for (std::uint64_t n : {1, 7, 1000}) CHECK_FALSE(gk_adjacent(n, n, 5));
    for (std::uint64_t r = 1; r <= 60; ++r)
        for (std::uint64_t s = 1; s <= 60; ++s)
            for (std::uint64_t k = 1; k <= 6; ++k) REQUIRE(gk_adjacent(r, s, k) == direct_adjacent(r, s, k));
    CHECK_THROWS_AS(gk_adjacent(0, 3, 2), precondition_error);
}

TEST_CASE("HAPs induce cliques") {
    std::mt19937_64 rng(3);
    const GkGraph g(5, 3000);
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t kk = 1 + rng() % 5;
        const std::uint64_t s = 1 + rng() % (3000 / kk);
        for (std::uint64_t a = 1; a <= kk; ++a)
            for (std::uint64_t b = 1; b <= kk; ++b)
                if (a != b) REQUIRE(g.adjacent(a * s, b * s));
    }
}

TEST_CASE("pairwise and divisor-driven graphs agree") {
    for (std::uint64_t k : {1, 2, 3, 5, 8}) {
        const GkGraph pair(k, 1500, GraphBuild::pairwise);
        const GkGraph div(k, 1500, GraphBuild::divisor);
        CHECK(pair.edge_count() == div.edge_count());
        for (std::uint64_t v = 1; v <= 1500; ++v) REQUIRE(pair.neighbors(v) == div.neighbors(v));
        for (std::uint64_t v = 1; v <= 200; ++v)
            for (std::uint64_t u = 1; u <= 200; ++u) REQUIRE(pair.adjacent(u, v) == direct_adjacent(u, v, k));
    }
}

TEST_CASE("verify_rainbow examples") {
    const auto val = valuation_coloring(1000);
    const auto ok = verify_rainbow(val, 1000);
    CHECK(ok.ok);
    CHECK_FALSE(ok.step);
    CHECK(rainbow_brute(val, 1000));

    const KColoring constant(2, std::vector<std::uint32_t>(4, 0));
    const auto bad = verify_rainbow(constant, 4);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.step);
    CHECK(*bad.step == 1);
    REQUIRE(bad.clash);
    CHECK(bad.clash->first == 1);
    CHECK(bad.clash->second == 2);

    const KColoring single(1, std::vector<std::uint32_t>(50, 0));
    CHECK(verify_rainbow(single, 50).ok);

    CHECK_THROWS_AS(verify_rainbow(val, 1001), precondition_error);
    CHECK_THROWS_AS(KColoring(2, {0, 2}), precondition_error);
}

TEST_CASE("verify_rainbow agrees with a set-based check on random colorings") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint64_t k = 1 + rng() % 3;
        const std::uint64_t N = 1 + rng() % 40;
        std::vector<std::uint32_t> colors(N);
        for (auto& c : colors) c = static_cast<std::uint32_t>(rng() % k);
        const KColoring kc(k, colors);
        const auto r = verify_rainbow(kc, N);
        REQUIRE(r.ok == rainbow_brute(kc, N));
        if (!r.ok) {
            const auto [a, b] = *r.clash;
            CHECK(a % *r.step == 0);
            CHECK(b % *r.step == 0);
            CHECK(a < b);
            CHECK(b <= k * *r.step);
            CHECK(kc.color(a) == kc.color(b));
        }
    }
}

TEST_CASE("search_rainbow") {
    const auto two = search_rainbow(2, 100, 1'000'000);
    REQUIRE(two.status == RainbowStatus::found);
    CHECK(verify_rainbow(*two.coloring, 100).ok);
    CHECK(is_proper(*two.coloring, GkGraph(2, 100)));

    const auto one = search_rainbow(1, 10, 100);
    REQUIRE(one.status == RainbowStatus::found);
    CHECK(one.coloring->colors() == std::vector<std::uint32_t>(10, 0));

    const auto three = search_rainbow(3, 200, 10'000'000);
    MESSAGE("search_rainbow(3, 200): " << to_string(three.status) << " after " << three.nodes << " nodes");
    CHECK(three.status != RainbowStatus::budget_exceeded);
    if (three.coloring) {
        CHECK(verify_rainbow(*three.coloring, 200).ok);
        CHECK(is_proper(*three.coloring, GkGraph(3, 200)));
        const auto split = split_to_balanced(*three.coloring);
        CHECK(scan_max_discrepancy(split, 200, {StepSet::all(), LengthSet::singleton(3)}).max_abs_sum == 1);
    }

    const auto seeded = search_rainbow(2, 100, 1'000'000, 42);
    REQUIRE(seeded.coloring);
    CHECK(verify_rainbow(*seeded.coloring, 100).ok);
    CHECK(search_rainbow(2, 100, 1'000'000, 42).coloring == seeded.coloring);

    CHECK(search_rainbow(3, 200, 3).status == RainbowStatus::budget_exceeded);
    CHECK_THROWS_AS(search_rainbow(4, 3, 10), precondition_error);
}

TEST_CASE("graham_witness examples") {
    const auto w12 = graham_witness({1, 2});
    CHECK(w12.ratio == 2);
    CHECK(w12.holds);

    const auto w5 = graham_witness({2, 4, 6, 8, 10});
    CHECK(w5.ratio == 5);
    CHECK(w5.n == 5);
    CHECK(w5.holds);
    CHECK(w5.a / std::gcd(w5.a, w5.b) == 5);

    const auto w3 = graham_witness({6, 10, 15});
    CHECK(w3.ratio == 5);
    CHECK(w3.holds);

    CHECK_THROWS_AS(graham_witness({3, 3}), precondition_error);
    CHECK_THROWS_AS(graham_witness({3}), precondition_error);
    CHECK_THROWS_AS(graham_witness({0, 3}), precondition_error);
}

TEST_CASE("graham_witness matches an all-pairs scan on random sets") {
    std::mt19937_64 rng(1000);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + rng() % 11;
        std::set<std::uint64_t> s;
        while (s.size() < n) s.insert(1 + rng() % 500);
        const std::vector<std::uint64_t> values(s.begin(), s.end());
        const auto w = graham_witness(values);
        REQUIRE(w.ratio == oracle::graham_max_ratio(values));
        REQUIRE(w.holds);
        REQUIRE(w.n == n);
    }
}

TEST_CASE("split_to_balanced") {
    const auto split = split_to_balanced(valuation_coloring(1000));
    CHECK(scan_max_discrepancy(split, 1000, {StepSet::all(), LengthSet::singleton(2)}).max_abs_sum == 0);

    const auto ones = split_to_balanced(KColoring(1, std::vector<std::uint32_t>(20, 0)));
    for (std::uint64_t n = 1; n <= 20; ++n) CHECK(eval(ones, n) == Sign::plus);

    // colors 0,1 -> +1 and 2,3 -> -1 for k = 4
    const auto four = split_to_balanced(KColoring(4, {0, 1, 2, 3}));
    CHECK(eval(four, 2) == Sign::plus);
    CHECK(eval(four, 3) == Sign::minus);
}
