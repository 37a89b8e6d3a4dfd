#include <doctest.h>

#include <random>
#include <sstream>

#include "edp/error.hpp"
#include "edp/signs.hpp"
#include "edp/signs_io.hpp"
#include "oracles.hpp"

using namespace edp;

namespace {

std::vector<int> as_ints(const SignSequence& s) {
    std::vector<int> out;
    for (std::int8_t v : s.raw()) out.push_back(v);
    return out;
}

}  // namespace

TEST_CASE("eval examples") {
    CHECK(eval(Coloring::liouville(), 1) == Sign::plus);
    CHECK(eval(Coloring::liouville(), 12) == Sign::minus);
    CHECK(eval(Coloring::bcc(), 7) == Sign::plus);
    CHECK(eval(Coloring::alternating(), 4) == Sign::minus);
    CHECK(eval(Coloring::bcc(), 3) == Sign::plus);
    CHECK(eval(Coloring::bcc(), 1) == Sign::plus);
    CHECK_THROWS_AS(eval(Coloring::liouville(), 0), precondition_error);
}

TEST_CASE("eval matches trial-division factorization") {
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        CHECK(value(eval(Coloring::liouville(), n)) == oracle::liouville(n));
        CHECK(value(eval(Coloring::bcc(), n)) == oracle::bcc(n));
    }
}

TEST_CASE("table-backed colorings answer only in range") {
    const auto c = Coloring::table(SignSequence(5, {1, -1, 1}));
    CHECK(eval(c, 6) == Sign::minus);
    CHECK_THROWS_AS(eval(c, 4), range_error);
    CHECK_THROWS_AS(eval(c, 8), range_error);
}

TEST_CASE("alternating is not multiplicative") {
    const auto alt = Coloring::alternating();
    CHECK(eval(alt, 4) != eval(alt, 2) * eval(alt, 2));
    CHECK_FALSE(alt.is_multiplicative());
}

TEST_CASE("prime assignment rejects composite keys") {
    CHECK_THROWS_AS(PrimeAssignment(DefaultRule::all_minus, {{4, Sign::plus}}), precondition_error);
    CHECK_THROWS_AS(PrimeAssignment(DefaultRule::all_minus, {{1, Sign::plus}}), precondition_error);
    CHECK_NOTHROW(PrimeAssignment(DefaultRule::all_minus, {{1000003, Sign::plus}}));
}

TEST_CASE("sieve_signs examples") {
    CHECK(as_ints(sieve_signs(PrimeAssignment::liouville(), 6)) == std::vector<int>{1, -1, -1, 1, -1, 1});
    CHECK(as_ints(sieve_signs(PrimeAssignment::bcc(), 7)) == std::vector<int>{1, -1, 1, 1, -1, -1, 1});
    CHECK(as_ints(sieve_signs(PrimeAssignment::liouville(), 1)) == std::vector<int>{1});
    CHECK(as_ints(sieve_signs(PrimeAssignment(DefaultRule::constant_plus), 1)) == std::vector<int>{1});
}

TEST_CASE("sieve_signs agrees with eval for overrides") {
    const PrimeAssignment a(DefaultRule::residue_mod3, {{2, Sign::plus}, {7, Sign::minus}, {101, Sign::minus}});
    const auto table = sieve_signs(a, 20000);
    for (std::uint64_t n = 1; n <= 20000; ++n) REQUIRE(table[n] == eval(Coloring::multiplicative(a), n));
}

TEST_CASE("complete multiplicativity") {
    std::mt19937_64 rng(7);
    for (const auto& a : {PrimeAssignment::liouville(), PrimeAssignment::bcc(),
                          PrimeAssignment(DefaultRule::constant_plus, {{3, Sign::minus}})}) {
        const auto table = sieve_signs(a, 100000);
        // exhaustive on a small square
        for (std::uint64_t x = 1; x <= 300; ++x)
            for (std::uint64_t y = 1; x * y <= 100000 && y <= 300; ++y) REQUIRE(table[x * y] == table[x] * table[y]);
        // random pairs over the whole range
        for (int i = 0; i < 20000; ++i) {
            const std::uint64_t x = 1 + rng() % 1000;
            const std::uint64_t y = 1 + rng() % (100000 / x);
            REQUIRE(table[x * y] == table[x] * table[y]);
        }
    }
}

TEST_CASE("sieve_segment examples") {
    const auto primes = sieve_primes(3);
    CHECK(as_ints(sieve_segment(PrimeAssignment::liouville(), 10, 12, primes)) == std::vector<int>{1, -1, -1});
    CHECK_THROWS_AS(sieve_segment(PrimeAssignment::liouville(), 10, 25, primes), precondition_error);
    CHECK_THROWS_AS(sieve_segment(PrimeAssignment::liouville(), 12, 10, primes), precondition_error);
}

TEST_CASE("sieve_segment single points agree with eval") {
    const auto primes = sieve_primes(1000);
    std::mt19937_64 rng(42);
    for (const auto& a : {PrimeAssignment::liouville(), PrimeAssignment::bcc(),
                          PrimeAssignment(DefaultRule::all_minus, {{2, Sign::plus}, {999983, Sign::plus}})}) {
        for (int i = 0; i < 1000; ++i) {
            const std::uint64_t n = 1 + rng() % 1'000'000;
            REQUIRE(sieve_segment(a, n, n, primes)[n] == eval(Coloring::multiplicative(a), n));
        }
    }
}

TEST_CASE("sieve_segment slices agree with sieve_signs") {
    const std::uint64_t N = 200000;
    const auto primes = sieve_primes(isqrt(N));
    std::mt19937_64 rng(3);
    for (const auto& a : {PrimeAssignment::liouville(), PrimeAssignment::bcc(),
                          PrimeAssignment(DefaultRule::constant_plus, {{5, Sign::minus}, {199999, Sign::minus}})}) {
        const auto whole = sieve_signs(a, N);
        CHECK(sieve_segment(a, 1, N, primes) == whole);
        for (int i = 0; i < 50; ++i) {
            const std::uint64_t lo = 1 + rng() % N;
            const std::uint64_t hi = lo + rng() % (N - lo + 1);
            const auto seg = sieve_segment(a, lo, hi, primes, whole.prefix_sum(lo - 1));
            REQUIRE(seg == whole.slice(lo, hi));
            REQUIRE(seg.prefix_sum(hi) == whole.prefix_sum(hi));
        }
    }
}

TEST_CASE("count_ones_base3") {
    CHECK(count_ones_base3(1) == 1);
    CHECK(count_ones_base3(16) == 2);
    CHECK(count_ones_base3(26) == 0);
    for (std::uint64_t k = 1; k < 100000; ++k) REQUIRE(count_ones_base3(k) == oracle::ternary_ones(k));
}

TEST_CASE("BCC prefix sums count ternary ones and respect the log bound") {
    const auto table = sieve_signs(PrimeAssignment::bcc(), 200000);
    for (std::uint64_t k = 1; k <= 200000; ++k) {
        const auto sum = table.prefix_sum(k);
        REQUIRE(sum == count_ones_base3(k));
        // ceil(log3 k) computed in integers
        std::int64_t ceil_log = 0;
        for (std::uint64_t p = 1; p < k; p *= 3) ++ceil_log;
        REQUIRE(sum >= 0);
        REQUIRE(sum <= ceil_log + 1);
    }
}

TEST_CASE("sign sequence prefix sums step by one") {
    const auto table = sieve_signs(PrimeAssignment::liouville(), 1000);
    CHECK(table.prefix_sum(0) == 0);
    for (std::uint64_t n = 1; n <= 1000; ++n) CHECK(std::llabs(table.prefix_sum(n) - table.prefix_sum(n - 1)) == 1);
    CHECK_THROWS_AS(table.prefix_sum(1001), range_error);
    CHECK_THROWS_AS(SignSequence(1, {1, 0, -1}), precondition_error);
}

TEST_CASE("EDPSIGNS layout") {
    std::vector<std::int8_t> raw(161);
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = (i % 3 == 0) ? 1 : -1;
    const SignSequence seq(7, raw);
    std::ostringstream out;
    write_edpsigns(out, seq);
    const std::string text = out.str();

    CHECK(text.rfind("EDPSIGNS v1 start=7 len=161\n", 0) == 0);
    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);
    std::vector<std::size_t> lengths;
    while (std::getline(lines, line)) lengths.push_back(line.size());
    CHECK(lengths == std::vector<std::size_t>{80, 80, 1});
    CHECK(text.back() == '\n');
    CHECK(text.find(' ', 28) == std::string::npos);

    std::istringstream in(text);
    CHECK(read_edpsigns(in) == seq);
}

TEST_CASE("EDPSIGNS round trip on random sequences") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t len = rng() % 400;
        std::vector<std::int8_t> raw(len);
        for (auto& v : raw) v = (rng() & 1) ? 1 : -1;
        const SignSequence seq(1 + rng() % 1000, raw);
        std::stringstream io;
        write_edpsigns(io, seq);
        REQUIRE(read_edpsigns(io) == seq);
    }
}

TEST_CASE("EDPSIGNS reader rejects malformed input") {
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return read_edpsigns(in);
    };
    CHECK_NOTHROW(parse("EDPSIGNS v1 start=1 len=3\n+-+\n"));
    CHECK_NOTHROW(parse("EDPSIGNS v1 start=1 len=0\n"));
    CHECK_THROWS_AS(parse("EDPSIGNS v2 start=1 len=3\n+-+\n"), format_error);
    CHECK_THROWS_AS(parse("EDPSIGNS v1 start=1 len=3\n+-+"), format_error);        // no final newline
    CHECK_THROWS_AS(parse("EDPSIGNS v1 start=1 len=3\n+-+ \n"), format_error);     // trailing whitespace
    CHECK_THROWS_AS(parse("EDPSIGNS v1 start=1 len=3\r\n+-+\n"), format_error);    // CR
    CHECK_THROWS_AS(parse("EDPSIGNS v1 start=1 len=4\n+-+\n"), format_error);      // count mismatch
    CHECK_THROWS_AS(parse("EDPSIGNS v1 start=0 len=1\n+\n"), format_error);
    CHECK_THROWS_AS(parse("EDPSIGNS v1 start=1 len=2\n+\n-\n"), format_error);     // short line before end
    CHECK_THROWS_AS(parse("EDPSIGNS v1 start=1 len=3\n+x+\n"), format_error);
    CHECK_THROWS_AS(parse("EDPSIGNS v1 start=1 len=1\n+\n\n"), format_error);      // empty line
}
