#include <doctest.h>

#include <cmath>

#include "edp/error.hpp"
#include "edp/primes.hpp"
#include "oracles.hpp"

using namespace edp;

TEST_CASE("sieve_primes small limits") {
    const auto t10 = sieve_primes(10);
    CHECK(std::vector<std::uint64_t>(t10.primes().begin(), t10.primes().end()) == std::vector<std::uint64_t>{2, 3, 5, 7});

    const auto t30 = sieve_primes(30);
    CHECK(t30.size() == 10);
    CHECK(t30.primes().back() == 29);

    const auto t2 = sieve_primes(2);
    REQUIRE(t2.size() == 1);
    CHECK(t2.primes()[0] == 2);
}

TEST_CASE("sieve_primes agrees with trial division") {
    const auto expected = oracle::primes_upto(20000);
    for (bool spf : {false, true}) {
        const auto t = sieve_primes(20000, spf);
        CHECK(std::vector<std::uint64_t>(t.primes().begin(), t.primes().end()) == expected);
    }
}

TEST_CASE("spf table holds the least prime factor") {
    const auto t = sieve_primes(5000, true);
    REQUIRE(t.has_spf());
    for (std::uint64_t n = 2; n <= 5000; ++n) CHECK(t.spf(n) == oracle::factorize(n).front().first);
}

TEST_CASE("is_prime") {
    for (std::uint64_t n = 0; n < 30000; ++n) CHECK(is_prime(n) == oracle::is_prime(n));
    CHECK(is_prime(2305843009213693951ULL));   // 2^61 - 1
    CHECK_FALSE(is_prime(3215031751ULL));      // strong pseudoprime to bases 2, 3, 5, 7
    CHECK_FALSE(is_prime(18446744073709551615ULL));
    CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
}

TEST_CASE("isqrt") {
    for (std::uint64_t n : {0ULL, 1ULL, 3ULL, 4ULL, 99ULL, 100ULL, 101ULL, 906150257ULL, 18446744073709551615ULL}) {
        const auto r = isqrt(n);
        CHECK((unsigned __int128)r * r <= n);
        CHECK((unsigned __int128)(r + 1) * (r + 1) > n);
    }
}

TEST_CASE("theta_3_1 examples") {
    const auto t = sieve_primes(100);
    CHECK(theta_3_1(6, t).theta == 0.0);
    CHECK(theta_3_1(6, t).terms == 0);
    CHECK(theta_3_1(7, t).theta == doctest::Approx(std::log(7.0)).epsilon(1e-12));
    CHECK(theta_3_1(1, t).theta == 0.0);
    CHECK_THROWS_AS(theta_3_1(101, t), precondition_error);
}

TEST_CASE("theta_3_1 matches direct enumeration and is monotone") {
    const auto t = sieve_primes(30000);
    double previous = 0.0;
    for (std::uint64_t x = 1; x <= 30000; x += 97) {
        double direct = 0.0;
        std::uint64_t terms = 0;
        for (std::uint64_t p : oracle::primes_upto(x))
            if (p % 3 == 1) {
                direct += std::log(double(p));
                ++terms;
            }
        const auto v = theta_3_1(x, t);
        CHECK(v.terms == terms);
        CHECK(v.theta == doctest::Approx(direct).epsilon(1e-9));
        CHECK(v.theta >= previous);
        previous = v.theta;
    }
}

TEST_CASE("count_f examples") {
    const auto t = sieve_primes(40000);
    CHECK(count_f(7, t) == 1);
    CHECK(count_f(2, t) == 0);
    // sympy enumeration of primes = 1 (mod 3) in (17377, 34754)
    CHECK(count_f(17377, t) == 854);
    CHECK(double(count_f(17377, t)) >= 0.47 * 17377 / std::log(34754.0));
    CHECK_THROWS_AS(count_f(20001, t), precondition_error);
}

TEST_CASE("count_f uses the open interval") {
    // 13 = 2 * 6.5 is never an endpoint; 7 is prime = 1 (mod 3): (7, 14) excludes 7, (6, 12) includes 7
    const auto t = sieve_primes(100);
    CHECK(count_f(6, t) == 1);   // {7}
    CHECK(count_f(7, t) == 1);   // {13}
    CHECK(count_f(13, t) == 1);  // {19}; 13 itself excluded
    for (std::uint64_t x = 1; x <= 50; ++x) {
        std::uint64_t direct = 0;
        for (std::uint64_t p = x + 1; p < 2 * x; ++p)
            if (oracle::is_prime(p) && p % 3 == 1) ++direct;
        CHECK(count_f(x, t) == direct);
    }
}

TEST_CASE("McCurley bracket and f bound") {
    const auto t = sieve_primes(2'000'000);
    const auto m = check_mccurley(17377, t);
    CHECK(m.pass);
    CHECK(m.theta == doctest::Approx(8523.985192254444).epsilon(1e-9));
    CHECK(check_mccurley(1'000'000, t).pass);
    CHECK_THROWS_AS(check_mccurley(17376, t), precondition_error);

    const auto f = check_f_bound(17377, t);
    CHECK(f.pass);
    CHECK(f.count == 854);
    const auto f6 = check_f_bound(1'000'000, t);
    CHECK(f6.pass);
    CHECK(f6.count == 35181);
    CHECK_THROWS_AS(check_f_bound(17000, t), precondition_error);
}
