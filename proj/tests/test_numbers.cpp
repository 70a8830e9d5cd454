#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "classnum/numbers.hpp"
#include "support/oracles.hpp"

using namespace classnum;

TEST_CASE("gcd basics") {
    CHECK(gcd(Integer(0), Integer(7)) == 7);
    CHECK(gcd(Integer(9 - 1), Integer(2)) == 2);
    CHECK(gcd(Integer(3), Integer(4 - 1)) == 3);
}

TEST_CASE("arithmetic functions") {
    CHECK(euler_phi(Integer(12)) == 4);
    CHECK(euler_phi(Integer(1)) == 1);
    CHECK(moebius(Integer(12)) == 0);
    CHECK(moebius(Integer(6)) == 1);
    CHECK(moebius(Integer(30)) == -1);
    CHECK(divisors(Integer(6)) == std::vector<Integer>{1, 2, 3, 6});
    CHECK(divisors(Integer(1)) == std::vector<Integer>{1});
    CHECK_THROWS_AS(euler_phi(Integer(0)), std::invalid_argument);
    CHECK_THROWS_AS(moebius(Integer(0)), std::invalid_argument);
    CHECK_THROWS_AS(divisors(Integer(0)), std::invalid_argument);
}

TEST_CASE("phi and moebius agree with divisor sums") {
    // sum_{d|n} phi(d) = n and sum_{d|n} mu(d) = [n = 1]
    for (unsigned long n = 1; n <= 200; ++n) {
        Integer phi_sum = 0, mu_sum = 0;
        for (const auto& d : divisors(Integer(n))) {
            phi_sum += euler_phi(d);
            mu_sum += moebius(d);
        }
        CHECK(phi_sum == n);
        CHECK(mu_sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(5, 0) == 1);
    CHECK_THROWS_AS(binomial(3, 4), std::invalid_argument);
}

TEST_CASE("gaussian binomial") {
    CHECK(gaussian_binomial(4, 1, 2) == 15);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(4, 2, 2) == oracles::count_two_subspaces_gf2(4));
    CHECK_THROWS_AS(gaussian_binomial(4, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_binomial(4, 2, 1), std::invalid_argument);
}

TEST_CASE("gaussian binomial symmetry") {
    for (unsigned long d = 1; d <= 8; ++d)
        for (unsigned long k = 0; k <= d; ++k)
            for (unsigned long q : {2, 3, 4, 5})
                CHECK(gaussian_binomial(d, k, q) == gaussian_binomial(d, d - k, q));
}

TEST_CASE("integer roots") {
    CHECK(iroot(Integer(63), 2) == 7);
    CHECK(iroot(Integer(64), 2) == 8);
    CHECK(iroot(Integer(26), 3) == 2);
    CHECK(iroot(Integer("1000000000000000000000"), 3) == 10000000);
    CHECK_THROWS_AS(iroot(Integer(-4), 2), std::invalid_argument);
}

TEST_CASE("prime powers") {
    unsigned long p = 0, e = 0;
    CHECK(is_prime_power(9, p, e));
    CHECK(p == 3);
    CHECK(e == 2);
    CHECK(is_prime_power(128));
    CHECK(!is_prime_power(12));
    CHECK(!is_prime_power(1));
}

TEST_CASE("factorial matches products") {
    Integer f = 1;
    for (unsigned long n = 1; n <= 30; ++n) {
        f *= n;
        CHECK(factorial(n) == f);
    }
}
