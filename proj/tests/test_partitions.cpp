#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <thread>

#include "classnum/liecount.hpp"
#include "classnum/partitions.hpp"
#include "support/oracles.hpp"

using namespace classnum;

TEST_CASE("partition counts against enumeration") {
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(5) == 7);
    for (unsigned long d = 0; d <= 40; ++d)
        CHECK(partition_count(d) == oracles::count_partitions_enumerated(d));
}

TEST_CASE("pentagonal recurrence against the DP oracle") {
    for (unsigned long d = 0; d <= 500; ++d)
        CHECK(partition_count(d) == oracles::partition_count_dp(d));
}

TEST_CASE("classification of small degrees") {
    const auto c5 = classify(5);
    CHECK(c5.total == 7);
    CHECK(c5.even_count == 4);
    CHECK(c5.odd_count == 3);
    CHECK(c5.distinct_odd_count == 1);
    // {3,1} is the only partition of 4 into distinct odd parts
    CHECK(classify(4).distinct_odd_count == 1);
}

TEST_CASE("classification against enumeration") {
    for (unsigned long d = 1; d <= 30; ++d) {
        unsigned long even = 0, odd = 0, distinct_odd = 0;
        oracles::enumerate_partitions(d, [&](const std::vector<unsigned long>& parts) {
            if ((d - parts.size()) % 2 == 0)
                ++even;
            else
                ++odd;
            bool dodd = true;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (parts[i] % 2 == 0) dodd = false;
                if (i + 1 < parts.size() && parts[i] == parts[i + 1]) dodd = false;
            }
            if (dodd) ++distinct_odd;
        });
        const auto c = classify(d);
        CHECK(c.even_count == even);
        CHECK(c.odd_count == odd);
        CHECK(c.distinct_odd_count == distinct_odd);
    }
}

TEST_CASE("classification total is the partition count") {
    for (unsigned long d = 1; d <= 500; ++d)
        CHECK(classify(d).total == partition_count(d));
}

TEST_CASE("symmetric and alternating class numbers") {
    CHECK(k_symmetric(5) == 7);
    CHECK(k_alternating(5) == 5);
    CHECK(k_symmetric(6) == 11);
    CHECK(k_alternating(6) == 7);
    CHECK(k_alternating(7) == 9);
    CHECK(k_alternating(8) == 14);
    CHECK(k_symmetric(8) == 22);
    CHECK_THROWS_AS(k_symmetric(0), std::invalid_argument);
    CHECK_THROWS_AS(k_alternating(0), std::invalid_argument);
}

TEST_CASE("alternating split formula agrees across the d=9/10 seam") {
    // the enumeration path (d <= 9) and the DP path (d >= 10) compute the
    // same split count
    for (unsigned long d = 2; d <= 14; ++d) {
        const auto c = classify(d);
        CHECK(k_alternating(d) == c.even_count + c.distinct_odd_count);
    }
}

TEST_CASE("alternating at most symmetric") {
    for (unsigned long d = 2; d <= 200; ++d) {
        CHECK(k_alternating(d) <= k_symmetric(d));
        if (d >= 4) CHECK(k_alternating(d) < k_symmetric(d));
    }
}

TEST_CASE("two distinct odd parts") {
    CHECK(two_distinct_odd_count(10) == 2);
    CHECK(two_distinct_odd_count(12) == 3);
    CHECK(two_distinct_odd_count(16) == 4);
    CHECK_THROWS_AS(two_distinct_odd_count(9), std::invalid_argument);
    for (unsigned long l = 10; l <= 200; l += 2)
        CHECK(two_distinct_odd_count(l) == oracles::two_distinct_odd_enumerated(l));
}

TEST_CASE("partition growth bound") {
    CHECK(check_pribitkin(1));
    CHECK(check_pribitkin(100));
    CHECK_THROWS_AS(check_pribitkin(0), std::invalid_argument);
}

TEST_CASE("partition growth bound sweeps to d = 2000") {
    for (unsigned long d = 1; d <= 2000; ++d) {
        INFO("d = ", d);
        CHECK(check_pribitkin(d));
    }
}

TEST_CASE("factorial bounds") {
    CHECK(check_stirling(2));
    CHECK(check_stirling(10));
    CHECK(check_stirling(97));
    CHECK_THROWS_AS(check_stirling(1), std::invalid_argument);
}

TEST_CASE("primitive order bound") {
    CHECK(check_praeger_saxl(Integer(95040), 12));
    CHECK(!check_praeger_saxl(int_pow(Integer(4), 5), 5));
    CHECK(check_praeger_saxl(Integer(1), 1));
}

TEST_CASE("degree thresholds") {
    CHECK(max_d_satisfying("alternating-primitive") == 20);
    CHECK(max_d_satisfying("alternating-imprimitive") == 19);
    CHECK(max_d_satisfying("imprimitive-growth") == 25);
    CHECK_THROWS_AS(max_d_satisfying("no-such-chain"), std::invalid_argument);
}

TEST_CASE("the imprimitive chain fails from d=21 on") {
    const auto& chains = inequality_chains();
    const InequalityChain* chain = nullptr;
    for (const auto& c : chains)
        if (c.name == "alternating-imprimitive") chain = &c;
    REQUIRE(chain != nullptr);
    const Verdict v =
        decide([&](unsigned digits) { return chain->probe(21, digits); });
    CHECK(v == Verdict::fails);
}

TEST_CASE("concurrent use of the partition cache") {
    std::vector<std::thread> workers;
    std::atomic<bool> ok{true};
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&, t] {
            for (unsigned long d = 1; d <= 300; ++d)
                if (partition_count(d + static_cast<unsigned long>(t)) !=
                    oracles::partition_count_dp(d + static_cast<unsigned long>(t)))
                    ok = false;
        });
    for (auto& w : workers) w.join();
    CHECK(ok);
}

TEST_CASE("imprimitive index lower bound") {
    // n = d!/(k!^l l!) >= l^(d-l) / k^(l/2), squared to stay integral
    for (unsigned long d = 4; d <= 30; ++d)
        for (unsigned long l = 2; l < d; ++l) {
            if (d % l != 0) continue;
            const unsigned long k = d / l;
            if (k < 2) continue;
            const Integer n = degree_imprimitive(d, k, l);
            CHECK(n * n * int_pow(Integer(k), l) >=
                  int_pow(Integer(l), 2 * (d - l)));
        }
}
