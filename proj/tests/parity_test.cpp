#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include <nsgap/errors.hpp>
#include <nsgap/oracle.hpp>
#include <nsgap/parity.hpp>
#include <nsgap/semigroup.hpp>

#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace nsgap;
using nsgap::testing::thrown_code;

TEST_CASE("apery_parity_stats splits the worked example correctly") {
    const auto g = validate_generators({6, 15, 20});

    const AperyParityStats s15 = apery_parity_stats(apery_set(g, 15));
    CHECK(s15.odd_count == 0);
    CHECK(s15.even_count == 15);

    const AperyParityStats s6 = apery_parity_stats(apery_set(g, 6));
    CHECK(s6.odd_sum == 105);
    CHECK(s6.even_sum == 60);

    const AperyParityStats s1 = apery_parity_stats(apery_set(validate_generators({1}), 1));
    CHECK(s1.odd_count == 0);
    CHECK(s1.even_count == 1);
    CHECK(s1.odd_sum == 0);
    CHECK(s1.even_sum == 0);
}

TEST_CASE("stats counts and sums partition the Apery set") {
    const auto g = validate_generators({7, 11, 13});
    for (std::int64_t t : {7, 11, 13, 14, 18}) {
        const AperySet ap = apery_set(g, t);
        const AperyParityStats s = apery_parity_stats(ap);
        CHECK(s.odd_count + s.even_count == static_cast<std::int64_t>(ap.size()));
        CHECK(s.odd_sum + s.even_sum == ap.sum());
    }
}

TEST_CASE("parity_difference_via_apery reproduces the worked example") {
    const auto g = validate_generators({6, 15, 20});

    const ParityReport odd_branch = parity_difference_via_apery(g, 15);
    CHECK(odd_branch.difference == 7);
    CHECK(odd_branch.method == ParityMethod::closed_form_odd_t);

    const ParityReport even_branch = parity_difference_via_apery(g, 6);
    CHECK(even_branch.difference == 7);
    CHECK(even_branch.method == ParityMethod::closed_form_even_t);

    const ParityReport small = parity_difference_via_apery(validate_generators({2, 3}), 2);
    CHECK(small.difference == 1);

    CHECK(thrown_code([&] { parity_difference_via_apery(g, 7); }) == errc::not_an_element);
}

TEST_CASE("t need not be a generating element") {
    const auto g = validate_generators({6, 15, 20});
    CHECK(parity_difference_via_apery(g, 35).difference == 7);
    CHECK(parity_difference_via_apery(g, 36).difference == 7);
}

TEST_CASE("parity_report_full fixture values") {
    const ParityReport r = parity_report_full(validate_generators({6, 15, 20}));
    CHECK(r.odd_gaps == 16);
    CHECK(r.even_gaps == 9);
    CHECK(r.difference == 7);

    const ParityReport trivial = parity_report_full(validate_generators({1}));
    CHECK(trivial.odd_gaps == 0);
    CHECK(trivial.even_gaps == 0);
    CHECK(trivial.difference == 0);

    CHECK(parity_report_full(validate_generators({30, 5, 2})).difference == 2);
}

TEST_CASE("difference is independent of the chosen element t") {
    nsgap::testing::Rng rng(20260814);
    for (int trial = 0; trial < 100; ++trial) {
        const auto gens = nsgap::testing::random_generators(rng, 5, 60);
        const auto g = validate_generators(gens);
        const std::int64_t expected = oracle::sieve_parity_difference(gens);
        CAPTURE(gens);

        const std::int64_t frob = frobenius(g);
        const std::int64_t limit = std::min<std::int64_t>(frob + g.smallest(), 120);
        bool saw_odd = false;
        bool saw_even = false;
        for (std::int64_t t = 1; t <= limit; ++t) {
            if (!contains(g, t)) {
                continue;
            }
            saw_odd = saw_odd || (t % 2 != 0);
            saw_even = saw_even || (t % 2 == 0);
            CHECK(parity_difference_via_apery(g, t).difference == expected);
        }
        // both branches exercised even when small elements share a parity:
        // frobenius+1 and frobenius+2 are members of opposite parities
        for (std::int64_t t : {frob + 1, frob + 2}) {
            if (t >= 1) {
                CHECK(parity_difference_via_apery(g, t).difference == expected);
            }
        }
        CHECK(parity_report_full(g).difference == expected);
    }
}

TEST_CASE("odd plus even equals genus in every full report") {
    nsgap::testing::Rng rng(917);
    for (int trial = 0; trial < 50; ++trial) {
        const auto gens = nsgap::testing::random_generators(rng, 5, 80);
        const auto g = validate_generators(gens);
        const ParityReport r = parity_report_full(g);
        REQUIRE(r.odd_gaps.has_value());
        REQUIRE(r.even_gaps.has_value());
        CHECK(*r.odd_gaps + *r.even_gaps == genus(g));
        CHECK(*r.odd_gaps - *r.even_gaps == r.difference);
    }
}
