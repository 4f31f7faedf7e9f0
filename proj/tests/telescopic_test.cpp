#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include <nsgap/errors.hpp>
#include <nsgap/oracle.hpp>
#include <nsgap/semigroup.hpp>
#include <nsgap/telescopic.hpp>

#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace nsgap;
using nsgap::testing::thrown_code;

TEST_CASE("analyze_sequence on the long worked example") {
    const TelescopicAnalysis an = analyze_sequence({120, 180, 100, 55, 22});
    CHECK(an.prefix_gcds == std::vector<std::int64_t>{120, 60, 20, 5, 1});
    CHECK(an.quotients == std::vector<std::int64_t>{2, 3, 4, 5});
    CHECK(an.is_telescopic);
    CHECK(an.first_odd_index == 3);
    CHECK(an.even_indices == std::vector<std::size_t>{0, 1, 2, 4});
}

TEST_CASE("analyze_sequence on the first worked example") {
    const TelescopicAnalysis an = analyze_sequence({6, 15, 20});
    CHECK(an.quotients == std::vector<std::int64_t>{2, 3});
    CHECK(an.is_telescopic);
    CHECK(an.first_odd_index == 1);
    CHECK(an.even_indices == std::vector<std::size_t>{0, 2});
}

TEST_CASE("single-term sequences are vacuously telescopic") {
    const TelescopicAnalysis an = analyze_sequence({7});
    CHECK(an.is_telescopic);
    CHECK(an.quotients.empty());
    CHECK(an.overall_gcd() == 7);
    CHECK_FALSE(an.generates_free_semigroup());

    CHECK(analyze_sequence({1}).generates_free_semigroup());
}

TEST_CASE("non-telescopic sequence is detected") {
    // c2 = 1 and t2 = 6, but 6 is not in <4,5>
    const TelescopicAnalysis an = analyze_sequence({4, 5, 6});
    CHECK_FALSE(an.is_telescopic);
}

TEST_CASE("telescopy does not require overall gcd 1") {
    const TelescopicAnalysis an = analyze_sequence({4, 6});
    CHECK(an.is_telescopic);
    CHECK(an.overall_gcd() == 2);
    CHECK_FALSE(an.generates_free_semigroup());
}

TEST_CASE("analyze_sequence input validation") {
    CHECK(thrown_code([] { analyze_sequence({}); }) == errc::empty_sequence);
    CHECK(thrown_code([] { analyze_sequence({4, 0, 3}); }) == errc::zero_or_negative_term);
}

TEST_CASE("free_apery_set equals the shortest-path construction") {
    const TelescopicAnalysis an = analyze_sequence({6, 15, 20});
    const AperySet free = free_apery_set(an);
    CHECK(free.elements_sorted() ==
          std::vector<std::int64_t>{0, 15, 20, 35, 40, 55});
    CHECK(free == apery_set(validate_generators({6, 15, 20}), 6));

    CHECK(free_apery_set(analyze_sequence({2, 3})).elements_sorted() ==
          std::vector<std::int64_t>{0, 3});
    CHECK(free_apery_set(analyze_sequence({1})).elements_sorted() ==
          std::vector<std::int64_t>{0});
}

TEST_CASE("free_apery_set preconditions") {
    CHECK(thrown_code([] { free_apery_set(analyze_sequence({4, 5, 6})); }) ==
          errc::not_telescopic);
    CHECK(thrown_code([] { free_apery_set(analyze_sequence({4, 6})); }) ==
          errc::gcd_not_one);
}

TEST_CASE("parity_difference_free fixture values") {
    CHECK(parity_difference_free(analyze_sequence({120, 180, 100, 55, 22})) == 27);
    CHECK(parity_difference_free(analyze_sequence({3, 5})) == 0);
    CHECK(parity_difference_free(analyze_sequence({6, 15, 20})) == 7);
}

TEST_CASE("parity_difference_one_odd fixture values") {
    CHECK(parity_difference_one_odd(analyze_sequence({120, 180, 100, 55, 22})) == 27);
    CHECK(parity_difference_one_odd(analyze_sequence({2, 3})) == 1);
    CHECK(parity_difference_one_odd(analyze_sequence({6, 15, 20})) == 7);

    // (4,6,3) is telescopic with one odd term, so the corollary applies;
    // the value matches the oracle on <3,4,6>
    CHECK(parity_difference_one_odd(analyze_sequence({4, 6, 3})) == 1);
    CHECK(oracle::sieve_parity_difference(std::vector<std::int64_t>{4, 6, 3}) == 1);

    // zero or two odd terms violate the precondition
    CHECK(thrown_code([] { parity_difference_one_odd(analyze_sequence({3, 5})); }) ==
          errc::precondition_not_met);
    // not telescopic at all is reported as such
    CHECK(thrown_code([] { parity_difference_one_odd(analyze_sequence({4, 5, 6})); }) ==
          errc::not_telescopic);
}

TEST_CASE("check_odd_dominance fixture values and minimality gate") {
    const OddDominance all_odd = check_odd_dominance(analyze_sequence({3, 5}));
    CHECK(all_odd.difference == 0);
    CHECK(all_odd.all_terms_odd);

    const OddDominance mixed = check_odd_dominance(analyze_sequence({6, 15, 20}));
    CHECK(mixed.difference == 7);
    CHECK_FALSE(mixed.all_terms_odd);

    const OddDominance large = check_odd_dominance(analyze_sequence({120, 180, 100, 55, 22}));
    CHECK(large.difference == 27);
    CHECK_FALSE(large.all_terms_odd);

    CHECK(thrown_code([] { check_odd_dominance(analyze_sequence({30, 5, 2})); }) ==
          errc::not_minimal);
}

TEST_CASE("alternating sums match direct evaluation for small cases") {
    for (std::int64_t c = 1; c <= 20; ++c) {
        for (std::int64_t t = 1; t <= 20; ++t) {
            std::int64_t direct = 0;
            for (std::int64_t n = 0; n < c; ++n) {
                direct += (n * t) % 2 == 0 ? 1 : -1;
            }
            CHECK(alternating_term_sum(c, t) == direct);
        }
    }
}

TEST_CASE("prefix gcds equal suffix quotient products on random telescopic input") {
    nsgap::testing::Rng rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        const auto terms = nsgap::testing::random_telescopic(rng);
        const TelescopicAnalysis an = analyze_sequence(terms);
        REQUIRE(an.is_telescopic);
        REQUIRE(an.overall_gcd() == 1);
        CAPTURE(terms);

        const std::size_t k = an.quotients.size();
        for (std::size_t j = 1; j <= k; ++j) {
            std::int64_t prod = 1;
            for (std::size_t i = j; i <= k; ++i) {
                prod *= an.quotients[i - 1];
            }
            CHECK(prod == an.prefix_gcds[j - 1]);
        }
    }
}

TEST_CASE("free apery and free difference agree with core and oracle on random input") {
    nsgap::testing::Rng rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        const auto terms = nsgap::testing::random_telescopic(rng);
        const TelescopicAnalysis an = analyze_sequence(terms);
        CAPTURE(terms);

        const auto g = validate_generators(terms);
        CHECK(free_apery_set(an) == apery_set(g, terms.front()));
        CHECK(parity_difference_free(an) == oracle::sieve_parity_difference(terms));
    }
}
