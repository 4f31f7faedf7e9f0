#pragma once

// Seeded random inputs for property tests. Everything is deterministic per
// seed so failures reproduce; tests print the seed they use.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <nsgap/compound.hpp>
#include <nsgap/telescopic.hpp>

namespace nsgap::testing {

using Rng = std::mt19937_64;

inline std::int64_t draw(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Generators with gcd 1: up to max_terms values in [2, max_value], redrawn
/// until the gcd condition holds. Unsorted, duplicates allowed.
inline std::vector<std::int64_t> random_generators(Rng& rng, int max_terms = 5,
                                                   std::int64_t max_value = 80) {
    for (;;) {
        const auto k = static_cast<std::size_t>(draw(rng, 1, max_terms));
        std::vector<std::int64_t> terms(k);
        for (auto& t : terms) {
            t = draw(rng, 2, max_value);
        }
        std::int64_t g = 0;
        for (auto t : terms) {
            g = std::gcd(g, t);
        }
        if (g == 1) {
            return terms;
        }
    }
}

/// Suitable pair with terms in [lo, hi] and length in [1, max_len]; redraws
/// the whole pair until the gcd(a_i, b_j) = 1 (i >= j) condition holds.
inline SuitablePair random_suitable_pair(Rng& rng, int max_len = 5,
                                         std::int64_t lo = 2, std::int64_t hi = 9) {
    for (;;) {
        const auto p = static_cast<std::size_t>(draw(rng, 1, max_len));
        std::vector<std::int64_t> a(p);
        std::vector<std::int64_t> b(p);
        for (auto& t : a) {
            t = draw(rng, lo, hi);
        }
        for (auto& t : b) {
            t = draw(rng, lo, hi);
        }
        bool ok = true;
        for (std::size_t i = 0; i < p && ok; ++i) {
            for (std::size_t j = 0; j <= i && ok; ++j) {
                ok = std::gcd(a[i], b[j]) == 1;
            }
        }
        if (ok) {
            return validate_pair(std::move(a), std::move(b));
        }
    }
}

/// Telescopic sequence with gcd 1. Half the draws come from compound
/// sequences (telescopic by construction), half from the direct recipe:
/// pick quotients c_i >= 2, let t_0 be their product, then extend with
/// random combinations of the prefix divided by c_j. The recipe can produce
/// non-telescopic sequences, so candidates are filtered through
/// analyze_sequence rather than trusted.
inline std::vector<std::int64_t> random_telescopic(Rng& rng) {
    if (draw(rng, 0, 1) == 0) {
        return build_compound(random_suitable_pair(rng, 4, 2, 7)).terms;
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        const auto k = static_cast<std::size_t>(draw(rng, 1, 3));
        std::vector<std::int64_t> c(k);
        std::int64_t t0 = 1;
        for (auto& q : c) {
            q = draw(rng, 2, 4);
            t0 *= q;
        }
        std::vector<std::int64_t> terms{t0};
        bool built = true;
        for (std::size_t j = 1; j <= k && built; ++j) {
            built = false;
            for (int tries = 0; tries < 32; ++tries) {
                std::int64_t combo = 0;
                for (auto t : terms) {
                    combo += draw(rng, 0, 3) * t;
                }
                if (combo > 0 && combo % c[j - 1] == 0) {
                    terms.push_back(combo / c[j - 1]);
                    built = true;
                    break;
                }
            }
        }
        if (!built) {
            continue;
        }
        const TelescopicAnalysis an = analyze_sequence(terms);
        if (an.is_telescopic && an.overall_gcd() == 1) {
            return terms;
        }
    }
    return build_compound(random_suitable_pair(rng, 4, 2, 7)).terms;
}

} // namespace nsgap::testing
