#include "nsgap/compound.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "nsgap/checked.hpp"
#include "nsgap/errors.hpp"

namespace nsgap {
namespace {

// Apery enumeration touches one table slot per residue class.
constexpr std::int64_t kMaxEnumeration = std::int64_t{1} << 24;

std::int64_t product_range(const std::vector<std::int64_t>& v,
                           std::size_t first, std::size_t last) {
    // 1-based inclusive range; empty when first > last.
    std::int64_t p = 1;
    for (std::size_t i = first; i <= last && i >= 1; ++i) {
        p = checked_mul(p, v[i - 1]);
    }
    return p;
}

} // namespace

SuitablePair validate_pair(std::vector<std::int64_t> a_raw,
                           std::vector<std::int64_t> b_raw) {
    if (a_raw.size() != b_raw.size()) {
        throw error(errc::length_mismatch,
                    "pair sequences have lengths " + std::to_string(a_raw.size()) +
                        " and " + std::to_string(b_raw.size()));
    }
    if (a_raw.empty()) {
        throw error(errc::empty_sequence, "pair sequences are empty");
    }
    for (std::int64_t t : a_raw) {
        if (t <= 0) {
            throw error(errc::zero_or_negative_term,
                        "pair term " + std::to_string(t) + " is not positive");
        }
    }
    for (std::int64_t t : b_raw) {
        if (t <= 0) {
            throw error(errc::zero_or_negative_term,
                        "pair term " + std::to_string(t) + " is not positive");
        }
    }
    for (std::size_t i = 0; i < a_raw.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const std::int64_t g = std::gcd(a_raw[i], b_raw[j]);
            if (g != 1) {
                throw error(errc::not_suitable,
                            "gcd(a_" + std::to_string(i + 1) + ", b_" +
                                std::to_string(j + 1) + ") = " + std::to_string(g));
            }
        }
    }
    return SuitablePair(std::move(a_raw), std::move(b_raw));
}

CompoundSequence build_compound(const SuitablePair& pair) {
    const auto& a = pair.a_terms();
    const auto& b = pair.b_terms();
    std::vector<std::int64_t> terms;
    terms.reserve(pair.length() + 1);

    std::int64_t n = 1;
    for (std::int64_t t : a) {
        n = checked_mul(n, t);
    }
    terms.push_back(n);
    for (std::size_t i = 0; i < pair.length(); ++i) {
        // n_{i-1} = b_1..b_{i-1} a_i..a_p, so dividing by a_i first is exact
        // and keeps the intermediate below n_{i-1} * b_i.
        if (n % a[i] != 0) {
            throw internal_error(errc::internal_inconsistency,
                                 "compound term not divisible by a_" +
                                     std::to_string(i + 1));
        }
        n = checked_mul(n / a[i], b[i]);
        terms.push_back(n);
    }
    return CompoundSequence{std::move(terms), pair};
}

std::size_t first_even_index(std::span<const std::int64_t> z) {
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] % 2 == 0) {
            return i + 1;
        }
    }
    return z.size() + 1;
}

std::size_t last_even_index(std::span<const std::int64_t> z) {
    for (std::size_t i = z.size(); i > 0; --i) {
        if (z[i - 1] % 2 == 0) {
            return i;
        }
    }
    return 0;
}

std::int64_t parity_difference_compound(const SuitablePair& pair) {
    const auto& a = pair.a_terms();
    const auto& b = pair.b_terms();
    const std::size_t p = pair.length();

    const std::size_t m2 = first_even_index(b);
    const std::size_t big_m2 = last_even_index(a);
    const std::int64_t alpha = product_range(a, m2, p);
    const std::int64_t beta = product_range(b, 1, big_m2);

    const std::int64_t ab = checked_mul(alpha, beta);
    if (ab % 2 == 0) {
        throw internal_error(errc::internal_non_integer,
                             "compound parity product is even");
    }
    return (ab - 1) / 2;
}

ParityEqualityCriterion parity_equality_criterion(const SuitablePair& pair) {
    for (std::int64_t t : pair.a_terms()) {
        if (t < 2) {
            throw error(errc::precondition_not_met,
                        "criterion needs every pair term >= 2, got " +
                            std::to_string(t));
        }
    }
    for (std::int64_t t : pair.b_terms()) {
        if (t < 2) {
            throw error(errc::precondition_not_met,
                        "criterion needs every pair term >= 2, got " +
                            std::to_string(t));
        }
    }

    ParityEqualityCriterion out;
    out.diff_zero = parity_difference_compound(pair) == 0;

    const CompoundSequence cs = build_compound(pair);
    out.all_compound_terms_odd =
        std::all_of(cs.terms.begin(), cs.terms.end(),
                    [](std::int64_t t) { return t % 2 != 0; });

    const auto odd = [](std::int64_t t) { return t % 2 != 0; };
    out.all_pair_terms_odd =
        std::all_of(pair.a_terms().begin(), pair.a_terms().end(), odd) &&
        std::all_of(pair.b_terms().begin(), pair.b_terms().end(), odd);
    return out;
}

std::int64_t parity_difference_geometric(std::int64_t a, std::int64_t b,
                                         std::int64_t k) {
    if (a <= 0 || b <= 0) {
        throw error(errc::zero_or_negative_term,
                    "geometric ratio terms must be positive");
    }
    if (k <= 0) {
        throw error(errc::zero_or_negative_term,
                    "geometric exponent must be positive");
    }
    if (std::gcd(a, b) != 1) {
        throw error(errc::gcd_not_one, "gcd(" + std::to_string(a) + ", " +
                                           std::to_string(b) + ") != 1");
    }
    if (a % 2 != 0 && b % 2 != 0) {
        return 0;
    }
    const std::int64_t odd = (a % 2 != 0) ? a : b;
    const std::int64_t pw = checked_pow(odd, k);
    return (pw - 1) / 2;
}

AperySet apery_any_generator(const SuitablePair& pair, std::size_t i) {
    const CompoundSequence cs = build_compound(pair);
    const auto& terms = cs.terms;
    const auto& a = pair.a_terms();
    const auto& b = pair.b_terms();
    if (i >= terms.size()) {
        throw error(errc::index_out_of_range,
                    "generator index " + std::to_string(i) + " not in [0, " +
                        std::to_string(terms.size() - 1) + "]");
    }

    const std::int64_t t = terms[i];
    if (t > kMaxEnumeration) {
        throw error(errc::overflow, "apery table for modulus " +
                                        std::to_string(t) + " exceeds cap");
    }

    // Digit j (skipping i) ranges over [0, b_{j+1}) left of i and [0, a_j)
    // right of i; the bound product equals terms[i], so the sums must hit
    // every residue class mod terms[i] exactly once.
    std::vector<std::size_t> positions;
    std::vector<std::int64_t> bounds;
    for (std::size_t j = 0; j < terms.size(); ++j) {
        if (j == i) {
            continue;
        }
        positions.push_back(j);
        bounds.push_back(j < i ? b[j] : a[j - 1]);
    }

    std::vector<std::int64_t> by_residue(static_cast<std::size_t>(t), -1);
    std::vector<std::int64_t> digits(positions.size(), 0);
    std::int64_t value = 0;
    while (true) {
        const auto r = static_cast<std::size_t>(value % t);
        if (by_residue[r] != -1) {
            throw internal_error(errc::internal_inconsistency,
                                 "residue collision in generator apery set");
        }
        by_residue[r] = value;

        std::size_t d = 0;
        while (d < digits.size()) {
            if (digits[d] + 1 < bounds[d]) {
                ++digits[d];
                value = checked_add(value, terms[positions[d]]);
                break;
            }
            value -= digits[d] * terms[positions[d]];
            digits[d] = 0;
            ++d;
        }
        if (d == digits.size()) {
            break;
        }
    }
    return AperySet(t, std::move(by_residue));
}

TelescopicAnalysis reverse_to_odd_initial(const SuitablePair& pair) {
    const CompoundSequence cs = build_compound(pair);
    const auto& terms = cs.terms;
    const auto& a = pair.a_terms();
    const auto& b = pair.b_terms();

    std::size_t i = 0;
    while (i < terms.size() && terms[i] % 2 == 0) {
        ++i;
    }
    if (i == terms.size()) {
        // gcd of all terms is 1, so they cannot all be even.
        throw internal_error(errc::internal_inconsistency,
                             "compound sequence with no odd term");
    }

    std::vector<std::int64_t> reversed;
    reversed.reserve(terms.size());
    for (std::size_t j = i + 1; j > 0; --j) {
        reversed.push_back(terms[j - 1]);
    }
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
        reversed.push_back(terms[j]);
    }

    TelescopicAnalysis analysis = analyze_sequence(reversed);
    if (!analysis.is_telescopic) {
        throw internal_error(errc::internal_inconsistency,
                             "reversed compound prefix is not telescopic");
    }

    std::vector<std::int64_t> expected;
    expected.reserve(pair.length());
    for (std::size_t j = i; j > 0; --j) {
        expected.push_back(b[j - 1]);
    }
    for (std::size_t j = i + 1; j <= pair.length(); ++j) {
        expected.push_back(a[j - 1]);
    }
    if (analysis.quotients != expected) {
        throw internal_error(errc::internal_inconsistency,
                             "reversed sequence quotients differ from pair tail");
    }
    return analysis;
}

} // namespace nsgap
