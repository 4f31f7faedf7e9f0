#include "nsgap/telescopic.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <string>

#include "nsgap/checked.hpp"

namespace nsgap {

namespace {

constexpr std::int64_t kMaxEnumeration = std::int64_t{1} << 24;

void require_free(const TelescopicAnalysis& a) {
    if (!a.is_telescopic)
        throw error(errc::not_telescopic, "sequence is not telescopic");
    if (a.overall_gcd() != 1)
        throw error(errc::gcd_not_one,
                    "gcd of sequence is " + std::to_string(a.overall_gcd()));
}

} // namespace

TelescopicAnalysis analyze_sequence(std::vector<std::int64_t> raw) {
    if (raw.empty())
        throw error(errc::empty_sequence, "sequence must be nonempty");
    for (auto t : raw)
        if (t < 1)
            throw error(errc::zero_or_negative_term,
                        "term " + std::to_string(t) + " is not positive");

    TelescopicAnalysis a;
    a.terms = std::move(raw);
    const auto k = a.terms.size() - 1;

    a.prefix_gcds.reserve(k + 1);
    std::int64_t d = 0;
    for (auto t : a.terms) {
        d = std::gcd(d, t);
        a.prefix_gcds.push_back(d);
    }
    a.quotients.reserve(k);
    for (std::size_t j = 1; j <= k; ++j)
        a.quotients.push_back(a.prefix_gcds[j - 1] / a.prefix_gcds[j]);

    a.is_telescopic = true;
    for (std::size_t j = 1; j <= k && a.is_telescopic; ++j) {
        const auto target = checked_mul(a.quotients[j - 1], a.terms[j]);
        const std::span prefix(a.terms.data(), j);
        if (!monoid_contains(prefix, target)) a.is_telescopic = false;
    }

    for (std::size_t i = 0; i <= k; ++i) {
        if (a.terms[i] % 2 != 0) {
            if (!a.first_odd_index) a.first_odd_index = i;
        } else {
            a.even_indices.push_back(i);
        }
    }

    if (a.overall_gcd() == 1) {
        // Lemma: d_k = 1 forces prod c_i = t_0.
        std::int64_t product = 1;
        for (auto c : a.quotients) product = checked_mul(product, c);
        if (product != a.terms[0])
            throw internal_error(errc::internal_inconsistency,
                                 "quotient product does not equal the initial term");
    }
    return a;
}

AperySet free_apery_set(const TelescopicAnalysis& a) {
    require_free(a);
    const auto t0 = a.terms[0];
    if (t0 > kMaxEnumeration)
        throw error(errc::overflow, "Apery enumeration of size " +
                                        std::to_string(t0) + " exceeds the supported size");

    std::vector<std::int64_t> by_residue(static_cast<std::size_t>(t0), -1);
    const auto k = a.terms.size() - 1;
    std::vector<std::int64_t> digits(k, 0);
    std::int64_t value = 0;
    while (true) {
        const auto r = static_cast<std::size_t>(value % t0);
        if (by_residue[r] != -1)
            throw internal_error(errc::internal_inconsistency,
                                 "two Apery candidates share a residue class");
        by_residue[r] = value;

        // Odometer over (n_1,...,n_k), n_i < c_i, keeping the running sum.
        std::size_t i = 0;
        while (i < k) {
            if (digits[i] + 1 < a.quotients[i]) {
                digits[i] += 1;
                value = checked_add(value, a.terms[i + 1]);
                break;
            }
            value -= digits[i] * a.terms[i + 1];
            digits[i] = 0;
            ++i;
        }
        if (i == k) break;
    }
    return AperySet(t0, std::move(by_residue));
}

std::int64_t parity_difference_free(const TelescopicAnalysis& a) {
    require_free(a);
    const auto m = *a.first_odd_index; // gcd 1 guarantees an odd term
    const auto t0 = a.terms[0];

    std::int64_t numerator = checked_mul(a.quotient(m), a.terms[m]);
    for (auto i : a.even_indices)
        numerator = checked_mul(numerator, a.quotient(i));

    // -1/2 + numerator / (2 t0) == (numerator - t0) / (2 t0)
    const auto shifted = checked_sub(numerator, t0);
    if (shifted % (2 * t0) != 0)
        throw internal_error(errc::internal_non_integer,
                             "free parity formula produced a non-integer");
    return shifted / (2 * t0);
}

std::int64_t parity_difference_one_odd(const TelescopicAnalysis& a) {
    require_free(a);
    std::int64_t odd_count = 0;
    std::size_t m = 0;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i] % 2 != 0) {
            odd_count += 1;
            m = i;
        }
    if (odd_count != 1)
        throw error(errc::precondition_not_met,
                    "sequence has " + std::to_string(odd_count) +
                        " odd terms, expected exactly one");
    return (a.terms[m] - 1) / 2;
}

OddDominance check_odd_dominance(const TelescopicAnalysis& a) {
    require_free(a);
    auto sorted = a.terms;
    std::sort(sorted.begin(), sorted.end());
    const auto minimal = minimal_generators(validate_generators(a.terms));
    if (minimal.terms() != sorted)
        throw error(errc::not_minimal, "sequence is not a minimal generating sequence");
    return {parity_difference_free(a), a.even_indices.empty()};
}

std::int64_t alternating_term_sum(std::int64_t count, std::int64_t t) {
    if (count < 1 || t < 1)
        throw error(errc::zero_or_negative_term, "count and t must be positive");
    if (t % 2 == 0) return count;
    return count % 2;
}

} // namespace nsgap
