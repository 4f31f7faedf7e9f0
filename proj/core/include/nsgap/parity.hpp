#pragma once

#include <cstdint>
#include <optional>

#include "nsgap/semigroup.hpp"

namespace nsgap {

/// Counts and sums of the odd and even elements of an Apery set.
struct AperyParityStats {
    std::int64_t odd_count = 0;
    std::int64_t even_count = 0;
    std::int64_t odd_sum = 0;
    std::int64_t even_sum = 0;
};

enum class ParityMethod {
    closed_form_odd_t,
    closed_form_even_t,
    free_theorem,
    compound_corollary,
    geometric_corollary,
    oracle,
};

const char* to_string(ParityMethod method) noexcept;

/// Odd/even gap distribution of a semigroup. Closed-form routes populate
/// the difference alone; counts are present when the producer derived them.
struct ParityReport {
    std::optional<std::int64_t> odd_gaps;
    std::optional<std::int64_t> even_gaps;
    std::int64_t difference = 0; // odd_gaps - even_gaps
    ParityMethod method = ParityMethod::oracle;
};

AperyParityStats apery_parity_stats(const AperySet& a);

/// O(G(S)) - E(G(S)) from the Apery set relative to t, any nonzero element
/// of S (t need not be a generator):
///   t odd:  -1/2 + (E(A_t) - O(A_t)) / 2
///   t even: -1/2 + (sigma_O(A_t) - sigma_E(A_t)) / t
/// Both branches provably yield integers; evaluation is exact and a
/// non-integer intermediate throws internal_error.
ParityReport parity_difference_via_apery(const GeneratorSequence& g, std::int64_t t);

/// Full distribution: difference by the closed form relative to the
/// smallest generator, counts recovered through the genus as
/// odd = (g(S) + d) / 2, even = (g(S) - d) / 2.
ParityReport parity_report_full(const GeneratorSequence& g);

} // namespace nsgap
