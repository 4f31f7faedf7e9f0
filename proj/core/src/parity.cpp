#include "nsgap/parity.hpp"

#include <string>

#include "nsgap/checked.hpp"

namespace nsgap {

const char* to_string(ParityMethod method) noexcept {
    switch (method) {
        case ParityMethod::closed_form_odd_t: return "closed_form_odd_t";
        case ParityMethod::closed_form_even_t: return "closed_form_even_t";
        case ParityMethod::free_theorem: return "free_theorem";
        case ParityMethod::compound_corollary: return "compound_corollary";
        case ParityMethod::geometric_corollary: return "geometric_corollary";
        case ParityMethod::oracle: return "oracle";
    }
    return "unknown";
}

AperyParityStats apery_parity_stats(const AperySet& a) {
    AperyParityStats stats;
    for (auto v : a.by_residue()) {
        if (v % 2 != 0) {
            stats.odd_count += 1;
            stats.odd_sum = checked_add(stats.odd_sum, v);
        } else {
            stats.even_count += 1;
            stats.even_sum = checked_add(stats.even_sum, v);
        }
    }
    return stats;
}

ParityReport parity_difference_via_apery(const GeneratorSequence& g, std::int64_t t) {
    const auto stats = apery_parity_stats(apery_set(g, t));

    ParityReport report;
    if (t % 2 != 0) {
        // -1/2 + (E - O)/2 == (E - O - 1)/2
        const auto numerator = stats.even_count - stats.odd_count - 1;
        if (numerator % 2 != 0)
            throw internal_error(errc::internal_non_integer,
                                 "odd-t parity formula produced a half-integer");
        report.difference = numerator / 2;
        report.method = ParityMethod::closed_form_odd_t;
    } else {
        // -1/2 + (sigma_O - sigma_E)/t == (2*sigma_O - 2*sigma_E - t) / (2t)
        const auto numerator = checked_sub(
            checked_mul(2, checked_sub(stats.odd_sum, stats.even_sum)), t);
        if (numerator % (2 * t) != 0)
            throw internal_error(errc::internal_non_integer,
                                 "even-t parity formula produced a non-integer");
        report.difference = numerator / (2 * t);
        report.method = ParityMethod::closed_form_even_t;
    }
    return report;
}

ParityReport parity_report_full(const GeneratorSequence& g) {
    auto report = parity_difference_via_apery(g, g.smallest());
    const auto total = genus(g);
    const auto odd = checked_add(total, report.difference);
    if (odd % 2 != 0)
        throw internal_error(errc::internal_non_integer,
                             "genus and parity difference disagree in parity");
    report.odd_gaps = odd / 2;
    report.even_gaps = total - odd / 2;
    return report;
}

} // namespace nsgap
