#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nsgap/semigroup.hpp"

namespace nsgap {

/// A sequence (t_0,...,t_k) of positive integers together with the gcd
/// machinery that decides whether it is telescopic: prefix gcds
/// d_i = gcd(t_0,...,t_i), quotients c_j = d_{j-1}/d_j, and the verdict
/// "c_j * t_j is representable by (t_0,...,t_{j-1}) for every j".
///
/// gcd 1 is not required for the analysis itself, only for the free-
/// semigroup operations below.
struct TelescopicAnalysis {
    std::vector<std::int64_t> terms;
    std::vector<std::int64_t> prefix_gcds;   // d_0..d_k
    std::vector<std::int64_t> quotients;     // c_1..c_k
    bool is_telescopic = false;
    std::optional<std::size_t> first_odd_index; // set whenever an odd term exists
    std::vector<std::size_t> even_indices;      // ascending, may include 0

    std::int64_t overall_gcd() const { return prefix_gcds.back(); }
    bool generates_free_semigroup() const { return is_telescopic && overall_gcd() == 1; }

    /// c_i with the convention c_0 = 1, so products over even_indices never
    /// special-case index 0.
    std::int64_t quotient(std::size_t i) const { return i == 0 ? 1 : quotients[i - 1]; }
};

/// Computes every field of the analysis. The representability test reduces
/// through the prefix gcd to an exact numerical-semigroup membership query.
TelescopicAnalysis analyze_sequence(std::vector<std::int64_t> raw);

/// Apery set of a free numerical semigroup relative to t_0:
///   { sum_i n_i * t_i : 0 <= n_i < c_i },
/// which has exactly t_0 elements, one per residue class. Requires a
/// telescopic analysis with gcd 1.
AperySet free_apery_set(const TelescopicAnalysis& a);

/// O(G(S)) - E(G(S)) for the free semigroup:
///   -1/2 + (c_m * t_m) / (2 * t_0) * prod_{i in I} c_i
/// with m the first odd index, I the even index set and c_0 = 1. Evaluated
/// exactly in integers.
std::int64_t parity_difference_free(const TelescopicAnalysis& a);

/// (t_m - 1)/2 when exactly one term t_m is odd; a special case of the
/// theorem above and cross-checkable against it.
std::int64_t parity_difference_one_odd(const TelescopicAnalysis& a);

struct OddDominance {
    std::int64_t difference = 0;
    bool all_terms_odd = false;
};

/// For a minimal telescopic sequence with gcd 1: the parity difference is
/// nonnegative and vanishes exactly when every term is odd. Verifies
/// minimality (via minimal_generators) and throws NotMinimal otherwise.
OddDominance check_odd_dominance(const TelescopicAnalysis& a);

/// Closed form of sum_{n=0}^{count-1} (-1)^(n*t):
///   count  if t even; 1 if t odd and count odd; 0 if t odd and count even.
std::int64_t alternating_term_sum(std::int64_t count, std::int64_t t);

} // namespace nsgap
