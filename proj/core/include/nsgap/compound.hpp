#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nsgap/semigroup.hpp"
#include "nsgap/telescopic.hpp"

namespace nsgap {

/// Equal-length sequences A, B of positive integers with gcd(a_i, b_j) = 1
/// for all i >= j. Such a pair generates a compound sequence.
class SuitablePair {
public:
    const std::vector<std::int64_t>& a_terms() const noexcept { return a_; }
    const std::vector<std::int64_t>& b_terms() const noexcept { return b_; }
    std::size_t length() const noexcept { return a_.size(); }

    friend SuitablePair validate_pair(std::vector<std::int64_t> a_raw,
                                      std::vector<std::int64_t> b_raw);

private:
    SuitablePair(std::vector<std::int64_t> a, std::vector<std::int64_t> b)
        : a_(std::move(a)), b_(std::move(b)) {}

    std::vector<std::int64_t> a_;
    std::vector<std::int64_t> b_;
};

/// Checks lengths, positivity and the pairwise-coprimality condition;
/// NotSuitable reports the violating (i, j, gcd).
SuitablePair validate_pair(std::vector<std::int64_t> a_raw,
                           std::vector<std::int64_t> b_raw);

/// The compound sequence C(A,B) = (n_0,...,n_p): n_0 = a_1...a_p and
/// n_i = n_{i-1} * b_i / a_i (exact by construction). Terms are kept in
/// this order; the sequence need not be increasing.
struct CompoundSequence {
    std::vector<std::int64_t> terms;
    SuitablePair source;
};

CompoundSequence build_compound(const SuitablePair& pair);

/// 1-based index of the first even term, or length+1 when every term is
/// odd. The sentinel makes downstream products empty without branching.
std::size_t first_even_index(std::span<const std::int64_t> z);

/// 1-based index of the last even term, or 0 when every term is odd.
std::size_t last_even_index(std::span<const std::int64_t> z);

/// O(G(S)) - E(G(S)) for S generated by C(A,B):
///   (alpha * beta - 1) / 2,
/// alpha the product of a_i for i >= first even index of B, beta the
/// product of b_i for i <= last even index of A (empty products are 1).
std::int64_t parity_difference_compound(const SuitablePair& pair);

struct ParityEqualityCriterion {
    bool diff_zero = false;
    bool all_compound_terms_odd = false;
    bool all_pair_terms_odd = false;
};

/// When every term of A and B exceeds 1 the three booleans are equivalent;
/// they are returned separately so tests can assert the equivalence.
ParityEqualityCriterion parity_equality_criterion(const SuitablePair& pair);

/// Closed form for the geometric semigroup <a^k, a^(k-1) b, ..., b^k>,
/// gcd(a,b) = 1: 0 when a and b are both odd, else (odd^k - 1)/2 for the
/// odd one of the two.
std::int64_t parity_difference_geometric(std::int64_t a, std::int64_t b, std::int64_t k);

/// Apery set of <C(A,B)> relative to any generating element n_i:
///   { sum_{j != i} n_j x_j : x_j < b_{j+1} for j < i, x_j < a_j for j > i }.
AperySet apery_any_generator(const SuitablePair& pair, std::size_t i);

/// Reverses the prefix ending at the first odd n_i, yielding
/// T = (n_i,...,n_0, n_{i+1},...,n_p): not necessarily compound but always
/// telescopic, with c(T) = (b_i,...,b_1, a_{i+1},...,a_p). The returned
/// analysis has an odd initial term, so the odd-t_0 branch of the free
/// theorem applies to it directly.
TelescopicAnalysis reverse_to_odd_initial(const SuitablePair& pair);

} // namespace nsgap
