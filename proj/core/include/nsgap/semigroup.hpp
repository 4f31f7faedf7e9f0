#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "nsgap/errors.hpp"

namespace nsgap {

/// Apery set of a numerical semigroup relative to a nonzero element t:
/// for each residue class mod t, the smallest semigroup element in that
/// class. Entry 0 is always 0.
class AperySet {
public:
    /// `by_residue[r]` must be the element for residue r. Structural
    /// invariants (one entry per residue, entry 0 is 0, entry r is
    /// congruent to r) are checked; minimality is the producer's job.
    AperySet(std::int64_t relative_to, std::vector<std::int64_t> by_residue);

    std::int64_t relative_to() const noexcept { return relative_to_; }
    std::int64_t size() const noexcept { return relative_to_; }
    std::int64_t at(std::int64_t residue) const;
    const std::vector<std::int64_t>& by_residue() const noexcept { return by_residue_; }

    std::vector<std::int64_t> elements_sorted() const;
    std::int64_t max_element() const;
    std::int64_t sum() const;

    friend bool operator==(const AperySet&, const AperySet&) = default;

private:
    std::int64_t relative_to_;
    std::vector<std::int64_t> by_residue_;
};

/// Sorted finite complement of a numerical semigroup in the nonnegative
/// integers.
class GapSet {
public:
    explicit GapSet(std::vector<std::int64_t> sorted_gaps);

    const std::vector<std::int64_t>& values() const noexcept { return gaps_; }
    std::int64_t genus() const noexcept { return static_cast<std::int64_t>(gaps_.size()); }
    std::int64_t frobenius() const noexcept { return gaps_.empty() ? -1 : gaps_.back(); }
    bool contains(std::int64_t n) const;

    friend bool operator==(const GapSet&, const GapSet&) = default;

private:
    std::vector<std::int64_t> gaps_;
};

/// Validated presentation of a numerical semigroup: a nonempty sequence of
/// positive integers with overall gcd 1, kept in input order. Duplicates and
/// non-minimal terms are allowed; use minimal_generators() to reduce.
///
/// Immutable after construction. Copies share the internal Apery cache,
/// which is populated at most once and is safe to touch from any thread.
class GeneratorSequence {
public:
    const std::vector<std::int64_t>& terms() const noexcept { return terms_; }
    std::int64_t smallest() const noexcept { return smallest_; }

    /// Apery set relative to the smallest generator; computed lazily, once.
    const AperySet& base_apery() const;

    friend GeneratorSequence validate_generators(std::vector<std::int64_t> raw);
    friend bool operator==(const GeneratorSequence& a, const GeneratorSequence& b) {
        return a.terms_ == b.terms_;
    }

private:
    explicit GeneratorSequence(std::vector<std::int64_t> terms);

    std::vector<std::int64_t> terms_;
    std::int64_t smallest_ = 0;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

/// Checks nonemptiness, positivity of every term and overall gcd 1.
/// Throws EmptySequence, ZeroOrNegativeTerm or GcdNotOne (reporting the
/// offending gcd).
GeneratorSequence validate_generators(std::vector<std::int64_t> raw);

/// The unique minimal generating sequence of the same semigroup, in
/// increasing order. A term is dropped iff the remaining terms represent it.
GeneratorSequence minimal_generators(const GeneratorSequence& g);

/// Membership test. O(1) after the cached Apery table of the smallest
/// generator has been built. Negative n is never a member.
bool contains(const GeneratorSequence& g, std::int64_t n);

/// Apery set relative to t, which must be a nonzero element of the
/// semigroup (not necessarily a generator). Computed by single-source
/// shortest paths on the residue graph mod t with one arc of weight n per
/// generator n.
AperySet apery_set(const GeneratorSequence& g, std::int64_t t);

/// The exact sorted gap set.
GapSet gaps(const GeneratorSequence& g);

/// Number of gaps. Internally cross-checked against the Selmer identity
/// g(S) = (1-t)/2 + sigma(Ap(S;t))/t for the smallest generator; a mismatch
/// throws internal_error.
std::int64_t genus(const GeneratorSequence& g);

/// Largest integer not in the semigroup; -1 when the semigroup is all of
/// the nonnegative integers.
std::int64_t frobenius(const GeneratorSequence& g);

using ArithmeticFn = std::function<std::int64_t(std::int64_t)>;

/// Both sides of the gap/Apery summation identity
///   sum_{g in G(S)} (f(g+t) - f(g)) = sum_{a in Ap(S;t)} f(a) - sum_{k<t} f(k)
/// computed independently, for any caller-supplied integer function f.
/// The two components are provably equal; returning both exposes the
/// identity to property tests.
std::pair<std::int64_t, std::int64_t>
shor_identity_sides(const GeneratorSequence& g, std::int64_t t, const ArithmeticFn& f);

/// Membership of x in the additive monoid generated by arbitrary positive
/// terms, whose gcd may exceed 1: x is a member iff gcd(terms) divides x
/// and x/gcd lies in the numerical semigroup of the reduced terms.
bool monoid_contains(std::span<const std::int64_t> terms, std::int64_t x);

} // namespace nsgap
