#include "nsgap/semigroup.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>
#include <queue>
#include <string>

#include "nsgap/checked.hpp"

namespace nsgap {

namespace {

// Residue tables and gap sets are materialized in memory; anything past
// these caps is outside the desk-scale contract and reported as Overflow.
constexpr std::int64_t kMaxResidueTable = std::int64_t{1} << 24;
constexpr std::int64_t kMaxGapCount = std::int64_t{1} << 26;

std::int64_t gcd_all(std::span<const std::int64_t> terms) {
    std::int64_t d = 0;
    for (auto t : terms) d = std::gcd(d, t);
    return d;
}

// dist[r] = smallest sum of terms congruent to r mod `modulus`, i.e. the
// smallest monoid element in that residue class. Requires that every class
// is reachable, which holds whenever the complement of the monoid in the
// multiples-of-gcd lattice is finite and modulus is a member.
std::vector<std::int64_t> shortest_residue_table(std::span<const std::int64_t> terms,
                                                 std::int64_t modulus) {
    if (modulus > kMaxResidueTable)
        throw error(errc::overflow,
                    "residue table for modulus " + std::to_string(modulus) +
                        " exceeds the supported size");
    const auto size = static_cast<std::size_t>(modulus);
    constexpr std::int64_t unreached = -1;
    std::vector<std::int64_t> dist(size, unreached);

    using Node = std::pair<std::int64_t, std::int64_t>; // (distance, residue)
    std::priority_queue<Node, std::vector<Node>, std::greater<>> frontier;
    dist[0] = 0;
    frontier.emplace(0, 0);
    while (!frontier.empty()) {
        const auto [d, r] = frontier.top();
        frontier.pop();
        if (d != dist[static_cast<std::size_t>(r)]) continue;
        for (auto n : terms) {
            const std::int64_t step = n % modulus;
            if (step == 0) continue;
            const std::int64_t nd = checked_add(d, n);
            const auto nr = static_cast<std::size_t>((r + step) % modulus);
            if (dist[nr] == unreached || nd < dist[nr]) {
                dist[nr] = nd;
                frontier.emplace(nd, static_cast<std::int64_t>(nr));
            }
        }
    }
    for (auto d : dist)
        if (d == unreached)
            throw internal_error(errc::internal_inconsistency,
                                 "residue class unreachable; modulus is not an element");
    return dist;
}

} // namespace

// ---------------------------------------------------------------------------
// AperySet

AperySet::AperySet(std::int64_t relative_to, std::vector<std::int64_t> by_residue)
    : relative_to_(relative_to), by_residue_(std::move(by_residue)) {
    if (relative_to_ < 1 ||
        by_residue_.size() != static_cast<std::size_t>(relative_to_))
        throw internal_error(errc::internal_inconsistency,
                             "Apery table must have exactly t entries");
    if (by_residue_[0] != 0)
        throw internal_error(errc::internal_inconsistency,
                             "Apery entry for residue 0 must be 0");
    for (std::int64_t r = 0; r < relative_to_; ++r) {
        const auto a = by_residue_[static_cast<std::size_t>(r)];
        if (a < 0 || a % relative_to_ != r)
            throw internal_error(errc::internal_inconsistency,
                                 "Apery entry not in its residue class");
    }
}

std::int64_t AperySet::at(std::int64_t residue) const {
    if (residue < 0 || residue >= relative_to_)
        throw error(errc::index_out_of_range,
                    "residue " + std::to_string(residue) + " out of range");
    return by_residue_[static_cast<std::size_t>(residue)];
}

std::vector<std::int64_t> AperySet::elements_sorted() const {
    auto out = by_residue_;
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t AperySet::max_element() const {
    return *std::max_element(by_residue_.begin(), by_residue_.end());
}

std::int64_t AperySet::sum() const {
    std::int64_t s = 0;
    for (auto a : by_residue_) s = checked_add(s, a);
    return s;
}

// ---------------------------------------------------------------------------
// GapSet

GapSet::GapSet(std::vector<std::int64_t> sorted_gaps) : gaps_(std::move(sorted_gaps)) {
    if (!std::is_sorted(gaps_.begin(), gaps_.end()))
        throw internal_error(errc::internal_inconsistency, "gap set must be sorted");
    if (!gaps_.empty() && gaps_.front() < 1)
        throw internal_error(errc::internal_inconsistency, "0 can never be a gap");
}

bool GapSet::contains(std::int64_t n) const {
    return std::binary_search(gaps_.begin(), gaps_.end(), n);
}

// ---------------------------------------------------------------------------
// GeneratorSequence

struct GeneratorSequence::Cache {
    std::once_flag once;
    std::optional<AperySet> base_apery;
};

GeneratorSequence::GeneratorSequence(std::vector<std::int64_t> terms)
    : terms_(std::move(terms)),
      smallest_(*std::min_element(terms_.begin(), terms_.end())),
      cache_(std::make_shared<Cache>()) {}

const AperySet& GeneratorSequence::base_apery() const {
    std::call_once(cache_->once, [this] {
        cache_->base_apery.emplace(
            smallest_, shortest_residue_table(terms_, smallest_));
    });
    return *cache_->base_apery;
}

GeneratorSequence validate_generators(std::vector<std::int64_t> raw) {
    if (raw.empty())
        throw error(errc::empty_sequence, "generator sequence must be nonempty");
    for (auto t : raw)
        if (t < 1)
            throw error(errc::zero_or_negative_term,
                        "generator " + std::to_string(t) + " is not positive");
    const auto d = gcd_all(raw);
    if (d != 1)
        throw error(errc::gcd_not_one,
                    "gcd of generators is " + std::to_string(d));
    return GeneratorSequence(std::move(raw));
}

bool monoid_contains(std::span<const std::int64_t> terms, std::int64_t x) {
    if (x == 0) return true;
    if (x < 0 || terms.empty()) return false;
    const auto d = gcd_all(terms);
    if (x % d != 0) return false;
    std::vector<std::int64_t> reduced(terms.begin(), terms.end());
    for (auto& t : reduced) t /= d;
    const auto target = x / d;
    const auto t0 = *std::min_element(reduced.begin(), reduced.end());
    const auto table = shortest_residue_table(reduced, t0);
    return target >= table[static_cast<std::size_t>(target % t0)];
}

GeneratorSequence minimal_generators(const GeneratorSequence& g) {
    std::vector<std::int64_t> sorted = g.terms();
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    // Ascending scan: a term is redundant exactly when the kept smaller
    // terms already represent it.
    std::vector<std::int64_t> kept;
    for (auto t : sorted)
        if (!monoid_contains(kept, t)) kept.push_back(t);
    return validate_generators(std::move(kept));
}

bool contains(const GeneratorSequence& g, std::int64_t n) {
    if (n < 0) return false;
    const auto& table = g.base_apery();
    return n >= table.at(n % g.smallest());
}

AperySet apery_set(const GeneratorSequence& g, std::int64_t t) {
    if (t < 1 || !contains(g, t))
        throw error(errc::not_an_element,
                    std::to_string(t) + " is not a nonzero element of the semigroup");
    if (t == g.smallest()) return g.base_apery();
    return AperySet(t, shortest_residue_table(g.terms(), t));
}

GapSet gaps(const GeneratorSequence& g) {
    const auto& table = g.base_apery();
    const auto t0 = g.smallest();
    std::int64_t count = 0;
    for (std::int64_t r = 0; r < t0; ++r)
        count = checked_add(count, (table.at(r) - r) / t0);
    if (count > kMaxGapCount)
        throw error(errc::overflow, "gap set too large to materialize");

    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t r = 0; r < t0; ++r)
        for (std::int64_t x = r; x < table.at(r); x += t0)
            out.push_back(x);
    std::sort(out.begin(), out.end());
    return GapSet(std::move(out));
}

std::int64_t genus(const GeneratorSequence& g) {
    const auto direct = gaps(g).genus();

    // Selmer: g(S) = (1-t)/2 + sigma(Ap(S;t))/t, evaluated exactly as
    // (t - t^2 + 2*sigma) / (2t).
    const auto& table = g.base_apery();
    const auto t = g.smallest();
    const auto numerator = checked_add(checked_sub(t, checked_mul(t, t)),
                                       checked_mul(2, table.sum()));
    if (numerator % (2 * t) != 0 || numerator / (2 * t) != direct)
        throw internal_error(errc::internal_inconsistency,
                             "Selmer genus identity failed for t=" + std::to_string(t));
    return direct;
}

std::int64_t frobenius(const GeneratorSequence& g) {
    return checked_sub(g.base_apery().max_element(), g.smallest());
}

std::pair<std::int64_t, std::int64_t>
shor_identity_sides(const GeneratorSequence& g, std::int64_t t, const ArithmeticFn& f) {
    const auto apery = apery_set(g, t); // validates t

    // Named binding: values() returns a reference into the GapSet, so the
    // set must outlive the loop.
    const GapSet gap_set = gaps(g);
    std::int64_t lhs = 0;
    for (auto gap : gap_set.values())
        lhs = checked_add(lhs, checked_sub(f(checked_add(gap, t)), f(gap)));

    std::int64_t rhs = 0;
    for (auto a : apery.by_residue()) rhs = checked_add(rhs, f(a));
    for (std::int64_t k = 0; k < t; ++k) rhs = checked_sub(rhs, f(k));

    return {lhs, rhs};
}

} // namespace nsgap
