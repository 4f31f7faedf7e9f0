#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Brute-force ground truth used by the test suites and the `verify`
// command. Everything here works straight from the definition of the
// generated monoid via a dynamic-programming sieve; none of it touches the
// Apery machinery in semigroup.hpp, so the two routes stay independent.
namespace nsgap::oracle {

/// Gap set by direct sieving. Validates the raw sequence itself (nonempty,
/// positive terms, gcd 1). The sieve extends until it sees a run of t0
/// consecutive members, t0 the smallest generator; past such a run every
/// integer is a member, so all gaps lie below it.
std::vector<std::int64_t> sieve_gaps(std::span<const std::int64_t> raw);

/// O(G(S)) - E(G(S)) counted directly from sieve_gaps output.
std::int64_t sieve_parity_difference(std::span<const std::int64_t> raw);

} // namespace nsgap::oracle
