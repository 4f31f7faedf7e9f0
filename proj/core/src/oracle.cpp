#include "nsgap/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nsgap/errors.hpp"

namespace nsgap::oracle {

namespace {

constexpr std::size_t kSieveCap = std::size_t{1} << 26;

void validate(std::span<const std::int64_t> raw) {
    if (raw.empty())
        throw error(errc::empty_sequence, "generator sequence must be nonempty");
    std::int64_t d = 0;
    for (auto t : raw) {
        if (t < 1)
            throw error(errc::zero_or_negative_term,
                        "generator " + std::to_string(t) + " is not positive");
        d = std::gcd(d, t);
    }
    if (d != 1)
        throw error(errc::gcd_not_one, "gcd of generators is " + std::to_string(d));
}

} // namespace

std::vector<std::int64_t> sieve_gaps(std::span<const std::int64_t> raw) {
    validate(raw);
    const auto t0 = *std::min_element(raw.begin(), raw.end());

    std::vector<char> member;
    member.push_back(1); // 0 is always an element
    std::int64_t run = 1;
    while (run < t0) {
        const auto n = static_cast<std::int64_t>(member.size());
        if (member.size() >= kSieveCap)
            throw error(errc::overflow, "sieve limit exceeds the supported size");
        char m = 0;
        for (auto g : raw) {
            if (g <= n && member[static_cast<std::size_t>(n - g)]) {
                m = 1;
                break;
            }
        }
        member.push_back(m);
        run = m ? run + 1 : 0;
    }

    // The run [size - t0, size) consists of members; everything above it is
    // closed upward by repeatedly adding t0.
    const auto limit = static_cast<std::int64_t>(member.size()) - t0;
    std::vector<std::int64_t> out;
    for (std::int64_t n = 1; n < limit; ++n)
        if (!member[static_cast<std::size_t>(n)]) out.push_back(n);
    return out;
}

std::int64_t sieve_parity_difference(std::span<const std::int64_t> raw) {
    std::int64_t diff = 0;
    for (auto g : sieve_gaps(raw)) diff += (g % 2 != 0) ? 1 : -1;
    return diff;
}

} // namespace nsgap::oracle
