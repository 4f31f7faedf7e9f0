#pragma once

#include <optional>
#include <utility>

#include <nsgap/errors.hpp>

namespace nsgap::testing {

/// Runs f and reports the error code it threw, if any. Lets tests assert
/// on the specific errc instead of just "something threw".
template <typename F>
std::optional<errc> thrown_code(F&& f) {
    try {
        std::forward<F>(f)();
    } catch (const error& e) {
        return e.code();
    }
    return std::nullopt;
}

} // namespace nsgap::testing
