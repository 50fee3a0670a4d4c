#pragma once

#include <cstdint>
#include <string>

#include "fibtel/bigint.hpp"
#include "fibtel/lucas.hpp"

namespace fibtel {

/// Index products that fail fast: the result is checked against the global
/// index bound before any big-integer work can happen, so a bad parameter
/// combination raises IndexBoundError instead of grinding on a gigantic
/// Fibonacci number.
inline std::uint64_t guarded_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    const std::uint64_t bound = index_bound();
    if (a > bound / b) {
        throw IndexBoundError("index product " + std::to_string(a) + "*" + std::to_string(b) +
                              " exceeds the configured bound " + std::to_string(bound));
    }
    return a * b;
}

inline std::uint64_t guarded_pow(std::uint64_t base, std::uint64_t e) {
    std::uint64_t acc = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        acc = guarded_mul(acc, base);
    }
    return acc;
}

}  // namespace fibtel
