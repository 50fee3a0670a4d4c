#pragma once

// Test-side reference data, deliberately naive and independent of the
// library's fast paths: F and L by the plain two-term recurrence.

#include <cstdint>
#include <utility>
#include <vector>

#include "fibtel/bigint.hpp"

namespace fibtel::testing {

inline std::vector<std::pair<BigInt, BigInt>> fib_lucas_table(std::uint64_t n_max) {
    std::vector<std::pair<BigInt, BigInt>> table(n_max + 1);
    table[0] = {BigInt(0), BigInt(2)};
    if (n_max >= 1) {
        table[1] = {BigInt(1), BigInt(1)};
    }
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        table[n] = {table[n - 1].first + table[n - 2].first,
                    table[n - 1].second + table[n - 2].second};
    }
    return table;
}

}  // namespace fibtel::testing
