#pragma once

#include <cstdint>
#include <utility>

#include "fibtel/bigint.hpp"
#include "fibtel/bigrat.hpp"
#include "fibtel/quadrat.hpp"

namespace fibtel {

/// A Fibonacci/Lucas pair (F_n, L_n). Every pair produced by the library
/// satisfies L_n^2 - 5 F_n^2 = 4(-1)^n.
struct LucasPair {
    std::uint64_t n = 0;
    BigInt fib;
    BigInt lucas;
};

inline constexpr std::uint64_t kDefaultIndexBound = 1'000'000;

/// Global guard against accidental astronomically-large index evaluations.
/// Exceeding the bound raises IndexBoundError; it never truncates silently.
std::uint64_t index_bound();
void set_index_bound(std::uint64_t bound);

/// Exact (F_n, L_n) by binary fast doubling:
///   F_{2k} = F_k L_k,  L_{2k} = L_k^2 - 2(-1)^k,
///   F_{k+1} = (F_k + L_k)/2,  L_{k+1} = (5 F_k + L_k)/2.
/// Results are memoized; the cache is invisible in all observable behavior.
LucasPair fib_lucas(std::uint64_t n);

BigInt fib(std::uint64_t n);
BigInt lucas(std::uint64_t n);

/// Drops the memo table (test hook; results are identical either way).
void clear_lucas_cache();

/// Exact alpha^n = (L_n + F_n*sqrt(5))/2 for any signed n, using
/// F_{-n} = (-1)^{n+1} F_n and L_{-n} = (-1)^n L_n.
QuadRat alpha_pow(std::int64_t n);

/// Evaluates (alpha^n - beta^n)/sqrt(5) and alpha^n + beta^n entirely in
/// Q(sqrt(5)) and returns the two (provably rational) values. Throws
/// std::logic_error if either comes out irrational, which would signal an
/// arithmetic bug. Must agree exactly with fib_lucas(n).
std::pair<BigRat, BigRat> binet_roundtrip(std::uint64_t n);

}  // namespace fibtel
