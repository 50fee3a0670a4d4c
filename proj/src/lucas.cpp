#include "fibtel/lucas.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace fibtel {

namespace {

std::atomic<std::uint64_t> g_index_bound{kDefaultIndexBound};

std::mutex g_cache_mutex;
std::unordered_map<std::uint64_t, LucasPair>& cache() {
    static std::unordered_map<std::uint64_t, LucasPair> table;
    return table;
}

// Doubling step k -> 2k, then an optional step to 2k+1. Readers only ever
// see fully constructed entries: insertion happens under the mutex.
LucasPair compute(std::uint64_t n) {
    if (n == 0) {
        return LucasPair{0, BigInt(0), BigInt(2)};
    }
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = cache().find(n);
        if (it != cache().end()) {
            return it->second;
        }
    }
    const LucasPair half = compute(n / 2);
    const std::uint64_t k = half.n;
    BigInt f = half.fib * half.lucas;
    BigInt l = half.lucas * half.lucas;
    if (k % 2 == 0) {
        l -= 2;
    } else {
        l += 2;
    }
    if (n % 2 == 1) {
        // Both numerators are even: F_k + L_k = 2 F_{k+1}, 5 F_k + L_k = 2 L_{k+1}.
        BigInt f1 = (f + l) / 2;
        BigInt l1 = (5 * f + l) / 2;
        f = std::move(f1);
        l = std::move(l1);
    }
    LucasPair result{n, std::move(f), std::move(l)};
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        cache().emplace(n, result);
    }
    return result;
}

}  // namespace

std::uint64_t index_bound() { return g_index_bound.load(std::memory_order_relaxed); }

void set_index_bound(std::uint64_t bound) {
    g_index_bound.store(bound, std::memory_order_relaxed);
}

LucasPair fib_lucas(std::uint64_t n) {
    if (n > index_bound()) {
        throw IndexBoundError("index " + std::to_string(n) + " exceeds the configured bound " +
                              std::to_string(index_bound()));
    }
    return compute(n);
}

BigInt fib(std::uint64_t n) { return fib_lucas(n).fib; }

BigInt lucas(std::uint64_t n) { return fib_lucas(n).lucas; }

void clear_lucas_cache() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    cache().clear();
}

QuadRat alpha_pow(std::int64_t n) {
    const std::uint64_t mag = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1
                                    : static_cast<std::uint64_t>(n);
    LucasPair pair = fib_lucas(mag);
    if (n < 0) {
        if (mag % 2 == 0) {
            pair.fib = -pair.fib;  // F_{-n} = (-1)^{n+1} F_n
        } else {
            pair.lucas = -pair.lucas;  // L_{-n} = (-1)^n L_n
        }
    }
    return QuadRat(pair.lucas, pair.fib, 2);
}

std::pair<BigRat, BigRat> binet_roundtrip(std::uint64_t n) {
    if (n > static_cast<std::uint64_t>(INT64_MAX)) {
        throw std::invalid_argument("binet_roundtrip: index out of range");
    }
    const QuadRat an = alpha_pow(static_cast<std::int64_t>(n));
    const QuadRat bn = an.conjugate();  // beta = conj(alpha), so beta^n = conj(alpha^n)
    const QuadRat f = (an - bn) * quad_sqrt5().inverse();
    const QuadRat l = an + bn;
    if (!f.is_rational() || !l.is_rational()) {
        throw std::logic_error("binet_roundtrip: irrational result, arithmetic bug");
    }
    return {f.to_bigrat(), l.to_bigrat()};
}

}  // namespace fibtel
