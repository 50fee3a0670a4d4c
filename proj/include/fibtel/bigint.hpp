#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fibtel {

// GMP-backed integers: the sweeps and telescoped sums reduce rationals whose
// parts run to hundreds of thousands of digits, which needs a subquadratic gcd.
using BigInt = boost::multiprecision::mpz_int;

inline BigInt pow10(unsigned k) {
    return boost::multiprecision::pow(BigInt(10), k);
}

/// Floor of the square root of a nonnegative integer.
inline BigInt isqrt(const BigInt& n) {
    if (n < 0) {
        throw std::domain_error("isqrt: negative argument");
    }
    return boost::multiprecision::sqrt(n);
}

inline int int_sign(const BigInt& x) {
    return x.sign();
}

/// Thrown when an evaluation would touch a Fibonacci/Lucas index past the
/// configured global bound.
class IndexBoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fibtel
