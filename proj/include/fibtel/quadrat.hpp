#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "fibtel/bigint.hpp"
#include "fibtel/bigrat.hpp"

namespace fibtel {

/// Exact element of the quadratic field Q(sqrt(5)), stored as the integer
/// triple (a, b, d) representing (a + b*sqrt(5))/d.
///
/// Canonical form: d > 0 and gcd(|a|, |b|, d) = 1. Since sqrt(5) is
/// irrational the canonical triple is unique, so equality of values is
/// componentwise equality. Rational numbers embed with b = 0.
class QuadRat {
public:
    QuadRat() : a_(0), b_(0), d_(1) {}
    QuadRat(long long n) : a_(n), b_(0), d_(1) {}  // NOLINT: implicit by design
    QuadRat(BigInt a, BigInt b, BigInt d)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        normalize();
    }
    QuadRat(const BigRat& r) : a_(r.num()), b_(0), d_(r.den()) {}  // NOLINT

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    BigRat to_bigrat() const {
        if (b_ != 0) {
            throw std::domain_error("QuadRat: value is irrational");
        }
        return BigRat(a_, d_);
    }

    /// Image under the field automorphism sqrt(5) -> -sqrt(5).
    QuadRat conjugate() const { return QuadRat(a_, -b_, d_, already_canonical{}); }

    friend QuadRat operator-(const QuadRat& x) {
        return QuadRat(-x.a_, -x.b_, x.d_, already_canonical{});
    }

    friend QuadRat operator+(const QuadRat& x, const QuadRat& y) {
        return QuadRat(x.a_ * y.d_ + y.a_ * x.d_, x.b_ * y.d_ + y.b_ * x.d_, x.d_ * y.d_);
    }
    friend QuadRat operator-(const QuadRat& x, const QuadRat& y) {
        return QuadRat(x.a_ * y.d_ - y.a_ * x.d_, x.b_ * y.d_ - y.b_ * x.d_, x.d_ * y.d_);
    }
    friend QuadRat operator*(const QuadRat& x, const QuadRat& y) {
        // (a + b*sqrt5)(a' + b'*sqrt5) = (aa' + 5bb') + (ab' + a'b)*sqrt5
        return QuadRat(x.a_ * y.a_ + 5 * x.b_ * y.b_, x.a_ * y.b_ + y.a_ * x.b_,
                       x.d_ * y.d_);
    }
    friend QuadRat operator/(const QuadRat& x, const QuadRat& y) { return x * y.inverse(); }

    QuadRat& operator+=(const QuadRat& y) { return *this = *this + y; }
    QuadRat& operator-=(const QuadRat& y) { return *this = *this - y; }
    QuadRat& operator*=(const QuadRat& y) { return *this = *this * y; }

    /// Multiplicative inverse, rationalized through the conjugate:
    /// 1/((a + b*sqrt5)/d) = d(a - b*sqrt5)/(a^2 - 5b^2).
    QuadRat inverse() const {
        if (is_zero()) {
            throw std::domain_error("QuadRat: inverse of zero");
        }
        const BigInt norm = a_ * a_ - 5 * b_ * b_;
        return QuadRat(d_ * a_, -d_ * b_, norm);
    }

    friend bool operator==(const QuadRat& x, const QuadRat& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }

    /// Exact sign of the real value, by integer arithmetic only. When a and
    /// b disagree in sign the dominant component is found by comparing a^2
    /// against 5b^2 (never equal for a, b not both zero: sqrt5 is irrational).
    int sign() const {
        const int sa = a_.sign();
        const int sb = b_.sign();
        if (sa == 0) {
            return sb;
        }
        if (sb == 0 || sa == sb) {
            return sa;
        }
        const BigInt aa = a_ * a_;
        const BigInt bb5 = 5 * b_ * b_;
        return aa > bb5 ? sa : sb;
    }

    QuadRat abs() const { return sign() < 0 ? -*this : *this; }

    /// Canonical text form "(a+b*sqrt(5))/d", e.g. "(7-1*sqrt(5))/2".
    std::string to_string() const {
        std::string s = "(" + a_.str();
        s += b_ < 0 ? "-" : "+";
        s += BigInt(boost::multiprecision::abs(b_)).str() + "*sqrt(5))/" + d_.str();
        return s;
    }

    /// Decimal rendering with `digits` places after the point. Faithful
    /// rounding: the result differs from the exact value by less than one
    /// unit in the last place. sqrt(5) enters through the integer square
    /// root of 5*b^2*10^(2(digits+guard)) with two guard digits.
    std::string to_decimal(unsigned digits) const {
        if (digits == 0) {
            throw std::invalid_argument("to_decimal: digits must be >= 1");
        }
        const int sgn = sign();
        const QuadRat v = sgn < 0 ? -*this : *this;
        constexpr unsigned guard = 2;
        const BigInt scale = pow10(digits + guard);
        BigInt t = v.a_ * scale;
        if (v.b_ != 0) {
            const BigInt root = isqrt(5 * v.b_ * v.b_ * scale * scale);
            t += v.b_ > 0 ? root : -root;
        }
        if (t < 0) {
            t = 0;  // |value|*10^(digits+guard) rounded down can only reach -1
        }
        const BigInt div = 2 * v.d_ * pow10(guard);
        const BigInt q = (2 * t + v.d_ * pow10(guard)) / div;
        const BigInt unit = pow10(digits);
        std::string frac = BigInt(q % unit).str();
        frac.insert(0, digits - frac.size(), '0');
        std::string out = BigInt(q / unit).str() + "." + frac;
        if (sgn < 0 && q != 0) {
            out.insert(0, 1, '-');
        }
        return out;
    }

private:
    struct already_canonical {};
    QuadRat(BigInt a, BigInt b, BigInt d, already_canonical)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    void normalize() {
        if (d_ == 0) {
            throw std::domain_error("QuadRat: zero denominator");
        }
        if (d_ < 0) {
            a_ = -a_;
            b_ = -b_;
            d_ = -d_;
        }
        if (a_ == 0 && b_ == 0) {
            d_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(a_, b_), d_);
        if (g != 1) {
            a_ /= g;
            b_ /= g;
            d_ /= g;
        }
    }

    BigInt a_;
    BigInt b_;
    BigInt d_;
};

/// sqrt(5) as a field element.
inline QuadRat quad_sqrt5() { return QuadRat(0, 1, 1); }

/// The golden ratio (1 + sqrt(5))/2, the positive root of x^2 = x + 1.
inline QuadRat golden_alpha() { return QuadRat(1, 1, 2); }

/// Its conjugate root (1 - sqrt(5))/2.
inline QuadRat golden_beta() { return QuadRat(1, -1, 2); }

}  // namespace fibtel
