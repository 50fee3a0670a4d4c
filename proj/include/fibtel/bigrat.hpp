#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "fibtel/bigint.hpp"

namespace fibtel {

/// Exact rational number. Canonical form is maintained after every
/// operation: denominator positive, gcd(|num|, den) = 1, zero is 0/1.
class BigRat {
public:
    BigRat() : num_(0), den_(1) {}
    BigRat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    BigRat(BigInt n) : num_(std::move(n)), den_(1) {}
    BigRat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    BigRat abs() const { return num_ < 0 ? BigRat(-num_, den_) : *this; }

    friend BigRat operator-(const BigRat& x) { return BigRat(-x.num_, x.den_, already_canonical{}); }

    friend BigRat operator+(const BigRat& x, const BigRat& y) {
        return BigRat(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend BigRat operator-(const BigRat& x, const BigRat& y) {
        return BigRat(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend BigRat operator*(const BigRat& x, const BigRat& y) {
        return BigRat(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend BigRat operator/(const BigRat& x, const BigRat& y) {
        if (y.num_ == 0) {
            throw std::domain_error("BigRat: division by zero");
        }
        return BigRat(x.num_ * y.den_, x.den_ * y.num_);
    }

    BigRat& operator+=(const BigRat& y) { return *this = *this + y; }
    BigRat& operator-=(const BigRat& y) { return *this = *this - y; }
    BigRat& operator*=(const BigRat& y) { return *this = *this * y; }
    BigRat& operator/=(const BigRat& y) { return *this = *this / y; }

    BigRat inverse() const {
        if (num_ == 0) {
            throw std::domain_error("BigRat: inverse of zero");
        }
        return num_ < 0 ? BigRat(-den_, -num_, already_canonical{})
                        : BigRat(den_, num_, already_canonical{});
    }

    BigRat pow(unsigned e) const {
        using boost::multiprecision::pow;
        return BigRat(pow(num_, e), pow(den_, e), already_canonical{});
    }

    friend bool operator==(const BigRat& x, const BigRat& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend std::strong_ordering operator<=>(const BigRat& x, const BigRat& y) {
        const BigInt lhs = x.num_ * y.den_;
        const BigInt rhs = y.num_ * x.den_;
        return lhs < rhs   ? std::strong_ordering::less
               : lhs > rhs ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
    }

    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += "/" + den_.str();
        }
        return s;
    }

    /// Decimal rendering with `digits` places after the point, rounded to
    /// nearest (error < 1 ulp of the last digit).
    std::string to_decimal(unsigned digits) const {
        if (digits == 0) {
            throw std::invalid_argument("to_decimal: digits must be >= 1");
        }
        const bool neg = num_ < 0;
        const BigInt scale = pow10(digits);
        const BigInt d2 = 2 * den_;
        const BigInt q = (2 * BigInt(boost::multiprecision::abs(num_)) * scale + den_) / d2;
        std::string frac = BigInt(q % scale).str();
        frac.insert(0, digits - frac.size(), '0');
        std::string out = BigInt(q / scale).str() + "." + frac;
        if (neg && q != 0) {
            out.insert(0, 1, '-');
        }
        return out;
    }

    /// Parses "[-]intpart[.fracpart]" into the exact rational it denotes.
    static BigRat from_decimal(const std::string& text) {
        if (text.empty()) {
            throw std::invalid_argument("BigRat: empty decimal string");
        }
        std::string s = text;
        bool neg = false;
        if (s[0] == '+' || s[0] == '-') {
            neg = s[0] == '-';
            s.erase(0, 1);
        }
        const auto dot = s.find('.');
        std::string digits = s;
        unsigned frac_len = 0;
        if (dot != std::string::npos) {
            frac_len = static_cast<unsigned>(s.size() - dot - 1);
            digits = s.substr(0, dot) + s.substr(dot + 1);
        }
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("BigRat: malformed decimal string '" + text + "'");
        }
        // a leading zero would make the BigInt parser read the rest as octal
        const auto first = digits.find_first_not_of('0');
        digits.erase(0, first == std::string::npos ? digits.size() - 1 : first);
        BigRat r(BigInt(digits), pow10(frac_len));
        return neg ? -r : r;
    }

private:
    struct already_canonical {};
    BigRat(BigInt n, BigInt d, already_canonical) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_ == 0) {
            throw std::domain_error("BigRat: zero denominator");
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

}  // namespace fibtel
