#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fibtel/bigrat.hpp"
#include "fibtel/quadrat.hpp"

using fibtel::BigInt;
using fibtel::BigRat;
using fibtel::QuadRat;

namespace {

QuadRat random_quadrat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-99, 99);
    std::uniform_int_distribution<int> denom(1, 99);
    return QuadRat(coeff(rng), coeff(rng), denom(rng));
}

}  // namespace

TEST_CASE("quadrat normalization") {
    const QuadRat reduced(2, 2, 4);
    CHECK(reduced.a() == 1);
    CHECK(reduced.b() == 1);
    CHECK(reduced.d() == 2);

    const QuadRat flipped(7, -3, -2);
    CHECK(flipped.a() == -7);
    CHECK(flipped.b() == 3);
    CHECK(flipped.d() == 2);

    const QuadRat zero(0, 0, 5);
    CHECK(zero.a() == 0);
    CHECK(zero.b() == 0);
    CHECK(zero.d() == 1);

    CHECK_THROWS_AS(QuadRat(1, 1, 0), std::domain_error);

    // normalizing a canonical value is the identity
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const QuadRat x = random_quadrat(rng);
        CHECK(QuadRat(x.a(), x.b(), x.d()) == x);
    }
}

TEST_CASE("quadrat addition and multiplication") {
    const QuadRat alpha = fibtel::golden_alpha();
    const QuadRat beta = fibtel::golden_beta();

    CHECK(alpha + beta == QuadRat(1));   // root sum of x^2 - x - 1
    CHECK(alpha * beta == QuadRat(-1));  // root product
    CHECK(alpha * alpha == QuadRat(3, 1, 2));

    const QuadRat alpha4 = alpha * alpha * alpha * alpha;
    CHECK(QuadRat(1) + alpha4 == QuadRat(9, 3, 2));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const QuadRat x = random_quadrat(rng);
        CHECK(x + QuadRat(0) == x);
        CHECK(x * QuadRat(1) == x);
    }
}

TEST_CASE("quadrat inverse") {
    const QuadRat alpha = fibtel::golden_alpha();
    CHECK(alpha.inverse() == QuadRat(-1, 1, 2));
    CHECK(alpha.inverse() == -fibtel::golden_beta());
    CHECK(alpha * alpha.inverse() == QuadRat(1));
    CHECK(QuadRat(2).inverse() == QuadRat(1, 0, 2));
    CHECK(fibtel::quad_sqrt5().inverse() == QuadRat(0, 1, 5));
    CHECK_THROWS_AS(QuadRat(0).inverse(), std::domain_error);
}

TEST_CASE("quadrat sign") {
    CHECK(fibtel::golden_beta().sign() == -1);
    CHECK(QuadRat(0, 0, 1).sign() == 0);
    CHECK(QuadRat(7, -3, 1).sign() == 1);   // 49 > 45
    CHECK(QuadRat(-7, 3, 1).sign() == -1);
    CHECK(QuadRat(2, -1, 1).sign() == -1);  // 4 < 5
    CHECK(QuadRat(0, -4, 3).sign() == -1);
}

TEST_CASE("quadrat field axioms on random triples") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        const QuadRat x = random_quadrat(rng);
        const QuadRat y = random_quadrat(rng);
        const QuadRat z = random_quadrat(rng);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == QuadRat(1));
            CHECK(x.sign() * x.inverse().sign() == 1);
        }
    }
}

TEST_CASE("rational embedding agrees with BigRat arithmetic") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> coeff(-50, 50);
    std::uniform_int_distribution<int> denom(1, 50);
    for (int i = 0; i < 200; ++i) {
        const BigRat r(coeff(rng), denom(rng));
        const BigRat s(coeff(rng), denom(rng));
        CHECK(QuadRat(r) + QuadRat(s) == QuadRat(r + s));
        CHECK(QuadRat(r) * QuadRat(s) == QuadRat(r * s));
        CHECK(QuadRat(r).sign() == r.sign());
        CHECK((QuadRat(r) + QuadRat(s)).to_bigrat() == r + s);
    }
}

TEST_CASE("quadrat decimal rendering") {
    CHECK(QuadRat(7, -1, 2).to_decimal(9) == "2.381966011");
    CHECK(QuadRat(5, -1, 2).to_decimal(6) == "1.381966");
    CHECK(QuadRat(1, 0, 8).to_decimal(5) == "0.12500");
    CHECK(QuadRat(0, 1, 1).to_decimal(8) == "2.23606798");
    CHECK(QuadRat(-1, 0, 2).to_decimal(3) == "-0.500");
    CHECK(QuadRat(1, 1, 2).to_decimal(12) == "1.618033988750");
    CHECK(QuadRat(0).to_decimal(4) == "0.0000");
}

TEST_CASE("quadrat text form") {
    CHECK(QuadRat(7, -1, 2).to_string() == "(7-1*sqrt(5))/2");
    CHECK(QuadRat(1, 0, 8).to_string() == "(1+0*sqrt(5))/8");
    CHECK(QuadRat(0, 1, 1).to_string() == "(0+1*sqrt(5))/1");
}

TEST_CASE("bigrat canonical form and comparisons") {
    const BigRat r(BigInt(6), BigInt(-9));
    CHECK(r.num() == -2);
    CHECK(r.den() == 3);
    CHECK(BigRat(0, 7) == BigRat(0));
    CHECK_THROWS_AS(BigRat(BigInt(1), BigInt(0)), std::domain_error);
    CHECK(BigRat(1, 3) + BigRat(1, 6) == BigRat(1, 2));
    CHECK(BigRat(1, 3) < BigRat(1, 2));
    CHECK(BigRat(-1, 3) > BigRat(-1, 2));
    CHECK(BigRat(2, 3).inverse() == BigRat(3, 2));
    CHECK(BigRat(-2, 3).inverse() == BigRat(-3, 2));
    CHECK(BigRat(2, 3).pow(3) == BigRat(8, 27));
    CHECK_THROWS_AS(BigRat(0).inverse(), std::domain_error);
}

TEST_CASE("bigrat decimal round trip") {
    CHECK(BigRat(1, 3).to_decimal(6) == "0.333333");
    CHECK(BigRat(2, 3).to_decimal(6) == "0.666667");
    CHECK(BigRat(-1, 8).to_decimal(4) == "-0.1250");
    CHECK(BigRat(99999, 100000).to_decimal(3) == "1.000");  // carry across the point
    CHECK_THROWS_AS(BigRat(1, 3).to_decimal(0), std::invalid_argument);
    CHECK(BigRat::from_decimal("2.381966011") == BigRat(2381966011LL, 1000000000LL));
    CHECK(BigRat::from_decimal("-0.50") == BigRat(-1, 2));
    CHECK(BigRat::from_decimal("17") == BigRat(17));
    CHECK_THROWS_AS(BigRat::from_decimal("1.2.3"), std::invalid_argument);

    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> num(-100000, 100000);
    std::uniform_int_distribution<long long> den(1, 100000);
    for (int i = 0; i < 200; ++i) {
        const BigRat x(num(rng), den(rng));
        const BigRat parsed = BigRat::from_decimal(x.to_decimal(12));
        CHECK((parsed - x).abs() <= BigRat(1, fibtel::pow10(12)));
    }
}
