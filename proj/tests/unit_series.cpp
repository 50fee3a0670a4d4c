#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "fibtel/lucas.hpp"
#include "fibtel/series.hpp"
#include "oracle_naive.hpp"

using fibtel::BigInt;
using fibtel::BigRat;
using fibtel::QuadRat;
using fibtel::SeriesId;
using fibtel::SeriesSpec;
using fibtel::SumMode;

namespace {

SeriesSpec spec_t2(std::uint64_t m, std::uint64_t a) { return fibtel::make_series(SeriesId::t2, m, a); }
SeriesSpec spec_m(SeriesId id, std::uint64_t m) { return fibtel::make_series(id, m); }
SeriesSpec spec_p(SeriesId id, std::uint64_t p) { return fibtel::make_series(id, {}, {}, p); }
SeriesSpec spec_pm(SeriesId id, std::uint64_t p, std::uint64_t m) {
    return fibtel::make_series(id, m, {}, p);
}

// every family/parameter combination exercised by the unit suite
std::vector<SeriesSpec> sample_specs() {
    return {
        fibtel::make_series(SeriesId::t1),
        spec_t2(1, 1),
        spec_t2(3, 2),
        spec_m(SeriesId::t3, 1),
        spec_m(SeriesId::t3, 3),
        spec_m(SeriesId::t4, 1),
        spec_m(SeriesId::t4, 2),
        spec_m(SeriesId::t5, 1),
        spec_m(SeriesId::t5, 2),
        spec_pm(SeriesId::t6, 2, 1),
        spec_pm(SeriesId::t6, 4, 3),
        spec_pm(SeriesId::t7, 5, 4),
        spec_pm(SeriesId::t7, 3, 2),
        spec_p(SeriesId::t8, 3),
        spec_p(SeriesId::t8, 5),
        spec_p(SeriesId::t9, 2),
        spec_p(SeriesId::t9, 4),
        fibtel::make_series(SeriesId::r2),
    };
}

// largest N in 0..max_n whose evaluation stays inside the index bound
std::uint64_t feasible_terms(const SeriesSpec& spec, std::uint64_t max_n) {
    std::uint64_t n = 0;
    try {
        for (; n < max_n; ++n) {
            (void)fibtel::direct_term(spec, spec.start_index() + n);
            (void)fibtel::b_value(spec, spec.start_index() + n + 1);
        }
    } catch (const fibtel::IndexBoundError&) {
    }
    return n;
}

}  // namespace

TEST_CASE("spec validation") {
    CHECK_THROWS_WITH_AS(spec_pm(SeriesId::t6, 3, 1), "t6: p must be even and >= 2",
                         std::invalid_argument);
    CHECK_THROWS_AS(spec_pm(SeriesId::t7, 5, 3), std::invalid_argument);  // m must be even
    CHECK_THROWS_AS(spec_pm(SeriesId::t7, 4, 2), std::invalid_argument);  // p must be odd
    CHECK_THROWS_AS(fibtel::make_series(SeriesId::t2, std::uint64_t{1}), std::invalid_argument);
    CHECK_THROWS_AS(fibtel::make_series("t0"), std::invalid_argument);
    CHECK_THROWS_AS(fibtel::make_series("t1", std::uint64_t{2}), std::invalid_argument);

    const SeriesSpec t7 = spec_pm(SeriesId::t7, 5, 4);
    CHECK(t7.name() == "t7{p=5,m=4}");
    CHECK(t7.start_index() == 1);
    const SeriesSpec t9 = spec_p(SeriesId::t9, 2);
    CHECK(t9.start_index() == 2);
    CHECK(fibtel::make_series("t1").start_index() == 0);
    CHECK(fibtel::make_series("r2").name() == "r2");
}

TEST_CASE("direct terms against table values") {
    const auto t1 = fibtel::make_series(SeriesId::t1);
    CHECK(fibtel::direct_term(t1, 3) == BigRat(1, 21));
    CHECK(fibtel::direct_term(t1, 0) == BigRat(1));

    CHECK(fibtel::direct_term(spec_t2(1, 1), 0) == BigRat(2, 3));
    CHECK(fibtel::direct_term(spec_p(SeriesId::t8, 3), 1) == BigRat(9, 17));  // +L_6/F_9

    // t9{2} summands at n = 2, 3 and their total
    const auto t9 = spec_p(SeriesId::t9, 2);
    CHECK(fibtel::direct_term(t9, 2) == BigRat(8, 45));
    CHECK(fibtel::direct_term(t9, 3) == BigRat(48, 2205));
    CHECK(fibtel::partial_sum(t9, 2, SumMode::direct) == BigRat(88, 441));

    CHECK_THROWS_AS(fibtel::direct_term(t9, 1), std::invalid_argument);  // below start index
}

TEST_CASE("b-sequence values") {
    CHECK(fibtel::b_value(spec_t2(1, 1), 0) == BigRat(1));  // 1/(F_1 L_1)
    const auto t3 = spec_m(SeriesId::t3, 1);
    CHECK(fibtel::b_value(t3, 0) == BigRat(1));
    CHECK(fibtel::b_value(t3, 2) == BigRat(1, 34));  // 1/((L_2-1)(L_6-1)) = 1/F_9
    const auto t1 = fibtel::make_series(SeriesId::t1);
    CHECK(fibtel::b_value(t1, 0) == BigRat(7, 2));
    CHECK(fibtel::b_value(t1, 1) == BigRat(5, 2));
    CHECK(fibtel::b_value(t1, 2) == BigRat(3, 2));
    CHECK(fibtel::b_value(t1, 3) == BigRat(7, 6));
}

TEST_CASE("partial sums by both routes") {
    const auto t1 = fibtel::make_series(SeriesId::t1);
    CHECK(fibtel::partial_sum(t1, 0, SumMode::direct) == BigRat(0));
    CHECK(fibtel::partial_sum(t1, 0, SumMode::telescoped) == BigRat(0));
    CHECK(fibtel::partial_sum(t1, 3, SumMode::direct) == BigRat(7, 3));
    CHECK(fibtel::partial_sum(spec_t2(1, 1), 2, SumMode::direct) == BigRat(20, 21));
    CHECK(fibtel::partial_sum(spec_t2(1, 1), 2, SumMode::telescoped) == BigRat(20, 21));
}

TEST_CASE("telescoping equivalence across the sample grid") {
    for (const SeriesSpec& spec : sample_specs()) {
        const std::uint64_t n_max = feasible_terms(spec, 10);
        CHECK(n_max >= 3);
        for (std::uint64_t n = 0; n <= n_max; ++n) {
            CHECK(fibtel::partial_sum(spec, n, SumMode::direct) ==
                  fibtel::partial_sum(spec, n, SumMode::telescoped));
        }
    }
}

TEST_CASE("closed forms") {
    CHECK(fibtel::closed_form(fibtel::make_series(SeriesId::t1)) == QuadRat(7, -1, 2));
    CHECK(fibtel::closed_form(fibtel::make_series(SeriesId::r2)) == QuadRat(5, -1, 2));
    CHECK(fibtel::closed_form(spec_m(SeriesId::t5, 1)) == QuadRat(1, 0, 8));
    CHECK(fibtel::closed_form(spec_pm(SeriesId::t7, 5, 4)) == QuadRat(1, 0, 6765));
    CHECK(fibtel::closed_form(spec_m(SeriesId::t3, 2)) == QuadRat(1));
    CHECK(fibtel::closed_form(spec_p(SeriesId::t9, 2)) == QuadRat(1, 0, 5));
}

TEST_CASE("gap values and monotone convergence") {
    CHECK(fibtel::gap(spec_m(SeriesId::t3, 1), 0) == QuadRat(1));
    CHECK(fibtel::gap(spec_t2(1, 1), 2) == QuadRat(1, 0, 21));

    for (const SeriesSpec& spec : sample_specs()) {
        if (spec.id == SeriesId::t8 && spec.alternating()) {
            continue;
        }
        QuadRat previous = fibtel::gap(spec, 0);
        for (std::uint64_t n = 1; n <= 5; ++n) {
            CHECK(fibtel::direct_term(spec, spec.start_index() + n - 1).sign() >= 0);
            const QuadRat current = fibtel::gap(spec, n);
            CHECK(current.sign() >= 0);
            CHECK((previous - current).sign() >= 0);
            previous = current;
        }
    }
}

TEST_CASE("alternating tail bound for t8 with p = 3 mod 4") {
    for (std::uint64_t p : {std::uint64_t{3}, std::uint64_t{7}}) {
        const SeriesSpec spec = spec_p(SeriesId::t8, p);
        CHECK(spec.alternating());
        for (std::uint64_t n = 0; n <= 5; ++n) {
            const QuadRat g = fibtel::gap(spec, n);
            const QuadRat head{BigRat(fibtel::direct_term(spec, spec.start_index() + n).abs())};
            CHECK((head - g).sign() >= 0);
            CHECK((head + g).sign() >= 0);
        }
    }
    CHECK_FALSE(spec_p(SeriesId::t8, 5).alternating());
}

TEST_CASE("rebased head of the doubled-index series") {
    // internal sum from n = 3 plus the hand-added head 1 + 1 + 1/3
    const auto t1 = fibtel::make_series(SeriesId::t1);
    const auto table = fibtel::testing::fib_lucas_table(1 << 9);
    for (std::uint64_t terms = 4; terms <= 9; ++terms) {
        BigRat tail(0);
        for (std::uint64_t n = 3; n < terms; ++n) {
            tail += BigRat(1, table[std::uint64_t{1} << n].first);
        }
        CHECK(fibtel::partial_sum(t1, terms, SumMode::direct) == BigRat(7, 3) + tail);
    }
}

TEST_CASE("r2 splits into t2{1,1} plus doubled-index reciprocals") {
    const auto r2 = fibtel::make_series(SeriesId::r2);
    const auto t2 = spec_t2(1, 1);
    for (std::uint64_t terms = 0; terms <= 8; ++terms) {
        BigRat reciprocals(0);
        for (std::uint64_t n = 0; n < terms; ++n) {
            reciprocals += BigRat(1, fibtel::fib(std::uint64_t{1} << (n + 2)));
        }
        CHECK(fibtel::partial_sum(r2, terms, SumMode::direct) ==
              fibtel::partial_sum(t2, terms, SumMode::direct) + reciprocals);
    }
}

TEST_CASE("certify") {
    const auto t1 = fibtel::certify(fibtel::make_series(SeriesId::t1), 50);
    CHECK(t1.certified);
    CHECK(t1.terms_used <= 9);
    CHECK(t1.diagnostic.empty());
    CHECK(t1.decimal_digits_agreeing >= 49);

    const auto t3 = fibtel::certify(spec_m(SeriesId::t3, 1), 30);
    CHECK(t3.certified);
    CHECK(t3.terms_used <= 8);

    const auto t9 = fibtel::certify(spec_p(SeriesId::t9, 2), 6);
    CHECK(t9.certified);
    CHECK(t9.terms_used == 3);
    CHECK(t9.partial == BigRat(974168, 4870845));

    const auto alternating = fibtel::certify(spec_p(SeriesId::t8, 3), 25);
    CHECK(alternating.certified);

    CHECK_THROWS_AS(fibtel::certify(fibtel::make_series(SeriesId::t1), 0), std::invalid_argument);
}

TEST_CASE("generic telescoping identity") {
    using fibtel::generic_apery_check;
    const auto two_terms = generic_apery_check(BigRat(1), {BigRat(1), BigRat(2)}, 2);
    CHECK(two_terms.holds);
    CHECK(two_terms.lhs == QuadRat(BigRat(2, 3)));

    const auto single = generic_apery_check(BigRat(1), {BigRat(5)}, 1);
    CHECK(single.holds);
    CHECK(single.lhs == QuadRat(BigRat(1, 6)));

    const auto three = generic_apery_check(BigRat(2), {BigRat(1), BigRat(1), BigRat(1)}, 3);
    CHECK(three.holds);
    CHECK(three.lhs == QuadRat(BigRat(13, 27)));
    CHECK(three.rhs == QuadRat(BigRat(1, 2) - BigRat(1, 54)));

    CHECK_THROWS_AS(generic_apery_check(BigRat(0), {BigRat(1)}, 1), std::domain_error);
    CHECK_THROWS_WITH_AS(generic_apery_check(BigRat(1), {BigRat(2), BigRat(-1)}, 2),
                         "generic_apery_check: x + a_2 is zero", std::domain_error);
    CHECK_THROWS_AS(generic_apery_check(BigRat(1), {BigRat(1)}, 2), std::invalid_argument);

    // randomized rational instances
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long long> val(-9, 9);
    std::uniform_int_distribution<long long> den(1, 9);
    int ran = 0;
    while (ran < 100) {
        const BigRat x(val(rng), den(rng));
        if (x.is_zero()) {
            continue;
        }
        std::vector<BigRat> a;
        bool usable = true;
        for (int i = 0; i < 5; ++i) {
            a.emplace_back(val(rng), den(rng));
            usable = usable && !(x + a.back()).is_zero();
        }
        if (!usable) {
            continue;
        }
        CHECK(generic_apery_check(x, a, a.size()).holds);
        ++ran;
    }
}
