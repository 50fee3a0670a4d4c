#include "fibtel/series.hpp"

#include <stdexcept>

#include "fibtel/guarded_index.hpp"
#include "fibtel/lucas.hpp"

namespace fibtel {

namespace {

void check(bool ok, const std::string& message) {
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

int parity_sign(std::uint64_t e) { return e % 2 == 0 ? 1 : -1; }

BigInt int_pow(const BigInt& base, std::uint64_t e) {
    if (e > 64) {
        // exponent a is a small structural parameter; anything bigger is a bug upstream
        throw std::invalid_argument("exponent too large");
    }
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

// sum_{k=0}^{m-1} (+-1)^k L_{2(m-k)q}
BigInt alt_lucas_sum(std::uint64_t m, std::uint64_t q, bool alternate) {
    BigInt sum = 0;
    for (std::uint64_t k = 0; k < m; ++k) {
        const BigInt term = lucas(guarded_mul(2 * (m - k), q));
        if (alternate && k % 2 == 1) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum;
}

// sum_{k=1}^{p/2} L_{(2k-1) base}
BigInt odd_stride_lucas_sum(std::uint64_t p, std::uint64_t base) {
    BigInt sum = 0;
    for (std::uint64_t k = 1; k <= p / 2; ++k) {
        sum += lucas(guarded_mul(2 * k - 1, base));
    }
    return sum;
}

// sum_{k=1}^{(p-1)/2} (+-1)^k L_{2 k base}
BigInt even_stride_lucas_sum(std::uint64_t p, std::uint64_t base, bool alternate) {
    BigInt sum = 0;
    for (std::uint64_t k = 1; k <= (p - 1) / 2; ++k) {
        const BigInt term = lucas(guarded_mul(2 * k, base));
        if (alternate && k % 2 == 1) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum;
}

// One bracket factor of the B-sequence product for the given family.
// t3/t4: j-th factor equals F resp. L index-ratio at (2m+1)^j;
// t5: the Lucas-halved bracket at 2^j; t6..t9 as documented in the header.
BigInt b_bracket(const SeriesSpec& s, std::uint64_t j) {
    switch (s.id) {
        case SeriesId::t3:
            return parity_sign(s.m) + alt_lucas_sum(s.m, guarded_pow(2 * s.m + 1, j), true);
        case SeriesId::t4:
            return 1 + alt_lucas_sum(s.m, guarded_pow(2 * s.m + 1, j), false);
        case SeriesId::t5:
            return parity_sign(s.m) + alt_lucas_sum(s.m, guarded_pow(2, j), true);
        case SeriesId::t6:
            return odd_stride_lucas_sum(s.p, guarded_mul(s.m, guarded_pow(s.p, j)));
        case SeriesId::t7:
            return 1 + even_stride_lucas_sum(s.p, guarded_mul(s.m, guarded_pow(s.p, j)), false);
        case SeriesId::t8:
            return 1 + even_stride_lucas_sum(s.p, guarded_pow(s.p, j), true);
        case SeriesId::t9: {
            const BigInt root = odd_stride_lucas_sum(s.p, guarded_pow(s.p, j + 1) / 2);
            return root * root;
        }
        default:
            throw std::logic_error("b_bracket: family has no bracket product");
    }
}

unsigned common_decimal_places(const std::string& x, const std::string& y) {
    const auto dx = x.find('.');
    const auto dy = y.find('.');
    if (dx == std::string::npos || dy == std::string::npos ||
        x.substr(0, dx) != y.substr(0, dy)) {
        return 0;
    }
    unsigned count = 0;
    for (std::size_t i = 1; dx + i < x.size() && dy + i < y.size(); ++i) {
        if (x[dx + i] != y[dy + i]) {
            break;
        }
        ++count;
    }
    return count;
}

}  // namespace

std::uint64_t SeriesSpec::start_index() const {
    switch (id) {
        case SeriesId::t6:
        case SeriesId::t7:
        case SeriesId::t8:
            return 1;
        case SeriesId::t9:
            return 2;
        default:
            return 0;
    }
}

bool SeriesSpec::alternating() const { return id == SeriesId::t8 && p % 4 == 3; }

std::string SeriesSpec::name() const {
    switch (id) {
        case SeriesId::t1:
            return "t1";
        case SeriesId::t2:
            return "t2{m=" + std::to_string(m) + ",a=" + std::to_string(a) + "}";
        case SeriesId::t3:
            return "t3{m=" + std::to_string(m) + "}";
        case SeriesId::t4:
            return "t4{m=" + std::to_string(m) + "}";
        case SeriesId::t5:
            return "t5{m=" + std::to_string(m) + "}";
        case SeriesId::t6:
            return "t6{p=" + std::to_string(p) + ",m=" + std::to_string(m) + "}";
        case SeriesId::t7:
            return "t7{p=" + std::to_string(p) + ",m=" + std::to_string(m) + "}";
        case SeriesId::t8:
            return "t8{p=" + std::to_string(p) + "}";
        case SeriesId::t9:
            return "t9{p=" + std::to_string(p) + "}";
        case SeriesId::r2:
            return "r2";
    }
    return "?";
}

SeriesSpec make_series(SeriesId id, std::optional<std::uint64_t> m,
                       std::optional<std::uint64_t> a, std::optional<std::uint64_t> p) {
    SeriesSpec s;
    s.id = id;
    const auto want_m = [&](const char* who) {
        check(m.has_value(), std::string(who) + ": m is required");
        s.m = *m;
    };
    const auto want_p = [&](const char* who) {
        check(p.has_value(), std::string(who) + ": p is required");
        s.p = *p;
    };
    const auto no_param = [&](std::optional<std::uint64_t> v, const char* who,
                              const char* param) {
        check(!v.has_value(), std::string(who) + ": parameter " + param + " is not accepted");
    };
    switch (id) {
        case SeriesId::t1:
        case SeriesId::r2:
            no_param(m, s.name().c_str(), "m");
            no_param(a, s.name().c_str(), "a");
            no_param(p, s.name().c_str(), "p");
            break;
        case SeriesId::t2:
            want_m("t2");
            check(s.m >= 1, "t2: m must be >= 1");
            check(a.has_value(), "t2: a is required");
            s.a = *a;
            check(s.a >= 1, "t2: a must be >= 1");
            no_param(p, "t2", "p");
            break;
        case SeriesId::t3:
        case SeriesId::t4:
        case SeriesId::t5: {
            const char* who = id == SeriesId::t3 ? "t3" : id == SeriesId::t4 ? "t4" : "t5";
            want_m(who);
            check(s.m >= 1, std::string(who) + ": m must be >= 1");
            no_param(a, who, "a");
            no_param(p, who, "p");
            break;
        }
        case SeriesId::t6:
            want_p("t6");
            check(s.p % 2 == 0 && s.p >= 2, "t6: p must be even and >= 2");
            want_m("t6");
            check(s.m >= 1, "t6: m must be >= 1");
            no_param(a, "t6", "a");
            break;
        case SeriesId::t7:
            want_p("t7");
            check(s.p % 2 == 1 && s.p >= 3, "t7: p must be odd and >= 3");
            want_m("t7");
            check(s.m % 2 == 0 && s.m >= 2, "t7: m must be even and >= 2");
            no_param(a, "t7", "a");
            break;
        case SeriesId::t8:
            want_p("t8");
            check(s.p % 2 == 1 && s.p >= 3, "t8: p must be odd and >= 3");
            no_param(m, "t8", "m");
            no_param(a, "t8", "a");
            break;
        case SeriesId::t9:
            want_p("t9");
            check(s.p % 2 == 0 && s.p >= 2, "t9: p must be even and >= 2");
            no_param(m, "t9", "m");
            no_param(a, "t9", "a");
            break;
    }
    return s;
}

SeriesSpec make_series(const std::string& name, std::optional<std::uint64_t> m,
                       std::optional<std::uint64_t> a, std::optional<std::uint64_t> p) {
    static const std::pair<const char*, SeriesId> table[] = {
        {"t1", SeriesId::t1}, {"t2", SeriesId::t2}, {"t3", SeriesId::t3},
        {"t4", SeriesId::t4}, {"t5", SeriesId::t5}, {"t6", SeriesId::t6},
        {"t7", SeriesId::t7}, {"t8", SeriesId::t8}, {"t9", SeriesId::t9},
        {"r2", SeriesId::r2},
    };
    for (const auto& [token, id] : table) {
        if (name == token) {
            return make_series(id, m, a, p);
        }
    }
    throw std::invalid_argument("unknown series '" + name + "' (expected t1..t9 or r2)");
}

BigRat direct_term(const SeriesSpec& s, std::uint64_t n) {
    check(n >= s.start_index(), s.name() + ": index below start index");
    switch (s.id) {
        case SeriesId::t1:
            return BigRat(1, fib(guarded_pow(2, n)));
        case SeriesId::t2: {
            const BigInt l = lucas(guarded_mul(guarded_pow(2, n + 1), s.m));
            const BigInt f = fib(guarded_mul(guarded_pow(2, n + 2), s.m));
            return BigRat(int_pow(l, s.a) - 1, int_pow(f, s.a));
        }
        case SeriesId::t3: {
            const BigInt num =
                parity_sign(s.m) - 1 + alt_lucas_sum(s.m, guarded_pow(2 * s.m + 1, n), true);
            return BigRat(num, fib(guarded_pow(2 * s.m + 1, n + 1)));
        }
        case SeriesId::t4: {
            const BigInt num = alt_lucas_sum(s.m, guarded_pow(2 * s.m + 1, n), false);
            return BigRat(num, lucas(guarded_pow(2 * s.m + 1, n + 1)));
        }
        case SeriesId::t5: {
            const std::uint64_t q = guarded_pow(2, n + 1);  // bracket indices (m-k)*2^{n+2}
            const BigInt bracket = parity_sign(s.m) - 1 + alt_lucas_sum(s.m, q, true);
            const BigInt num = fib(guarded_mul(4, guarded_pow(2, n))) * bracket;
            return BigRat(num, fib(guarded_mul(2 * s.m + 1, guarded_mul(2, q))));
        }
        case SeriesId::t6: {
            const BigInt num =
                odd_stride_lucas_sum(s.p, guarded_mul(s.m, guarded_pow(s.p, n))) - 1;
            return BigRat(num, fib(guarded_mul(s.m, guarded_pow(s.p, n + 1))));
        }
        case SeriesId::t7: {
            const BigInt num =
                even_stride_lucas_sum(s.p, guarded_mul(s.m, guarded_pow(s.p, n)), false);
            return BigRat(num, fib(guarded_mul(s.m, guarded_pow(s.p, n + 1))));
        }
        case SeriesId::t8: {
            BigInt num = even_stride_lucas_sum(s.p, guarded_pow(s.p, n), true);
            if ((n * ((s.p - 1) / 2)) % 2 == 1) {
                num = -num;
            }
            return BigRat(num, fib(guarded_pow(s.p, n + 1)));
        }
        case SeriesId::t9: {
            const BigInt root = odd_stride_lucas_sum(s.p, guarded_pow(s.p, n) / 2);
            return BigRat(root * root - 1, lucas(guarded_pow(s.p, n + 1)) - 2);
        }
        case SeriesId::r2:
            return BigRat(lucas(guarded_pow(2, n + 1)), fib(guarded_pow(2, n + 2)));
    }
    throw std::logic_error("direct_term: unreachable");
}

BigRat b_value(const SeriesSpec& s, std::uint64_t n) {
    check(n >= s.start_index(), s.name() + ": index below start index");
    switch (s.id) {
        case SeriesId::t1: {
            // For n >= 2, B_n = L_{2^{n-1}} / (2 F_{2^{n-1}}): the rational part
            // of alpha^{-2^{n-1}}/F_{2^{n-1}}, which telescopes against 1/F_{2^n}.
            // The series is rebased to start at n = 0, so the two head terms
            // 1/F_1 and 1/F_2 are folded into B_0 and B_1 as exact rationals.
            if (n >= 2) {
                const LucasPair pair = fib_lucas(guarded_pow(2, n - 1));
                return BigRat(pair.lucas, 2 * pair.fib);
            }
            const BigRat b2(BigInt(3), BigInt(2));
            return n == 1 ? b2 + BigRat(1, fib(2)) : b2 + BigRat(1, fib(2)) + BigRat(1, fib(1));
        }
        case SeriesId::t2: {
            BigInt base = fib(s.m);
            for (std::uint64_t j = 0; j <= n; ++j) {
                base *= lucas(guarded_mul(guarded_pow(2, j), s.m));
            }
            return BigRat(1, int_pow(base, s.a));
        }
        case SeriesId::t3:
        case SeriesId::t4: {
            BigInt prod = 1;
            for (std::uint64_t j = 0; j < n; ++j) {
                prod *= b_bracket(s, j);
            }
            return BigRat(1, prod);
        }
        case SeriesId::t5: {
            BigInt prod = 1;
            for (std::uint64_t j = 0; j <= n; ++j) {
                prod *= b_bracket(s, j);
            }
            return BigRat(1, prod);
        }
        case SeriesId::t6:
        case SeriesId::t7:
        case SeriesId::t8: {
            BigInt prod = 1;
            for (std::uint64_t j = 1; j < n; ++j) {
                prod *= b_bracket(s, j);
            }
            return BigRat(1, prod);
        }
        case SeriesId::t9: {
            BigInt prod = 1;
            for (std::uint64_t j = 1; j + 1 < n; ++j) {
                prod *= b_bracket(s, j);
            }
            return BigRat(1, prod);
        }
        case SeriesId::r2: {
            // Sum of the t2{1,1} B-sequence and the rebased-t1 tail value.
            const LucasPair pair = fib_lucas(guarded_pow(2, n + 1));
            return BigRat(2 + pair.lucas, 2 * pair.fib);
        }
    }
    throw std::logic_error("b_value: unreachable");
}

BigRat fold_factor(const SeriesSpec& s) {
    switch (s.id) {
        case SeriesId::t5:
            return BigRat(1, lucas(2 * s.m + 1));
        case SeriesId::t6:
        case SeriesId::t7:
            return BigRat(1, fib(guarded_mul(s.m, s.p)));
        case SeriesId::t8:
            return BigRat(1, fib(s.p));
        case SeriesId::t9:
            return BigRat(1, lucas(guarded_pow(s.p, 2)) - 2);
        default:
            return BigRat(1);
    }
}

BigRat partial_sum(const SeriesSpec& s, std::uint64_t terms, SumMode mode) {
    const std::uint64_t n0 = s.start_index();
    if (mode == SumMode::telescoped) {
        if (terms == 0) {
            return BigRat(0);
        }
        return fold_factor(s) * (b_value(s, n0) - b_value(s, n0 + terms));
    }
    BigRat sum(0);
    for (std::uint64_t n = n0; n < n0 + terms; ++n) {
        sum += direct_term(s, n);
    }
    return sum;
}

QuadRat closed_form(const SeriesSpec& s) {
    switch (s.id) {
        case SeriesId::t1:
            return QuadRat(7, -1, 2);
        case SeriesId::t2:
            return QuadRat(BigRat(1, int_pow(fib(s.m) * lucas(s.m), s.a)));
        case SeriesId::t3:
        case SeriesId::t4:
            return QuadRat(1);
        case SeriesId::t5:
            return QuadRat(BigRat(1, fib(2 * s.m + 1) * lucas(2 * s.m + 1)));
        case SeriesId::t6:
        case SeriesId::t7:
            return QuadRat(BigRat(1, fib(guarded_mul(s.m, s.p))));
        case SeriesId::t8:
            return QuadRat(BigRat(1, fib(s.p)));
        case SeriesId::t9:
            return QuadRat(BigRat(1, lucas(guarded_pow(s.p, 2)) - 2));
        case SeriesId::r2:
            return QuadRat(5, -1, 2);
    }
    throw std::logic_error("closed_form: unreachable");
}

QuadRat gap(const SeriesSpec& s, std::uint64_t terms) {
    return closed_form(s) - QuadRat(partial_sum(s, terms, SumMode::direct));
}

ConvergenceReport certify(const SeriesSpec& s, unsigned digits) {
    check(digits >= 1, "certify: digits must be >= 1");
    ConvergenceReport report;
    report.spec = s;
    report.target = closed_form(s);
    const std::uint64_t n0 = s.start_index();
    const BigRat tol(BigInt(1), pow10(digits));
    const bool alternating = s.alternating();

    const auto bound_at = [&](std::uint64_t n_terms) {
        const BigRat head = direct_term(s, n0 + n_terms).abs();
        return alternating ? head : BigRat(2) * head;
    };

    // Smallest N with bound_at(N) < tol: doubling, then bisection.
    constexpr std::uint64_t kTermLimit = 1u << 20;
    std::uint64_t hi = 1;
    while (bound_at(hi) >= tol) {
        hi *= 2;
        if (hi > kTermLimit) {
            report.diagnostic = "tail bound did not reach tolerance within term limit";
            return report;
        }
    }
    std::uint64_t lo = hi / 2;  // 0 or a witness with bound_at(lo) >= tol
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        (bound_at(mid) < tol ? hi : lo) = mid;
    }
    const std::uint64_t n_terms = hi;

    report.terms_used = n_terms;
    report.gap_bound = bound_at(n_terms);
    report.partial = partial_sum(s, n_terms, SumMode::direct);
    report.gap = report.target - QuadRat(report.partial);
    report.decimal_digits_agreeing = common_decimal_places(
        QuadRat(report.partial).to_decimal(digits), report.target.to_decimal(digits));

    // Ratio / monotonicity safeguard on the three consecutive ratios ending
    // at the first omitted term.
    const std::uint64_t first_omitted = n0 + n_terms;
    std::uint64_t window = first_omitted >= n0 + 2 ? first_omitted - 2 : n0;
    for (std::uint64_t i = window; i <= first_omitted; ++i) {
        const BigRat cur = direct_term(s, i).abs();
        const BigRat next = direct_term(s, i + 1).abs();
        if (cur.is_zero()) {
            report.diagnostic = "ratio test undefined: zero term at index " + std::to_string(i);
            return report;
        }
        const bool ok = alternating ? next < cur : BigRat(2) * next <= cur;
        if (!ok) {
            report.diagnostic = (alternating ? std::string("term magnitudes not decreasing")
                                             : std::string("term ratio above 1/2")) +
                                " at index " + std::to_string(i);
            return report;
        }
    }

    if (partial_sum(s, n_terms, SumMode::telescoped) != report.partial) {
        report.diagnostic = "telescoped partial sum disagrees with direct summation";
        return report;
    }

    const QuadRat bound_q{BigRat(report.gap_bound)};
    if ((bound_q - report.gap).sign() < 0 || (bound_q + report.gap).sign() < 0) {
        report.diagnostic = "exact gap exceeds the tail bound";
        return report;
    }
    if (!alternating && report.gap.sign() < 0) {
        report.diagnostic = "negative gap for an all-positive-term series";
        return report;
    }

    report.certified = true;
    return report;
}

IdentityCheck generic_apery_check(const BigRat& x, const std::vector<BigRat>& a,
                                  std::size_t n) {
    if (x.is_zero()) {
        throw std::domain_error("generic_apery_check: x must be nonzero");
    }
    check(n >= 1 && n <= a.size(), "generic_apery_check: need 1 <= n <= len(a)");
    std::vector<BigRat> shifted(n);
    for (std::size_t i = 0; i < n; ++i) {
        shifted[i] = x + a[i];
        if (shifted[i].is_zero()) {
            throw std::domain_error("generic_apery_check: x + a_" + std::to_string(i + 1) +
                                    " is zero");
        }
    }
    BigRat lhs = shifted[0].inverse();
    BigRat numerators(1);        // a_1 ... a_{k-1}
    BigRat denominators = shifted[0];  // (x+a_1) ... (x+a_k)
    for (std::size_t k = 2; k <= n; ++k) {
        numerators *= a[k - 2];
        denominators *= shifted[k - 1];
        lhs += numerators / denominators;
    }
    const BigRat rhs = x.inverse() - (numerators * a[n - 1]) / (x * denominators);
    return make_check(QuadRat(lhs), QuadRat(rhs));
}

}  // namespace fibtel
