#include "fibtel/identities.hpp"

#include <stdexcept>

#include "fibtel/guarded_index.hpp"
#include "fibtel/lucas.hpp"

namespace fibtel {

namespace {

void require(bool ok, const char* message) {
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

int parity_sign(std::uint64_t e) { return e % 2 == 0 ? 1 : -1; }

// (-1)^m + sum_{k=0}^{m-1} (-1)^{k*e} L_{2(m-k)q}, with the leading term's
// exponent m*e. e = q for the Fibonacci bracket, q+1 for the Lucas one.
BigInt lemma3_bracket(std::uint64_t m, std::uint64_t q, std::uint64_t e) {
    BigInt sum = parity_sign((m % 2) * (e % 2));
    for (std::uint64_t k = 0; k < m; ++k) {
        const BigInt term = lucas(guarded_mul(2 * (m - k), q));
        if ((k % 2) * (e % 2) == 1) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum;
}

}  // namespace

IdentityCheck lemma1_eval(std::uint64_t n) {
    require(n >= 1, "lemma1: n must be >= 1");
    require(n <= static_cast<std::uint64_t>(INT64_MAX) / 2, "lemma1: n out of range");
    const QuadRat an = alpha_pow(static_cast<std::int64_t>(n));
    const QuadRat lhs = QuadRat(1) + alpha_pow(static_cast<std::int64_t>(2 * n));
    const LucasPair pair = fib_lucas(n);
    const QuadRat rhs = n % 2 == 1 ? quad_sqrt5() * QuadRat(pair.fib) * an
                                   : QuadRat(pair.lucas) * an;
    return make_check(lhs, rhs);
}

IdentityCheck lemma2_eval(std::uint64_t m, std::uint64_t n) {
    require(m >= 1, "lemma2: m must be >= 1");
    require(n >= 1, "lemma2: n must be >= 1");
    const std::uint64_t top = guarded_mul(guarded_pow(2, n), m);
    const BigInt lhs = fib(top);
    BigInt rhs = fib(m);
    for (std::uint64_t j = 0; j < n; ++j) {
        rhs *= lucas(guarded_mul(guarded_pow(2, j), m));
    }
    return make_check(QuadRat(lhs, 0, 1), QuadRat(rhs, 0, 1));
}

IdentityCheck lemma3_eval(Kind kind, std::uint64_t q, std::uint64_t m) {
    require(q >= 1, "lemma3: q must be >= 1");
    require(m >= 1, "lemma3: m must be >= 1");
    const std::uint64_t target = guarded_mul(2 * m + 1, q);
    if (kind == Kind::fib) {
        const BigInt lhs = fib(target);
        const BigInt rhs = fib(q) * lemma3_bracket(m, q, q);
        return make_check(QuadRat(lhs, 0, 1), QuadRat(rhs, 0, 1));
    }
    const BigInt lhs = lucas(target);
    const BigInt rhs = lucas(q) * lemma3_bracket(m, q, q + 1);
    return make_check(QuadRat(lhs, 0, 1), QuadRat(rhs, 0, 1));
}

IdentityCheck lemma4_eval(Kind kind, std::uint64_t m, std::uint64_t n) {
    require(m >= 1, "lemma4: m must be >= 1");
    require(n >= 1, "lemma4: n must be >= 1");
    const std::uint64_t base = 2 * m + 1;
    const std::uint64_t top = guarded_pow(base, n);
    BigInt rhs = 1;
    for (std::uint64_t j = 0; j < n; ++j) {
        const std::uint64_t qj = guarded_pow(base, j);
        BigInt bracket = kind == Kind::fib ? parity_sign(m) : 1;
        for (std::uint64_t k = 0; k < m; ++k) {
            const BigInt term = lucas(guarded_mul(2 * (m - k), qj));
            if (kind == Kind::fib && k % 2 == 1) {
                bracket -= term;
            } else {
                bracket += term;
            }
        }
        rhs *= bracket;
    }
    const BigInt lhs = kind == Kind::fib ? fib(top) : lucas(top);
    return make_check(QuadRat(lhs, 0, 1), QuadRat(rhs, 0, 1));
}

IdentityCheck lemma5_eval(std::uint64_t p, std::uint64_t m, std::uint64_t n) {
    require(p >= 2 && p % 2 == 0, "lemma5: p must be even and >= 2");
    require(m >= 1, "lemma5: m must be >= 1");
    require(n >= 1, "lemma5: n must be >= 1");
    const BigInt lhs = fib(guarded_mul(m, guarded_pow(p, n)));
    BigInt rhs = fib(guarded_mul(m, p));
    for (std::uint64_t j = 1; j + 1 <= n; ++j) {
        const std::uint64_t mpj = guarded_mul(m, guarded_pow(p, j));
        BigInt bracket = 0;
        for (std::uint64_t k = 1; k <= p / 2; ++k) {
            bracket += lucas(guarded_mul(2 * k - 1, mpj));
        }
        rhs *= bracket;
    }
    return make_check(QuadRat(lhs, 0, 1), QuadRat(rhs, 0, 1));
}

IdentityCheck lemma6_eval(std::uint64_t p, std::uint64_t m, std::uint64_t n) {
    require(p >= 3 && p % 2 == 1, "lemma6: p must be odd and >= 3");
    require(m >= 2 && m % 2 == 0, "lemma6: m must be even and >= 2");
    require(n >= 1, "lemma6: n must be >= 1");
    const BigInt lhs = fib(guarded_mul(m, guarded_pow(p, n)));
    BigInt rhs = fib(guarded_mul(m, p));
    for (std::uint64_t j = 1; j + 1 <= n; ++j) {
        const std::uint64_t mpj = guarded_mul(m, guarded_pow(p, j));
        BigInt bracket = 1;
        for (std::uint64_t k = 1; k <= (p - 1) / 2; ++k) {
            bracket += lucas(guarded_mul(2 * k, mpj));
        }
        rhs *= bracket;
    }
    return make_check(QuadRat(lhs, 0, 1), QuadRat(rhs, 0, 1));
}

IdentityCheck lemma7_eval(std::uint64_t p, std::uint64_t n) {
    require(p >= 3 && p % 2 == 1, "lemma7: p must be odd and >= 3");
    require(n >= 1, "lemma7: n must be >= 1");
    const BigInt lhs = fib(guarded_pow(p, n));
    BigInt rhs = fib(p);
    if (((n - 1) * ((p - 1) / 2)) % 2 == 1) {
        rhs = -rhs;
    }
    for (std::uint64_t j = 1; j + 1 <= n; ++j) {
        const std::uint64_t pj = guarded_pow(p, j);
        BigInt bracket = 1;
        for (std::uint64_t k = 1; k <= (p - 1) / 2; ++k) {
            const BigInt term = lucas(guarded_mul(2 * k, pj));
            if (k % 2 == 1) {
                bracket -= term;
            } else {
                bracket += term;
            }
        }
        rhs *= bracket;
    }
    return make_check(QuadRat(lhs, 0, 1), QuadRat(rhs, 0, 1));
}

IdentityCheck lemma8_eval(std::uint64_t p, std::uint64_t n) {
    require(p >= 2 && p % 2 == 0, "lemma8: p must be even and >= 2");
    require(n >= 2, "lemma8: n must be >= 2");
    const BigInt lhs = lucas(guarded_pow(p, n));
    BigInt rhs = lucas(guarded_pow(p, 2)) - 2;
    for (std::uint64_t j = 1; j + 2 <= n; ++j) {
        const std::uint64_t half = guarded_pow(p, j + 1) / 2;
        BigInt bracket = 0;
        for (std::uint64_t k = 1; k <= p / 2; ++k) {
            bracket += lucas(guarded_mul(2 * k - 1, half));
        }
        rhs *= bracket * bracket;
    }
    rhs += 2;
    return make_check(QuadRat(lhs, 0, 1), QuadRat(rhs, 0, 1));
}

IdentityCheck ratio_eval(Kind kind, std::uint64_t l, std::uint64_t m) {
    require(l >= 1, "ratio: l must be >= 1");
    require(m >= 1, "ratio: m must be >= 1");
    // Both odd-index brackets, so the sign exponents reduce to (-1)^k (fib)
    // and +1 (lucas).
    const auto bracket = [kind](std::uint64_t count, std::uint64_t q) {
        BigInt sum = kind == Kind::fib ? parity_sign(count) : 1;
        for (std::uint64_t k = 0; k < count; ++k) {
            const BigInt term = lucas(guarded_mul(2 * (count - k), q));
            if (kind == Kind::fib && k % 2 == 1) {
                sum -= term;
            } else {
                sum += term;
            }
        }
        return sum;
    };
    const std::uint64_t ql = 2 * l + 1;
    const std::uint64_t qm = 2 * m + 1;
    guarded_mul(ql, qm);  // fail fast before the Lucas sums
    const BigInt base_l = kind == Kind::fib ? fib(ql) : lucas(ql);
    const BigInt base_m = kind == Kind::fib ? fib(qm) : lucas(qm);
    const BigInt lhs = base_l * bracket(m, ql);
    const BigInt rhs = base_m * bracket(l, qm);
    return make_check(QuadRat(lhs, 0, 1), QuadRat(rhs, 0, 1));
}

}  // namespace fibtel
