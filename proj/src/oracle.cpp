#include "fibtel/oracle.hpp"

#include <stdexcept>

#include "fibtel/guarded_index.hpp"
#include "fibtel/lucas.hpp"

namespace fibtel {

namespace {

std::string compact(const QuadRat& v) {
    if (v.is_rational()) {
        return v.to_bigrat().to_string();
    }
    return v.to_string();
}

void record(FuzzReport& report, std::string params, const IdentityCheck& check) {
    ++report.cases;
    if (!check.holds) {
        report.failures.push_back({std::move(params), compact(check.lhs), compact(check.rhs)});
    }
}

std::string kv(const char* key, std::uint64_t value) {
    return std::string(key) + "=" + std::to_string(value);
}

const char* kind_name(Kind kind) { return kind == Kind::fib ? "fib" : "lucas"; }

// Largest n with base^n * m <= cap (0 if even n=1 is out).
std::uint64_t max_power(std::uint64_t base, std::uint64_t m, std::uint64_t cap) {
    std::uint64_t n = 0;
    std::uint64_t value = m;
    while (value <= cap / base) {
        value *= base;
        ++n;
    }
    return n;
}

// The k-free misreading of the lemma-6 bracket: every summand frozen at
// L_{2 m p^j}. Correct for p = 3 (one summand), wrong from p = 5 on.
IdentityCheck lemma6_kfree_eval(std::uint64_t p, std::uint64_t m, std::uint64_t n) {
    const BigInt lhs = fib(guarded_mul(m, guarded_pow(p, n)));
    BigInt rhs = fib(guarded_mul(m, p));
    for (std::uint64_t j = 1; j + 1 <= n; ++j) {
        const BigInt repeated = lucas(guarded_mul(2 * m, guarded_pow(p, j)));
        rhs *= 1 + BigInt((p - 1) / 2) * repeated;
    }
    return make_check(QuadRat(lhs, 0, 1), QuadRat(rhs, 0, 1));
}

BigInt rearrangement_bracket(std::uint64_t m_odd, std::uint64_t base, std::uint64_t n) {
    // sum_{k=0}^{m_odd-1} (-1)^k L_{2 (m_odd - k) base^n}
    const std::uint64_t q = guarded_pow(base, n);
    BigInt sum = 0;
    for (std::uint64_t k = 0; k < m_odd; ++k) {
        const BigInt term = lucas(guarded_mul(2 * (m_odd - k), q));
        if (k % 2 == 1) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum;
}

// Shared body of eq17/eq19/eq20: for the odd bracket family with modulus
// base = 2*m_odd + 1 (m_odd odd), check termwise
//   (bracket(n) - 2)/F(base^{n+1}) = bracket(n)/F(base^{n+1}) - 2/F(base^{n+1})
// against the t3{m_odd} summand, then the exact finite-sum consequence
//   sum_{n=0}^{N} 1/F(base^n)
//     = 1/2 sum_{n<N} bracket(n)/F(base^{n+1}) + 1 - 1/2 t3partial(N).
IdentityCheck reciprocal_split_check(std::uint64_t m_odd, std::uint64_t terms) {
    const std::uint64_t base = 2 * m_odd + 1;
    const SeriesSpec t3 = make_series(SeriesId::t3, m_odd);
    bool termwise = true;
    BigRat bracket_sum(0);
    for (std::uint64_t n = 0; n < terms; ++n) {
        const BigInt bracket = rearrangement_bracket(m_odd, base, n);
        const BigRat denom(fib(guarded_pow(base, n + 1)));
        const BigRat split = BigRat(bracket) / denom - BigRat(2) / denom;
        termwise = termwise && split == direct_term(t3, n);
        bracket_sum += BigRat(bracket) / denom;
    }
    BigRat reciprocal_sum(0);
    for (std::uint64_t n = 0; n <= terms; ++n) {
        reciprocal_sum += BigRat(1, fib(guarded_pow(base, n)));
    }
    const BigRat half(BigInt(1), BigInt(2));
    const BigRat rhs = half * bracket_sum + BigRat(1) - half * partial_sum(t3, terms, SumMode::direct);
    IdentityCheck check = make_check(QuadRat(reciprocal_sum), QuadRat(rhs));
    check.holds = check.holds && termwise;
    return check;
}

}  // namespace

FuzzReport fuzz_lemma(int lemma, const FuzzGrid& grid) {
    FuzzReport report;
    report.identity = "lemma" + std::to_string(lemma);
    switch (lemma) {
        case 1:
            report.grid = "n<=" + std::to_string(grid.lemma1_n);
            for (std::uint64_t n = 1; n <= grid.lemma1_n; ++n) {
                record(report, kv("n", n), lemma1_eval(n));
            }
            break;
        case 2:
            report.grid = "m<=" + std::to_string(grid.lemma2_m) +
                          ",2^n*m<=" + std::to_string(grid.index_cap);
            for (std::uint64_t m = 1; m <= grid.lemma2_m; ++m) {
                const std::uint64_t n_max = max_power(2, m, grid.index_cap);
                for (std::uint64_t n = 1; n <= n_max; ++n) {
                    record(report, kv("m", m) + "," + kv("n", n), lemma2_eval(m, n));
                }
            }
            break;
        case 3:
            report.grid = "q<=" + std::to_string(grid.lemma3_q) +
                          ",m<=" + std::to_string(grid.lemma3_m) + ",both kinds";
            for (Kind kind : {Kind::fib, Kind::lucas}) {
                for (std::uint64_t q = 1; q <= grid.lemma3_q; ++q) {
                    for (std::uint64_t m = 1; m <= grid.lemma3_m; ++m) {
                        record(report,
                               std::string(kind_name(kind)) + "," + kv("q", q) + "," + kv("m", m),
                               lemma3_eval(kind, q, m));
                    }
                }
            }
            break;
        case 4:
            report.grid = "m<=" + std::to_string(grid.lemma4_m) +
                          ",(2m+1)^n<=" + std::to_string(grid.index_cap) + ",both kinds";
            for (Kind kind : {Kind::fib, Kind::lucas}) {
                for (std::uint64_t m = 1; m <= grid.lemma4_m; ++m) {
                    const std::uint64_t n_max = max_power(2 * m + 1, 1, grid.index_cap);
                    for (std::uint64_t n = 1; n <= n_max; ++n) {
                        record(report,
                               std::string(kind_name(kind)) + "," + kv("m", m) + "," + kv("n", n),
                               lemma4_eval(kind, m, n));
                    }
                }
            }
            break;
        case 5:
            report.grid = "p<=" + std::to_string(grid.lemma5_p) +
                          ",m<=" + std::to_string(grid.lemma5_m) +
                          ",m*p^n<=" + std::to_string(grid.index_cap);
            for (std::uint64_t p = 2; p <= grid.lemma5_p; p += 2) {
                for (std::uint64_t m = 1; m <= grid.lemma5_m; ++m) {
                    const std::uint64_t n_max = max_power(p, m, grid.index_cap);
                    for (std::uint64_t n = 1; n <= n_max; ++n) {
                        record(report, kv("p", p) + "," + kv("m", m) + "," + kv("n", n),
                               lemma5_eval(p, m, n));
                    }
                }
            }
            break;
        case 6:
            report.grid = "p<=" + std::to_string(grid.lemma6_p) +
                          ",m<=" + std::to_string(grid.lemma6_m) +
                          ",m*p^n<=" + std::to_string(grid.index_cap);
            for (std::uint64_t p = 3; p <= grid.lemma6_p; p += 2) {
                for (std::uint64_t m = 2; m <= grid.lemma6_m; m += 2) {
                    const std::uint64_t n_max = max_power(p, m, grid.index_cap);
                    for (std::uint64_t n = 1; n <= n_max; ++n) {
                        record(report, kv("p", p) + "," + kv("m", m) + "," + kv("n", n),
                               lemma6_eval(p, m, n));
                    }
                }
            }
            break;
        case 7:
            report.grid = "p<=" + std::to_string(grid.lemma7_p) +
                          ",p^n<=" + std::to_string(grid.index_cap);
            for (std::uint64_t p = 3; p <= grid.lemma7_p; p += 2) {
                const std::uint64_t n_max = max_power(p, 1, grid.index_cap);
                for (std::uint64_t n = 1; n <= n_max; ++n) {
                    record(report, kv("p", p) + "," + kv("n", n), lemma7_eval(p, n));
                }
            }
            break;
        case 8:
            report.grid = "p<=" + std::to_string(grid.lemma8_p) +
                          ",p^n<=" + std::to_string(grid.index_cap);
            for (std::uint64_t p = 2; p <= grid.lemma8_p; p += 2) {
                const std::uint64_t n_max = max_power(p, 1, grid.index_cap);
                for (std::uint64_t n = 2; n <= n_max; ++n) {
                    record(report, kv("p", p) + "," + kv("n", n), lemma8_eval(p, n));
                }
            }
            break;
        default:
            throw std::invalid_argument("fuzz_lemma: lemma must be 1..8");
    }
    return report;
}

FuzzReport fuzz_ratio(const FuzzGrid& grid) {
    FuzzReport report;
    report.identity = "ratio";
    report.grid = "l<=" + std::to_string(grid.ratio_l) + ",m<=" + std::to_string(grid.ratio_m) +
                  ",both kinds";
    for (Kind kind : {Kind::fib, Kind::lucas}) {
        for (std::uint64_t l = 1; l <= grid.ratio_l; ++l) {
            for (std::uint64_t m = 1; m <= grid.ratio_m; ++m) {
                record(report, std::string(kind_name(kind)) + "," + kv("l", l) + "," + kv("m", m),
                       ratio_eval(kind, l, m));
            }
        }
    }
    return report;
}

FuzzReport fuzz_lemma6_kfree(const FuzzGrid& grid) {
    FuzzReport report;
    report.identity = "lemma6-kfree";
    report.grid = "p<=" + std::to_string(grid.lemma6_p) + ",m<=" + std::to_string(grid.lemma6_m) +
                  ",m*p^n<=" + std::to_string(grid.index_cap);
    for (std::uint64_t p = 3; p <= grid.lemma6_p; p += 2) {
        for (std::uint64_t m = 2; m <= grid.lemma6_m; m += 2) {
            const std::uint64_t n_max = max_power(p, m, grid.index_cap);
            for (std::uint64_t n = 1; n <= n_max; ++n) {
                record(report, kv("p", p) + "," + kv("m", m) + "," + kv("n", n),
                       lemma6_kfree_eval(p, m, n));
            }
        }
    }
    return report;
}

std::vector<FuzzReport> fuzz_all(const FuzzGrid& grid) {
    std::vector<FuzzReport> reports;
    reports.reserve(9);
    for (int lemma = 1; lemma <= 8; ++lemma) {
        reports.push_back(fuzz_lemma(lemma, grid));
    }
    reports.push_back(fuzz_ratio(grid));
    return reports;
}

IdentityCheck rearrangement_check(RearrangementId id, std::uint64_t m, std::uint64_t terms) {
    if (terms < 1) {
        throw std::invalid_argument("rearrangement_check: need N >= 1");
    }
    switch (id) {
        case RearrangementId::eq16: {
            // L_{3^n}^2 = L_{2*3^n} - 2 termwise (odd-index case of
            // L_n^2 = L_{2n} + 2(-1)^n), hence equal partial sums over
            // F_{3^{n+1}} denominators.
            const SeriesSpec t3 = make_series(SeriesId::t3, std::uint64_t{1});
            bool termwise = true;
            BigRat squared_sum(0);
            for (std::uint64_t n = 0; n < terms; ++n) {
                const BigInt l_small = lucas(guarded_pow(3, n));
                const BigInt l_double = lucas(guarded_mul(2, guarded_pow(3, n)));
                termwise = termwise && l_small * l_small == l_double - 2;
                squared_sum += BigRat(l_small * l_small, fib(guarded_pow(3, n + 1)));
            }
            IdentityCheck check =
                make_check(QuadRat(squared_sum), QuadRat(partial_sum(t3, terms, SumMode::direct)));
            check.holds = check.holds && termwise;
            return check;
        }
        case RearrangementId::eq17:
            return reciprocal_split_check(1, terms);
        case RearrangementId::eq19:
            if (m < 1) {
                throw std::invalid_argument("rearrangement_check: eq19 needs m >= 1");
            }
            return reciprocal_split_check(2 * m + 1, terms);
        case RearrangementId::eq20: {
            // The 4m+3 = 7 instance with its bracket written out literally.
            IdentityCheck generic = reciprocal_split_check(3, terms);
            bool literal = true;
            for (std::uint64_t n = 0; n < terms; ++n) {
                const std::uint64_t q = guarded_pow(7, n);
                const BigInt bracket = lucas(guarded_mul(6, q)) - lucas(guarded_mul(4, q)) +
                                       lucas(guarded_mul(2, q));
                literal = literal && bracket == rearrangement_bracket(3, 7, n);
            }
            generic.holds = generic.holds && literal;
            return generic;
        }
    }
    throw std::logic_error("rearrangement_check: unreachable");
}

bool decimal_crosscheck(const SeriesSpec& spec, unsigned digits) {
    const ConvergenceReport report = certify(spec, digits);
    if (!report.certified) {
        return false;
    }
    const std::string partial_text = QuadRat(report.partial).to_decimal(digits);
    const std::string target_text = report.target.to_decimal(digits);
    const BigRat difference =
        (BigRat::from_decimal(partial_text) - BigRat::from_decimal(target_text)).abs();
    return difference <= BigRat(BigInt(10), pow10(digits));
}

}  // namespace fibtel
