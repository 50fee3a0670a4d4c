#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibtel/bigrat.hpp"
#include "fibtel/identities.hpp"
#include "fibtel/quadrat.hpp"

namespace fibtel {

/// The ten series families the engine can sum and certify. Each is an
/// infinite series over Fibonacci/Lucas numbers at geometrically growing
/// indices, with an exactly known value in Q(sqrt(5)):
///
///   t1       sum_{n>=0} 1/F(2^n)                                  = (7-sqrt5)/2
///   t2{m,a}  sum_{n>=0} (L(2^{n+1}m)^a - 1)/F(2^{n+2}m)^a         = 1/(F(m)L(m))^a
///   t3{m}    sum_{n>=0} [(-1)^m - 1 + S3(n)]/F((2m+1)^{n+1})      = 1
///   t4{m}    sum_{n>=0} S4(n)/L((2m+1)^{n+1})                     = 1
///   t5{m}    sum_{n>=0} F(2^{n+2})[(-1)^m - 1 + S5(n)]
///                       / F((2m+1)2^{n+2})                        = 1/(F(2m+1)L(2m+1))
///   t6{p,m}  sum_{n>=1} [S6(n) - 1]/F(m p^{n+1})   (p even)       = 1/F(mp)
///   t7{p,m}  sum_{n>=1} S7(n)/F(m p^{n+1})         (p odd, m even) = 1/F(mp)
///   t8{p}    sum_{n>=1} (-1)^{n(p-1)/2} S8(n)/F(p^{n+1}) (p odd)  = 1/F(p)
///   t9{p}    sum_{n>=2} [S9(n)^2 - 1]/(L(p^{n+1}) - 2) (p even)   = 1/(L(p^2)-2)
///   r2       sum_{n>=0} L(2^{n+1})/F(2^{n+2})                     = (5-sqrt5)/2
///
/// with the Lucas-number brackets
///   S3(n) = sum_{k<m} (-1)^k L(2(m-k)(2m+1)^n)
///   S4(n) = sum_{k<m} L(2(m-k)(2m+1)^n)
///   S5(n) = sum_{k<m} (-1)^k L((m-k)2^{n+2})
///   S6(n) = sum_{k=1}^{p/2} L((2k-1) m p^n)
///   S7(n) = sum_{k=1}^{(p-1)/2} L(2 k m p^n)
///   S8(n) = sum_{k=1}^{(p-1)/2} (-1)^k L(2 k p^n)
///   S9(n) = sum_{k=1}^{p/2} L((2k-1) p^n / 2)
enum class SeriesId { t1, t2, t3, t4, t5, t6, t7, t8, t9, r2 };

struct SeriesSpec {
    SeriesId id = SeriesId::t1;
    std::uint64_t m = 0;
    std::uint64_t a = 0;
    std::uint64_t p = 0;

    /// First summation index n0 (t1-t5, r2: 0; t6-t8: 1; t9: 2).
    std::uint64_t start_index() const;

    /// True when consecutive terms genuinely alternate in sign: only t8
    /// with p = 3 (mod 4). For p = 1 (mod 4) the dominant Lucas term of
    /// S8 makes every summand positive.
    bool alternating() const;

    std::string name() const;
};

/// Validates raw parameters (parity and lower bounds) and returns the
/// well-formed spec. Throws std::invalid_argument naming the violated
/// constraint, e.g. "t6: p must be even".
SeriesSpec make_series(SeriesId id, std::optional<std::uint64_t> m = {},
                       std::optional<std::uint64_t> a = {},
                       std::optional<std::uint64_t> p = {});

/// make_series from a CLI-style name token ("t1".."t9", "r2").
SeriesSpec make_series(const std::string& name, std::optional<std::uint64_t> m = {},
                       std::optional<std::uint64_t> a = {},
                       std::optional<std::uint64_t> p = {});

/// The n-th summand, n >= start_index(), computed from fib_lucas values by
/// the literal summand formula — never through the B-sequence.
BigRat direct_term(const SeriesSpec& spec, std::uint64_t n);

/// The auxiliary telescoping value B_n, n >= start_index(): a product of
/// Lucas brackets whose consecutive differences reproduce the summands
/// (after the fixed fold factor). Computed independently of direct_term.
BigRat b_value(const SeriesSpec& spec, std::uint64_t n);

/// Constant c with partial sums = c * (B_{n0} - B_{n0+N}); 1 for most
/// variants, 1/F(mp) and friends where the bracket product absorbs a
/// leading factor.
BigRat fold_factor(const SeriesSpec& spec);

enum class SumMode { direct, telescoped };

/// Exact partial sum of the first N terms. direct mode adds summands;
/// telescoped mode evaluates fold_factor * (B_{n0} - B_{n0+N}). The two
/// agree exactly for every N — that equality is each family's proof
/// skeleton, machine-checked.
BigRat partial_sum(const SeriesSpec& spec, std::uint64_t terms, SumMode mode);

/// The exact value of the infinite series.
QuadRat closed_form(const SeriesSpec& spec);

/// closed_form - partial_sum(N, direct), exact in Q(sqrt(5)).
QuadRat gap(const SeriesSpec& spec, std::uint64_t terms);

/// Certification record: after terms_used summands the remaining tail is
/// provably below gap_bound, and the exact gap was checked against it.
struct ConvergenceReport {
    SeriesSpec spec;
    std::uint64_t terms_used = 0;
    BigRat partial;
    QuadRat target;
    QuadRat gap;
    BigRat gap_bound;
    bool certified = false;
    unsigned decimal_digits_agreeing = 0;
    std::string diagnostic;  // empty when certified
};

/// Finds the smallest N (doubling search, then bisection) whose tail bound
/// drops below 10^-digits and verifies, all in exact arithmetic:
///   - tail bound: 2|t(n0+N)| after checking |t(i+1)|/|t(i)| <= 1/2 on the
///     three consecutive ratios ending at the first omitted term; for an
///     alternating t8 the bound is |t(n0+N)| with a decreasing-|t| check;
///   - |gap(N)| <= bound, via exact sign evaluation in Q(sqrt(5));
///   - gap >= 0 for the all-positive-term families;
///   - partial_sum(direct) == partial_sum(telescoped) at N.
/// A failed precondition comes back uncertified with a diagnostic.
ConvergenceReport certify(const SeriesSpec& spec, unsigned digits);

/// The finite telescoping identity behind all of the above, over arbitrary
/// rational data: for x != 0 and partial denominators x + a_i != 0,
///   1/(x+a_1) + sum_{k=2}^{n} (a_1...a_{k-1})/((x+a_1)...(x+a_k))
///     = 1/x - (a_1...a_n)/(x (x+a_1)...(x+a_n)).
/// Throws std::domain_error naming the offending factor if some x + a_i
/// (or x) vanishes.
IdentityCheck generic_apery_check(const BigRat& x, const std::vector<BigRat>& a,
                                  std::size_t n);

}  // namespace fibtel
