#pragma once

#include <cstdint>

#include "fibtel/quadrat.hpp"

namespace fibtel {

/// Which of the two companion sequences an identity is stated for.
enum class Kind { fib, lucas };

/// Both sides of one identity instance, evaluated exactly. `holds` is true
/// iff the canonical forms are componentwise equal — no tolerance anywhere.
struct IdentityCheck {
    QuadRat lhs;
    QuadRat rhs;
    bool holds = false;
};

inline IdentityCheck make_check(QuadRat lhs, QuadRat rhs) {
    const bool holds = lhs == rhs;
    return IdentityCheck{std::move(lhs), std::move(rhs), holds};
}

/// 1 + alpha^{2n} = sqrt(5) F_n alpha^n (n odd) or L_n alpha^n (n even), n >= 1.
IdentityCheck lemma1_eval(std::uint64_t n);

/// F_{2^n m} = F_m L_m L_{2m} ... L_{2^{n-1} m}, m, n >= 1.
IdentityCheck lemma2_eval(std::uint64_t m, std::uint64_t n);

/// F_{(2m+1)q} = F_q [(-1)^{mq} + sum_{k=0}^{m-1} (-1)^{kq} L_{2(m-k)q}] and
/// the Lucas companion with exponents m(q+1), k(q+1); q, m >= 1.
IdentityCheck lemma3_eval(Kind kind, std::uint64_t q, std::uint64_t m);

/// F_{(2m+1)^n} resp. L_{(2m+1)^n} as a product of n bracket factors,
/// bracket_j = (-1)^m + sum_{k<m} (-1)^k L_{2(m-k)(2m+1)^j} (fib kind) or
/// 1 + sum_{k<m} L_{2(m-k)(2m+1)^j} (lucas kind); m, n >= 1.
IdentityCheck lemma4_eval(Kind kind, std::uint64_t m, std::uint64_t n);

/// F_{m p^n} = F_{mp} prod_{j=1}^{n-1} [sum_{k=1}^{p/2} L_{(2k-1) m p^j}],
/// p even >= 2, m >= 1, n >= 1.
IdentityCheck lemma5_eval(std::uint64_t p, std::uint64_t m, std::uint64_t n);

/// F_{m p^n} = F_{mp} prod_{j=1}^{n-1} [1 + sum_{k=1}^{(p-1)/2} L_{2 k m p^j}],
/// p odd >= 3, m even >= 2, n >= 1. The summand index depends on k; the
/// k-free variant is provably wrong for p >= 5 (see oracle negative control).
IdentityCheck lemma6_eval(std::uint64_t p, std::uint64_t m, std::uint64_t n);

/// F_{p^n} = (-1)^{(n-1)(p-1)/2} F_p prod_{j=1}^{n-1}
///           [1 + sum_{k=1}^{(p-1)/2} (-1)^k L_{2 k p^j}], p odd >= 3, n >= 1.
IdentityCheck lemma7_eval(std::uint64_t p, std::uint64_t n);

/// L_{p^n} = 2 + (L_{p^2} - 2) prod_{j=1}^{n-2}
///           [sum_{k=1}^{p/2} L_{(2k-1) p^{j+1} / 2}]^2, p even >= 2, n >= 2.
IdentityCheck lemma8_eval(std::uint64_t p, std::uint64_t n);

/// Cross-multiplied ratio identity: both sides equal F_{(2l+1)(2m+1)}
/// (fib kind) or L_{(2l+1)(2m+1)} (lucas kind), so no rational division is
/// needed and zero denominators cannot arise; l, m >= 1.
IdentityCheck ratio_eval(Kind kind, std::uint64_t l, std::uint64_t m);

}  // namespace fibtel
