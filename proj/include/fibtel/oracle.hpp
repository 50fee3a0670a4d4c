#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibtel/identities.hpp"
#include "fibtel/series.hpp"

namespace fibtel {

struct FuzzFailure {
    std::string params;
    std::string lhs;
    std::string rhs;
};

/// Result of sweeping one identity over an exhaustive parameter grid.
/// Failures are data, not errors; an empty list means the identity held at
/// every grid point. Grid order is fixed, so reports are byte-identical
/// across runs.
struct FuzzReport {
    std::string identity;
    std::string grid;
    std::uint64_t cases = 0;
    std::vector<FuzzFailure> failures;

    bool pass() const { return failures.empty(); }
};

/// Grid bounds for the exhaustive sweeps. Defaults keep every touched
/// Fibonacci/Lucas index at or below index_cap and finish in seconds.
struct FuzzGrid {
    std::uint64_t index_cap = 100'000;
    std::uint64_t lemma1_n = 500;
    std::uint64_t lemma2_m = 20;
    std::uint64_t lemma3_q = 50;
    std::uint64_t lemma3_m = 25;
    std::uint64_t lemma4_m = 6;
    std::uint64_t lemma5_p = 8;
    std::uint64_t lemma5_m = 6;
    std::uint64_t lemma6_p = 9;
    std::uint64_t lemma6_m = 8;
    std::uint64_t lemma7_p = 9;
    std::uint64_t lemma8_p = 8;
    std::uint64_t ratio_l = 12;
    std::uint64_t ratio_m = 12;
};

/// Exhaustive sweep of one lemma identity (1..8) over its grid.
FuzzReport fuzz_lemma(int lemma, const FuzzGrid& grid = {});

/// Exhaustive sweep of the cross-multiplied ratio identities (both kinds).
FuzzReport fuzz_ratio(const FuzzGrid& grid = {});

/// Negative control: the k-free misreading of the lemma-6 product, with
/// summand L_{2 m p^j} repeated (p-1)/2 times. Indistinguishable from the
/// correct form at p = 3 but provably false from p = 5 on; a sweep must
/// come back with failures, demonstrating that the fuzzer can see a wrong
/// formula.
FuzzReport fuzz_lemma6_kfree(const FuzzGrid& grid = {});

/// All eight lemmas plus the ratio identities, in order.
std::vector<FuzzReport> fuzz_all(const FuzzGrid& grid = {});

/// Rearranged-series checks. Each verifies a termwise summand identity for
/// n < N and then the resulting exact finite-sum identity, so every
/// assertion is between fully evaluated rationals — no truncated-tail
/// handwaving.
///   eq16      L(3^n)^2 = L(2*3^n) - 2 termwise; partial sums of
///             L(3^n)^2/F(3^{n+1}) equal t3{1} partial sums.
///   eq17      sum_{n<=N} 1/F(3^n) = 1/2 sum_{n<N} L(2*3^n)/F(3^{n+1})
///             + 1 - 1/2 * t3{1}-partial(N).
///   eq19{m}   the same split for the odd family 4m+3, m >= 1.
///   eq20      the 7^n instance of eq19 with its three-term bracket
///             L(6*7^n) - L(4*7^n) + L(2*7^n) written out literally.
enum class RearrangementId { eq16, eq17, eq19, eq20 };

IdentityCheck rearrangement_check(RearrangementId id, std::uint64_t m, std::uint64_t terms);

/// Independent decimal-level confirmation of a certification: renders the
/// certified partial sum and the closed form to `digits` places and checks
/// the parsed values differ by at most 10^{1-digits}. Shares no code path
/// with the exact sign-based gap comparison.
bool decimal_crosscheck(const SeriesSpec& spec, unsigned digits);

}  // namespace fibtel
