#pragma once

#include <vector>

#include "polynomials.hpp"
#include "sequences.hpp"

namespace seqid {

// Identities whose signs depend on n mod 2 are materialized as two
// polynomials. Both components carry the same absolute coefficients and
// differ only in signs; only odd degrees are populated.
template <typename P>
struct ParityPair {
    P even_n;
    P odd_n;
};

// A_{(2m+1)n} as an odd polynomial of degree 2m+1 in A_n. For the Pell
// instance the coefficient of X^{2i+1} is 2^{3i} * (2m+1)/(2i+1) * C(m+i,2i)
// up to sign; the leading coefficient is 2^{3m} and the degree-1
// coefficient has absolute value 2m+1.
struct OddMultipleIdentity {
    long m;
    ParityPair<IntPoly> pair;
};

// Same family for the whole s-class: the power of 8 becomes (s^2+4)^i and
// coefficients live in Z[s].
struct GeneralOddMultipleIdentity {
    long m;
    ParityPair<SPoly> pair;
};

// One term of the expansion of P_n^{2m+1} into Pell numbers at multiplied
// indices: weight * P_{index_multiplier * n}, signed by the rule below.
struct PowerReductionTerm {
    long j;
    mpz_class weight;       // C(2m+1, j)
    long index_multiplier;  // 2m+1 - 2j
};

// The sign of term j is (-1)^(j(n+1)). A near-miss candidate rule,
// (-1)^(j(n+m)), differs exactly when m is even; both are kept so the
// verifier can demonstrate which one is arithmetically true.
enum class PowerSignRule { n_plus_1, n_plus_m };

struct PowerReduction {
    long m;
    mpq_class scale;  // 1 / 2^{3m}
    std::vector<PowerReductionTerm> terms;
};

// Melham-type sum for Pell: Q_1 Q_3 ... Q_{2m+1} * sum_{k=1..n} P_{2k}^{2m+1}
// equals an integer polynomial in P_{2n+1}. `rational` is the polynomial
// before clearing, `cleared` = multiplier * rational with all-integer
// coefficients (asserted at construction).
struct MelhamIdentity {
    long m;
    RatPoly rational;
    IntPoly cleared;
    mpz_class multiplier;
};

OddMultipleIdentity odd_multiple_poly(long m);
GeneralOddMultipleIdentity general_odd_multiple_poly(long m);
PowerReduction power_reduction(long m);
MelhamIdentity melham_sum_poly(long m);

// sum_{k=1..n} P_{2mk} as (P_{m(2n+1)} - P_m)/Q_m with the division
// asserted exact. Valid for odd m only: the closed form fails for even m
// (first at m=2, n=1), so even m is rejected.
mpz_class partial_sum_closed_form(long m, long n);

// Signed sum of the reduction terms at concrete n, before scaling:
// (sum_j sign * weight * P_{(2m+1-2j)n}, 2^{3m}). Kept unreduced so reports
// can show the raw fraction.
std::pair<mpz_class, mpz_class> power_reduction_sum(const PowerReduction& red, long n,
                                                    PowerSignRule rule = PowerSignRule::n_plus_1);

// The reduction evaluated at n; equals P_n^{2m+1} under the n_plus_1 rule.
mpq_class evaluate_power_reduction(const PowerReduction& red, long n,
                                   PowerSignRule rule = PowerSignRule::n_plus_1);

}  // namespace seqid
