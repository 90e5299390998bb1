#include "identities.hpp"

namespace seqid {

namespace {

void require_m(long m) {
    if (m < 0) throw std::invalid_argument("identity parameter m must be >= 0");
}

// (2m+1)/(2i+1) * C(m+i, 2i), performed as an exact integer division. An
// inexact division here is an implementation bug, not bad input.
mpz_class base_coefficient(long m, long i) {
    mpz_class num = binomial(m + i, 2 * i) * (2 * m + 1);
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), mpz_class(2 * i + 1).get_mpz_t());
    if (r != 0) throw std::logic_error("odd-multiple coefficient division is inexact");
    return q;
}

}  // namespace

OddMultipleIdentity odd_multiple_poly(long m) {
    require_m(m);
    std::vector<mpz_class> even(2 * m + 2), odd(2 * m + 2);
    mpz_class power_of_eight = 1;
    for (long i = 0; i <= m; ++i) {
        mpz_class c = power_of_eight * base_coefficient(m, i);
        even[2 * i + 1] = c;
        odd[2 * i + 1] = ((m + i) % 2 != 0) ? mpz_class(-c) : c;
        power_of_eight <<= 3;
    }
    return OddMultipleIdentity{m, {IntPoly(std::move(even)), IntPoly(std::move(odd))}};
}

GeneralOddMultipleIdentity general_odd_multiple_poly(long m) {
    require_m(m);
    const IntPoly disc(std::vector<mpz_class>{4, 0, 1});  // s^2 + 4
    std::vector<IntPoly> even(2 * m + 2), odd(2 * m + 2);
    IntPoly disc_power = IntPoly::constant(1);
    for (long i = 0; i <= m; ++i) {
        IntPoly c = disc_power.scaled(base_coefficient(m, i));
        odd[2 * i + 1] = ((m + i) % 2 != 0) ? c.scaled(-1) : c;
        even[2 * i + 1] = std::move(c);
        disc_power *= disc;
    }
    return GeneralOddMultipleIdentity{m, {SPoly(std::move(even)), SPoly(std::move(odd))}};
}

PowerReduction power_reduction(long m) {
    require_m(m);
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, static_cast<unsigned long>(3 * m));
    PowerReduction red{m, make_rational(1, denom), {}};
    red.terms.reserve(m + 1);
    for (long j = 0; j <= m; ++j)
        red.terms.push_back(PowerReductionTerm{j, binomial(2 * m + 1, j), 2 * m + 1 - 2 * j});
    return red;
}

std::pair<mpz_class, mpz_class> power_reduction_sum(const PowerReduction& red, long n,
                                                    PowerSignRule rule) {
    if (n < 0) throw std::invalid_argument("power reduction index must be >= 0");
    const SequenceSpec pell(2);
    mpz_class sum = 0;
    for (const auto& t : red.terms) {
        long exponent = (rule == PowerSignRule::n_plus_1) ? t.j * (n + 1) : t.j * (n + red.m);
        mpz_class contrib = t.weight * term(pell, t.index_multiplier * n);
        if (exponent % 2 != 0)
            sum -= contrib;
        else
            sum += contrib;
    }
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, static_cast<unsigned long>(3 * red.m));
    return {sum, denom};
}

mpq_class evaluate_power_reduction(const PowerReduction& red, long n, PowerSignRule rule) {
    auto [sum, denom] = power_reduction_sum(red, n, rule);
    return make_rational(sum, denom);
}

mpz_class partial_sum_closed_form(long m, long n) {
    if (m < 1) throw std::invalid_argument("partial sum requires m >= 1");
    if (m % 2 == 0)
        throw std::invalid_argument(
            "partial sum closed form (P_{m(2n+1)} - P_m)/Q_m holds for odd m only");
    if (n < 0) throw std::invalid_argument("partial sum requires n >= 0");
    const SequenceSpec pell(2);
    mpz_class num = term(pell, m * (2 * n + 1)) - term(pell, m);
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), companion(pell, m).get_mpz_t());
    if (r != 0) throw std::logic_error("partial sum closed form: division by Q_m is inexact");
    return q;
}

MelhamIdentity melham_sum_poly(long m) {
    require_m(m);
    const SequenceSpec pell(2);

    // sum_{k=1..n} P_{2k}^{2m+1}
    //   = (1/2^{3m}) sum_j (-1)^j C(2m+1,j) sum_k P_{(2m+1-2j)2k}      (reduction at even
    //                                                                   index, sign collapses
    //                                                                   to (-1)^j)
    //   = (1/2^{3m}) sum_j (-1)^j C(2m+1,j) (P_{(2m+1-2j)(2n+1)} - P_{2m+1-2j}) / Q_{2m+1-2j}
    // and P_{(2m+1-2j)(2n+1)} expands through the degree-(2m+1-2j) odd-multiple
    // polynomial at the odd argument 2n+1, giving a polynomial in X = P_{2n+1}.
    std::vector<mpq_class> acc(2 * m + 2);
    for (long j = 0; j <= m; ++j) {
        long idx = 2 * m + 1 - 2 * j;
        mpz_class signed_binom = binomial(2 * m + 1, j);
        if (j % 2 != 0) signed_binom = -signed_binom;
        mpq_class w = make_rational(signed_binom, companion(pell, idx));

        const IntPoly& expansion = odd_multiple_poly(m - j).pair.odd_n;
        for (std::size_t deg = 0; deg < expansion.coefficients().size(); ++deg) {
            if (is_zero(expansion.coefficients()[deg])) continue;
            acc[deg] += w * mpq_class(expansion.coefficients()[deg]);
        }
        acc[0] -= w * mpq_class(term(pell, idx));
    }
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, static_cast<unsigned long>(3 * m));
    mpq_class scale = make_rational(1, denom);
    for (auto& c : acc) c *= scale;
    RatPoly rational(std::move(acc));

    mpz_class multiplier = 1;
    for (long j = 0; j <= m; ++j) multiplier *= companion(pell, 2 * j + 1);

    std::vector<mpz_class> cleared(rational.coefficients().size());
    for (std::size_t i = 0; i < cleared.size(); ++i) {
        mpq_class c = rational.coefficients()[i] * mpq_class(multiplier);
        if (c.get_den() != 1)
            throw std::logic_error("melham polynomial did not clear to integer coefficients");
        cleared[i] = c.get_num();
    }

    return MelhamIdentity{m, std::move(rational), IntPoly(std::move(cleared)),
                          std::move(multiplier)};
}

}  // namespace seqid
