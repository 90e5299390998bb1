#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "identities.hpp"

using namespace seqid;

namespace {

const SequenceSpec kPell(2);

std::vector<mpz_class> pell_table(long top) {
    std::vector<mpz_class> p(top + 1);
    if (top >= 1) p[1] = 1;
    for (long k = 2; k <= top; ++k) p[k] = 2 * p[k - 1] + p[k - 2];
    return p;
}

IntPoly ip(std::vector<long> v) {
    std::vector<mpz_class> c(v.begin(), v.end());
    return IntPoly(std::move(c));
}

mpz_class pow2(long e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return out;
}

// The closed-form double sum for the melham polynomial, built directly from
// binomials and companion values. Independent of the generator pipeline,
// which composes the power-reduction, partial-sum and odd-multiple steps.
RatPoly melham_closed_form(long m) {
    std::vector<mpq_class> coeffs(2 * m + 2);
    mpq_class scale = make_rational(1, pow2(3 * m));
    for (long i = 0; i <= m; ++i) {
        mpq_class total;
        for (long j = 0; j <= m - i; ++j) {
            mpz_class num = pow2(3 * i) * (2 * m - 2 * j + 1) * binomial(2 * m + 1, j) *
                            binomial(m - j + i, 2 * i);
            if ((m + i) % 2 != 0) num = -num;
            total += make_rational(num, companion(kPell, 2 * m + 1 - 2 * j) * (2 * i + 1));
        }
        coeffs[2 * i + 1] = total * scale;
    }
    mpq_class constant;
    for (long j = 0; j <= m; ++j) {
        long idx = 2 * m + 1 - 2 * j;
        mpz_class num = term(kPell, idx) * binomial(2 * m + 1, j);
        if (j % 2 == 0) num = -num;  // (-1)^{j+1}
        constant += make_rational(num, pow2(3 * m) * companion(kPell, idx));
    }
    coeffs[0] = constant;
    return RatPoly(std::move(coeffs));
}

}  // namespace

TEST_CASE("odd multiple: coefficients from the degree-3,5,7,9 displays") {
    auto m1 = odd_multiple_poly(1);
    CHECK(m1.pair.odd_n == ip({0, -3, 0, 8}));
    CHECK(m1.pair.even_n == ip({0, 3, 0, 8}));

    auto m2 = odd_multiple_poly(2);
    CHECK(m2.pair.odd_n == ip({0, 5, 0, -40, 0, 64}));
    CHECK(m2.pair.even_n == ip({0, 5, 0, 40, 0, 64}));

    auto m3 = odd_multiple_poly(3);
    CHECK(m3.pair.odd_n == ip({0, -7, 0, 112, 0, -448, 0, 512}));

    auto m4 = odd_multiple_poly(4);
    CHECK(m4.pair.odd_n == ip({0, 9, 0, -240, 0, 1728, 0, -4608, 0, 4096}));

    auto m0 = odd_multiple_poly(0);
    CHECK(m0.pair.odd_n == ip({0, 1}));
    CHECK(m0.pair.even_n == ip({0, 1}));

    CHECK_THROWS_AS(odd_multiple_poly(-1), std::invalid_argument);
}

TEST_CASE("odd multiple: structural coefficient claims, m <= 12") {
    for (long m = 0; m <= 12; ++m) {
        auto id = odd_multiple_poly(m);
        const IntPoly& even = id.pair.even_n;
        const IntPoly& odd = id.pair.odd_n;
        REQUIRE(even.degree() == 2 * m + 1);
        REQUIRE(odd.degree() == 2 * m + 1);
        REQUIRE(even.coeff(2 * m + 1) == pow2(3 * m));
        REQUIRE(abs(odd.coeff(1)) == 2 * m + 1);
        int prev_sign = 0;
        for (long i = 0; i <= m; ++i) {
            // pair components agree up to sign; even degrees vanish
            REQUIRE(abs(even.coeff(2 * i + 1)) == abs(odd.coeff(2 * i + 1)));
            REQUIRE(is_zero(even.coeff(2 * i)));
            REQUIRE(is_zero(odd.coeff(2 * i)));
            REQUIRE(sgn(even.coeff(2 * i + 1)) == 1);
            int s = sgn(odd.coeff(2 * i + 1));
            if (i > 0) REQUIRE(s == -prev_sign);  // alternation for odd n
            prev_sign = s;
        }
    }
}

TEST_CASE("odd multiple: pointwise truth, m <= 10, n <= 64") {
    auto p = pell_table(21 * 64);
    for (long m = 0; m <= 10; ++m) {
        auto id = odd_multiple_poly(m);
        for (long n = 0; n <= 64; ++n) {
            const IntPoly& poly = (n % 2 != 0) ? id.pair.odd_n : id.pair.even_n;
            REQUIRE(poly(p[n]) == p[(2 * m + 1) * n]);
        }
    }
}

TEST_CASE("general odd multiple: pinned s-coefficients") {
    auto m1 = general_odd_multiple_poly(1);
    CHECK(m1.pair.even_n.coeff(3) == ip({4, 0, 1}));
    CHECK(m1.pair.even_n.coeff(1) == ip({3}));
    CHECK(m1.pair.odd_n.coeff(3) == ip({4, 0, 1}));
    CHECK(m1.pair.odd_n.coeff(1) == ip({-3}));

    auto m2 = general_odd_multiple_poly(2);
    CHECK(m2.pair.even_n.coeff(5) == ip({16, 0, 8, 0, 1}));  // (s^2+4)^2
    CHECK(m2.pair.even_n.coeff(3) == ip({20, 0, 5}));        // 5(s^2+4)
    CHECK(m2.pair.even_n.coeff(1) == ip({5}));
    CHECK(m2.pair.odd_n.coeff(3) == ip({-20, 0, -5}));
}

TEST_CASE("general odd multiple: specialization at s=2 matches the Pell family, m <= 10") {
    for (long m = 0; m <= 10; ++m) {
        auto general = general_odd_multiple_poly(m);
        auto pell = odd_multiple_poly(m);
        REQUIRE(substitute_s(general.pair.even_n, 2) == pell.pair.even_n);
        REQUIRE(substitute_s(general.pair.odd_n, 2) == pell.pair.odd_n);
    }
}

TEST_CASE("general odd multiple: pointwise truth, s <= 6, m <= 8, n <= 40") {
    for (long s = 1; s <= 6; ++s) {
        std::vector<mpz_class> a(17 * 40 + 1);
        a[1] = 1;
        for (std::size_t k = 2; k < a.size(); ++k) a[k] = s * a[k - 1] + a[k - 2];
        for (long m = 0; m <= 8; ++m) {
            auto id = general_odd_multiple_poly(m);
            IntPoly even = substitute_s(id.pair.even_n, s);
            IntPoly odd = substitute_s(id.pair.odd_n, s);
            for (long n = 0; n <= 40; ++n) {
                const IntPoly& poly = (n % 2 != 0) ? odd : even;
                REQUIRE(poly(a[n]) == a[(2 * m + 1) * n]);
            }
        }
    }
}

TEST_CASE("power reduction: shape and m=0") {
    auto m0 = power_reduction(0);
    CHECK(m0.terms.size() == 1);
    CHECK(m0.scale == 1);
    CHECK(m0.terms[0].weight == 1);
    CHECK(m0.terms[0].index_multiplier == 1);

    auto m2 = power_reduction(2);
    CHECK(m2.scale == make_rational(1, 64));
    REQUIRE(m2.terms.size() == 3);
    CHECK(m2.terms[0].weight == 1);
    CHECK(m2.terms[1].weight == 5);
    CHECK(m2.terms[2].weight == 10);
    CHECK(m2.terms[0].index_multiplier == 5);
    CHECK(m2.terms[1].index_multiplier == 3);
    CHECK(m2.terms[2].index_multiplier == 1);
}

TEST_CASE("power reduction: m+1 terms with strictly decreasing odd multipliers") {
    for (long m = 0; m <= 8; ++m) {
        auto red = power_reduction(m);
        REQUIRE(red.terms.size() == static_cast<std::size_t>(m + 1));
        REQUIRE(red.scale == make_rational(1, pow2(3 * m)));
        for (long j = 0; j <= m; ++j) {
            REQUIRE(red.terms[j].j == j);
            REQUIRE(red.terms[j].weight == binomial(2 * m + 1, j));
            REQUIRE(red.terms[j].index_multiplier == 2 * m + 1 - 2 * j);
        }
    }
}

TEST_CASE("power reduction: truth under the default sign rule, m <= 8, n <= 40") {
    for (long m = 0; m <= 8; ++m) {
        auto red = power_reduction(m);
        for (long n = 0; n <= 40; ++n) {
            mpz_class expected;
            mpz_pow_ui(expected.get_mpz_t(), term(kPell, n).get_mpz_t(),
                       static_cast<unsigned long>(2 * m + 1));
            REQUIRE(evaluate_power_reduction(red, n) == mpq_class(expected));
        }
    }
}

TEST_CASE("power reduction: the (n+m) sign rule fails at m=2, n=1") {
    auto red = power_reduction(2);
    // default rule: (P_5 + 5 P_3 + 10 P_1)/64 = (29+25+10)/64 = 1 = P_1^5
    CHECK(evaluate_power_reduction(red, 1, PowerSignRule::n_plus_1) == 1);
    auto [sum, denom] = power_reduction_sum(red, 1, PowerSignRule::n_plus_m);
    CHECK(sum == 14);  // 29 - 25 + 10
    CHECK(denom == 64);
    CHECK(evaluate_power_reduction(red, 1, PowerSignRule::n_plus_m) != 1);
}

TEST_CASE("partial sums: pinned values") {
    CHECK(partial_sum_closed_form(1, 0) == 0);
    CHECK(partial_sum_closed_form(1, 2) == 14);     // P_2 + P_4
    CHECK(partial_sum_closed_form(3, 2) == 13930);  // P_6 + P_12
    CHECK_THROWS_AS(partial_sum_closed_form(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(partial_sum_closed_form(1, -1), std::invalid_argument);
}

TEST_CASE("partial sums: closed form equals direct summation for odd m") {
    auto p = pell_table(2 * 9 * 30 + 9);
    for (long m = 1; m <= 9; m += 2) {
        mpz_class direct = 0;
        for (long n = 0; n <= 30; ++n) {
            if (n > 0) direct += p[2 * m * n];
            REQUIRE(partial_sum_closed_form(m, n) == direct);
        }
    }
}

TEST_CASE("partial sums: the closed form is rejected for even m") {
    // Q_2 * P_4 = 72 but P_6 - P_2 = 68: the identity fails at m=2, n=1, so
    // even m is out of domain.
    CHECK(companion(kPell, 2) * term(kPell, 4) == 72);
    CHECK(term(kPell, 6) - term(kPell, 2) == 68);
    CHECK_THROWS_AS(partial_sum_closed_form(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(partial_sum_closed_form(4, 3), std::invalid_argument);
}

TEST_CASE("melham: pinned m=0,1,2") {
    auto m0 = melham_sum_poly(0);
    CHECK(m0.multiplier == 2);
    CHECK(m0.cleared == ip({-1, 1}));
    CHECK(m0.rational.coeff(0) == make_rational(-1, 2));
    CHECK(m0.rational.coeff(1) == make_rational(1, 2));

    auto m1 = melham_sum_poly(1);
    CHECK(m1.multiplier == 28);
    CHECK(m1.cleared == ip({4, -6, 0, 2}));
    CHECK(m1.rational.coeff(0) == make_rational(1, 7));
    CHECK(m1.rational.coeff(1) == make_rational(-3, 14));
    CHECK(m1.rational.coeff(3) == make_rational(1, 14));

    auto m2 = melham_sum_poly(2);
    CHECK(m2.multiplier == 2296);
    CHECK(m2.cleared == ip({-128, 220, 0, -120, 0, 28}));
}

TEST_CASE("melham: degree, parity of terms, and nonzero constant") {
    for (long m = 0; m <= 6; ++m) {
        auto id = melham_sum_poly(m);
        REQUIRE(id.rational.degree() == 2 * m + 1);
        REQUIRE(!is_zero(id.rational.coeff(0)));
        for (long d = 2; d <= id.rational.degree(); d += 2)
            REQUIRE(is_zero(id.rational.coeff(d)));
        // cleared = multiplier * rational, re-checked coefficientwise
        for (long d = 0; d <= id.rational.degree(); ++d)
            REQUIRE(mpq_class(id.cleared.coeff(d)) ==
                    id.rational.coeff(d) * mpq_class(id.multiplier));
    }
}

TEST_CASE("melham: truth against direct summation, m <= 6, n <= 40") {
    auto p = pell_table(81);
    for (long m = 0; m <= 6; ++m) {
        auto id = melham_sum_poly(m);
        mpz_class direct = 0;
        for (long n = 0; n <= 40; ++n) {
            if (n > 0) {
                mpz_class powed;
                mpz_pow_ui(powed.get_mpz_t(), p[2 * n].get_mpz_t(),
                           static_cast<unsigned long>(2 * m + 1));
                direct += powed;
            }
            REQUIRE(eval_at(id.rational, p[2 * n + 1]) == mpq_class(direct));
            REQUIRE(id.cleared(p[2 * n + 1]) == id.multiplier * direct);
        }
    }
}

TEST_CASE("melham: m=2 worked instance at n=1") {
    // 28 P_3^5 - 120 P_3^3 + 220 P_3 - 128 = 2296 * P_2^5, both sides 73472
    auto id = melham_sum_poly(2);
    CHECK(id.cleared(mpz_class(5)) == 73472);
    CHECK(id.multiplier * 32 == 73472);
}

TEST_CASE("melham: pipeline matches the closed-form double sum, m <= 8") {
    for (long m = 0; m <= 8; ++m) REQUIRE(melham_sum_poly(m).rational == melham_closed_form(m));
}

TEST_CASE("melham: multiplier is the odd-index companion product") {
    for (long m = 0; m <= 6; ++m) {
        mpz_class expected = 1;
        for (long j = 0; j <= m; ++j) expected *= companion(kPell, 2 * j + 1);
        REQUIRE(melham_sum_poly(m).multiplier == expected);
    }
}
