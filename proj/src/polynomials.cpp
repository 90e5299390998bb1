#include "polynomials.hpp"

namespace seqid {

mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw std::invalid_argument("make_rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

mpz_class binomial(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial: arguments must be >= 0");
    if (k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

RatPoly to_rational(const IntPoly& p) {
    std::vector<mpq_class> out(p.coefficients().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mpq_class(p.coefficients()[i]);
    return RatPoly(std::move(out));
}

mpq_class eval_at(const RatPoly& p, const mpz_class& x) {
    return p(mpq_class(x));
}

std::pair<IntPoly, mpz_class> clear_denominators(const RatPoly& p) {
    mpz_class d = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> out(p.coefficients().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const mpq_class& c = p.coefficients()[i];
        out[i] = c.get_num() * (d / c.get_den());
    }
    return {IntPoly(std::move(out)), d};
}

IntPoly substitute_s(const SPoly& p, const mpz_class& s0) {
    std::vector<mpz_class> out(p.coefficients().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coefficients()[i](s0);
    return IntPoly(std::move(out));
}

}  // namespace seqid
