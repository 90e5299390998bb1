#include "sequences.hpp"

#include <array>

namespace seqid {

namespace {

void require_index(long n) {
    if (n < 0) throw std::invalid_argument("sequence index must be >= 0");
}

// Plain 2x2 integer matrix, used only for the matrix-power term path.
struct Mat2 {
    mpz_class e00, e01, e10, e11;

    Mat2 operator*(const Mat2& rhs) const {
        return Mat2{e00 * rhs.e00 + e01 * rhs.e10, e00 * rhs.e01 + e01 * rhs.e11,
                    e10 * rhs.e00 + e11 * rhs.e10, e10 * rhs.e01 + e11 * rhs.e11};
    }
};

// [[0,1],[1,s]]^n = [[A_{n-1}, A_n], [A_n, A_{n+1}]] for n >= 1.
Mat2 companion_matrix_power(const SequenceSpec& spec, long n) {
    if (n < 1) throw std::invalid_argument("matrix term requires n >= 1");
    Mat2 result{1, 0, 0, 1};
    Mat2 base{0, 1, 1, spec.s};
    unsigned long e = static_cast<unsigned long>(n);
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

}  // namespace

mpz_class term_naive(const SequenceSpec& spec, long n) {
    require_index(n);
    if (n == 0) return 0;
    mpz_class prev = 0, cur = 1;
    for (long k = 1; k < n; ++k) {
        mpz_class next = spec.s * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::pair<mpz_class, mpz_class> term_pair(const SequenceSpec& spec, long n) {
    require_index(n);
    mpz_class a = 0, b = 1;  // (A_0, A_1)
    if (n == 0) return {a, b};
    int top = 63 - __builtin_clzll(static_cast<unsigned long long>(n));
    for (int i = top; i >= 0; --i) {
        // (A_k, A_{k+1}) -> (A_{2k}, A_{2k+1}); both derived from the
        // addition formula A_{m+n} = A_{m-1}A_n + A_m A_{n+1}.
        mpz_class dbl = 2 * b - spec.s * a;
        dbl *= a;                       // A_{2k} = A_k (2A_{k+1} - s A_k)
        mpz_class dbl1 = a * a + b * b; // A_{2k+1} = A_k^2 + A_{k+1}^2
        if ((n >> i) & 1) {
            a = std::move(dbl1);
            b = spec.s * a + dbl;
        } else {
            a = std::move(dbl);
            b = std::move(dbl1);
        }
    }
    return {a, b};
}

mpz_class term(const SequenceSpec& spec, long n) {
    return term_pair(spec, n).first;
}

mpz_class companion(const SequenceSpec& spec, long n) {
    require_index(n);
    if (n == 0) return 2;
    auto [an, an1] = term_pair(spec, n);
    // A_{n-1} + A_{n+1} = 2A_{n+1} - s A_n
    return 2 * an1 - spec.s * an;
}

mpz_class companion_naive(const SequenceSpec& spec, long n) {
    require_index(n);
    if (n == 0) return 2;
    mpz_class prev = 0, cur = 1;  // (A_0, A_1)
    for (long k = 1; k < n; ++k) {
        mpz_class next = spec.s * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    // prev = A_{n-1}, cur = A_n
    return prev + spec.s * cur + prev;
}

mpz_class matrix_term(const SequenceSpec& spec, long n) {
    return companion_matrix_power(spec, n).e01;
}

mpz_class matrix_companion(const SequenceSpec& spec, long n) {
    Mat2 p = companion_matrix_power(spec, n);
    return p.e00 + p.e11;
}

namespace {

void check_representation(const QuadraticInteger& q) {
    bool ok;
    if (mpz_even_p(q.d.get_mpz_t())) {
        ok = mpz_even_p(q.a.get_mpz_t());
    } else {
        ok = mpz_tstbit(q.a.get_mpz_t(), 0) == mpz_tstbit(q.b.get_mpz_t(), 0);
    }
    if (!ok) throw std::logic_error("QuadraticInteger: representation invariant violated");
}

mpz_class exact_half(mpz_class v) {
    if (mpz_odd_p(v.get_mpz_t()))
        throw std::logic_error("QuadraticInteger: product not closed under half-integer form");
    v >>= 1;
    return v;
}

}  // namespace

QuadraticInteger::QuadraticInteger(mpz_class a_value, mpz_class b_value, mpz_class d_value)
    : a(std::move(a_value)), b(std::move(b_value)), d(std::move(d_value)) {
    if (d <= 0) throw std::invalid_argument("QuadraticInteger: d must be positive");
    check_representation(*this);
}

QuadraticInteger QuadraticInteger::one(const mpz_class& d) {
    return QuadraticInteger(2, 0, d);
}

QuadraticInteger QuadraticInteger::operator*(const QuadraticInteger& rhs) const {
    if (d != rhs.d) throw std::invalid_argument("QuadraticInteger: mismatched discriminants");
    // (a1 + b1 r)(a2 + b2 r)/4 with r = sqrt(d); both halves divide exactly
    // inside the order.
    QuadraticInteger out(exact_half(a * rhs.a + b * rhs.b * d),
                         exact_half(a * rhs.b + b * rhs.a), d);
    check_representation(out);
    return out;
}

QuadraticInteger silver_power(const SequenceSpec& spec, long n) {
    require_index(n);
    mpz_class d = spec.discriminant();
    QuadraticInteger result = QuadraticInteger::one(d);
    QuadraticInteger base(spec.s, 1, d);  // alpha = (s + sqrt(d))/2
    unsigned long e = static_cast<unsigned long>(n);
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

}  // namespace seqid
