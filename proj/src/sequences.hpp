#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <utility>

namespace seqid {

// Sequence family a_{n+2} = s*a_{n+1} + a_n with a_0 = 0, a_1 = 1.
// s = 2 is the Pell sequence, s = 1 Fibonacci. The characteristic roots are
// (s +- sqrt(s^2+4))/2; the discriminant s^2+4 shows up throughout the
// identity generators.
struct SequenceSpec {
    long s;

    explicit SequenceSpec(long s_value = 2) : s(s_value) {
        if (s < 1) throw std::invalid_argument("SequenceSpec: s must be >= 1");
    }

    mpz_class discriminant() const { return mpz_class(s) * s + 4; }
};

// A_n in O(log n) big-integer multiplications (fast doubling).
mpz_class term(const SequenceSpec& spec, long n);

// A_n by literal iteration of the recurrence. Oracle path; bit-identical
// to term().
mpz_class term_naive(const SequenceSpec& spec, long n);

// (A_n, A_{n+1}) from one fast-doubling descent.
std::pair<mpz_class, mpz_class> term_pair(const SequenceSpec& spec, long n);

// Companion term B_n = A_{n-1} + A_{n+1}, with B_0 = 2. For s = 2 these are
// the Pell-Lucas numbers Q_n.
mpz_class companion(const SequenceSpec& spec, long n);
mpz_class companion_naive(const SequenceSpec& spec, long n);

// A_n via binary exponentiation of [[0,1],[1,s]]. Requires n >= 1 because
// the matrix power indexes A_{n-1}.
mpz_class matrix_term(const SequenceSpec& spec, long n);

// B_n as the trace of [[0,1],[1,s]]^n. Requires n >= 1.
mpz_class matrix_companion(const SequenceSpec& spec, long n);

// Exact element (a + b*sqrt(d))/2 of the quadratic order generated by
// alpha = (s + sqrt(s^2+4))/2. Representability invariant: when d is odd
// (s odd), a and b have equal parity; when d is divisible by 4 (s even),
// a is even. Checked after every multiplication.
struct QuadraticInteger {
    mpz_class a;
    mpz_class b;
    mpz_class d;

    QuadraticInteger(mpz_class a_value, mpz_class b_value, mpz_class d_value);

    static QuadraticInteger one(const mpz_class& d);

    QuadraticInteger operator*(const QuadraticInteger& rhs) const;

    bool operator==(const QuadraticInteger& rhs) const = default;
};

// alpha^n as a QuadraticInteger. Satisfies a = B_n and b = A_n exactly.
QuadraticInteger silver_power(const SequenceSpec& spec, long n);

}  // namespace seqid
