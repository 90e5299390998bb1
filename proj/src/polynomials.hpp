#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace seqid {

inline bool is_zero(const mpz_class& v) { return sgn(v) == 0; }
inline bool is_zero(const mpq_class& v) { return sgn(v) == 0; }

// Dense univariate polynomial, constant term first. Canonical form: the
// highest-index coefficient is nonzero; the zero polynomial is the empty
// list. Degrees stay small here (<= 2m+1 for the identity families), so
// schoolbook arithmetic is all that's needed.
template <typename T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(T v) {
        std::vector<T> c;
        c.push_back(std::move(v));
        return Poly(std::move(c));
    }

    // The monomial c * X^k.
    static Poly monomial(T c, std::size_t k) {
        std::vector<T> v(k + 1);
        v[k] = std::move(c);
        return Poly(std::move(v));
    }

    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const T& coeff(std::size_t i) const {
        static const T zero{};
        return i < c_.size() ? c_[i] : zero;
    }

    const std::vector<T>& coefficients() const { return c_; }

    bool operator==(const Poly& rhs) const = default;

    Poly operator+(const Poly& rhs) const {
        std::vector<T> out(std::max(c_.size(), rhs.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (i < c_.size()) out[i] += c_[i];
            if (i < rhs.c_.size()) out[i] += rhs.c_[i];
        }
        return Poly(std::move(out));
    }

    Poly operator-(const Poly& rhs) const {
        std::vector<T> out(std::max(c_.size(), rhs.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (i < c_.size()) out[i] += c_[i];
            if (i < rhs.c_.size()) out[i] -= rhs.c_[i];
        }
        return Poly(std::move(out));
    }

    Poly operator*(const Poly& rhs) const {
        if (c_.empty() || rhs.c_.empty()) return Poly();
        std::vector<T> out(c_.size() + rhs.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
        return Poly(std::move(out));
    }

    Poly& operator+=(const Poly& rhs) { return *this = *this + rhs; }
    Poly& operator-=(const Poly& rhs) { return *this = *this - rhs; }
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

    Poly scaled(const T& c) const {
        if (is_zero(c)) return Poly();
        std::vector<T> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * c;
        return Poly(std::move(out));
    }

    // Horner evaluation.
    T operator()(const T& x) const {
        T acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

template <typename T>
inline bool is_zero(const Poly<T>& p) {
    return p.degree() < 0;
}

using IntPoly = Poly<mpz_class>;
using RatPoly = Poly<mpq_class>;
// Polynomial in the main variable whose coefficients are integer
// polynomials in the recurrence multiplier s.
using SPoly = Poly<IntPoly>;

// Reduced fraction with positive denominator; throws on a zero denominator.
mpq_class make_rational(const mpz_class& num, const mpz_class& den);

// Exact binomial coefficient; k > n yields 0.
mpz_class binomial(long n, long k);

RatPoly to_rational(const IntPoly& p);

// Evaluate a rational polynomial at an integer point.
mpq_class eval_at(const RatPoly& p, const mpz_class& x);

// Returns (q, d) with d the positive lcm of the (reduced) coefficient
// denominators and q = d*p, so p = q/d exactly and d is minimal.
std::pair<IntPoly, mpz_class> clear_denominators(const RatPoly& p);

// Evaluate every s-coefficient at s0 and renormalize.
IntPoly substitute_s(const SPoly& p, const mpz_class& s0);

}  // namespace seqid
