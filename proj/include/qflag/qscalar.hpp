#pragma once

#include "qflag/error.hpp"
#include "qflag/zpoly.hpp"

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

namespace qflag {

// Element of Q(q), stored as t^shift * num(t) / den(t) with t = q^(1/D).
//
// Canonical form:
//   num, den coprime in Z[t], joint content 1, num(0) != 0, den(0) > 0,
//   D minimal (no common divisor of D, shift and all exponents in use).
// Zero is num = {}, den = {1}, shift = 0, D = 1.
// Two values are equal iff all stored fields coincide.
class LaurentScalar {
public:
    LaurentScalar() : den_{1} {}
    LaurentScalar(long c); // NOLINT: integers promote implicitly
    explicit LaurentScalar(const mpz_class& c);
    explicit LaurentScalar(const mpq_class& c);

    static LaurentScalar q() { return qPow(1); }
    static LaurentScalar qPow(long e);
    static LaurentScalar qPow(const mpq_class& e);
    // t^shift * num / den in the variable t = q^(1/D), canonicalized.
    static LaurentScalar fromParts(long D, long shift, zpoly::Poly num, zpoly::Poly den);

    bool isZero() const { return num_.empty(); }
    bool isOne() const;
    // Constant (degree-0) value, if any.
    std::optional<mpq_class> asRational() const;
    // c * q^e with c rational, if the value is a monomial.
    std::optional<std::pair<mpq_class, mpq_class>> asMonomial() const;
    bool isPolynomialDen() const { return zpoly::isOne(den_); }

    LaurentScalar operator-() const;
    LaurentScalar inverse() const;
    LaurentScalar pow(long e) const;
    // q -> q^d
    LaurentScalar substitutePower(long d) const;

    friend LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b);
    friend LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b);
    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
    friend LaurentScalar operator/(const LaurentScalar& a, const LaurentScalar& b);
    LaurentScalar& operator+=(const LaurentScalar& b) { return *this = *this + b; }
    LaurentScalar& operator-=(const LaurentScalar& b) { return *this = *this - b; }
    LaurentScalar& operator*=(const LaurentScalar& b) { return *this = *this * b; }
    LaurentScalar& operator/=(const LaurentScalar& b) { return *this = *this / b; }

    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b);
    // prod lhs == prod rhs, by cross multiplication without gcds
    friend bool productsEqual(std::initializer_list<const LaurentScalar*> lhs,
                              std::initializer_list<const LaurentScalar*> rhs);
    friend bool operator!=(const LaurentScalar& a, const LaurentScalar& b) { return !(a == b); }

    // Floating evaluation at q = q0 > 0.
    double evaluate(double q0) const;

    std::string toString() const;
    static LaurentScalar parse(std::string_view text);

    long rootDenominator() const { return D_; }
    long shift() const { return shift_; }
    const zpoly::Poly& numerator() const { return num_; }
    const zpoly::Poly& denominator() const { return den_; }

private:
    // coprime: num and den already share no factor
    void canonicalize(bool coprime = false);
    LaurentScalar rescaled(long newD) const;

    long D_ = 1;
    long shift_ = 0;
    zpoly::Poly num_;
    zpoly::Poly den_;
};

bool productsEqual(std::initializer_list<const LaurentScalar*> lhs, std::initializer_list<const LaurentScalar*> rhs);

// Point of P^1 over Q(q). Canonical: [1 : y] or [0 : 1].
class ProjParam {
public:
    ProjParam() : x_(1), y_(0) {}
    ProjParam(LaurentScalar x, LaurentScalar y);

    static ProjParam infinity() { return ProjParam(1, 0); }
    static ProjParam zero() { return ProjParam(0, 1); }
    static ProjParam finite(const LaurentScalar& c) { return ProjParam(c, 1); }

    const LaurentScalar& x() const { return x_; }
    const LaurentScalar& y() const { return y_; }
    bool isInfinity() const { return y_.isZero(); }
    bool isZero() const { return x_.isZero(); }
    // x / y when y != 0.
    std::optional<LaurentScalar> affine() const;

    // [y : x]
    ProjParam inverted() const { return ProjParam(y_, x_); }
    // [s x : y]
    ProjParam scaledBy(const LaurentScalar& s) const { return ProjParam(s * x_, y_); }
    ProjParam substitutePower(long d) const
    {
        return ProjParam(x_.substitutePower(d), y_.substitutePower(d));
    }

    friend bool operator==(const ProjParam& a, const ProjParam& b)
    {
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const ProjParam& a, const ProjParam& b) { return !(a == b); }

    std::string toString() const;
    static ProjParam parse(std::string_view text);

private:
    LaurentScalar x_, y_;
};

// q-combinatorics

LaurentScalar qInteger(long n);
LaurentScalar qFactorial(long n);
LaurentScalar qBinomial(long n, long k);

// [n; chi] = x q^n - y q^-n, evaluated in q^d.
LaurentScalar bracket(long n, const ProjParam& chi, long d = 1);
// [n; chi] / [m; chi]; throws ZeroDenominator if the m-bracket vanishes.
LaurentScalar bracketRatio(long n, long m, const ProjParam& chi, long d = 1);

// m with s = q^(2dm), if any.
std::optional<long> monomialLatticeTest(const LaurentScalar& s, long d = 1);
// m with x/y = q^(2dm) and x, y both nonzero, if any.
std::optional<long> monomialLatticeTest(const ProjParam& s, long d = 1);

} // namespace qflag
