#pragma once

#include <gmpxx.h>

#include <vector>

namespace qflag::zpoly {

// Dense polynomial over Z, c[i] is the coefficient of t^i.
// Trailing zeros are always trimmed; the zero polynomial is empty.
using Poly = std::vector<mpz_class>;

void trim(Poly& p);
inline bool isZero(const Poly& p) { return p.empty(); }
inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }
bool isOne(const Poly& p);

Poly constant(const mpz_class& c);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const mpz_class& c);
Poly shiftUp(const Poly& a, long k); // a * t^k, k >= 0

// Exact division; the caller guarantees b | a in Z[t].
Poly divExact(const Poly& a, const Poly& b);
Poly divExactScalar(const Poly& a, const mpz_class& c);

mpz_class content(const Poly& a);
Poly primitivePart(const Poly& a);

// Primitive gcd with positive leading coefficient.
Poly gcd(const Poly& a, const Poly& b);

// Lowest index with a nonzero coefficient; a must be nonzero.
long lowOrder(const Poly& a);
Poly dropLow(const Poly& a, long k);

// Replace t by t^f.
Poly stretch(const Poly& a, long f);
// Inverse of stretch; every exponent must be divisible by f.
Poly compress(const Poly& a, long f);

} // namespace qflag::zpoly
