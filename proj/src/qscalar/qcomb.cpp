#include "qflag/qscalar.hpp"

namespace qflag {

using namespace zpoly;

LaurentScalar qInteger(long n)
{
    if (n == 0) return LaurentScalar();
    const long a = std::abs(n);
    // q^{1-a} + q^{3-a} + ... + q^{a-1}: in t = q, coefficients at even offsets
    Poly p(static_cast<size_t>(2 * a - 1));
    for (long i = 0; i < a; ++i) p[static_cast<size_t>(2 * i)] = n > 0 ? 1 : -1;
    return LaurentScalar::fromParts(1, 1 - a, std::move(p), Poly{1});
}

LaurentScalar qFactorial(long n)
{
    LaurentScalar r(1);
    for (long i = 2; i <= n; ++i) r *= qInteger(i);
    return r;
}

LaurentScalar qBinomial(long n, long k)
{
    if (k < 0) return LaurentScalar();
    LaurentScalar num(1), den(1);
    for (long i = 0; i < k; ++i) {
        num *= qInteger(n - i);
        if (num.isZero()) return num;
        den *= qInteger(i + 1);
    }
    return num / den;
}

LaurentScalar bracket(long n, const ProjParam& chi, long d)
{
    LaurentScalar x = chi.x(), y = chi.y();
    if (d != 1) {
        x = x.substitutePower(d);
        y = y.substitutePower(d);
    }
    return x * LaurentScalar::qPow(n * d) - y * LaurentScalar::qPow(-n * d);
}

LaurentScalar bracketRatio(long n, long m, const ProjParam& chi, long d)
{
    LaurentScalar den = bracket(m, chi, d);
    if (den.isZero())
        throw Error("ZeroDenominator", "bracket [" + std::to_string(m) + "; " + chi.toString() +
                                           "] vanishes");
    return bracket(n, chi, d) / den;
}

std::optional<long> monomialLatticeTest(const LaurentScalar& s, long d)
{
    auto mono = s.asMonomial();
    if (!mono || mono->first != 1) return std::nullopt;
    const mpq_class& e = mono->second;
    if (e.get_den() != 1) return std::nullopt;
    mpz_class k = e.get_num();
    if (k % (2 * d) != 0) return std::nullopt;
    return static_cast<long>(mpz_class(k / (2 * d)).get_si());
}

std::optional<long> monomialLatticeTest(const ProjParam& s, long d)
{
    if (s.isZero() || s.isInfinity()) return std::nullopt;
    return monomialLatticeTest(*s.affine(), d);
}

} // namespace qflag
