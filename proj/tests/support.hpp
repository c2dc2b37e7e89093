#pragma once

// random instance generators shared by the unit tests and the acceptance binary

#include "qflag/poissonspace.hpp"
#include "qflag/rootdata.hpp"

#include <random>

namespace qflag::testing {

inline LaurentScalar qp(long e) { return LaurentScalar::qPow(e); }

// c q^e, or c q^e + d q^f when nonMonomial
inline LaurentScalar randomUnit(std::mt19937& rng, bool nonMonomial)
{
    std::uniform_int_distribution<int> c(1, 5), e(-3, 3), sign(0, 1);
    LaurentScalar v = LaurentScalar(sign(rng) ? c(rng) : -c(rng)) * qp(e(rng));
    if (nonMonomial) {
        LaurentScalar w = v + LaurentScalar(c(rng)) * qp(e(rng));
        if (!w.isZero()) v = w;
    }
    return v;
}

// character on the simple roots, rejected until regular
inline ToricPoint randomRegularPoint(const RootSystemPtr& rs, std::mt19937& rng, bool nonMonomial)
{
    for (;;) {
        std::vector<LaurentScalar> cs;
        for (int i = 0; i < rs->rank(); ++i) cs.push_back(randomUnit(rng, nonMonomial && i == 0));
        auto chi = ToricPoint::fromCharacter(rs, cs);
        if (toricValidate(chi, true).ok()) return chi;
    }
}

// phi_alpha = (a_alpha + 1)/(a_alpha - 1) for a multiplicative character a
inline PhiParam characterPhi(const RootSystemPtr& rs, const std::vector<LaurentScalar>& a)
{
    auto chi = ToricPoint::fromCharacter(rs, a);
    std::vector<LaurentScalar> pos;
    for (int k = 0; k < rs->numPositive(); ++k) {
        const auto v = *chi.at(k).affine();
        pos.push_back((v + 1) / (v - 1));
    }
    return PhiParam::fromPositive(rs, pos, PhiMode::Quantum);
}

// constant phi in X^quot: simple values from {-1, 0, 1, t}, closed under the
// relation, then moved by a random Weyl element; rejected until |phi| <= 1
inline PhiParam randomQuotPoint(const RootSystemPtr& rs, std::mt19937& rng)
{
    std::uniform_int_distribution<int> pick(0, 3), num(-4, 4);
    const auto ws = allWeylElements(rs);
    std::uniform_int_distribution<size_t> wpick(0, ws.size() - 1);
    for (;;) {
        std::vector<std::optional<LaurentScalar>> v(rs->numRoots());
        for (int i = 0; i < rs->rank(); ++i) {
            const int p = pick(rng);
            v[rs->simpleIndex(i)] = p == 3 ? LaurentScalar(mpq_class(num(rng), 5)) : LaurentScalar(p - 1);
        }
        bool ok = true;
        for (int k = 0; k < rs->numPositive() && ok; ++k) {
            if (v[k]) continue;
            // k has height >= 2; split off a simple root
            ok = false;
            for (int i = 0; i < rs->rank() && !ok; ++i) {
                IVec rest = rs->root(k);
                rest[i] -= 1;
                const int b = rs->indexOf(rest);
                if (b < 0 || b >= k || !v[b]) continue;
                const auto& x = *v[rs->simpleIndex(i)];
                const auto& y = *v[b];
                if ((x + y).isZero()) continue;
                v[k] = (x * y + 1) / (x + y);
                ok = true;
            }
        }
        if (!ok) continue;
        std::vector<LaurentScalar> pos;
        for (int k = 0; k < rs->numPositive(); ++k) pos.push_back(*v[k]);
        auto phi = PhiParam::fromPositive(rs, pos, PhiMode::Quantum);
        if (!checkMembership(phi, PoissonSpace::Fssorb).ok()) continue;
        const auto& w = ws[wpick(rng)];
        std::vector<LaurentScalar> moved(rs->numRoots());
        for (int k = 0; k < rs->numRoots(); ++k) moved[k] = phi.at(w.applyRoot(k));
        PhiParam out(rs, std::move(moved), PhiMode::Quantum);
        if (checkMembership(out, PoissonSpace::Quot).ok()) return out;
    }
}

} // namespace qflag::testing
