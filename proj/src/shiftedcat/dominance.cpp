#include "qflag/shiftedcat.hpp"

#include <algorithm>

namespace qflag {

namespace {

Weight plus(Weight a, const Weight& b)
{
    for (size_t j = 0; j < a.size(); ++j) a[j] += b[j];
    return a;
}

bool isSumOfTwo(const RootSystem& rs, const std::vector<int>& pos, int idx)
{
    for (int a : pos)
        for (int b : pos) {
            if (a >= b) continue;
            IVec s = rs.root(a);
            for (size_t j = 0; j < s.size(); ++j) s[j] += rs.root(b)[j];
            if (s == rs.root(idx)) return true;
        }
    return false;
}

// q^{(lambda + rho, 2 beta)} chi_{2 beta}
ProjParam shiftedValue(const ToricPoint& chi, const Weight& lambda, int idx)
{
    const auto& rs = *chi.system();
    const long e = 2 * rs.pairWeightRoot(plus(lambda, rs.rho()), rs.root(idx));
    return chi.at(idx).scaledBy(LaurentScalar::qPow(e));
}

} // namespace

IntegralRoots integralRootsOfParam(const ToricPoint& chi)
{
    const auto& rs = chi.system();
    IntegralRoots out;
    std::vector<int> pos;
    for (int k = 0; k < rs->numRoots(); ++k) {
        const ProjParam& v = chi.at(k);
        if (v.isZero() || v.isInfinity()) continue;
        out.roots.push_back(k);
        if (rs->isPositive(k)) {
            pos.push_back(k);
            out.reflections.push_back(WeylElement::reflection(rs, k));
        }
    }
    for (int k : pos)
        if (!isSumOfTwo(*rs, pos, k)) out.simple.push_back(k);
    return out;
}

long integralShift(const ToricPoint& chi, int rootIdx)
{
    const auto& rs = *chi.system();
    auto c = monomialLatticeTest(chi.at(rootIdx), rs.rootLength(rootIdx));
    if (!c)
        throw Error("NonIntegralShift", "chi at root " + std::to_string(rootIdx) + " is " +
                                            chi.at(rootIdx).toString() + ", not an even power of q_alpha");
    return *c;
}

ShiftedWeight shiftedReflection(int rootIdx, const ShiftedWeight& lambda)
{
    const auto& rs = *lambda.twist.system();
    const long c = integralShift(lambda.twist, rootIdx);
    const long n = rs.pairCoroot(plus(lambda.integral, rs.rho()), rootIdx) + c;
    ShiftedWeight r = lambda;
    const Weight b = rs.rootToWeight(rs.root(rootIdx));
    for (size_t j = 0; j < b.size(); ++j) r.integral[j] -= n * b[j];
    return r;
}

ShiftedWeight shiftedDotAction(const WeylElement& w, const ShiftedWeight& lambda)
{
    const auto& rs = lambda.twist.system();
    const IntegralRoots ir = integralRootsOfParam(lambda.twist);
    ShiftedWeight cur = lambda;
    WeylElement rest = w;
    // w = (w s_g) s_g with w(g) < 0 and g simple in R_chi+
    while (!rest.isIdentity()) {
        int g = -1;
        for (int s : ir.simple)
            if (!rs->isPositive(rest.applyRoot(s))) {
                g = s;
                break;
            }
        if (g < 0) throw InputError("NotInSubgroup", w.toString() + " is not in W_chi");
        cur = shiftedReflection(g, cur);
        rest = rest * WeylElement::reflection(rs, g);
    }
    return cur;
}

Weight dotAction(const WeylElement& w, const Weight& lambda)
{
    const auto& rs = *w.system();
    Weight r = w.applyWeight(plus(lambda, rs.rho()));
    for (auto& x : r) x -= 1;
    return r;
}

DominanceMode parseDominanceMode(const std::string& s)
{
    if (s == "dominant") return DominanceMode::Dominant;
    if (s == "antidominant") return DominanceMode::Antidominant;
    if (s == "simple") return DominanceMode::Simple;
    if (s == "projectiveSufficient" || s == "projective") return DominanceMode::ProjectiveSufficient;
    if (s == "semisimpleCategory" || s == "semisimple") return DominanceMode::SemisimpleCategory;
    if (s == "stronglyRegular") return DominanceMode::StronglyRegular;
    throw InputError("BadMode", "unknown dominance mode '" + s + "'");
}

std::string toString(DominanceMode m)
{
    switch (m) {
    case DominanceMode::Dominant: return "dominant";
    case DominanceMode::Antidominant: return "antidominant";
    case DominanceMode::Simple: return "simple";
    case DominanceMode::ProjectiveSufficient: return "projectiveSufficient";
    case DominanceMode::SemisimpleCategory: return "semisimpleCategory";
    case DominanceMode::StronglyRegular: return "stronglyRegular";
    }
    return "?";
}

DominanceResult dominanceTest(const ShiftedWeight& lambda, DominanceMode mode,
                              const std::vector<Weight>& lambdaSet)
{
    const auto& chi = lambda.twist;
    const auto& rs = *chi.system();
    DominanceResult res;
    if (mode == DominanceMode::SemisimpleCategory) {
        res.category = toricValidate(chi, true);
        res.holds = res.category->ok();
        return res;
    }
    if (mode == DominanceMode::StronglyRegular) {
        const std::vector<Weight> set = lambdaSet.empty() ? std::vector<Weight>{lambda.integral} : lambdaSet;
        for (int k = 0; k < rs.numPositive(); ++k) {
            std::vector<DominanceWitness> hits;
            bool nonneg = false, nonpos = false;
            for (const auto& mu : set) {
                auto m = monomialLatticeTest(shiftedValue(chi, mu, k), rs.rootLength(k));
                if (!m) continue;
                nonneg |= *m >= 0;
                nonpos |= *m <= 0;
                hits.push_back({k, mu, *m});
            }
            if (nonneg && nonpos) {
                res.holds = false;
                res.witnesses.insert(res.witnesses.end(), hits.begin(), hits.end());
            }
        }
        return res;
    }
    // simple <=> antidominant, dominant => projective
    const bool lower = mode == DominanceMode::Dominant || mode == DominanceMode::ProjectiveSufficient;
    for (int k = 0; k < rs.numPositive(); ++k) {
        auto m = monomialLatticeTest(shiftedValue(chi, lambda.integral, k), rs.rootLength(k));
        if (!m) continue;
        if (lower ? *m < 0 : *m > 0) {
            res.holds = false;
            res.witnesses.push_back({k, lambda.integral, *m});
        }
    }
    return res;
}

// ---- Shapovalov ----

std::vector<ShapovalovFactor> shapovalovDeterminant(const IVec& nu, const ToricPoint& chi,
                                                    const std::vector<int>& positiveSystem)
{
    const auto& rs = *chi.system();
    if (static_cast<int>(nu.size()) != rs.rank()) throw InputError("BadWeight", "nu has wrong length");
    for (long x : nu)
        if (x < 0) throw InputError("NotInQPlus", "nu must have nonnegative simple-root coordinates");
    std::vector<ShapovalovFactor> out;
    for (int b = 0; b < rs.numPositive(); ++b) {
        const bool inside = std::find(positiveSystem.begin(), positiveSystem.end(), b) != positiveSystem.end();
        for (long m = 1;; ++m) {
            IVec rest = nu;
            bool ok = true;
            for (size_t j = 0; j < rest.size(); ++j) {
                rest[j] -= m * rs.root(b)[j];
                ok &= rest[j] >= 0;
            }
            if (!ok) break;
            mpz_class e = kostantPartition(rs, rest);
            if (e != 0) out.push_back({b, m, e, !inside});
        }
    }
    return out;
}

LaurentScalar evaluateFactor(const ShapovalovFactor& f, const ToricPoint& chi, const Weight& lambda)
{
    const auto& rs = *chi.system();
    const LaurentScalar k = LaurentScalar::qPow(2 * rs.pairWeightRoot(plus(lambda, rs.rho()), rs.root(f.root)));
    const LaurentScalar top = LaurentScalar::qPow(2 * rs.rootLength(f.root) * f.level);
    const ProjParam& c = f.flipped ? chi.at(rs.negate(f.root)) : chi.at(f.root);
    auto v = c.affine();
    if (!v) throw Error("InfiniteParameter", "chi is infinite on a Shapovalov factor root");
    return f.flipped ? k - top * *v : k * *v - top;
}

LaurentScalar evaluateFactors(const std::vector<ShapovalovFactor>& fs, const ToricPoint& chi,
                              const Weight& lambda)
{
    LaurentScalar r(1);
    for (const auto& f : fs) r *= evaluateFactor(f, chi, lambda).pow(f.exponent.get_si());
    return r;
}

// ---- invariant coefficient ----

LaurentScalar invariantCoefficient(const Weight& mu, const Weight& nu, const WeylElement& w, int eps,
                                   const ToricPoint& chi, const Weight& lambda, TwistConvention conv)
{
    const auto& rs = *chi.system();
    if (eps < 0 || eps >= rs.rank()) throw InputError("BadRoot", "eps must be a simple index");
    const int e = rs.simpleIndex(eps);
    const long d = rs.rootLength(e);
    const long pm = rs.pairCoroot(mu, e), pn = rs.pairCoroot(nu, e);
    if (pm < 1 || pn < 1) throw InputError("BadWeight", "(mu, eps^v) and (nu, eps^v) must be >= 1");
    const Weight L = conv == TwistConvention::Transport ? dotAction(w, lambda) : dotAction(w.inverse(), lambda);
    const ProjParam& c = chi.at(w.inverse().applyRoot(e));
    const long pl = rs.pairCoroot(L, e);
    const LaurentScalar front = qInteger(pn).substitutePower(d) / qInteger(pm + pn).substitutePower(d);
    return front * bracketRatio(pm + pn + pl, pn + pl, c, d);
}

} // namespace qflag
