#include "qflag/poissonspace.hpp"

#include <algorithm>
#include <set>

namespace qflag {

PhiParam::PhiParam(RootSystemPtr rs, std::vector<LaurentScalar> entries, PhiMode mode)
    : rs_(std::move(rs)), entries_(std::move(entries)), mode_(mode)
{
    if (static_cast<int>(entries_.size()) != rs_->numRoots())
        throw InputError("BadPhi", "entry count does not match the root system");
}

PhiParam PhiParam::fromPositive(RootSystemPtr rs, const std::vector<LaurentScalar>& positive,
                                PhiMode mode)
{
    if (static_cast<int>(positive.size()) != rs->numPositive())
        throw InputError("BadPhi", "need one entry per positive root");
    std::vector<LaurentScalar> all(rs->numRoots());
    for (int k = 0; k < rs->numPositive(); ++k) {
        all[k] = positive[k];
        all[rs->negate(k)] = -positive[k];
    }
    return PhiParam(std::move(rs), std::move(all), mode);
}

PoissonSpace parsePoissonSpace(const std::string& name)
{
    if (name == "fssorb") return PoissonSpace::Fssorb;
    if (name == "circ") return PoissonSpace::Circ;
    if (name == "quot") return PoissonSpace::Quot;
    if (name == "zero") return PoissonSpace::Zero;
    if (name == "zeroCirc" || name == "zerocirc") return PoissonSpace::ZeroCirc;
    throw InputError("BadSpace", "unknown space '" + name + "'");
}

std::string toString(PoissonSpace s)
{
    switch (s) {
    case PoissonSpace::Fssorb: return "fssorb";
    case PoissonSpace::Circ: return "circ";
    case PoissonSpace::Quot: return "quot";
    case PoissonSpace::Zero: return "zero";
    case PoissonSpace::ZeroCirc: return "zeroCirc";
    }
    return "?";
}

namespace {

void checkRelations(const PhiParam& phi, bool classical, ValidationReport& rep)
{
    const auto& rs = phi.system();
    for (int k = 0; k < rs->numPositive(); ++k) {
        ++rep.checked;
        if (phi.at(rs->negate(k)) != -phi.at(k))
            rep.violations.push_back({"antisymmetry", {rs->root(k)}, "phi(-a) != -phi(a)"});
    }
    for (int a = 0; a < rs->numRoots(); ++a) {
        for (int b = a + 1; b < rs->numRoots(); ++b) {
            IVec s = rs->root(a);
            for (int i = 0; i < rs->rank(); ++i) s[i] += rs->root(b)[i];
            const int c = rs->indexOf(s);
            if (c < 0) continue;
            ++rep.checked;
            const auto &x = phi.at(a), &y = phi.at(b), &z = phi.at(c);
            LaurentScalar lhs = x * y;
            if (!classical) lhs += LaurentScalar(1);
            if (lhs != z * (x + y))
                rep.violations.push_back({"relation", {rs->root(a), rs->root(b), s},
                                          classical ? "phi_a phi_b != phi_(a+b) (phi_a + phi_b)"
                                                    : "phi_a phi_b + 1 != phi_(a+b) (phi_a + phi_b)"});
        }
    }
}

} // namespace

ValidationReport checkMembership(const PhiParam& phi, PoissonSpace space)
{
    const bool classical = space == PoissonSpace::Zero || space == PoissonSpace::ZeroCirc;
    if (classical != (phi.mode() == PhiMode::Classical))
        throw Error("ModeMismatch", "space " + toString(space) + " does not match the phi mode");
    const auto& rs = phi.system();
    ValidationReport rep;
    checkRelations(phi, classical, rep);

    if (space == PoissonSpace::Circ) {
        for (int k = 0; k < rs->numRoots(); ++k) {
            ++rep.checked;
            const auto& f = phi.at(k);
            ProjParam p(f + LaurentScalar(1), f - LaurentScalar(1));
            if (auto m = monomialLatticeTest(p, rs->rootLength(k)))
                rep.violations.push_back({"circ", {rs->root(k)},
                                          "phi+1 = (phi-1) q_a^(2*" + std::to_string(*m) + ")"});
        }
    } else if (space == PoissonSpace::Quot) {
        for (int k = 0; k < rs->numRoots(); ++k) {
            auto r = phi.at(k).asRational();
            if (!r)
                throw Error("ModeMismatch", "quot needs constant entries; phi at " +
                                                std::to_string(k) + " is " + phi.at(k).toString());
        }
        for (int k = 0; k < rs->numPositive(); ++k) {
            ++rep.checked;
            mpq_class r = *phi.at(k).asRational();
            if (r < -1 || r > 1)
                rep.violations.push_back({"quot", {rs->root(k)}, "|phi_a| = |" + r.get_str() + "| > 1"});
        }
    } else if (space == PoissonSpace::ZeroCirc) {
        for (int k = 0; k < rs->numPositive(); ++k) {
            ++rep.checked;
            auto r = phi.at(k).asRational();
            if (!r || *r == 0) continue;
            mpq_class t = 1 / (*r * rs->rootLength(k));
            if (t.get_den() == 1)
                rep.violations.push_back({"zeroCirc", {rs->root(k)},
                                          "phi_a = 1/(" + t.get_str() + " d_a)"});
        }
    }
    return rep;
}

ToricPoint phiToToric(const PhiParam& phi)
{
    if (phi.mode() != PhiMode::Quantum) throw Error("ModeMismatch", "phiToToric needs quantum phi");
    auto rep = checkMembership(phi, PoissonSpace::Fssorb);
    if (!rep.ok()) throw Error("NotMember", "phi is not in X_fssorb: " + rep.violations[0].kind);
    const auto& rs = phi.system();
    std::vector<ProjParam> out(rs->numRoots());
    for (int k = 0; k < rs->numRoots(); ++k)
        out[k] = ProjParam(phi.at(k) + LaurentScalar(1), phi.at(k) - LaurentScalar(1));
    return ToricPoint(rs, std::move(out));
}

PhiParam toricToPhi(const ToricPoint& chi)
{
    const auto& rs = chi.system();
    std::vector<LaurentScalar> out(rs->numRoots());
    std::string bad;
    for (int k = 0; k < rs->numRoots(); ++k) {
        const auto& p = chi.at(k);
        LaurentScalar d = p.x() - p.y();
        if (d.isZero()) {
            if (rs->isPositive(k)) {
                if (!bad.empty()) bad += ", ";
                bad += "[";
                for (int i = 0; i < rs->rank(); ++i) bad += (i ? "," : "") + std::to_string(rs->root(k)[i]);
                bad += "]";
            }
            continue;
        }
        out[k] = (p.x() + p.y()) / d;
    }
    if (!bad.empty()) throw Error("NonFinite", "x = y at roots " + bad);
    return PhiParam(rs, std::move(out), PhiMode::Quantum);
}

std::vector<ComponentInfo> hermitianComponents(const PhiParam& phi, const std::vector<int>& S)
{
    const auto& rs = phi.system();
    const int r = rs->rank();
    std::vector<char> inS(r, 0), member(r, 0);
    for (int i : S) inS[i] = 1;
    for (int i = 0; i < r; ++i) member[i] = inS[i] || !phi.at(rs->simpleIndex(i)).isOne();

    std::vector<ComponentInfo> comps;
    std::vector<char> seen(r, 0);
    for (int start = 0; start < r; ++start) {
        if (!member[start] || seen[start]) continue;
        ComponentInfo c;
        std::vector<int> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            c.simples.push_back(v);
            for (int u = 0; u < r; ++u)
                if (member[u] && !seen[u] && rs->cartan()[v][u] != 0) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(c.simples.begin(), c.simples.end());
        for (int v : c.simples)
            if (!inS[v]) c.outsideS.push_back(v);
        // highest root of the sub-system: the positive root of maximal height supported on it
        int best = -1;
        for (int k = 0; k < rs->numPositive(); ++k) {
            bool supported = true;
            for (int i = 0; i < r && supported; ++i)
                if (rs->root(k)[i] != 0 && !std::binary_search(c.simples.begin(), c.simples.end(), i))
                    supported = false;
            if (supported && (best < 0 || rs->height(k) > rs->height(best))) best = k;
        }
        c.highestRoot = rs->root(best);
        c.ok = c.outsideS.size() <= 1;
        for (int v : c.outsideS)
            if (c.highestRoot[v] != 1) c.ok = false;
        comps.push_back(std::move(c));
    }
    return comps;
}

QuotientNormalization normalizeQuotient(const PhiParam& phi)
{
    ValidationReport rep;
    try {
        rep = checkMembership(phi, PoissonSpace::Quot);
    } catch (const Error& e) {
        throw Error("NotQuot", e.what());
    }
    if (!rep.ok()) throw Error("NotQuot", "phi is not in X^quot: " + rep.violations[0].kind);
    const auto& rs = phi.system();
    std::vector<int> signs(rs->numRoots());
    for (int k = 0; k < rs->numRoots(); ++k) {
        mpq_class v = *phi.at(k).asRational();
        signs[k] = sgn(v);
    }
    auto par = positiveSystemFromParabolic(rs, signs);
    std::vector<LaurentScalar> moved(rs->numRoots());
    for (int k = 0; k < rs->numRoots(); ++k) moved[k] = phi.at(par.w.applyRoot(k));
    PhiParam normalized(rs, std::move(moved), phi.mode());
    auto comps = hermitianComponents(normalized, {});
    bool ok = std::all_of(comps.begin(), comps.end(), [](const ComponentInfo& c) { return c.ok; });
    return {par.w, std::move(normalized), std::move(comps), ok};
}

} // namespace qflag
