#include "qflag/rootdata.hpp"

#include <algorithm>
#include <limits>

namespace qflag {

namespace {

std::string vecString(const IVec& v)
{
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

} // namespace

ToricPoint::ToricPoint(RootSystemPtr rs, std::vector<ProjParam> entries)
    : rs_(std::move(rs)), entries_(std::move(entries))
{
    if (static_cast<int>(entries_.size()) != rs_->numRoots())
        throw InputError("BadToricPoint", "entry count does not match the root system");
}

ToricPoint ToricPoint::fromPositive(RootSystemPtr rs, const std::vector<ProjParam>& positive)
{
    if (static_cast<int>(positive.size()) != rs->numPositive())
        throw InputError("BadToricPoint", "need one entry per positive root");
    std::vector<ProjParam> all(rs->numRoots());
    for (int k = 0; k < rs->numPositive(); ++k) {
        all[k] = positive[k];
        all[rs->negate(k)] = positive[k].inverted();
    }
    return ToricPoint(std::move(rs), std::move(all));
}

ToricPoint ToricPoint::fromCharacter(RootSystemPtr rs, const std::vector<LaurentScalar>& c)
{
    std::vector<ProjParam> all(rs->numRoots());
    for (int k = 0; k < rs->numRoots(); ++k) {
        LaurentScalar v(1);
        for (int i = 0; i < rs->rank(); ++i)
            if (rs->root(k)[i]) v *= c[i].pow(rs->root(k)[i]);
        all[k] = ProjParam::finite(v);
    }
    return ToricPoint(std::move(rs), std::move(all));
}

ToricPoint shiftedWeylOnToric(const WeylElement& w, const ToricPoint& chi)
{
    const auto& rs = chi.system();
    Weight shift = w.applyWeight(rs->rho());
    for (int i = 0; i < rs->rank(); ++i) shift[i] -= 1;
    const WeylElement winv = w.inverse();
    std::vector<ProjParam> out(rs->numRoots());
    for (int k = 0; k < rs->numRoots(); ++k) {
        const long e = 2 * rs->pairWeightRoot(shift, rs->root(k));
        const ProjParam& src = chi.at(winv.applyRoot(k));
        out[k] = e == 0 ? src : src.scaledBy(LaurentScalar::qPow(e));
    }
    return ToricPoint(rs, std::move(out));
}

ValidationReport toricValidate(const ToricPoint& chi, bool requireRegular)
{
    const auto& rs = chi.system();
    ValidationReport rep;
    for (int k = 0; k < rs->numPositive(); ++k) {
        ++rep.checked;
        if (chi.at(rs->negate(k)) != chi.at(k).inverted())
            rep.violations.push_back({"inversion", {rs->root(k)},
                                      "chi(-2a) = " + chi.at(rs->negate(k)).toString() +
                                          " but chi(2a) = " + chi.at(k).toString()});
    }
    for (int a = 0; a < rs->numRoots(); ++a) {
        for (int b = a + 1; b < rs->numRoots(); ++b) {
            IVec s = rs->root(a);
            for (int i = 0; i < rs->rank(); ++i) s[i] += rs->root(b)[i];
            const int c = rs->indexOf(s);
            if (c < 0) continue;
            ++rep.checked;
            const ProjParam &A = chi.at(a), &B = chi.at(b), &C = chi.at(c);
            if (A.x() * B.x() * C.y() != A.y() * B.y() * C.x())
                rep.violations.push_back({"cocycle", {rs->root(a), rs->root(b), s},
                                          "x_a x_b y_(a+b) != y_a y_b x_(a+b)"});
        }
    }
    if (requireRegular) {
        for (int k = 0; k < rs->numRoots(); ++k) {
            ++rep.checked;
            if (auto m = monomialLatticeTest(chi.at(k), rs->rootLength(k)))
                rep.violations.push_back({"regularity", {rs->root(k)},
                                          "chi(2a) = q_a^(2*" + std::to_string(*m) + ")"});
        }
    }
    return rep;
}

mpz_class kostantPartition(const RootSystem& rs, const IVec& nu)
{
    const int r = rs.rank();
    if (static_cast<int>(nu.size()) != r) throw InputError("BadWeight", "nu has wrong length");
    for (long x : nu)
        if (x < 0) return 0;
    // mixed-radix table over the box 0 <= v <= nu
    std::vector<size_t> stride(r);
    size_t total = 1;
    for (int i = 0; i < r; ++i) {
        stride[i] = total;
        total *= static_cast<size_t>(nu[i] + 1);
    }
    std::vector<mpz_class> ways(total, 0);
    ways[0] = 1;
    std::vector<long> v(r);
    for (int k = 0; k < rs.numPositive(); ++k) {
        const IVec& b = rs.root(k);
        size_t off = 0;
        bool fits = true;
        for (int i = 0; i < r; ++i) {
            if (b[i] > nu[i]) fits = false;
            off += stride[i] * static_cast<size_t>(b[i]);
        }
        if (!fits) continue;
        // ascending sweep gives unbounded multiplicity
        for (size_t idx = 0; idx < total; ++idx) {
            size_t rem = idx;
            bool ok = true;
            for (int i = r; i-- > 0;) {
                v[i] = static_cast<long>(rem / stride[i]);
                rem %= stride[i];
                if (v[i] < b[i]) ok = false;
            }
            if (ok) ways[idx] += ways[idx - off];
        }
    }
    return ways[total - 1];
}

ParabolicResult positiveSystemFromParabolic(const RootSystemPtr& rs, const std::vector<int>& signs)
{
    if (static_cast<int>(signs.size()) != rs->numRoots())
        throw InputError("BadSigns", "one sign per root expected");
    std::vector<char> inP(rs->numRoots(), 0);
    for (int k = 0; k < rs->numRoots(); ++k)
        inP[k] = signs[k] > 0 || (signs[k] == 0 && rs->isPositive(k));
    for (int k = 0; k < rs->numRoots(); ++k)
        if (!inP[k] && !inP[rs->negate(k)])
            throw Error("NotParabolic", "neither root nor its negative lies in P: " +
                                            vecString(rs->root(k)));
    for (int a = 0; a < rs->numRoots(); ++a) {
        if (!inP[a]) continue;
        for (int b = 0; b < rs->numRoots(); ++b) {
            if (!inP[b]) continue;
            IVec s = rs->root(a);
            for (int i = 0; i < rs->rank(); ++i) s[i] += rs->root(b)[i];
            const int c = rs->indexOf(s);
            if (c >= 0 && !inP[c])
                throw Error("NotParabolic", "P not closed: " + vecString(rs->root(a)) + " + " +
                                                vecString(rs->root(b)));
        }
    }
    // shortest w with w(R+) inside P; ties broken by the normal-form word
    std::optional<WeylElement> best;
    std::vector<int> bestWord;
    for (const auto& w : allWeylElements(rs)) {
        bool inside = true;
        for (int k = 0; k < rs->numPositive() && inside; ++k) inside = inP[w.applyRoot(k)];
        if (!inside) continue;
        auto wd = w.word();
        if (!best || wd.size() < bestWord.size() || (wd.size() == bestWord.size() && wd < bestWord)) {
            best = w;
            bestWord = wd;
        }
    }
    if (!best) throw Error("NotParabolic", "P contains no positive system");
    ParabolicResult res{*best, {}};
    for (int k = 0; k < rs->numPositive(); ++k) res.positiveSystem.push_back(best->applyRoot(k));
    return res;
}

} // namespace qflag
