#include "qflag/shiftedcat.hpp"
#include "qflag/webcalc.hpp"

namespace qflag {

namespace {

const LaurentScalar& qDiff()
{
    static const LaurentScalar v = LaurentScalar::q() - LaurentScalar::qPow(-1);
    return v;
}

LaurentScalar finiteChi(const ProjParam& chi)
{
    auto v = chi.affine();
    if (!v) throw Error("InfiniteParameter", "chi_{2 eps} = inf; use the chart-flipped generators");
    return *v;
}

LaurentScalar sign(long e) { return LaurentScalar(e % 2 == 0 ? 1 : -1); }

// aE aF^n (x) 1 = lowering(n) aF^{n-1} (x) 1, pushing aE right with
// aE aF = q^-2 aF aE + (chi aK^2 - 1)/(q - q^-1)
LaurentScalar lowering(long n, long a, const LaurentScalar& chi)
{
    LaurentScalar r;
    for (long j = 1; j <= n; ++j) {
        // aK^2 on aF^{j-1} (x) 1
        const LaurentScalar h = (chi * LaurentScalar::qPow(2 * a - 4 * (j - 1)) - LaurentScalar(1)) / qDiff();
        r = LaurentScalar::qPow(-2) * r + h;
    }
    return r;
}

void add(std::map<long, LaurentScalar>& m, long k, const LaurentScalar& c)
{
    if (c.isZero()) return;
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.isZero()) m.erase(it);
}

void add(std::map<std::pair<long, long>, LaurentScalar>& m, std::pair<long, long> k, const LaurentScalar& c)
{
    if (c.isZero()) return;
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.isZero()) m.erase(it);
}

// aE on aF^n (x) 1 read through sl2NormalOrder
LaurentScalar lowerByOracle(long n, long a, const ProjParam& chi)
{
    Sl2VermaElement v{{{n, LaurentScalar(1)}}, a, chi};
    auto r = sl2NormalOrder({Sl2Letter::E}, v);
    auto it = r.coefficients.find(n - 1);
    return it == r.coefficients.end() ? LaurentScalar() : it->second;
}

} // namespace

Sl2VermaElement sl2Vacuum(long a, const ProjParam& chi) { return {{{0, LaurentScalar(1)}}, a, chi}; }

Sl2VermaElement sl2NormalOrder(const std::vector<Sl2Letter>& word, const Sl2VermaElement& v)
{
    Sl2VermaElement cur = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        std::map<long, LaurentScalar> next;
        for (const auto& [n, c] : cur.coefficients) {
            switch (*it) {
            case Sl2Letter::F: add(next, n + 1, c); break;
            case Sl2Letter::K: add(next, n, c * LaurentScalar::qPow(cur.highestWeightExponent - 2 * n)); break;
            case Sl2Letter::E:
                if (n > 0) add(next, n - 1, c * lowering(n, cur.highestWeightExponent, finiteChi(cur.chiValue)));
                break;
            }
        }
        cur.coefficients = std::move(next);
    }
    return cur;
}

std::vector<Sl2Letter> parseSl2Word(const std::string& s)
{
    std::vector<Sl2Letter> w;
    for (char c : s) {
        if (c == 'E' || c == 'e') w.push_back(Sl2Letter::E);
        else if (c == 'F' || c == 'f') w.push_back(Sl2Letter::F);
        else if (c == 'K' || c == 'k') w.push_back(Sl2Letter::K);
        else if (c != ' ' && c != '*') throw InputError("BadWord", std::string("unknown letter '") + c + "'");
    }
    return w;
}

LaurentScalar sl2Pairing(long n, long a, const ProjParam& chi)
{
    std::vector<Sl2Letter> w(n, Sl2Letter::E);
    w.insert(w.end(), n, Sl2Letter::F);
    auto r = sl2NormalOrder(w, sl2Vacuum(a, chi));
    auto it = r.coefficients.find(0);
    return it == r.coefficients.end() ? LaurentScalar() : it->second;
}

LaurentScalar sl2DegenerateNorm(long n)
{
    // (aF^n)* = aE^n; chi = 0 makes the weight irrelevant
    return sl2Pairing(n, 0, ProjParam::zero());
}

LaurentScalar sl2DegenerateNormClosed(long n)
{
    return sign(n) * LaurentScalar::qPow(-n * (n - 1)) * qFactorial(n) / qDiff().pow(n);
}

ShapovalovComparison compareShapovalovSl2(long n, const ProjParam& chi, const std::vector<long>& samples)
{
    auto rs = RootSystem::build('A', 1);
    const ToricPoint t = ToricPoint::fromPositive(rs, {chi});
    const auto factors = shapovalovDeterminant({n}, t, {0});
    ShapovalovComparison out;
    out.n = n;
    std::optional<LaurentScalar> first;
    for (long a : samples) {
        const LaurentScalar fac = evaluateFactors(factors, t, {a});
        if (fac.isZero()) continue;
        const LaurentScalar r = sl2Pairing(n, a, chi) / fac;
        out.samples.push_back(a);
        if (!first) first = r;
        else if (r != *first) out.constantRatio = false;
    }
    if (first) {
        out.unit = *first;
        auto m = first->asMonomial();
        out.unitIsMonomial = m && m->first != 0;
    }
    return out;
}

// ---- L_k (x) M ----

Sl2TensorVector sl2TensorApply(Sl2Letter g, const Sl2TensorVector& v)
{
    Sl2TensorVector out{v.k, v.a, v.chi, {}};
    for (const auto& [key, c] : v.terms) {
        const auto [l, n] = key;
        const LaurentScalar kv = LaurentScalar::qPow(v.k - 2 * l);
        switch (g) {
        case Sl2Letter::E:
            if (l >= 1) add(out.terms, {l - 1, n}, c * qInteger(v.k + 1 - l));
            if (n >= 1) add(out.terms, {l, n - 1}, c * kv * lowerByOracle(n, v.a, v.chi));
            break;
        case Sl2Letter::F:
            if (l + 1 <= v.k) add(out.terms, {l + 1, n}, c * kv * qInteger(l + 1));
            add(out.terms, {l, n + 1}, c * kv);
            break;
        case Sl2Letter::K: add(out.terms, key, c * kv * LaurentScalar::qPow(v.a - 2 * n)); break;
        }
    }
    return out;
}

Sl2TensorVector sl2HighestWeightVector(long k, long l, long a, const ProjParam& chi)
{
    if (l < 0 || l > k) throw InputError("BadIndex", "need 0 <= l <= k");
    auto single = [&](long ll, long n) {
        Sl2TensorVector t{k, a, chi, {}};
        t.terms.emplace(std::make_pair(ll, n), LaurentScalar(1));
        return sl2TensorApply(Sl2Letter::E, t);
    };
    auto coeff = [](const Sl2TensorVector& t, std::pair<long, long> key) {
        auto it = t.terms.find(key);
        return it == t.terms.end() ? LaurentScalar() : it->second;
    };
    Sl2TensorVector u{k, a, chi, {}};
    LaurentScalar c(1);
    u.terms.emplace(std::make_pair(l, 0L), c);
    for (long n = 0; n < l; ++n) {
        const std::pair<long, long> eq{l - n - 1, n};
        const LaurentScalar A = coeff(single(l - n - 1, n + 1), eq);
        const LaurentScalar B = coeff(single(l - n, n), eq);
        if (A.isZero())
            throw Error("SingularParameter", "aE-equation at aF^" + std::to_string(n + 1) + " is degenerate");
        c = -c * B / A;
        if (c.isZero()) break;
        u.terms.emplace(std::make_pair(l - n - 1, n + 1), c);
    }
    if (!sl2TensorApply(Sl2Letter::E, u).terms.empty())
        throw Error("OracleMismatch", "solved vector is not annihilated by aE");
    return u;
}

// ---- Lambda^1 (x) M for sl_n ----

LambdaOneHwVector tensorHighestWeightVector(const ToricPoint& chi, const Weight& lambda, int i)
{
    const auto& rs = *chi.system();
    const int n = rs.rank() + 1;
    if (rs.type() != 'A') throw InputError("UnsupportedType", "Lambda^1 vectors need type A");
    if (i < 1 || i > n) throw InputError("BadIndex", "i must be in 1..n");
    LambdaOneHwVector out;
    out.i = i;
    if (i == 1) return out;
    const int idx = rs.simpleIndex(i - 2);
    const long a = rs.pairCoroot(lambda, idx);
    const ProjParam& c = chi.at(idx);
    // x_{i-1}, x_i span L_1 for the root e_{i-1} - e_i
    const auto hw = sl2HighestWeightVector(1, 1, a, c);
    auto it = hw.terms.find({0, 1});
    out.lower = it == hw.terms.end() ? LaurentScalar() : it->second;
    const LaurentScalar den = c.x() * LaurentScalar::qPow(2 * a) - c.y();
    if (den.isZero()) throw Error("SingularParameter", "closed coefficient has a vanishing denominator");
    out.closed = -LaurentScalar::qPow(-1) * qDiff() * c.y() / den;
    out.matches = out.lower == out.closed;
    return out;
}

std::vector<LambdaOneHwVector> tensorHighestWeightVectors(const ToricPoint& chi, const Weight& lambda)
{
    std::vector<LambdaOneHwVector> out;
    for (int i = 1; i <= chi.system()->rank() + 1; ++i) out.push_back(tensorHighestWeightVector(chi, lambda, i));
    return out;
}

namespace {

struct Lam1Term {
    int j;      // x_j
    int root;   // simple index s of aF_s, 1-based, 0 if none
    long power;
    LaurentScalar c;
};

std::vector<Lam1Term> hwTerms(const ToricPoint& chi, const Weight& lambda, int i)
{
    auto hw = tensorHighestWeightVector(chi, lambda, i);
    std::vector<Lam1Term> t{{i, 0, 0, LaurentScalar(1)}};
    if (!hw.lower.isZero()) t.push_back({i - 1, i - 1, 1, hw.lower});
    return t;
}

// (1 (x) 1)-component of (id (x) iota)(outer), iota(1 (x) 1) = inner
std::map<std::pair<int, int>, LaurentScalar> compose(const std::vector<Lam1Term>& outer,
                                                     const std::vector<Lam1Term>& inner)
{
    std::map<std::pair<int, int>, LaurentScalar> out;
    for (const auto& o : outer)
        for (const auto& in : inner) {
            if (in.power != 0) continue;
            int j = in.j;
            LaurentScalar c = o.c * in.c;
            if (o.power == 1) {
                // F_s K_s x_j
                const int s = o.root;
                if (j != s) continue;
                c *= LaurentScalar::q();
                j = s + 1;
            } else if (o.power > 1) {
                continue;
            }
            auto& slot = out[{o.j, j}];
            slot += c;
        }
    return out;
}

WedgeVector asWedge(int n, const std::map<std::pair<int, int>, LaurentScalar>& v)
{
    WedgeVector w{TensorSpace(n, {1, 1}), {}};
    for (const auto& [k, c] : v)
        addTerm(w.terms, (BasisKey{1} << (k.first - 1)) | ((BasisKey{1} << (k.second - 1)) << 8), c);
    return w;
}

LaurentScalar at(const WedgeVector& w, BasisKey k)
{
    auto it = w.terms.find(k);
    return it == w.terms.end() ? LaurentScalar() : it->second;
}

} // namespace

LaurentScalar gammaViaVerma(const ToricPoint& chi, const Weight& lambda, int i)
{
    const auto& rs = *chi.system();
    const int n = rs.rank() + 1;
    if (rs.type() != 'A') throw InputError("UnsupportedType", "gamma needs type A");
    if (i < 1 || i >= n) throw InputError("BadIndex", "need 1 <= i < n");
    auto shifted = [&](int j) {
        Weight r = lambda;
        const Weight e = typeA::indicator(n, {j});
        for (size_t t = 0; t < r.size(); ++t) r[t] += e[t];
        return r;
    };
    // through M(lambda + e_{i+1}) and through M(lambda + e_i)
    const WedgeVector uA = asWedge(n, compose(hwTerms(chi, shifted(i + 1), i), hwTerms(chi, lambda, i + 1)));
    const WedgeVector uB = asWedge(n, compose(hwTerms(chi, shifted(i), i + 1), hwTerms(chi, lambda, i)));
    const SparseMor mm = wedgeComultiply(1, 1, n) * wedgeMultiply(1, 1, n);
    const WedgeVector w = mm.apply(uB);
    const BasisKey e1 = (BasisKey{1} << i) | ((BasisKey{1} << (i - 1)) << 8);  // x_{i+1} (x) x_i
    const BasisKey e2 = (BasisKey{1} << (i - 1)) | ((BasisKey{1} << i) << 8);  // x_i (x) x_{i+1}
    const LaurentScalar a1 = at(uA, e1), a2 = at(uA, e2), b1 = at(uB, e1), b2 = at(uB, e2);
    const LaurentScalar det = b1 * a2 - b2 * a1;
    if (det.isZero()) throw Error("SingularParameter", "the two composites are proportional");
    const LaurentScalar s = (at(w, e1) * a2 - at(w, e2) * a1) / det;
    const LaurentScalar t = (b1 * at(w, e2) - b2 * at(w, e1)) / det;
    // M'M u_B must stay in span(u_A, u_B)
    WedgeVector check{w.space, {}};
    for (const auto& [k, c] : uB.terms) addTerm(check.terms, k, s * c);
    for (const auto& [k, c] : uA.terms) addTerm(check.terms, k, t * c);
    if (check.terms != w.terms) throw Error("OracleMismatch", "M'M leaves the span of the composites");
    return s;
}

LaurentScalar gammaClosed(const ToricPoint& chi, const Weight& lambda, int i)
{
    const auto& rs = *chi.system();
    const long p = typeA::pairDiff(lambda, i + 1, i);
    return bracketRatio(p - 1, p, chi.at(typeA::rootIndex(rs, i + 1, i)));
}

// ---- S(x) ----

ScalarMatrix sOperator(const ProjParam& x, long k)
{
    if (k < 0) throw InputError("BadDimension", "k must be >= 0");
    ScalarMatrix S(k + 1, std::vector<LaurentScalar>(k + 1));
    for (long l = 0; l <= k; ++l) {
        LaurentScalar r = sign(l) * LaurentScalar::qPow(k - l);
        for (long j = 0; j < l; ++j) {
            const LaurentScalar den = bracket(-j, x);
            if (den.isZero())
                throw Error("SingularParameter", "[" + std::to_string(-j) + "; " + x.toString() + "] vanishes");
            r *= bracket(1 + k - l - j, x) / den;
        }
        S[k - l][l] = r;
    }
    return S;
}

bool SDiagramReport::ok() const
{
    for (const auto& e : entries)
        if (!e.ok) return false;
    return true;
}

SDiagramReport sDiagramCheck(long k, long a, long c)
{
    if (k < 0) throw InputError("BadDimension", "k must be >= 0");
    if (a + c < k) throw InputError("OutsideHypothesis", "need a + c >= k");
    const ProjParam chi = ProjParam::finite(LaurentScalar::qPow(2 * c));
    const ProjParam x = ProjParam::finite(LaurentScalar::qPow(2 * (a + c)));
    const ScalarMatrix S = sOperator(x, k);
    const long N = a + c + 1;
    SDiagramReport rep{k, a, c, {}};
    for (long l = 0; l <= k; ++l) {
        Sl2TensorVector u = sl2HighestWeightVector(k, l, a, chi);
        const long m = a + c + (k - 2 * l) + 1;
        for (long r = 0; r < m; ++r) u = sl2TensorApply(Sl2Letter::F, u);
        auto it = u.terms.find({k - l, N});
        const LaurentScalar raw = it == u.terms.end() ? LaurentScalar() : it->second;
        SDiagramEntry e;
        e.l = l;
        e.composite = raw * qFactorial(N) / qFactorial(m);
        e.operatorValue = S[k - l][l];
        e.ok = e.composite == e.operatorValue;
        rep.entries.push_back(e);
    }
    return rep;
}

// ---- fraction identity ----

bool verifyFractionIdentity(long k, long l, long m)
{
    if (k < 0 || l < 0) throw InputError("BadRange", "k and l must be >= 0");
    LaurentScalar lhs;
    for (long n = std::max(0L, l - k); n <= l; ++n) {
        const LaurentScalar den = qInteger(m - n);
        if (den.isZero()) throw Error("ZeroDenominator", "[m - n] = 0 at n = " + std::to_string(n));
        lhs += sign(n) * qInteger(m - l) / den * qBinomial(k, l - n) * qBinomial(k + n, k);
    }
    const LaurentScalar d = qBinomial(m, l);
    if (d.isZero()) throw Error("ZeroDenominator", "qbin(m, l) = 0");
    return lhs == sign(l) * qBinomial(m + k, l) / d;
}

} // namespace qflag
