#include "qflag/classifier.hpp"

#include <bit>
#include <functional>
#include <tuple>

namespace qflag {

namespace {

using Single = std::function<LaurentScalar(int, int, long)>;

int rankOf(const ToricPoint& chi)
{
    const auto& rs = *chi.system();
    const int n = rs.rank() + 1;
    if (rs.numRoots() != n * (n - 1)) throw InputError("NotTypeA", "scalar systems need a type A root system");
    return n;
}

Weight shifted(const Weight& lambda, const Weight& by, long sign)
{
    Weight r = lambda;
    for (size_t k = 0; k < r.size(); ++k) r[k] += sign * by[k];
    return r;
}

struct Shifts {
    std::vector<Weight> e; // [e_S] per mask
    Shifts(int n) : e(1u << n)
    {
        for (IndexSet m = 0; m < e.size(); ++m) e[m] = typeA::indicator(n, indexList(m));
    }
};

LaurentScalar two(ScalarMode m) { return m == ScalarMode::Quantum ? qInteger(2) : LaurentScalar(2); }
LaurentScalar three(ScalarMode m) { return m == ScalarMode::Quantum ? qInteger(3) : LaurentScalar(3); }

// gamma(S,T;lambda) = prod gamma(i,j;lambda + [e_T] - [e_j]), the shift leaves (., e_i - e_j) alone
ScalarSystem build(int n, ScalarMode mode, const std::set<Weight>& window, const Single& single)
{
    ScalarSystem g;
    g.n = n;
    g.mode = mode;
    g.window = window;
    const IndexSet full = (1u << n) - 1;
    for (const auto& lambda : window) {
        const auto t = typeA::toTuple(lambda);
        for (IndexSet S = 1; S <= full; ++S)
            for (IndexSet T = 1; T <= full; ++T) {
                if (S & T) continue;
                LaurentScalar v(1);
                for (int i : indexList(S))
                    for (int j : indexList(T)) v *= single(i, j, t[i - 1] - t[j - 1]);
                g.entries.emplace(GammaKey{S, T, lambda}, std::move(v));
            }
    }
    return g;
}

std::string setText(IndexSet s)
{
    std::string r = "{";
    for (int i : indexList(s)) r += (r.size() > 1 ? "," : "") + std::to_string(i);
    return r + "}";
}

std::string weightText(const Weight& w)
{
    std::string r = "(";
    for (size_t k = 0; k < w.size(); ++k) r += (k ? "," : "") + std::to_string(w[k]);
    return r + ")";
}

std::string violationText(const AxiomViolation& v)
{
    std::string r = "axiom " + v.axiom + " at lambda " + weightText(v.lambda);
    if (v.S) r += " S=" + setText(v.S);
    if (v.T) r += " T=" + setText(v.T);
    if (v.U) r += " U=" + setText(v.U);
    if (v.i) r += " i=" + std::to_string(v.i);
    if (v.j) r += " j=" + std::to_string(v.j);
    if (v.k) r += " k=" + std::to_string(v.k);
    if (!v.detail.empty()) r += ": " + v.detail;
    return r;
}

std::string rootsText(const Violation& v)
{
    std::string r;
    for (const auto& a : v.roots) r += (r.empty() ? "" : " ") + weightText(a);
    return r;
}

} // namespace

ScalarMode parseScalarMode(const std::string& s)
{
    if (s == "quantum") return ScalarMode::Quantum;
    if (s == "classical") return ScalarMode::Classical;
    throw InputError("BadMode", "unknown scalar mode '" + s + "'");
}

std::string toString(ScalarMode m) { return m == ScalarMode::Quantum ? "quantum" : "classical"; }

IndexSet indexSet(const std::vector<int>& elems)
{
    IndexSet s = 0;
    for (int i : elems) {
        if (i < 1 || i > 30) throw InputError("BadIndex", "index " + std::to_string(i));
        if (s & (1u << (i - 1))) throw InputError("BadIndex", "repeated index " + std::to_string(i));
        s |= 1u << (i - 1);
    }
    return s;
}

std::vector<int> indexList(IndexSet s)
{
    std::vector<int> r;
    for (int i = 1; s; ++i, s >>= 1)
        if (s & 1) r.push_back(i);
    return r;
}

const LaurentScalar* ScalarSystem::find(IndexSet S, IndexSet T, const Weight& lambda) const
{
    auto it = entries.find(GammaKey{S, T, lambda});
    return it == entries.end() ? nullptr : &it->second;
}

std::set<Weight> weightWindow(int n, long radius)
{
    std::set<Weight> out;
    Weight w(n - 1, -radius);
    if (n < 2) return out;
    for (;;) {
        out.insert(w);
        size_t k = 0;
        while (k < w.size() && w[k] == radius) w[k++] = -radius;
        if (k == w.size()) break;
        ++w[k];
    }
    return out;
}

ToricPoint classicalFromPositive(RootSystemPtr rs, const std::vector<ProjParam>& positive)
{
    if (static_cast<int>(positive.size()) != rs->numPositive())
        throw InputError("BadToricPoint", "need one entry per positive root");
    std::vector<ProjParam> all(rs->numRoots());
    for (int k = 0; k < rs->numPositive(); ++k) {
        all[k] = positive[k];
        all[rs->negate(k)] = ProjParam(-positive[k].x(), positive[k].y());
    }
    return ToricPoint(std::move(rs), std::move(all));
}

ValidationReport classicalValidate(const ToricPoint& x)
{
    const auto& rs = x.system();
    ValidationReport rep;
    for (int k = 0; k < rs->numPositive(); ++k) {
        ++rep.checked;
        if (x.at(rs->negate(k)) != ProjParam(-x.at(k).x(), x.at(k).y()))
            rep.violations.push_back({"antisymmetry", {rs->root(k)},
                                      "x(-a) = " + x.at(rs->negate(k)).toString() + " but x(a) = " +
                                          x.at(k).toString()});
    }
    for (int a = 0; a < rs->numRoots(); ++a)
        for (int b = a + 1; b < rs->numRoots(); ++b) {
            IVec s = rs->root(a);
            for (int i = 0; i < rs->rank(); ++i) s[i] += rs->root(b)[i];
            const int c = rs->indexOf(s);
            if (c < 0) continue;
            ++rep.checked;
            const ProjParam &A = x.at(a), &B = x.at(b), &C = x.at(c);
            // x_a + x_b = x_(a+b), homogeneous
            if (A.y() * B.y() * C.x() != C.y() * (A.y() * B.x() + B.y() * A.x()))
                rep.violations.push_back({"additivity", {rs->root(a), rs->root(b), s}, "x_a + x_b != x_(a+b)"});
        }
    for (int k = 0; k < rs->numRoots(); ++k) {
        ++rep.checked;
        auto v = x.at(k).affine();
        if (!v) continue;
        auto r = v->asRational();
        if (r && r->get_den() == 1)
            rep.violations.push_back({"regularity", {rs->root(k)}, "x(a) = " + r->get_str() + " is an integer"});
    }
    return rep;
}

ScalarSystem gammaFromToric(const ToricPoint& chi, const std::set<Weight>& window, ScalarMode mode)
{
    const int n = rankOf(chi);
    const auto rep = mode == ScalarMode::Quantum ? toricValidate(chi, true) : classicalValidate(chi);
    if (!rep.ok()) {
        const auto& v = rep.violations.front();
        throw Error("NotRegular", "parameter fails " + v.kind + " at " + rootsText(v) + ": " + v.detail);
    }
    const auto& rs = *chi.system();
    std::map<std::tuple<int, int, long>, LaurentScalar> cache;
    Single single = [&](int i, int j, long p) {
        auto key = std::make_tuple(i, j, p);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        const ProjParam& x = chi.at(typeA::rootIndex(rs, i, j));
        LaurentScalar v;
        if (mode == ScalarMode::Quantum) {
            v = bracketRatio(p - 1, p, x);
        } else if (x.isInfinity()) {
            v = LaurentScalar(1);
        } else {
            const LaurentScalar den = x.x() + LaurentScalar(p) * x.y();
            if (den.isZero()) throw Error("ZeroDenominator", "x + p vanishes");
            v = (x.x() + LaurentScalar(p - 1) * x.y()) / den;
        }
        cache.emplace(key, v);
        return v;
    };
    return build(n, mode, window, single);
}

AxiomCount AxiomReport::total() const
{
    AxiomCount t;
    for (const auto& [name, c] : perAxiom) {
        t.passed += c.passed;
        t.failed += c.failed;
        t.skipped += c.skipped;
    }
    return t;
}

AxiomReport verifyScalarAxioms(const ScalarSystem& gamma)
{
    const int n = gamma.n;
    const IndexSet full = (1u << n) - 1;
    const Shifts sh(n);
    const LaurentScalar two_ = two(gamma.mode), three_ = three(gamma.mode);
    AxiomReport rep;
    for (const char* a : {"i", "ii", "iii", "iv", "v", "vi", "singleRight", "translation", "nonzero"})
        rep.perAxiom[a];

    auto bit = [](int i) { return IndexSet(1u << (i - 1)); };
    auto record = [&](const char* axiom, std::optional<bool> outcome, AxiomViolation v) {
        auto& c = rep.perAxiom[axiom];
        if (!outcome) {
            ++c.skipped;
        } else if (*outcome) {
            ++c.passed;
        } else {
            ++c.failed;
            v.axiom = axiom;
            rep.violations.push_back(std::move(v));
        }
    };

    for (const auto& [key, v] : gamma.entries)
        record("nonzero", !v.isZero(), {"", key.S, key.T, 0, 0, 0, 0, key.lambda, "entry is zero"});

    for (const auto& lambda : gamma.window) {
        auto at = [&](IndexSet S, IndexSet T, const Weight& mu) { return gamma.find(S, T, mu); };
        auto minus = [&](IndexSet U) { return shifted(lambda, sh.e[U], -1); };
        auto plus = [&](IndexSet U) { return shifted(lambda, sh.e[U], 1); };

        for (IndexSet S = 1; S <= full; ++S)
            for (IndexSet T = 1; T <= full; ++T) {
                if (S & T) continue;
                // (i)
                {
                    auto a = at(S, T, lambda);
                    auto b = at(T, S, minus(S));
                    std::optional<bool> r;
                    if (a && b) r = productsEqual({a, b}, {});
                    record("i", r, {"", S, T, 0, 0, 0, 0, lambda, r && !*r ? "product is not 1" : ""});
                }
                // (iv)
                for (IndexSet U = 1; U <= full; ++U) {
                    if (U & (S | T)) continue;
                    auto a = at(S, T, plus(U)), b = at(S | T, U, lambda);
                    auto c = at(S, T | U, lambda), d = at(T, U, lambda);
                    std::optional<bool> r;
                    if (a && b && c && d) r = productsEqual({a, b}, {c, d});
                    record("iv", r, {"", S, T, U, 0, 0, 0, lambda, ""});
                }
            }

        for (IndexSet S = 1; S <= full; ++S)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (i == j || (S & (bit(i) | bit(j)))) continue;
                    const IndexSet I = bit(i), J = bit(j);
                    // (ii), symmetric in i and j
                    if (i < j) {
                        const Weight m = minus(S);
                        auto a = at(S | I, J, lambda), b = at(J, S, m);
                        auto c = at(S | J, I, lambda), d = at(I, S, m);
                        std::optional<bool> r;
                        if (a && b && c && d) r = *a * *b + *c * *d == two_;
                        record("ii", r, {"", S, 0, 0, i, j, 0, lambda, ""});
                    }
                    // (iii)
                    {
                        const Weight m = minus(S | J);
                        auto a = at(S, I, lambda), b = at(I, S | J, m);
                        auto c = at(S | I, J, minus(J)), d = at(J, S, m);
                        std::optional<bool> r;
                        if (a && b && c && d) r = productsEqual({a, b}, {c, d});
                        record("iii", r, {"", S, 0, 0, i, j, 0, lambda, ""});
                    }
                    // gamma(S u i, j; lambda) = gamma(S, j; lambda) gamma(i, j; lambda)
                    {
                        auto a = at(S | I, J, lambda), b = at(S, J, lambda), c = at(I, J, lambda);
                        std::optional<bool> r;
                        if (a && b && c) r = productsEqual({a}, {b, c});
                        record("singleRight", r, {"", S, 0, 0, i, j, 0, lambda, ""});
                    }
                    // gamma(i, j; lambda) = gamma(i, j; lambda - [e_S])
                    {
                        auto a = at(I, J, lambda), b = at(I, J, minus(S));
                        std::optional<bool> r;
                        if (a && b) r = *a == *b;
                        record("translation", r, {"", S, 0, 0, i, j, 0, lambda, ""});
                    }
                }

        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                // (v)
                {
                    auto a = at(bit(i), bit(j), lambda), b = at(bit(j), bit(i), lambda);
                    std::optional<bool> r;
                    if (a && b) r = *a + *b == two_;
                    record("v", r, {"", 0, 0, 0, i, j, 0, lambda, r && !*r ? "sum is not [2]" : ""});
                }
                // (vi)
                for (int k = j + 1; k <= n; ++k) {
                    auto a = at(bit(i), bit(j) | bit(k), lambda);
                    auto b = at(bit(j), bit(k) | bit(i), lambda);
                    auto c = at(bit(k), bit(i) | bit(j), lambda);
                    std::optional<bool> r;
                    if (a && b && c) r = *a + *b + *c == three_;
                    record("vi", r, {"", 0, 0, 0, i, j, k, lambda, r && !*r ? "sum is not [3]" : ""});
                }
            }
    }
    return rep;
}

ProjectiveSolution solveProjective(const std::map<long, LaurentScalar>& z, ScalarMode mode)
{
    if (z.empty()) throw InputError("BadSequence", "empty sequence");
    const LaurentScalar two_ = two(mode);
    long prev = z.begin()->first - 1;
    for (const auto& [p, v] : z) {
        if (p != prev + 1) throw InputError("BadSequence", "samples must sit on consecutive integers");
        prev = p;
        if (v.isZero()) throw Error("RecurrenceViolated", "z_" + std::to_string(p) + " = 0");
    }
    for (auto it = z.begin(); std::next(it) != z.end(); ++it)
        if (it->second + std::next(it)->second.inverse() != two_)
            throw Error("RecurrenceViolated", "z_n + 1/z_(n+1) != 2 at n = " + std::to_string(it->first));

    const auto& [n0, z0] = *z.begin();
    ProjectiveSolution sol;
    if (mode == ScalarMode::Quantum) {
        // [q^(1-n) - z q^(-n) : q^(n-1) - z q^n]
        sol.x = ProjParam(LaurentScalar::qPow(1 - n0) - z0 * LaurentScalar::qPow(-n0),
                          LaurentScalar::qPow(n0 - 1) - z0 * LaurentScalar::qPow(n0));
    } else {
        // [n - 1 - z n : z - 1]
        sol.x = ProjParam(LaurentScalar(n0 - 1) - z0 * LaurentScalar(n0), z0 - LaurentScalar(1));
    }
    for (const auto& [p, v] : z) {
        LaurentScalar w;
        try {
            if (mode == ScalarMode::Quantum) {
                w = bracketRatio(p - 1, p, sol.x);
            } else {
                const LaurentScalar den = sol.x.x() + LaurentScalar(p) * sol.x.y();
                if (den.isZero()) throw Error("ZeroDenominator", "x + n vanishes");
                w = (sol.x.x() + LaurentScalar(p - 1) * sol.x.y()) / den;
            }
        } catch (const Error& e) {
            throw Error("InconsistentSequence", "x = " + sol.x.toString() + " is singular at n = " + std::to_string(p));
        }
        if (w != v)
            throw Error("InconsistentSequence", "x = " + sol.x.toString() + " from n = " + std::to_string(n0) +
                                                    " does not reproduce z_" + std::to_string(p));
    }
    if (mode == ScalarMode::Quantum) {
        sol.regular = !monomialLatticeTest(sol.x).has_value();
    } else if (auto a = sol.x.affine()) {
        auto r = a->asRational();
        sol.regular = !(r && r->get_den() == 1);
    }
    return sol;
}

ClassificationResult classify(const ScalarSystem& gamma, bool checkAxioms)
{
    const int n = gamma.n;
    if (n < 2) throw InputError("BadRank", "n must be at least 2");
    ClassificationResult res;
    res.mode = gamma.mode;
    if (checkAxioms) {
        res.axioms = verifyScalarAxioms(gamma);
        if (!res.axioms->ok()) throw Error("AxiomFailure", violationText(res.axioms->violations.front()));
    }
    auto rs = RootSystem::build('A', n - 1);
    std::vector<ProjParam> positive(rs->numPositive());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::map<long, LaurentScalar> z;
            long count = 0;
            for (const auto& lambda : gamma.window) {
                auto v = gamma.find(1u << (i - 1), 1u << (j - 1), lambda);
                if (!v) continue;
                ++count;
                const long p = typeA::pairDiff(lambda, i, j);
                auto [it, fresh] = z.emplace(p, *v);
                if (!fresh && it->second != *v)
                    throw Error("InconsistentSequence", "gamma(" + std::to_string(i) + "," + std::to_string(j) +
                                                            ") takes two values at pairing " + std::to_string(p));
            }
            if (z.empty())
                throw InputError("BadGamma", "no gamma(" + std::to_string(i) + "," + std::to_string(j) + ") entries");
            auto sol = solveProjective(z, gamma.mode);
            if (!sol.regular)
                throw Error("NotRegular", "x_" + std::to_string(i) + std::to_string(j) + " = " + sol.x.toString() +
                                              (gamma.mode == ScalarMode::Quantum ? " lies in q^(2Z)" : " is an integer"));
            positive[typeA::rootIndex(*rs, i, j)] = sol.x;
            res.pairs.push_back({i, j, sol.x, z.begin()->first, z.rbegin()->first, count});
        }
    if (gamma.mode == ScalarMode::Quantum) {
        res.chi = ToricPoint::fromPositive(rs, positive);
        res.multiplicativity = toricValidate(res.chi, true);
    } else {
        res.chi = classicalFromPositive(rs, positive);
        res.multiplicativity = classicalValidate(res.chi);
    }
    for (const auto& v : res.multiplicativity.violations) {
        const bool reg = v.kind == "regularity";
        throw Error(reg ? "NotRegular" : "NotMultiplicative", v.kind + " fails at " + rootsText(v) + ": " + v.detail);
    }
    const ScalarSystem back = gammaFromToric(res.chi, gamma.window, gamma.mode);
    for (const auto& [key, v] : gamma.entries) {
        auto w = back.find(key.S, key.T, key.lambda);
        if (!w || *w != v)
            throw Error("AxiomFailure", "gamma(" + setText(key.S) + "," + setText(key.T) + ";" + weightText(key.lambda) +
                                            ") differs from the reconstruction");
        ++res.reconstructed;
    }
    return res;
}

std::map<SingletonKey, LaurentScalar> restrictToSingletons(const ScalarSystem& gamma)
{
    std::map<SingletonKey, LaurentScalar> out;
    for (const auto& [key, v] : gamma.entries)
        if (std::popcount(key.S) == 1 && std::popcount(key.T) == 1)
            out.emplace(SingletonKey{std::countr_zero(key.S) + 1, std::countr_zero(key.T) + 1, key.lambda}, v);
    return out;
}

ScalarSystem expandGamma(const std::map<SingletonKey, LaurentScalar>& singletons, int n,
                         const std::set<Weight>& window, ScalarMode mode)
{
    if (n < 2) throw InputError("BadRank", "n must be at least 2");
    std::map<std::tuple<int, int, long>, LaurentScalar> table;
    for (const auto& [key, v] : singletons) {
        if (key.i < 1 || key.j < 1 || key.i > n || key.j > n || key.i == key.j)
            throw InputError("BadIndex", "singleton (" + std::to_string(key.i) + "," + std::to_string(key.j) + ")");
        if (v.isZero()) throw Error("InconsistentSingletons", "zero singleton value");
        const long p = typeA::pairDiff(key.lambda, key.i, key.j);
        auto [it, fresh] = table.emplace(std::make_tuple(key.i, key.j, p), v);
        if (!fresh && it->second != v)
            throw Error("InconsistentSingletons", "gamma(" + std::to_string(key.i) + "," + std::to_string(key.j) +
                                                      ") is not translation invariant at pairing " + std::to_string(p));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (const auto& lambda : window)
                if (!singletons.count(SingletonKey{i, j, lambda}))
                    throw Error("InconsistentSingletons", "missing gamma(" + std::to_string(i) + "," +
                                                              std::to_string(j) + ";" + weightText(lambda) + ")");
        }
    const LaurentScalar two_ = two(mode);
    for (const auto& [key, v] : table) {
        const auto [i, j, p] = key;
        // (i): gamma(i,j;p) gamma(j,i;1-p) = 1, (v): gamma(i,j;p) + gamma(j,i;-p) = [2]
        auto inv = table.find(std::make_tuple(j, i, 1 - p));
        if (inv != table.end() && !(v * inv->second).isOne())
            throw Error("InconsistentSingletons", "axiom i fails for (" + std::to_string(i) + "," + std::to_string(j) +
                                                      ") at pairing " + std::to_string(p));
        auto sum = table.find(std::make_tuple(j, i, -p));
        if (sum != table.end() && v + sum->second != two_)
            throw Error("InconsistentSingletons", "axiom v fails for (" + std::to_string(i) + "," + std::to_string(j) +
                                                      ") at pairing " + std::to_string(p));
    }
    Single single = [&](int i, int j, long p) { return table.at(std::make_tuple(i, j, p)); };
    ScalarSystem g = build(n, mode, window, single);
    const LaurentScalar three_ = three(mode);
    for (const auto& lambda : window)
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    const IndexSet I = 1u << (i - 1), J = 1u << (j - 1), K = 1u << (k - 1);
                    if (*g.find(I, J | K, lambda) + *g.find(J, K | I, lambda) + *g.find(K, I | J, lambda) != three_)
                        throw Error("InconsistentSingletons", "axiom vi fails at " + weightText(lambda));
                }
    return g;
}

} // namespace qflag
