#include "qflag/webcalc.hpp"

#include <bit>

namespace qflag {

namespace {

// key over the nonzero factors only
BasisKey pack(std::initializer_list<std::pair<int, unsigned>> parts)
{
    BasisKey key = 0;
    int p = 0;
    for (const auto& [size, mask] : parts) {
        if (size == 0) continue;
        key |= static_cast<BasisKey>(mask) << (8 * p);
        ++p;
    }
    return key;
}

LaurentScalar minusQPow(long e)
{
    LaurentScalar r = LaurentScalar::qPow(e);
    return (e % 2 == 0) ? r : -r;
}

void checkSizes(int k, int l, int n)
{
    if (k < 0 || l < 0) throw InputError("SizeOverflow", "negative size");
    if (k + l > n)
        throw Error("SizeOverflow", "k + l = " + std::to_string(k + l) + " exceeds n = " + std::to_string(n));
}

} // namespace

int crossings(unsigned S, unsigned T)
{
    int c = 0;
    for (int i = 0; i < 8; ++i)
        if (S >> i & 1) c += std::popcount(T >> (i + 1));
    return c;
}

long twoRhoPairing(int n, unsigned S)
{
    long s = 0;
    for (int j = 1; j <= n; ++j)
        if (S >> (j - 1) & 1) s += n + 1 - 2 * j;
    return s;
}

SparseMor wedgeMultiply(int k, int l, int n)
{
    checkSizes(k, l, n);
    SparseMor m(TensorSpace(n, {k, l}), TensorSpace(n, {k + l}));
    for (unsigned T : subsetsOfSize(n, k))
        for (unsigned S : subsetsOfSize(n, l)) {
            if (S & T) continue;
            m.set(pack({{k, T}, {l, S}}), pack({{k + l, S | T}}), minusQPow(crossings(S, T)));
        }
    return m;
}

SparseMor wedgeComultiply(int k, int l, int n)
{
    checkSizes(k, l, n);
    SparseMor m(TensorSpace(n, {k + l}), TensorSpace(n, {k, l}));
    const long sign = (k * l) % 2 ? -1 : 1;
    for (unsigned S : subsetsOfSize(n, k + l))
        for (unsigned T : subsetsOfSize(n, l)) {
            if ((T & S) != T) continue;
            const unsigned R = S & ~T;
            m.set(pack({{k + l, S}}), pack({{k, R}, {l, T}}), minusQPow(-crossings(R, T)) * LaurentScalar(sign));
        }
    return m;
}

SparseMor evalCoev(CoevKind kind, int i, int n, bool literalTwist)
{
    const long tw = literalTwist ? 1 : -1;
    if (i < 0 || i > n) throw InputError("SizeOverflow", "evaluation index out of range");
    const TensorSpace unit(n, {});
    SparseMor m;
    switch (kind) {
    case CoevKind::EpsPlus:
        m = SparseMor(TensorSpace(n, {-i, i}), unit);
        for (unsigned S : subsetsOfSize(n, i)) m.set(pack({{i, S}, {i, S}}), 0, LaurentScalar(1));
        break;
    case CoevKind::EtaPlus:
        m = SparseMor(unit, TensorSpace(n, {-i, i}));
        for (unsigned S : subsetsOfSize(n, i))
            m.set(0, pack({{i, S}, {i, S}}), LaurentScalar::qPow(-tw * twoRhoPairing(n, S)));
        break;
    case CoevKind::EpsMinus:
        m = SparseMor(TensorSpace(n, {i, -i}), unit);
        for (unsigned S : subsetsOfSize(n, i))
            m.set(pack({{i, S}, {i, S}}), 0, LaurentScalar::qPow(tw * twoRhoPairing(n, S)));
        break;
    case CoevKind::EtaMinus:
        m = SparseMor(unit, TensorSpace(n, {i, -i}));
        for (unsigned S : subsetsOfSize(n, i)) m.set(0, pack({{i, S}, {i, S}}), LaurentScalar(1));
        break;
    }
    return m;
}

SparseMor topForm(int n)
{
    SparseMor m(TensorSpace(n, {n}), TensorSpace(n, {}));
    m.set((1u << n) - 1, 0, LaurentScalar::qPow(mpq_class(n * (n + 1), 4)));
    return m;
}

// ---- generators ----

Generator Generator::kSimple(int n, int i)
{
    std::vector<long> t(n, 0);
    t[i - 1] = 1;
    t[i] = -1;
    return k(typeA::fromTuple(t));
}

std::string Generator::toString() const
{
    if (kind == E) return "E" + std::to_string(i);
    if (kind == F) return "F" + std::to_string(i);
    std::string s = "K[";
    for (size_t j = 0; j < lambda.size(); ++j) s += (j ? "," : "") + std::to_string(lambda[j]);
    return s + "]";
}

namespace {

Generator negated(const Generator& g)
{
    Weight l = g.lambda;
    for (auto& x : l) x = -x;
    return Generator::k(l);
}

// (lambda, [e_S])
mpq_class weightPairing(const Weight& lambda, int n, unsigned S)
{
    std::vector<long> ind(n, 0);
    for (int j = 0; j < n; ++j) ind[j] = S >> j & 1;
    return typeA::pairTuples(typeA::toTuple(lambda), ind);
}

SparseMor closedLambda(const Generator& g, int k, int n)
{
    const TensorSpace V(n, {k});
    SparseMor m(V, V);
    for (unsigned S : subsetsOfSize(n, k)) {
        if (g.kind == Generator::K) {
            m.set(S, S, LaurentScalar::qPow(weightPairing(g.lambda, n, S)));
            continue;
        }
        const unsigned a = 1u << (g.i - 1), b = 1u << g.i;
        if (g.kind == Generator::F && (S & a) && !(S & b)) m.set(S, (S & ~a) | b, LaurentScalar(1));
        if (g.kind == Generator::E && (S & b) && !(S & a)) m.set(S, (S & ~b) | a, LaurentScalar(1));
    }
    return m;
}

SparseMor oracleLambda(const Generator& g, int k, int n)
{
    if (k == 1) return closedLambda(g, 1, n);
    const SparseMor iota = tensorEmbedding(k, n);
    const SparseMor onTensor = generatorAction(g, iota.target(), LambdaAction::ClosedForm);
    const SparseMor image = onTensor * iota;
    const TensorSpace V(n, {k});
    SparseMor m(V, V);
    auto sortedKey = [](unsigned T) {
        BasisKey key = 0;
        int p = 0;
        for (int j = 0; j < 8; ++j)
            if (T >> j & 1) key |= static_cast<BasisKey>(1u << j) << (8 * p++);
        return key;
    };
    for (unsigned S : subsetsOfSize(n, k)) {
        const Terms* col = image.column(S);
        if (!col) continue;
        for (unsigned T : subsetsOfSize(n, k)) {
            auto it = col->find(sortedKey(T));
            if (it == col->end()) continue;
            m.set(S, T, it->second / iota.entry(sortedKey(T), T));
        }
    }
    if (!(iota * m == image))
        throw Error("OracleMismatch", g.toString() + " on Lambda^" + std::to_string(k) +
                                          " is not induced through the tensor embedding");
    return m;
}

SparseMor lambdaAction(const Generator& g, int k, int n, LambdaAction how)
{
    return how == LambdaAction::ClosedForm ? closedLambda(g, k, n) : oracleLambda(g, k, n);
}

SparseMor transposed(const SparseMor& f, const TensorSpace& src, const TensorSpace& tgt)
{
    SparseMor t(src, tgt);
    for (const auto& [from, col] : f.columns())
        for (const auto& [to, c] : col) t.set(to, from, c);
    return t;
}

} // namespace

SparseMor factorAction(const Generator& g, int k, int n, LambdaAction how)
{
    if (k > 0) return lambdaAction(g, k, n, how);
    const int a = -k;
    // (x f)(v) = f(S(x) v): transpose of the antipode image
    SparseMor s;
    if (g.kind == Generator::K) {
        s = lambdaAction(negated(g), a, n, how);
    } else {
        const SparseMor x = lambdaAction(g, a, n, how);
        const SparseMor ki = lambdaAction(negated(Generator::kSimple(n, g.i)), a, n, how);
        const SparseMor kk = lambdaAction(Generator::kSimple(n, g.i), a, n, how);
        s = (g.kind == Generator::E ? ki * x : x * kk).scaled(LaurentScalar(-1));
    }
    const TensorSpace D(n, {k});
    return transposed(s, D, D);
}

SparseMor generatorAction(const Generator& g, const TensorSpace& V, LambdaAction how)
{
    const int n = V.n;
    const size_t m = V.factors.size();
    if (g.kind == Generator::K) {
        std::vector<SparseMor> parts;
        for (int k : V.factors) parts.push_back(factorAction(g, k, n, how));
        if (parts.empty()) return SparseMor::identity(V);
        return tensor(parts);
    }
    SparseMor total(V, V);
    if (m == 0) return total;
    const Generator kg = g.kind == Generator::E ? Generator::kSimple(n, g.i)
                                                : negated(Generator::kSimple(n, g.i));
    for (size_t p = 0; p < m; ++p) {
        std::vector<SparseMor> parts;
        for (size_t j = 0; j < m; ++j) {
            const int k = V.factors[j];
            if (j == p)
                parts.push_back(factorAction(g, k, n, how));
            else if ((g.kind == Generator::E) == (j < p))
                parts.push_back(factorAction(kg, k, n, how));
            else
                parts.push_back(SparseMor::identity(TensorSpace(n, {k})));
        }
        total = total + tensor(parts);
    }
    return total;
}

WedgeVector generatorAction(const Generator& g, const WedgeVector& v)
{
    return generatorAction(g, v.space).apply(v);
}

SparseMor tensorEmbedding(int k, int n)
{
    if (k <= 1) return SparseMor::identity(TensorSpace(n, {k}));
    SparseMor prev = tensorEmbedding(k - 1, n);
    return tensor(prev, SparseMor::identity(TensorSpace(n, {1}))) * wedgeComultiply(k - 1, 1, n);
}

SparseMor antipodeAction(const Generator& g, const TensorSpace& V)
{
    if (g.kind == Generator::K) return generatorAction(negated(g), V);
    const int n = V.n;
    const SparseMor x = generatorAction(g, V);
    if (g.kind == Generator::E)
        return (generatorAction(negated(Generator::kSimple(n, g.i)), V) * x).scaled(LaurentScalar(-1));
    return (x * generatorAction(Generator::kSimple(n, g.i), V)).scaled(LaurentScalar(-1));
}

SparseMor starAction(const Generator& g, const TensorSpace& V)
{
    if (g.kind == Generator::K) return generatorAction(g, V);
    const int n = V.n;
    if (g.kind == Generator::E)
        return generatorAction(Generator::kSimple(n, g.i), V) * generatorAction(Generator::f(g.i), V);
    return generatorAction(Generator::e(g.i), V) * generatorAction(negated(Generator::kSimple(n, g.i)), V);
}

// ---- inner products ----

LaurentScalar basisNorm(const TensorSpace& V, BasisKey key)
{
    long e = 0;
    for (size_t p = 0; p < V.factors.size(); ++p) {
        const unsigned S = factorMask(key, p);
        long sum = 0;
        for (int j = 0; j < V.n; ++j)
            if (S >> j & 1) sum += j + 1;
        e += V.factors[p] > 0 ? sum : -twoRhoPairing(V.n, S) - sum;
    }
    return LaurentScalar::qPow(e);
}

LaurentScalar innerProduct(const WedgeVector& a, const WedgeVector& b)
{
    if (!(a.space == b.space)) throw Error("SpaceMismatch", "inner product across different spaces");
    LaurentScalar s;
    for (const auto& [k, c] : a.terms) {
        auto it = b.terms.find(k);
        if (it != b.terms.end()) s += c * it->second * basisNorm(a.space, k);
    }
    return s;
}

SparseMor adjoint(const SparseMor& f)
{
    SparseMor r(f.target(), f.source());
    for (const auto& [v, col] : f.columns())
        for (const auto& [w, c] : col)
            r.set(w, v, c * basisNorm(f.target(), w) / basisNorm(f.source(), v));
    return r;
}

} // namespace qflag
