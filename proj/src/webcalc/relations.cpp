#include "qflag/webcalc.hpp"

namespace qflag {

namespace {

SparseMor id(int n, std::vector<int> f) { return SparseMor::identity(TensorSpace(n, std::move(f))); }

LaurentScalar sign(long e) { return LaurentScalar(e % 2 == 0 ? 1 : -1); }

bool inRange(int n, std::initializer_list<int> sizes)
{
    for (int s : sizes)
        if (s < 0 || s > n) return false;
    return true;
}

} // namespace

std::vector<std::string> relationNames()
{
    return {"conjugation1", "conjugation2", "rotation", "assocM",
            "assocMprime",  "bubble",       "flipping", "squareSwitch"};
}

std::vector<std::vector<int>> relationParams(const std::string& r, int n, int maxSize)
{
    const int top = std::min(n, maxSize);
    std::vector<std::vector<int>> out;
    if (r == "conjugation1" || r == "conjugation2" || r == "rotation") {
        for (int k = 0; k <= top; ++k) out.push_back({k});
    } else if (r == "assocM" || r == "assocMprime") {
        for (int k = 0; k <= top; ++k)
            for (int l = 0; l <= top; ++l)
                for (int m = 0; m <= top; ++m)
                    if (k + l + m <= n) out.push_back({k, l, m});
    } else if (r == "bubble" || r == "flipping") {
        for (int k = 0; k <= top; ++k)
            for (int l = 0; l <= top; ++l)
                if (k + l <= n) out.push_back({k, l});
    } else if (r == "squareSwitch") {
        for (int k = 0; k <= top; ++k)
            for (int l = 0; l <= top; ++l)
                for (int r2 = 0; r2 <= top; ++r2)
                    for (int s = 0; s <= k; ++s)
                        if (l + s <= n && r2 <= l + s && r2 + k - s <= n) out.push_back({k, l, r2, s});
    } else {
        throw InputError("UnknownRelation", "unknown relation '" + r + "'");
    }
    return out;
}

std::pair<SparseMor, SparseMor> relationSides(const std::string& r, const std::vector<int>& p, int n)
{
    using CK = CoevKind;
    auto need = [&](size_t c) {
        if (p.size() != c)
            throw InputError("BadParams", r + " takes " + std::to_string(c) + " parameters");
    };
    if (r == "conjugation1") {
        need(1);
        const int k = p[0];
        SparseMor lhs = tensor(evalCoev(CK::EpsMinus, k, n), id(n, {k})) *
                        tensor(id(n, {k}), evalCoev(CK::EtaPlus, k, n));
        return {lhs, id(n, {k})};
    }
    if (r == "conjugation2") {
        need(1);
        const int k = p[0];
        SparseMor lhs = tensor(id(n, {k}), evalCoev(CK::EpsPlus, k, n)) *
                        tensor(evalCoev(CK::EtaMinus, k, n), id(n, {k}));
        return {lhs, id(n, {k})};
    }
    if (r == "rotation") {
        need(1);
        const int k = p[0];
        const SparseMor top = topForm(n);
        SparseMor lhs = tensor(top * wedgeMultiply(k, n - k, n), id(n, {-(n - k)})) *
                        tensor(id(n, {k}), evalCoev(CK::EtaMinus, n - k, n));
        SparseMor rhs = tensor(id(n, {-(n - k)}), top * wedgeMultiply(n - k, k, n)) *
                        tensor(evalCoev(CK::EtaPlus, n - k, n), id(n, {k}));
        return {lhs, rhs.scaled(sign(static_cast<long>(k) * (n - k)))};
    }
    if (r == "assocM") {
        need(3);
        const int k = p[0], l = p[1], m = p[2];
        SparseMor lhs = wedgeMultiply(k, l + m, n) * tensor(id(n, {k}), wedgeMultiply(l, m, n));
        SparseMor rhs = wedgeMultiply(k + l, m, n) * tensor(wedgeMultiply(k, l, n), id(n, {m}));
        return {lhs, rhs};
    }
    if (r == "assocMprime") {
        need(3);
        const int k = p[0], l = p[1], m = p[2];
        SparseMor lhs = tensor(id(n, {k}), wedgeComultiply(l, m, n)) * wedgeComultiply(k, l + m, n);
        SparseMor rhs = tensor(wedgeComultiply(k, l, n), id(n, {m})) * wedgeComultiply(k + l, m, n);
        return {lhs, rhs};
    }
    if (r == "bubble") {
        need(2);
        const int k = p[0], l = p[1];
        return {wedgeMultiply(k, l, n) * wedgeComultiply(k, l, n),
                id(n, {k + l}).scaled(qBinomial(k + l, k))};
    }
    if (r == "flipping") {
        need(2);
        const int k = p[0], l = p[1];
        const SparseMor top = topForm(n);
        // Lambda^(n-k) (x) Lambda^(k+l) -> Lambda^l on both sides
        SparseMor lhs = tensor(top * wedgeMultiply(n - k, k, n), id(n, {l})) *
                        tensor(id(n, {n - k}), wedgeComultiply(k, l, n));
        SparseMor rhs = tensor(id(n, {l}), top * wedgeMultiply(n - k - l, k + l, n)) *
                        tensor(wedgeComultiply(l, n - k - l, n), id(n, {k + l}));
        return {lhs, rhs.scaled(sign(static_cast<long>(l) * (n - l)))};
    }
    if (r == "squareSwitch") {
        need(4);
        const int k = p[0], l = p[1], rr = p[2], s = p[3];
        SparseMor lhs = tensor(id(n, {l + s - rr}), wedgeMultiply(rr, k - s, n)) *
                        tensor(wedgeComultiply(l + s - rr, rr, n) * wedgeMultiply(l, s, n), id(n, {k - s})) *
                        tensor(id(n, {l}), wedgeComultiply(s, k - s, n));
        SparseMor rhs(lhs.source(), lhs.target());
        for (int t = 0; t <= std::min(rr, s); ++t) {
            if (!inRange(n, {l - rr + t, rr - t, s - t, k - s + rr, rr - t + k, l + s - rr}))
                continue;
            SparseMor term = tensor(wedgeMultiply(l - rr + t, s - t, n), id(n, {k - s + rr})) *
                             tensor(id(n, {l - rr + t}),
                                    wedgeComultiply(s - t, k - s + rr, n) * wedgeMultiply(rr - t, k, n)) *
                             tensor(wedgeComultiply(l - rr + t, rr - t, n), id(n, {k}));
            rhs = rhs + term.scaled(qBinomial(k - l + rr - s, t));
        }
        return {lhs, rhs};
    }
    throw InputError("UnknownRelation", "unknown relation '" + r + "'");
}

RelationReport verifyRelation(const std::string& relation, const std::vector<int>& p, int n)
{
    RelationReport rep{relation, p, n, true, std::nullopt, ""};
    auto [lhs, rhs] = relationSides(relation, p, n);
    if (!(lhs.source() == rhs.source()) || !(lhs.target() == rhs.target()))
        throw Error("TypeMismatch", relation + ": sides map " + lhs.source().toString() + " -> " +
                                        lhs.target().toString() + " and " + rhs.source().toString() +
                                        " -> " + rhs.target().toString());
    rep.witness = firstDifference(lhs, rhs);
    rep.ok = !rep.witness;
    if (relation == "bubble" && rep.ok)
        rep.note = "M M' = qbin(" + std::to_string(p[0] + p[1]) + "," + std::to_string(p[0]) + ") id = (" +
                   qBinomial(p[0] + p[1], p[0]).toString() + ") id";
    return rep;
}

} // namespace qflag
