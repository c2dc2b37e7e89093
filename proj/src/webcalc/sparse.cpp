#include "qflag/webcalc.hpp"

#include <bit>
#include <cstdlib>
#include <sstream>

namespace qflag {

TensorSpace::TensorSpace(int n_, std::vector<int> f) : n(n_)
{
    if (n < 1 || n > 8) throw InputError("BadRank", "n must be in 1..8");
    for (int k : f) {
        if (std::abs(k) > n) throw InputError("SizeOverflow", "factor size exceeds n");
        if (k != 0) factors.push_back(k);
    }
    if (factors.size() > 8) throw InputError("SizeOverflow", "at most 8 tensor factors");
}

TensorSpace TensorSpace::operator*(const TensorSpace& o) const
{
    std::vector<int> f = factors;
    f.insert(f.end(), o.factors.begin(), o.factors.end());
    return TensorSpace(n ? n : o.n, f);
}

std::string TensorSpace::toString() const
{
    if (factors.empty()) return "1";
    std::string s;
    for (size_t p = 0; p < factors.size(); ++p) {
        if (p) s += " (x) ";
        s += "L" + std::to_string(std::abs(factors[p]));
        if (factors[p] < 0) s += "*";
    }
    return s;
}

std::vector<unsigned> subsetsOfSize(int n, int k)
{
    std::vector<unsigned> out;
    for (unsigned m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == k) out.push_back(m);
    return out;
}

std::vector<BasisKey> basisOf(const TensorSpace& V)
{
    std::vector<BasisKey> keys{0};
    for (size_t p = 0; p < V.factors.size(); ++p) {
        std::vector<BasisKey> next;
        for (BasisKey k : keys)
            for (unsigned m : subsetsOfSize(V.n, std::abs(V.factors[p])))
                next.push_back(k | (static_cast<BasisKey>(m) << (8 * p)));
        keys = std::move(next);
    }
    return keys;
}

std::string keyString(const TensorSpace& V, BasisKey key)
{
    if (V.factors.empty()) return "1";
    std::string s;
    for (size_t p = 0; p < V.factors.size(); ++p) {
        if (p) s += " (x) ";
        s += V.factors[p] > 0 ? "x_{" : "e^{";
        unsigned m = factorMask(key, p);
        for (int j = 0; j < V.n; ++j)
            if (m >> j & 1) s += std::to_string(j + 1);
        s += "}";
    }
    return s;
}

void addTerm(Terms& t, BasisKey key, const LaurentScalar& c)
{
    if (c.isZero()) return;
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.isZero()) t.erase(it);
}

SparseMor SparseMor::identity(const TensorSpace& V)
{
    SparseMor f(V, V);
    for (BasisKey k : basisOf(V)) f.cols_[k].emplace(k, LaurentScalar(1));
    return f;
}

void SparseMor::set(BasisKey from, BasisKey to, const LaurentScalar& c)
{
    auto& col = cols_[from];
    if (c.isZero())
        col.erase(to);
    else
        col[to] = c;
    if (col.empty()) cols_.erase(from);
}

void SparseMor::add(BasisKey from, BasisKey to, const LaurentScalar& c)
{
    auto& col = cols_[from];
    addTerm(col, to, c);
    if (col.empty()) cols_.erase(from);
}

const Terms* SparseMor::column(BasisKey from) const
{
    auto it = cols_.find(from);
    return it == cols_.end() ? nullptr : &it->second;
}

LaurentScalar SparseMor::entry(BasisKey to, BasisKey from) const
{
    if (auto* c = column(from)) {
        auto it = c->find(to);
        if (it != c->end()) return it->second;
    }
    return LaurentScalar();
}

WedgeVector SparseMor::apply(const WedgeVector& v) const
{
    if (!(v.space == src_)) throw Error("TypeMismatch", "vector lives in " + v.space.toString());
    WedgeVector out{tgt_, {}};
    for (const auto& [k, c] : v.terms)
        if (auto* col = column(k))
            for (const auto& [t, d] : *col) addTerm(out.terms, t, c * d);
    return out;
}

SparseMor SparseMor::scaled(const LaurentScalar& c) const
{
    if (c.isZero()) return SparseMor(src_, tgt_);
    SparseMor r = *this;
    for (auto& [k, col] : r.cols_)
        for (auto& [t, d] : col) d *= c;
    return r;
}

SparseMor operator+(const SparseMor& a, const SparseMor& b)
{
    if (!(a.src_ == b.src_) || !(a.tgt_ == b.tgt_))
        throw Error("TypeMismatch", "sum of maps with different typing");
    SparseMor r = a;
    for (const auto& [k, col] : b.cols_)
        for (const auto& [t, d] : col) r.add(k, t, d);
    return r;
}

SparseMor operator-(const SparseMor& a, const SparseMor& b) { return a + b.scaled(LaurentScalar(-1)); }

SparseMor operator*(const SparseMor& g, const SparseMor& f)
{
    if (!(f.tgt_ == g.src_))
        throw Error("TypeMismatch", "cannot compose " + f.tgt_.toString() + " with " + g.src_.toString());
    SparseMor r(f.src_, g.tgt_);
    for (const auto& [k, col] : f.cols_) {
        Terms out;
        for (const auto& [mid, c] : col)
            if (auto* gc = g.column(mid))
                for (const auto& [t, d] : *gc) addTerm(out, t, c * d);
        if (!out.empty()) r.cols_.emplace(k, std::move(out));
    }
    return r;
}

bool operator==(const SparseMor& a, const SparseMor& b)
{
    return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.cols_ == b.cols_;
}

SparseMor tensor(const SparseMor& f, const SparseMor& g)
{
    const int s1 = 8 * static_cast<int>(f.source().factors.size());
    const int t1 = 8 * static_cast<int>(f.target().factors.size());
    SparseMor r(f.source() * g.source(), f.target() * g.target());
    for (const auto& [a, fa] : f.columns())
        for (const auto& [b, gb] : g.columns())
            for (const auto& [x, c] : fa)
                for (const auto& [y, d] : gb) r.add(a | (b << s1), x | (y << t1), c * d);
    return r;
}

SparseMor tensor(const std::vector<SparseMor>& fs)
{
    SparseMor r = SparseMor::identity(TensorSpace());
    for (const auto& f : fs) r = tensor(r, f);
    return r;
}

std::optional<MorDiff> firstDifference(const SparseMor& a, const SparseMor& b)
{
    for (BasisKey k : basisOf(a.source())) {
        const Terms* ca = a.column(k);
        const Terms* cb = b.column(k);
        const Terms empty;
        const Terms& x = ca ? *ca : empty;
        const Terms& y = cb ? *cb : empty;
        if (x == y) continue;
        auto show = [&](const Terms& t) {
            if (t.empty()) return std::string("0");
            std::ostringstream out;
            bool first = true;
            for (const auto& [key, c] : t) {
                out << (first ? "" : " + ") << "(" << c.toString() << ")*" << keyString(a.target(), key);
                first = false;
            }
            return out.str();
        };
        return MorDiff{k, show(x), show(y)};
    }
    return std::nullopt;
}

unsigned batchThreads()
{
    if (const char* s = std::getenv("QFLAG_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

} // namespace qflag
