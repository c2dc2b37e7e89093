#include "qflag/rootdata.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace qflag {

WeylElement::WeylElement(RootSystemPtr rs) : rs_(std::move(rs)), perm_(rs_->numRoots())
{
    for (int k = 0; k < rs_->numRoots(); ++k) perm_[k] = k;
}

WeylElement WeylElement::simple(RootSystemPtr rs, int i)
{
    WeylElement w(rs);
    w.perm_ = rs->simplePermutation(i);
    return w;
}

WeylElement WeylElement::fromWord(RootSystemPtr rs, const std::vector<int>& word)
{
    WeylElement w(rs);
    for (int i : word) {
        if (i < 0 || i >= rs->rank()) throw InputError("BadWord", "simple index out of range");
        w = w * simple(rs, i);
    }
    return w;
}

WeylElement WeylElement::reflection(RootSystemPtr rs, int rootIdx)
{
    WeylElement w(rs);
    const IVec& b = rs->root(rootIdx);
    const long db = rs->rootLength(rootIdx);
    for (int k = 0; k < rs->numRoots(); ++k) {
        IVec g = rs->root(k);
        const long c = rs->pairRoots(g, b) / db;
        for (int i = 0; i < rs->rank(); ++i) g[i] -= c * b[i];
        w.perm_[k] = rs->indexOf(g);
    }
    return w;
}

WeylElement WeylElement::longest(RootSystemPtr rs)
{
    WeylElement w(rs);
    for (;;) {
        int next = -1;
        for (int i = 0; i < rs->rank() && next < 0; ++i)
            if (rs->isPositive(w.perm_[rs->simpleIndex(i)])) next = i;
        if (next < 0) return w;
        w = w * simple(rs, next);
    }
}

int WeylElement::length() const
{
    int l = 0;
    for (int k = 0; k < rs_->numPositive(); ++k)
        if (!rs_->isPositive(perm_[k])) ++l;
    return l;
}

std::vector<int> WeylElement::word() const
{
    std::vector<int> rev;
    WeylElement w = *this;
    for (;;) {
        int desc = -1;
        for (int i = 0; i < rs_->rank() && desc < 0; ++i)
            if (!rs_->isPositive(w.perm_[rs_->simpleIndex(i)])) desc = i;
        if (desc < 0) break;
        rev.push_back(desc);
        w = w * simple(rs_, desc);
    }
    return std::vector<int>(rev.rbegin(), rev.rend());
}

IVec WeylElement::applyLattice(const IVec& v) const
{
    auto wd = word();
    IVec r = v;
    for (size_t k = wd.size(); k-- > 0;) r = rs_->reflectRoot(wd[k], r);
    return r;
}

Weight WeylElement::applyWeight(const Weight& lambda) const
{
    auto wd = word();
    Weight r = lambda;
    for (size_t k = wd.size(); k-- > 0;) r = rs_->reflectWeight(wd[k], r);
    return r;
}

WeylElement WeylElement::inverse() const
{
    WeylElement w(rs_);
    for (size_t k = 0; k < perm_.size(); ++k) w.perm_[perm_[k]] = static_cast<int>(k);
    return w;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b)
{
    WeylElement w(a.rs_);
    for (size_t k = 0; k < a.perm_.size(); ++k) w.perm_[k] = a.perm_[b.perm_[k]];
    return w;
}

std::string WeylElement::toString() const
{
    auto wd = word();
    if (wd.empty()) return "e";
    std::ostringstream out;
    for (size_t k = 0; k < wd.size(); ++k) out << (k ? " " : "") << "s" << wd[k] + 1;
    return out.str();
}

std::vector<WeylElement> allWeylElements(const RootSystemPtr& rs)
{
    std::vector<WeylElement> out;
    std::set<WeylElement> seen;
    std::deque<WeylElement> queue;
    WeylElement e(rs);
    seen.insert(e);
    queue.push_back(e);
    while (!queue.empty()) {
        WeylElement w = queue.front();
        queue.pop_front();
        out.push_back(w);
        for (int i = 0; i < rs->rank(); ++i) {
            WeylElement v = w * WeylElement::simple(rs, i);
            if (seen.insert(v).second) queue.push_back(v);
        }
    }
    return out;
}

} // namespace qflag
