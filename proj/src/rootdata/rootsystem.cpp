#include "qflag/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace qflag {

namespace {

IMat typeACartan(int r)
{
    IMat a(r, IVec(r, 0));
    for (int i = 0; i < r; ++i) {
        a[i][i] = 2;
        if (i + 1 < r) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
}

} // namespace

RootSystemPtr RootSystem::build(char type, int rank)
{
    IMat a;
    IVec d;
    switch (type) {
    case 'A':
        if (rank < 1) break;
        a = typeACartan(rank);
        d.assign(rank, 1);
        break;
    case 'B':
        if (rank < 2) break;
        a = typeACartan(rank);
        a[rank - 2][rank - 1] = -1;
        a[rank - 1][rank - 2] = -2;
        d.assign(rank, 2);
        d[rank - 1] = 1;
        break;
    case 'C':
        if (rank < 2) break;
        a = typeACartan(rank);
        a[rank - 2][rank - 1] = -2;
        a[rank - 1][rank - 2] = -1;
        d.assign(rank, 1);
        d[rank - 1] = 2;
        break;
    case 'D':
        if (rank < 4) break;
        a = typeACartan(rank);
        // fork: the last two nodes both hang off node rank-3
        a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0;
        a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1;
        d.assign(rank, 1);
        break;
    case 'G':
        if (rank != 2) break;
        a = {{2, -3}, {-1, 2}};
        d = {1, 3};
        break;
    default:
        throw InputError("UnsupportedType", std::string("root system type '") + type + "'");
    }
    if (a.empty())
        throw InputError("UnsupportedType",
                         std::string("rank ") + std::to_string(rank) + " invalid for type " + type);
    return fromCartan(type, std::move(a), std::move(d));
}

RootSystemPtr RootSystem::fromCartan(char type, IMat cartan, IVec d)
{
    std::shared_ptr<RootSystem> rs(new RootSystem);
    rs->type_ = type;
    rs->rank_ = static_cast<int>(cartan.size());
    rs->cartan_ = std::move(cartan);
    rs->d_ = std::move(d);
    for (int i = 0; i < rs->rank_; ++i)
        for (int j = 0; j < rs->rank_; ++j)
            if (rs->d_[i] * rs->cartan_[i][j] != rs->d_[j] * rs->cartan_[j][i])
                throw InputError("UnsupportedType", "Cartan matrix is not symmetrizable by d");
    rs->enumerate();
    return rs;
}

void RootSystem::enumerate()
{
    std::set<IVec> seen;
    std::deque<IVec> queue;
    for (int i = 0; i < rank_; ++i) {
        IVec e(rank_, 0);
        e[i] = 1;
        if (seen.insert(e).second) queue.push_back(e);
    }
    while (!queue.empty()) {
        IVec b = queue.front();
        queue.pop_front();
        for (int i = 0; i < rank_; ++i) {
            IVec c = reflectRoot(i, b);
            if (seen.insert(c).second) queue.push_back(c);
        }
        if (seen.size() > 10000) throw Error("UnsupportedType", "root system is not finite");
    }
    std::vector<IVec> pos;
    for (const auto& v : seen)
        if (std::all_of(v.begin(), v.end(), [](long x) { return x >= 0; })) pos.push_back(v);
    std::stable_sort(pos.begin(), pos.end(), [](const IVec& a, const IVec& b) {
        long ha = std::accumulate(a.begin(), a.end(), 0L);
        long hb = std::accumulate(b.begin(), b.end(), 0L);
        if (ha != hb) return ha < hb;
        return a > b;
    });
    numPositive_ = static_cast<int>(pos.size());
    roots_ = pos;
    for (const auto& v : pos) {
        IVec n(v);
        for (auto& x : n) x = -x;
        roots_.push_back(n);
    }
    for (int k = 0; k < numRoots(); ++k) index_[roots_[k]] = k;
    simple_.resize(rank_);
    for (int i = 0; i < rank_; ++i) {
        IVec e(rank_, 0);
        e[i] = 1;
        simple_[i] = index_.at(e);
    }
    dRoot_.resize(roots_.size());
    for (int k = 0; k < numRoots(); ++k) dRoot_[k] = pairRoots(roots_[k], roots_[k]) / 2;
    simplePerm_.assign(rank_, std::vector<int>(roots_.size()));
    for (int i = 0; i < rank_; ++i)
        for (int k = 0; k < numRoots(); ++k) simplePerm_[i][k] = index_.at(reflectRoot(i, roots_[k]));
}

int RootSystem::indexOf(const IVec& v) const
{
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

long RootSystem::height(int idx) const
{
    return std::accumulate(roots_[idx].begin(), roots_[idx].end(), 0L);
}

long RootSystem::pairRoots(const IVec& a, const IVec& b) const
{
    long s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < rank_; ++j) s += a[i] * b[j] * d_[i] * cartan_[i][j];
    }
    return s;
}

long RootSystem::pairWeightRoot(const Weight& lambda, const IVec& beta) const
{
    long s = 0;
    for (int j = 0; j < rank_; ++j) s += lambda[j] * d_[j] * beta[j];
    return s;
}

long RootSystem::pairCoroot(const Weight& lambda, int idx) const
{
    return pairWeightRoot(lambda, roots_[idx]) / dRoot_[idx];
}

Weight RootSystem::rootToWeight(const IVec& beta) const
{
    // alpha_j has fundamental coordinates a_ij (column j)
    Weight c(rank_, 0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) c[i] += cartan_[i][j] * beta[j];
    return c;
}

IVec RootSystem::reflectRoot(int i, const IVec& beta) const
{
    IVec r = beta;
    long s = 0;
    for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * beta[j];
    r[i] -= s;
    return r;
}

Weight RootSystem::reflectWeight(int i, const Weight& lambda) const
{
    Weight r = lambda;
    const long c = lambda[i];
    if (c)
        for (int j = 0; j < rank_; ++j) r[j] -= c * cartan_[j][i];
    return r;
}

Weight RootSystem::reflectWeightBy(int idx, const Weight& lambda) const
{
    const long c = pairCoroot(lambda, idx);
    Weight r = lambda;
    if (c) {
        Weight b = rootToWeight(roots_[idx]);
        for (int j = 0; j < rank_; ++j) r[j] -= c * b[j];
    }
    return r;
}

// ---- type A ----

namespace typeA {

int rootIndex(const RootSystem& rs, int i, int j)
{
    const int n = rs.rank() + 1;
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw InputError("BadIndex", "e_" + std::to_string(i) + " - e_" + std::to_string(j));
    IVec v(rs.rank(), 0);
    const int lo = std::min(i, j), hi = std::max(i, j);
    for (int k = lo; k < hi; ++k) v[k - 1] = i < j ? 1 : -1;
    return rs.indexOf(v);
}

Weight fromTuple(const std::vector<long>& lambda)
{
    Weight c(lambda.size() - 1);
    for (size_t i = 0; i + 1 < lambda.size(); ++i) c[i] = lambda[i] - lambda[i + 1];
    return c;
}

std::vector<long> toTuple(const Weight& c)
{
    std::vector<long> t(c.size() + 1, 0);
    for (size_t i = c.size(); i-- > 0;) t[i] = t[i + 1] + c[i];
    return t;
}

Weight indicator(int n, const std::vector<int>& S)
{
    std::vector<long> t(n, 0);
    for (int i : S) t[i - 1] += 1;
    return fromTuple(t);
}

long pairDiff(const Weight& c, int i, int j)
{
    auto t = toTuple(c);
    return t[i - 1] - t[j - 1];
}

mpq_class pairTuples(const std::vector<long>& a, const std::vector<long>& b)
{
    const long n = static_cast<long>(a.size());
    long dot = 0, sa = 0, sb = 0;
    for (long i = 0; i < n; ++i) {
        dot += a[i] * b[i];
        sa += a[i];
        sb += b[i];
    }
    mpq_class r{mpz_class(dot * n - sa * sb), mpz_class(n)};
    r.canonicalize();
    return r;
}

} // namespace typeA

} // namespace qflag
