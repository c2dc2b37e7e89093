#include "qflag/zpoly.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace qflag::zpoly {

void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool isOne(const Poly& p) { return p.size() == 1 && p[0] == 1; }

Poly constant(const mpz_class& c)
{
    if (c == 0) return {};
    return Poly{c};
}

Poly add(const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly neg(const Poly& a)
{
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Poly mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    trim(r);
    return r;
}

Poly scale(const Poly& a, const mpz_class& c)
{
    if (c == 0) return {};
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

Poly shiftUp(const Poly& a, long k)
{
    if (a.empty() || k == 0) return a;
    assert(k > 0);
    Poly r(a.size() + static_cast<size_t>(k));
    std::copy(a.begin(), a.end(), r.begin() + k);
    return r;
}

Poly divExact(const Poly& a, const Poly& b)
{
    assert(!b.empty());
    if (a.empty()) return {};
    if (b.size() == 1) return divExactScalar(a, b[0]);
    Poly rem = a;
    const size_t db = b.size() - 1;
    assert(rem.size() >= b.size());
    Poly q(rem.size() - db);
    const mpz_class& lb = b.back();
    for (size_t k = q.size(); k-- > 0;) {
        const mpz_class& top = rem[k + db];
        if (top == 0) continue;
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        q[k] = c;
        for (size_t j = 0; j <= db; ++j)
            mpz_submul(rem[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(q);
    return q;
}

Poly divExactScalar(const Poly& a, const mpz_class& c)
{
    if (c == 1) return a;
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
    return r;
}

mpz_class content(const Poly& a)
{
    mpz_class g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly primitivePart(const Poly& a)
{
    if (a.empty()) return {};
    mpz_class g = content(a);
    if (a.back() < 0) g = -g;
    return divExactScalar(a, g);
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(da-db+1) a mod b.
Poly prem(Poly a, const Poly& b)
{
    const size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        mpz_class lead = a.back();
        const size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (size_t j = 0; j <= db; ++j)
            mpz_submul(a[shift + j].get_mpz_t(), lead.get_mpz_t(), b[j].get_mpz_t());
        trim(a);
    }
    return a;
}

} // namespace

Poly gcd(const Poly& a0, const Poly& b0)
{
    if (a0.empty()) return primitivePart(b0);
    if (b0.empty()) return primitivePart(a0);
    if (a0.size() == 1 || b0.size() == 1) return Poly{1};
    Poly a = primitivePart(a0);
    Poly b = primitivePart(b0);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        if (b.size() == 1) return Poly{1};
        Poly r = prem(a, b);
        a = std::move(b);
        b = primitivePart(r);
    }
    return primitivePart(a);
}

long lowOrder(const Poly& a)
{
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) return static_cast<long>(i);
    return 0;
}

Poly dropLow(const Poly& a, long k)
{
    if (k == 0) return a;
    return Poly(a.begin() + k, a.end());
}

Poly stretch(const Poly& a, long f)
{
    if (f == 1 || a.empty()) return a;
    Poly r(static_cast<size_t>((a.size() - 1) * f + 1));
    for (size_t i = 0; i < a.size(); ++i) r[i * f] = a[i];
    return r;
}

Poly compress(const Poly& a, long f)
{
    if (f == 1 || a.empty()) return a;
    Poly r((a.size() - 1) / f + 1);
    for (size_t i = 0; i < a.size(); i += f) r[i / f] = a[i];
    return r;
}

} // namespace qflag::zpoly
