#include "qflag/qscalar.hpp"

#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qflag {

using namespace zpoly;

LaurentScalar::LaurentScalar(long c) : num_(constant(mpz_class(c))), den_{1} {}

LaurentScalar::LaurentScalar(const mpz_class& c) : num_(constant(c)), den_{1} {}

LaurentScalar::LaurentScalar(const mpq_class& c) : num_(constant(c.get_num())), den_{c.get_den()}
{
    if (num_.empty()) den_ = Poly{1};
}

LaurentScalar LaurentScalar::qPow(long e)
{
    LaurentScalar r(1);
    r.shift_ = e;
    return r;
}

LaurentScalar LaurentScalar::qPow(const mpq_class& e)
{
    mpq_class c = e;
    c.canonicalize();
    return fromParts(c.get_den().get_si(), c.get_num().get_si(), Poly{1}, Poly{1});
}

LaurentScalar LaurentScalar::fromParts(long D, long shift, Poly num, Poly den)
{
    trim(num);
    trim(den);
    LaurentScalar r;
    r.D_ = D;
    r.shift_ = shift;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.canonicalize();
    return r;
}

void LaurentScalar::canonicalize(bool coprime)
{
    if (den_.empty()) throw Error("ZeroDenominator", "rational function with zero denominator");
    if (num_.empty()) {
        D_ = 1;
        shift_ = 0;
        den_ = Poly{1};
        return;
    }
    long lo = lowOrder(num_);
    if (lo) num_ = dropLow(num_, lo);
    shift_ += lo;
    lo = lowOrder(den_);
    if (lo) den_ = dropLow(den_, lo);
    shift_ -= lo;

    if (!coprime && den_.size() > 1 && num_.size() > 1) {
        Poly g = gcd(num_, den_);
        if (g.size() > 1) {
            num_ = divExact(num_, g);
            den_ = divExact(den_, g);
        }
    }
    if (!zpoly::isOne(den_)) {
        mpz_class c = content(den_);
        if (c != 1) {
            mpz_class cn = content(num_);
            mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cn.get_mpz_t());
        }
        if (den_[0] < 0) c = -c;
        if (c != 1) {
            num_ = divExactScalar(num_, c);
            den_ = divExactScalar(den_, c);
        }
    }

    if (D_ > 1) {
        long g = std::gcd(D_, std::abs(shift_));
        for (size_t i = 1; i < num_.size() && g > 1; ++i)
            if (num_[i] != 0) g = std::gcd(g, static_cast<long>(i));
        for (size_t i = 1; i < den_.size() && g > 1; ++i)
            if (den_[i] != 0) g = std::gcd(g, static_cast<long>(i));
        if (g > 1) {
            D_ /= g;
            shift_ /= g;
            num_ = compress(num_, g);
            den_ = compress(den_, g);
        }
    }
}

LaurentScalar LaurentScalar::rescaled(long newD) const
{
    if (newD == D_) return *this;
    const long f = newD / D_;
    LaurentScalar r;
    r.D_ = newD;
    r.shift_ = shift_ * f;
    r.num_ = stretch(num_, f);
    r.den_ = stretch(den_, f);
    return r;
}

bool LaurentScalar::isOne() const
{
    return D_ == 1 && shift_ == 0 && zpoly::isOne(num_) && zpoly::isOne(den_);
}

std::optional<mpq_class> LaurentScalar::asRational() const
{
    if (isZero()) return mpq_class(0);
    if (shift_ != 0 || num_.size() != 1 || den_.size() != 1) return std::nullopt;
    mpq_class r(num_[0], den_[0]);
    r.canonicalize();
    return r;
}

std::optional<std::pair<mpq_class, mpq_class>> LaurentScalar::asMonomial() const
{
    if (isZero() || num_.size() != 1 || den_.size() != 1) return std::nullopt;
    mpq_class c(num_[0], den_[0]);
    c.canonicalize();
    mpq_class e{mpz_class(shift_), mpz_class(D_)};
    e.canonicalize();
    return std::make_pair(c, e);
}

LaurentScalar LaurentScalar::operator-() const
{
    LaurentScalar r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

LaurentScalar LaurentScalar::inverse() const
{
    if (isZero()) throw Error("ZeroDenominator", "inverse of zero");
    return fromParts(D_, -shift_, den_, num_);
}

LaurentScalar LaurentScalar::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    LaurentScalar result(1), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

LaurentScalar LaurentScalar::substitutePower(long d) const
{
    if (d == 1 || isZero()) return *this;
    return fromParts(D_, shift_ * d, stretch(num_, d), stretch(den_, d));
}

LaurentScalar operator+(const LaurentScalar& a0, const LaurentScalar& b0)
{
    if (a0.isZero()) return b0;
    if (b0.isZero()) return a0;
    const long L = std::lcm(a0.D_, b0.D_);
    const LaurentScalar a = a0.rescaled(L), b = b0.rescaled(L);
    const long s = std::min(a.shift_, b.shift_);
    Poly na = shiftUp(a.num_, a.shift_ - s);
    Poly nb = shiftUp(b.num_, b.shift_ - s);
    if (a.den_ == b.den_) return LaurentScalar::fromParts(L, s, add(na, nb), a.den_);
    return LaurentScalar::fromParts(L, s, add(mul(na, b.den_), mul(nb, a.den_)),
                                    mul(a.den_, b.den_));
}

LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b) { return a + (-b); }

LaurentScalar operator*(const LaurentScalar& a0, const LaurentScalar& b0)
{
    if (a0.isZero() || b0.isZero()) return LaurentScalar();
    const long L = std::lcm(a0.D_, b0.D_);
    const LaurentScalar a = a0.rescaled(L), b = b0.rescaled(L);
    if (isOne(a.den_) && isOne(b.den_))
        return LaurentScalar::fromParts(L, a.shift_ + b.shift_, mul(a.num_, b.num_), Poly{1});
    Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (bd.size() > 1 && an.size() > 1) {
        Poly g = gcd(an, bd);
        if (g.size() > 1) {
            an = divExact(an, g);
            bd = divExact(bd, g);
        }
    }
    if (ad.size() > 1 && bn.size() > 1) {
        Poly g = gcd(bn, ad);
        if (g.size() > 1) {
            bn = divExact(bn, g);
            ad = divExact(ad, g);
        }
    }
    LaurentScalar r;
    r.D_ = L;
    r.shift_ = a.shift_ + b.shift_;
    r.num_ = mul(an, bn);
    r.den_ = mul(ad, bd);
    r.canonicalize(true);
    return r;
}

LaurentScalar operator/(const LaurentScalar& a, const LaurentScalar& b) { return a * b.inverse(); }

bool operator==(const LaurentScalar& a, const LaurentScalar& b)
{
    return a.D_ == b.D_ && a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
}

bool productsEqual(std::initializer_list<const LaurentScalar*> lhs, std::initializer_list<const LaurentScalar*> rhs)
{
    long L = 1;
    bool zl = false, zr = false;
    for (auto* a : lhs) {
        L = std::lcm(L, a->D_);
        zl |= a->isZero();
    }
    for (auto* a : rhs) {
        L = std::lcm(L, a->D_);
        zr |= a->isZero();
    }
    if (zl || zr) return zl == zr;
    // t^sl * prod num_l * prod den_r == t^sr * prod num_r * prod den_l, constant terms nonzero
    long sl = 0, sr = 0;
    Poly pl{1}, pr{1};
    for (auto* a : lhs) {
        const long f = L / a->D_;
        sl += a->shift_ * f;
        pl = mul(pl, stretch(a->num_, f));
        pr = mul(pr, stretch(a->den_, f));
    }
    for (auto* a : rhs) {
        const long f = L / a->D_;
        sr += a->shift_ * f;
        pr = mul(pr, stretch(a->num_, f));
        pl = mul(pl, stretch(a->den_, f));
    }
    return sl == sr && pl == pr;
}

double LaurentScalar::evaluate(double q0) const
{
    const long double t = std::pow(static_cast<long double>(q0), 1.0L / D_);
    auto horner = [t](const Poly& p) {
        long double v = 0;
        for (size_t i = p.size(); i-- > 0;) v = v * t + static_cast<long double>(p[i].get_d());
        return v;
    };
    return static_cast<double>(std::pow(t, static_cast<long double>(shift_)) * horner(num_) /
                               horner(den_));
}

// ---- text form ----

namespace {

std::string qPart(const mpq_class& e)
{
    if (e == 0) return "";
    if (e == 1) return "q";
    if (e.get_den() == 1) return "q^" + e.get_num().get_str();
    return "q^(" + e.get_num().get_str() + "/" + e.get_den().get_str() + ")";
}

std::string formatPoly(long D, long shift, const Poly& p)
{
    std::ostringstream out;
    bool first = true;
    for (size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) continue;
        mpq_class e{mpz_class(static_cast<long>(i) + shift), mpz_class(D)};
        e.canonicalize();
        mpz_class c = p[i];
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        const std::string qs = qPart(e);
        if (qs.empty())
            out << c.get_str();
        else if (c == 1)
            out << qs;
        else
            out << c.get_str() << "*" << qs;
    }
    if (first) return "0";
    return out.str();
}

} // namespace

std::string LaurentScalar::toString() const
{
    if (isZero()) return "0";
    if (zpoly::isOne(den_)) return formatPoly(D_, shift_, num_);
    return "(" + formatPoly(D_, shift_, num_) + ")/(" + formatPoly(D_, 0, den_) + ")";
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    LaurentScalar parseAll()
    {
        LaurentScalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

    // for ProjParam: parse an expression ending at ':' or ']'
    LaurentScalar parseUntil()
    {
        return expr();
    }

    void expect(char c)
    {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool atEnd()
    {
        skip();
        return pos_ == s_.size();
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw InputError("ParseError", why + " at offset " + std::to_string(pos_) + " in \"" +
                                           std::string(s_) + "\"");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    LaurentScalar expr()
    {
        LaurentScalar v = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                v += term();
            } else if (peek('-')) {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }

    LaurentScalar term()
    {
        LaurentScalar v = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                v *= unary();
            } else if (peek('/')) {
                ++pos_;
                LaurentScalar d = unary();
                if (d.isZero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    LaurentScalar unary()
    {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    mpz_class integer()
    {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    mpq_class exponent()
    {
        if (peek('(')) {
            ++pos_;
            bool negative = false;
            if (peek('-')) {
                ++pos_;
                negative = true;
            }
            mpz_class a = integer();
            mpz_class b = 1;
            if (peek('/')) {
                ++pos_;
                b = integer();
                if (b == 0) fail("zero exponent denominator");
            }
            expect(')');
            mpq_class e(negative ? mpz_class(-a) : a, b);
            e.canonicalize();
            return e;
        }
        bool negative = false;
        if (peek('-')) {
            ++pos_;
            negative = true;
        }
        mpz_class a = integer();
        return mpq_class(negative ? mpz_class(-a) : a);
    }

    LaurentScalar power()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (c == 'q') {
            ++pos_;
            if (peek('^')) {
                ++pos_;
                mpq_class e = exponent();
                if (abs(e.get_num()) > 1000000) fail("exponent too large");
                return LaurentScalar::qPow(e);
            }
            return LaurentScalar::q();
        }
        LaurentScalar base;
        if (c == '(') {
            ++pos_;
            base = expr();
            expect(')');
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base = LaurentScalar(integer());
        } else {
            fail("unexpected character");
        }
        if (peek('^')) {
            ++pos_;
            mpq_class e = exponent();
            if (e.get_den() != 1) fail("fractional power of a non-monomial");
            if (abs(e.get_num()) > 10000) fail("exponent too large");
            const long k = e.get_num().get_si();
            if (k < 0 && base.isZero()) fail("division by zero");
            return base.pow(k);
        }
        return base;
    }

    std::string_view s_;
    size_t pos_ = 0;
};

} // namespace

LaurentScalar LaurentScalar::parse(std::string_view text)
{
    return Parser(text).parseAll();
}

// ---- ProjParam ----

ProjParam::ProjParam(LaurentScalar x, LaurentScalar y)
{
    if (x.isZero() && y.isZero()) throw Error("DegenerateParam", "[0:0] is not a point of P^1");
    if (x.isZero()) {
        x_ = LaurentScalar(0);
        y_ = LaurentScalar(1);
    } else {
        y_ = y / x;
        x_ = LaurentScalar(1);
    }
}

std::optional<LaurentScalar> ProjParam::affine() const
{
    if (y_.isZero()) return std::nullopt;
    return x_ / y_;
}

std::string ProjParam::toString() const
{
    return "[" + x_.toString() + " : " + y_.toString() + "]";
}

ProjParam ProjParam::parse(std::string_view text)
{
    Parser p(text);
    if (text.find('[') == std::string_view::npos) {
        std::string_view t = text;
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
        if (t == "inf" || t == "infinity") return infinity();
        return finite(LaurentScalar::parse(text));
    }
    p.expect('[');
    LaurentScalar x = p.parseUntil();
    p.expect(':');
    LaurentScalar y = p.parseUntil();
    p.expect(']');
    if (!p.atEnd()) throw InputError("ParseError", "trailing text after ProjParam");
    if (x.isZero() && y.isZero()) throw InputError("ParseError", "[0:0] is not a point of P^1");
    return ProjParam(x, y);
}

} // namespace qflag
