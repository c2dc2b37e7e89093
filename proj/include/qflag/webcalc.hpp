#pragma once

#include "qflag/batch.hpp"
#include "qflag/qscalar.hpp"
#include "qflag/rootdata.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qflag {

// Ordered tensor product of quantum exterior powers of the vector
// representation of U_q(sl_n).  k > 0 is Lambda^k, k < 0 its dual.
// Lambda^0 factors are dropped, so the empty product is the unit object.
struct TensorSpace {
    int n = 0;
    std::vector<int> factors;

    TensorSpace() = default;
    TensorSpace(int n, std::vector<int> f);
    TensorSpace operator*(const TensorSpace& o) const; // tensor product
    // the unit object is the same for every n
    bool operator==(const TensorSpace& o) const
    {
        return factors == o.factors && (factors.empty() || n == o.n);
    }
    std::string toString() const;
};

// one subset bitmask (bit j-1 <-> index j) per factor, 8 bits per factor
using BasisKey = std::uint64_t;

std::vector<BasisKey> basisOf(const TensorSpace& V);
std::vector<unsigned> subsetsOfSize(int n, int k);
inline unsigned factorMask(BasisKey key, size_t p) { return static_cast<unsigned>((key >> (8 * p)) & 0xFF); }
std::string keyString(const TensorSpace& V, BasisKey key);

using Terms = std::map<BasisKey, LaurentScalar>;

void addTerm(Terms& t, BasisKey key, const LaurentScalar& c);

struct WedgeVector {
    TensorSpace space;
    Terms terms;
};

class SparseMor {
public:
    SparseMor() = default;
    SparseMor(TensorSpace src, TensorSpace tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {}

    static SparseMor identity(const TensorSpace& V);
    static SparseMor zero(const TensorSpace& src, const TensorSpace& tgt) { return SparseMor(src, tgt); }

    const TensorSpace& source() const { return src_; }
    const TensorSpace& target() const { return tgt_; }
    const std::map<BasisKey, Terms>& columns() const { return cols_; }

    void set(BasisKey from, BasisKey to, const LaurentScalar& c);
    void add(BasisKey from, BasisKey to, const LaurentScalar& c);
    const Terms* column(BasisKey from) const;
    LaurentScalar entry(BasisKey to, BasisKey from) const;

    WedgeVector apply(const WedgeVector& v) const;

    SparseMor scaled(const LaurentScalar& c) const;
    friend SparseMor operator+(const SparseMor& a, const SparseMor& b);
    friend SparseMor operator-(const SparseMor& a, const SparseMor& b);
    // g * f is g after f
    friend SparseMor operator*(const SparseMor& g, const SparseMor& f);
    friend bool operator==(const SparseMor& a, const SparseMor& b);

    bool isZero() const { return cols_.empty(); }

private:
    TensorSpace src_, tgt_;
    std::map<BasisKey, Terms> cols_;
};

SparseMor tensor(const SparseMor& f, const SparseMor& g);
SparseMor tensor(const std::vector<SparseMor>& fs);

// first basis vector where two maps with equal typing differ
struct MorDiff {
    BasisKey source = 0;
    std::string lhs, rhs;
};
std::optional<MorDiff> firstDifference(const SparseMor& a, const SparseMor& b);

// ---- generating morphisms ----

// (S, T) -> #{(i, j) in S x T : i < j}
int crossings(unsigned S, unsigned T);
// (2 rho, [e_S])
long twoRhoPairing(int n, unsigned S);

SparseMor wedgeMultiply(int k, int l, int n);   // Lambda^k (x) Lambda^l -> Lambda^(k+l)
SparseMor wedgeComultiply(int k, int l, int n); // Lambda^(k+l) -> Lambda^k (x) Lambda^l

enum class CoevKind { EpsPlus, EtaPlus, EpsMinus, EtaMinus };
// Default twists: eps-(v (x) f) = f(K_{-2rho} v), eta+(1) = sum e^S (x) K_{2rho} x_S.
// These are the module maps for the coproduct in use; literalTwist swaps the
// signs of the 2rho exponents (not equivariant, kept for diagnostics).
SparseMor evalCoev(CoevKind kind, int i, int n, bool literalTwist = false);
// Lambda^n -> unit, x_{1..n} -> q^(n(n+1)/4)
SparseMor topForm(int n);

// ---- quantum group action ----

struct Generator {
    enum Kind { E, F, K } kind = E;
    int i = 1;          // simple index, 1-based, for E and F
    Weight lambda;      // fundamental coordinates, for K
    static Generator e(int i) { return {E, i, {}}; }
    static Generator f(int i) { return {F, i, {}}; }
    static Generator k(Weight lambda) { return {K, 0, std::move(lambda)}; }
    // K_i = K_{alpha_i}
    static Generator kSimple(int n, int i);
    std::string toString() const;
};

enum class LambdaAction { ClosedForm, TensorOracle };

// action on one factor Lambda^k or its dual
SparseMor factorAction(const Generator& g, int k, int n, LambdaAction how = LambdaAction::ClosedForm);
// action on a tensor product through the iterated coproduct
SparseMor generatorAction(const Generator& g, const TensorSpace& V,
                          LambdaAction how = LambdaAction::ClosedForm);
WedgeVector generatorAction(const Generator& g, const WedgeVector& v);
// x_S -> x_{s1} (x) ... (x) x_{sk} embedding via iterated comultiplication
SparseMor tensorEmbedding(int k, int n);
// S(E_i) = -K_i^-1 E_i etc. as an operator on V
SparseMor antipodeAction(const Generator& g, const TensorSpace& V);
// E_i* = K_i F_i, F_i* = E_i K_i^-1, K* = K as operators on V
SparseMor starAction(const Generator& g, const TensorSpace& V);

// ---- unitary structure ----

// <b, b> for a basis vector; dual factors carry q^{-(2 rho, e_S) - sum S}
LaurentScalar basisNorm(const TensorSpace& V, BasisKey key);
LaurentScalar innerProduct(const WedgeVector& a, const WedgeVector& b);
SparseMor adjoint(const SparseMor& f);

// ---- relations ----

struct RelationReport {
    std::string relation;
    std::vector<int> params;
    int n = 0;
    bool ok = true;
    std::optional<MorDiff> witness;
    std::string note;
};

std::vector<std::string> relationNames();
// all admissible parameter tuples of a relation for rank n, sizes <= maxSize
std::vector<std::vector<int>> relationParams(const std::string& relation, int n, int maxSize);
// builds both sides; TypeMismatch if the sides have different typing
std::pair<SparseMor, SparseMor> relationSides(const std::string& relation, const std::vector<int>& p, int n);
RelationReport verifyRelation(const std::string& relation, const std::vector<int>& p, int n);

} // namespace qflag
