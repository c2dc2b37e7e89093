#pragma once

#include "qflag/qscalar.hpp"

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qflag {

using IVec = std::vector<long>;
using IMat = std::vector<IVec>;

// Weight in fundamental-weight coordinates.
using Weight = IVec;

// Finite root system built from a Cartan matrix a_ij = (a_i^v, a_j) with
// symmetrizer d_i, (a_i, a_i) = 2 d_i and short roots of length 2.
//
// Roots are integer vectors in the simple-root basis.  Positive roots take
// indices 0..N-1 ordered by height; the negative of root k is k + N.
class RootSystem {
public:
    static std::shared_ptr<const RootSystem> build(char type, int rank);
    static std::shared_ptr<const RootSystem> fromCartan(char type, IMat cartan, IVec d);

    char type() const { return type_; }
    int rank() const { return rank_; }
    const IMat& cartan() const { return cartan_; }
    const IVec& dVector() const { return d_; }

    int numRoots() const { return static_cast<int>(roots_.size()); }
    int numPositive() const { return numPositive_; }
    const IVec& root(int idx) const { return roots_[idx]; }
    const std::vector<IVec>& roots() const { return roots_; }
    bool isPositive(int idx) const { return idx < numPositive_; }
    int negate(int idx) const { return idx < numPositive_ ? idx + numPositive_ : idx - numPositive_; }
    int simpleIndex(int i) const { return simple_[i]; }
    // -1 if v is not a root
    int indexOf(const IVec& v) const;

    long rootLength(int idx) const { return dRoot_[idx]; } // d_beta = (beta, beta) / 2
    long height(int idx) const;

    // bilinear form on the root lattice
    long pairRoots(const IVec& a, const IVec& b) const;
    // (lambda, beta) for a weight and a root-lattice vector
    long pairWeightRoot(const Weight& lambda, const IVec& beta) const;
    // (lambda, beta^v) for a root index
    long pairCoroot(const Weight& lambda, int idx) const;
    // root-lattice vector expressed in fundamental coordinates
    Weight rootToWeight(const IVec& beta) const;
    Weight rho() const { return Weight(rank_, 1); }

    IVec reflectRoot(int i, const IVec& beta) const;
    Weight reflectWeight(int i, const Weight& lambda) const;
    // s_beta on a weight, beta given by root index
    Weight reflectWeightBy(int idx, const Weight& lambda) const;

    // image of the simple reflection s_i on root indices
    const std::vector<int>& simplePermutation(int i) const { return simplePerm_[i]; }

    std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

private:
    RootSystem() = default;
    void enumerate();

    char type_ = 'A';
    int rank_ = 0;
    IMat cartan_;
    IVec d_;
    std::vector<IVec> roots_;
    int numPositive_ = 0;
    std::vector<int> simple_;
    std::vector<long> dRoot_;
    std::map<IVec, int> index_;
    std::vector<std::vector<int>> simplePerm_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

// Element of the Weyl group, stored as its permutation of the root list.
class WeylElement {
public:
    explicit WeylElement(RootSystemPtr rs);
    static WeylElement identity(RootSystemPtr rs) { return WeylElement(std::move(rs)); }
    static WeylElement simple(RootSystemPtr rs, int i);
    static WeylElement fromWord(RootSystemPtr rs, const std::vector<int>& word);
    static WeylElement reflection(RootSystemPtr rs, int rootIdx);
    static WeylElement longest(RootSystemPtr rs);

    const RootSystemPtr& system() const { return rs_; }
    int length() const;
    bool isIdentity() const { return length() == 0; }
    // reduced word, canonical; w = s_{w[0]} s_{w[1]} ...
    std::vector<int> word() const;

    int applyRoot(int idx) const { return perm_[idx]; }
    IVec applyLattice(const IVec& v) const;
    Weight applyWeight(const Weight& lambda) const;

    WeylElement inverse() const;
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm_ == b.perm_; }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
    friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.perm_ < b.perm_; }

    std::string toString() const;

private:
    RootSystemPtr rs_;
    std::vector<int> perm_;
};

std::vector<WeylElement> allWeylElements(const RootSystemPtr& rs);

// chi_{2 alpha} for every root alpha
class ToricPoint {
public:
    ToricPoint() = default;
    ToricPoint(RootSystemPtr rs, std::vector<ProjParam> entries);
    // negative roots filled by inversion symmetry
    static ToricPoint fromPositive(RootSystemPtr rs, const std::vector<ProjParam>& positive);
    // chi_{2 alpha} = prod_i c_i^{alpha_i}, c_i indexed by simple roots
    static ToricPoint fromCharacter(RootSystemPtr rs, const std::vector<LaurentScalar>& c);

    const RootSystemPtr& system() const { return rs_; }
    const ProjParam& at(int idx) const { return entries_[idx]; }
    ProjParam& at(int idx) { return entries_[idx]; }
    const std::vector<ProjParam>& entries() const { return entries_; }

    friend bool operator==(const ToricPoint& a, const ToricPoint& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const ToricPoint& a, const ToricPoint& b) { return !(a == b); }

private:
    RootSystemPtr rs_;
    std::vector<ProjParam> entries_;
};

struct Violation {
    std::string kind;
    std::vector<IVec> roots;
    std::string detail;
};

struct ValidationReport {
    long checked = 0;
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ToricPoint shiftedWeylOnToric(const WeylElement& w, const ToricPoint& chi);
ValidationReport toricValidate(const ToricPoint& chi, bool requireRegular);

// number of ways to write nu as a sum of positive roots
mpz_class kostantPartition(const RootSystem& rs, const IVec& nu);

struct ParabolicResult {
    WeylElement w;
    std::vector<int> positiveSystem; // root indices of w(R+)
};

// signs: +1, 0 or -1 per root index
ParabolicResult positiveSystemFromParabolic(const RootSystemPtr& rs, const std::vector<int>& signs);

// ---- type A view: weights as n-tuples modulo (1,...,1) ----
namespace typeA {

// index of e_i - e_j, 1-based i != j
int rootIndex(const RootSystem& rs, int i, int j);
// fundamental coordinates of the class of the tuple
Weight fromTuple(const std::vector<long>& lambda);
// representative with last entry 0
std::vector<long> toTuple(const Weight& c);
// [e_S], S a set of 1-based indices
Weight indicator(int n, const std::vector<int>& S);
// (lambda, e_i - e_j) = lambda_i - lambda_j
long pairDiff(const Weight& c, int i, int j);
// (lambda, mu) on classes, lambda and mu as tuples
mpq_class pairTuples(const std::vector<long>& a, const std::vector<long>& b);

} // namespace typeA

} // namespace qflag
