#pragma once

#include "qflag/rootdata.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qflag {

// lambda in P together with the toric twist chi
struct ShiftedWeight {
    Weight integral;
    ToricPoint twist;
};

// ---- integral roots and the shifted dot action ----

struct IntegralRoots {
    std::vector<int> roots;                // R_chi, all signs
    std::vector<WeylElement> reflections;  // s_alpha, alpha in R_chi positive
    std::vector<int> simple;               // simple roots of R_chi cap R+
};

IntegralRoots integralRootsOfParam(const ToricPoint& chi);

// c with chi_{2 alpha} = q_alpha^{2c}; NonIntegralShift otherwise
long integralShift(const ToricPoint& chi, int rootIdx);

// s_alpha ._chi lambda = lambda - ((lambda + rho, alpha^v) + c_alpha) alpha
ShiftedWeight shiftedReflection(int rootIdx, const ShiftedWeight& lambda);
// w must lie in W_chi; NotInSubgroup otherwise
ShiftedWeight shiftedDotAction(const WeylElement& w, const ShiftedWeight& lambda);
// plain dot action w(lambda + rho) - rho
Weight dotAction(const WeylElement& w, const Weight& lambda);

// ---- dominance ----

enum class DominanceMode {
    Dominant,
    Antidominant,
    Simple,
    ProjectiveSufficient,
    SemisimpleCategory,
    StronglyRegular
};

DominanceMode parseDominanceMode(const std::string& s);
std::string toString(DominanceMode m);

struct DominanceWitness {
    int root = 0;
    Weight lambda;
    long exponent = 0; // q^{(lambda+rho,2 alpha)} chi_{2 alpha} = q_alpha^{2 exponent}
};

struct DominanceResult {
    bool holds = true;
    std::vector<DominanceWitness> witnesses;
    std::optional<ValidationReport> category; // SemisimpleCategory only
};

// lambdaSet is only read in StronglyRegular mode; empty means {lambda.integral}
DominanceResult dominanceTest(const ShiftedWeight& lambda, DominanceMode mode,
                              const std::vector<Weight>& lambdaSet = {});

// ---- Shapovalov determinant ----

struct ShapovalovFactor {
    int root = 0;
    long level = 0;
    mpz_class exponent;
    bool flipped = false; // root outside the positive system R_0+
};

std::vector<ShapovalovFactor> shapovalovDeterminant(const IVec& nu, const ToricPoint& chi,
                                                    const std::vector<int>& positiveSystem);
// value of one factor at the Verma weight lambda (without the exponent)
LaurentScalar evaluateFactor(const ShapovalovFactor& f, const ToricPoint& chi, const Weight& lambda);
LaurentScalar evaluateFactors(const std::vector<ShapovalovFactor>& fs, const ToricPoint& chi,
                              const Weight& lambda);

// ---- invariant coefficient ----

enum class TwistConvention { Transport, Printed };

// ([(nu,e^v)]/[(mu+nu,e^v)]) [(mu+nu+L,e^v); chi_{w^-1(2e)}] / [(nu+L,e^v); chi_{w^-1(2e)}]
// Transport: L = w . lambda (agrees with c_w(chi;lambda) = c_1(w.chi; w(lambda)))
// Printed:   L = w^-1 . lambda
LaurentScalar invariantCoefficient(const Weight& mu, const Weight& nu, const WeylElement& w, int eps,
                                   const ToricPoint& chi, const Weight& lambda,
                                   TwistConvention conv = TwistConvention::Transport);

// ---- sl2 deformed algebra on M_chi(lambda) ----

enum class Sl2Letter { E, F, K };

struct Sl2VermaElement {
    std::map<long, LaurentScalar> coefficients; // n -> coefficient of aF^n (x) 1
    long highestWeightExponent = 0;             // (lambda, eps^v)
    ProjParam chiValue;                         // chi_{2 eps}
};

Sl2VermaElement sl2Vacuum(long a, const ProjParam& chi);
// word applied right to left
Sl2VermaElement sl2NormalOrder(const std::vector<Sl2Letter>& word, const Sl2VermaElement& v);
std::vector<Sl2Letter> parseSl2Word(const std::string& s);

// P(aE^n aF^n) at weight a, by rewriting
LaurentScalar sl2Pairing(long n, long a, const ProjParam& chi);
// chi = 0 values: by rewriting with aF* = aE, and the closed form
// (-1)^n q^{-n(n-1)} [n]! / (q - q^-1)^n
LaurentScalar sl2DegenerateNorm(long n);
LaurentScalar sl2DegenerateNormClosed(long n);

struct ShapovalovComparison {
    long n = 0;
    bool constantRatio = true;    // det / factors independent of lambda
    LaurentScalar unit;           // that ratio
    bool unitIsMonomial = false;  // rational * q^e
    std::vector<long> samples;    // weights a used
};

// brute-force determinant against the factor list for sl2, nu = n alpha
ShapovalovComparison compareShapovalovSl2(long n, const ProjParam& chi, const std::vector<long>& samples);

// ---- L_k (x) M_chi(lambda) for sl2 ----

// v_l (x) aF^n (x) 1 keyed by (l, n); L_k has E v_l = [k+1-l] v_{l-1},
// F v_l = [l+1] v_{l+1}, K v_l = q^{k-2l} v_l
struct Sl2TensorVector {
    long k = 0;
    long a = 0;
    ProjParam chi;
    std::map<std::pair<long, long>, LaurentScalar> terms;
};

// Delta(aE) = E (x) 1 + K (x) aE, Delta(aF) = FK (x) 1 + K (x) aF
Sl2TensorVector sl2TensorApply(Sl2Letter g, const Sl2TensorVector& v);
// highest weight vector with v_0 = v_l, solved from aE-annihilation
Sl2TensorVector sl2HighestWeightVector(long k, long l, long a, const ProjParam& chi);

// ---- Lambda^1 (x) M_chi(lambda) for sl_n ----

struct LambdaOneHwVector {
    int i = 1;
    // x_i (x) 1 + lower * x_{i-1} (x) aF_{i-1} (x) 1
    LaurentScalar lower;
    LaurentScalar closed; // -q^-1 (q - q^-1) / (chi_{2(e_{i-1}-e_i)} q^{(lambda,2(e_{i-1}-e_i))} - 1)
    bool matches = true;
};

LambdaOneHwVector tensorHighestWeightVector(const ToricPoint& chi, const Weight& lambda, int i);
std::vector<LambdaOneHwVector> tensorHighestWeightVectors(const ToricPoint& chi, const Weight& lambda);

// gamma(i+1, i; lambda) from the two composites
// M(lambda + e_i + e_{i+1}) -> Lambda^1 (x) Lambda^1 (x) M(lambda) and M' M
LaurentScalar gammaViaVerma(const ToricPoint& chi, const Weight& lambda, int i);
// bracketRatio((lambda, e_{i+1}-e_i) - 1, (lambda, e_{i+1}-e_i), chi_{2(e_{i+1}-e_i)})
LaurentScalar gammaClosed(const ToricPoint& chi, const Weight& lambda, int i);

// ---- S(x) ----

using ScalarMatrix = std::vector<std::vector<LaurentScalar>>; // [row][col]

// S(x) v_l = (-1)^l q^{k-l} prod_{j<l} [1+k-l-j; x] / [-j; x] v_{k-l}
ScalarMatrix sOperator(const ProjParam& x, long k);

struct SDiagramEntry {
    long l = 0;
    LaurentScalar composite; // coefficient read off the bottom-left path
    LaurentScalar operatorValue; // S(x) entry at (k-l, l)
    bool ok = true;
};

struct SDiagramReport {
    long k = 0, a = 0, c = 0;
    std::vector<SDiagramEntry> entries;
    bool ok() const;
};

// sl2, chi_{2 eps} = q^{2c}, Verma weight a; needs a + c >= k
SDiagramReport sDiagramCheck(long k, long a, long c);

// ---- q-identities ----

// sum_n (-1)^n ([m-l]/[m-n]) qbin(k,l-n) qbin(k+n,k) == (-1)^l qbin(m+k,l) / qbin(m,l)
bool verifyFractionIdentity(long k, long l, long m);

} // namespace qflag
