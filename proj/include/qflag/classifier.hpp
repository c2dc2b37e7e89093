#pragma once

#include "qflag/rootdata.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qflag {

enum class ScalarMode { Quantum, Classical };

ScalarMode parseScalarMode(const std::string& s);
std::string toString(ScalarMode m);

// subsets of {1..n} as bitmasks, bit i-1 for index i
using IndexSet = unsigned;

IndexSet indexSet(const std::vector<int>& elems);
std::vector<int> indexList(IndexSet s);

struct GammaKey {
    IndexSet S = 0;
    IndexSet T = 0;
    Weight lambda;
    auto operator<=>(const GammaKey&) const = default;
};

struct ScalarSystem {
    int n = 0;
    ScalarMode mode = ScalarMode::Quantum;
    std::set<Weight> window;
    std::map<GammaKey, LaurentScalar> entries;

    const LaurentScalar* find(IndexSet S, IndexSet T, const Weight& lambda) const;
};

// all weights of sl_n with fundamental coordinates in [-radius, radius]
std::set<Weight> weightWindow(int n, long radius);

// quantum: chi_{2(e_i-e_j)} on the root e_i - e_j
// classical: the root entry holds x_ij = chi(e_i - e_j), with x_ji = -x_ij
ScalarSystem gammaFromToric(const ToricPoint& chi, const std::set<Weight>& window,
                            ScalarMode mode = ScalarMode::Quantum);

// classical counterpart of toricValidate: x_ji = -x_ij, x_ij + x_jk = x_ik, x_ij not in Z
ValidationReport classicalValidate(const ToricPoint& x);
// classical point from the positive entries x_ij, i < j
ToricPoint classicalFromPositive(RootSystemPtr rs, const std::vector<ProjParam>& positive);

struct AxiomViolation {
    std::string axiom;
    IndexSet S = 0, T = 0, U = 0;
    int i = 0, j = 0, k = 0;
    Weight lambda;
    std::string detail;
};

struct AxiomCount {
    long passed = 0, failed = 0, skipped = 0;
};

struct AxiomReport {
    std::map<std::string, AxiomCount> perAxiom;
    std::vector<AxiomViolation> violations;
    AxiomCount total() const;
    bool ok() const { return violations.empty(); }
};

// axioms i..vi plus the derived checks "singleRight" and "translation"
AxiomReport verifyScalarAxioms(const ScalarSystem& gamma);

// x with z_n = [n-1;x]/[n;x] (quantum) or (x+n-1)/(x+n) (classical)
struct ProjectiveSolution {
    ProjParam x;
    bool regular = true; // x not in q^{2Z} (resp. Z)
};

ProjectiveSolution solveProjective(const std::map<long, LaurentScalar>& z, ScalarMode mode);

struct PairCertificate {
    int i = 0, j = 0;
    ProjParam x;
    long minPairing = 0, maxPairing = 0;
    long samples = 0;
};

struct ClassificationResult {
    ScalarMode mode = ScalarMode::Quantum;
    ToricPoint chi;
    std::vector<PairCertificate> pairs;
    ValidationReport multiplicativity;
    std::optional<AxiomReport> axioms;
    long reconstructed = 0; // entries compared against gammaFromToric(chi)
};

// errors: AxiomFailure, NotMultiplicative, NotRegular, InconsistentSequence, RecurrenceViolated
ClassificationResult classify(const ScalarSystem& gamma, bool checkAxioms = true);

struct SingletonKey {
    int i = 0, j = 0;
    Weight lambda;
    auto operator<=>(const SingletonKey&) const = default;
};

// product-formula extension; InconsistentSingletons on bad or missing data
ScalarSystem expandGamma(const std::map<SingletonKey, LaurentScalar>& singletons, int n,
                         const std::set<Weight>& window, ScalarMode mode = ScalarMode::Quantum);
std::map<SingletonKey, LaurentScalar> restrictToSingletons(const ScalarSystem& gamma);

} // namespace qflag
