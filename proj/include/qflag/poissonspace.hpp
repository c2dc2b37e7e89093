#pragma once

#include "qflag/rootdata.hpp"

namespace qflag {

enum class PhiMode { Quantum, Classical };

// phi_alpha for every root alpha
class PhiParam {
public:
    PhiParam() = default;
    PhiParam(RootSystemPtr rs, std::vector<LaurentScalar> entries, PhiMode mode);
    // negative roots filled by antisymmetry
    static PhiParam fromPositive(RootSystemPtr rs, const std::vector<LaurentScalar>& positive,
                                 PhiMode mode);

    const RootSystemPtr& system() const { return rs_; }
    PhiMode mode() const { return mode_; }
    const LaurentScalar& at(int idx) const { return entries_[idx]; }
    const std::vector<LaurentScalar>& entries() const { return entries_; }

    friend bool operator==(const PhiParam& a, const PhiParam& b)
    {
        return a.mode_ == b.mode_ && a.entries_ == b.entries_;
    }

private:
    RootSystemPtr rs_;
    std::vector<LaurentScalar> entries_;
    PhiMode mode_ = PhiMode::Quantum;
};

enum class PoissonSpace { Fssorb, Circ, Quot, Zero, ZeroCirc };

PoissonSpace parsePoissonSpace(const std::string& name);
std::string toString(PoissonSpace s);

ValidationReport checkMembership(const PhiParam& phi, PoissonSpace space);

ToricPoint phiToToric(const PhiParam& phi);
PhiParam toricToPhi(const ToricPoint& chi);

struct ComponentInfo {
    std::vector<int> simples;   // 0-based simple indices
    std::vector<int> outsideS;  // members not in S
    std::vector<long> highestRoot;
    bool ok = true;
};

struct QuotientNormalization {
    WeylElement w;
    PhiParam normalized;
    std::vector<ComponentInfo> components;
    bool componentsOk = true;
};

QuotientNormalization normalizeQuotient(const PhiParam& phi);

// components of {e in simples \ S : phi_e != 1} union S, each checked for at
// most one vertex outside S with coefficient 1 in the component's highest root
std::vector<ComponentInfo> hermitianComponents(const PhiParam& phi, const std::vector<int>& S);

} // namespace qflag
