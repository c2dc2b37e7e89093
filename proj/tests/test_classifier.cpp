#include "qflag/classifier.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace qflag;
using qflag::testing::qp;

namespace {

const LaurentScalar q = LaurentScalar::q();

// product formula, evaluated directly
LaurentScalar productOracle(const ToricPoint& chi, IndexSet S, IndexSet T, const Weight& lambda)
{
    const auto& rs = *chi.system();
    LaurentScalar r(1);
    for (int i : indexList(S))
        for (int j : indexList(T)) {
            const long p = typeA::pairDiff(lambda, i, j);
            r *= bracketRatio(p - 1, p, chi.at(typeA::rootIndex(rs, i, j)));
        }
    return r;
}

void fillSingleton(ScalarSystem& g, const Weight& lambda, int i, int j, const LaurentScalar& v)
{
    g.entries[{indexSet({i}), indexSet({j}), lambda}] = v;
}

} // namespace

TEST_CASE("index sets")
{
    CHECK(indexSet({1, 3}) == 0b101u);
    CHECK(indexList(0b1010) == std::vector<int>{2, 4});
    CHECK_THROWS_AS(indexSet({2, 2}), InputError);
    CHECK_THROWS_AS(indexSet({0}), InputError);
    CHECK(weightWindow(3, 1).size() == 9);
    CHECK(weightWindow(4, 2).size() == 125);
    CHECK((parseScalarMode("classical") == ScalarMode::Classical));
}

TEST_CASE("gammaFromToric matches the product formula")
{
    auto a2 = RootSystem::build('A', 2);
    auto chi = ToricPoint::fromCharacter(a2, {q + 2, LaurentScalar(3) * qp(-1)});
    auto g = gammaFromToric(chi, weightWindow(3, 1));
    // 12 ordered pairs of disjoint nonempty subsets of {1,2,3}
    CHECK(g.entries.size() == 12 * 9);
    for (const auto& [k, v] : g.entries) CHECK(v == productOracle(chi, k.S, k.T, k.lambda));
    auto rep = verifyScalarAxioms(g);
    CHECK(rep.ok());
    CHECK(rep.total().passed > 0);
    CHECK(rep.total().failed == 0);
    for (const char* a : {"i", "ii", "iii", "iv", "v", "vi", "singleRight", "translation", "nonzero"})
        CHECK(rep.perAxiom.count(a));
}

TEST_CASE("phi = 1 gives gamma(i+1, i) = q")
{
    for (int n = 2; n <= 4; ++n) {
        auto rs = RootSystem::build('A', n - 1);
        std::vector<ProjParam> inf(rs->numPositive(), ProjParam::infinity());
        auto chi = ToricPoint::fromPositive(rs, inf);
        auto g = gammaFromToric(chi, weightWindow(n, 1));
        for (const auto& lam : g.window)
            for (int i = 1; i < n; ++i) CHECK(*g.find(indexSet({i + 1}), indexSet({i}), lam) == q);
        CHECK(verifyScalarAxioms(g).ok());
        CHECK(classify(g).chi == chi);
    }
}

TEST_CASE("classification round trip")
{
    std::mt19937 rng(31);
    for (int n = 2; n <= 3; ++n) {
        auto rs = RootSystem::build('A', n - 1);
        for (int it = 0; it < 6; ++it) {
            auto chi = qflag::testing::randomRegularPoint(rs, rng, it % 2 == 1);
            auto g = gammaFromToric(chi, weightWindow(n, 2));
            auto res = classify(g);
            CHECK(res.chi == chi);
            REQUIRE(res.axioms);
            CHECK(res.axioms->ok());
            CHECK(res.multiplicativity.ok());
            CHECK(res.reconstructed == static_cast<long>(g.entries.size()));
            CHECK(res.pairs.size() == static_cast<size_t>(n * (n - 1) / 2));
        }
    }
}

TEST_CASE("perturbed systems are rejected")
{
    auto a2 = RootSystem::build('A', 2);
    auto chi = ToricPoint::fromCharacter(a2, {q + 2, LaurentScalar(3)});
    auto g = gammaFromToric(chi, weightWindow(3, 1));
    const Weight lam{0, 0};
    auto& v = g.entries.at({indexSet({1}), indexSet({2}), lam});
    v = v * 2;
    auto rep = verifyScalarAxioms(g);
    CHECK(!rep.ok());
    CHECK(rep.perAxiom.at("v").failed > 0);
    CHECK(rep.perAxiom.at("i").failed > 0);
    try {
        classify(g);
        FAIL("classify accepted a perturbed system");
    } catch (const Error& e) {
        CHECK(e.code() == "AxiomFailure");
    }
    // without the axiom check the sequence for (1,2) is no longer of bracket form
    try {
        classify(g, false);
        FAIL("classify accepted a perturbed system");
    } catch (const Error& e) {
        CHECK((e.code() == "RecurrenceViolated" || e.code() == "InconsistentSequence"));
    }
}

TEST_CASE("resonant parameter is not regular")
{
    // n = 2, x_12 = q^2: gamma(1,2;p) = [p-1; q^2]/[p; q^2] on p >= 1
    ScalarSystem g;
    g.n = 2;
    const ProjParam x = ProjParam::finite(qp(2));
    for (long p = 1; p <= 4; ++p) {
        const Weight lam{p};
        g.window.insert(lam);
        fillSingleton(g, lam, 1, 2, bracketRatio(p - 1, p, x));
        fillSingleton(g, lam, 2, 1, bracketRatio(-p - 1, -p, x.inverted()));
    }
    try {
        classify(g, false);
        FAIL("classify accepted x = q^2");
    } catch (const Error& e) {
        CHECK(e.code() == "NotRegular");
    }
}

TEST_CASE("solveProjective")
{
    const ProjParam x = ProjParam::finite(q + 4);
    std::map<long, LaurentScalar> z;
    for (long p = -2; p <= 2; ++p) z[p] = bracketRatio(p - 1, p, x);
    auto sol = solveProjective(z, ScalarMode::Quantum);
    CHECK(sol.x == x);
    CHECK(sol.regular);

    std::map<long, LaurentScalar> inf;
    for (long p = 0; p <= 2; ++p) inf[p] = q;
    CHECK(solveProjective(inf, ScalarMode::Quantum).x == ProjParam::zero());

    auto broken = z;
    broken[0] = broken[0] + 1;
    CHECK_THROWS_AS(solveProjective(broken, ScalarMode::Quantum), Error);
    std::map<long, LaurentScalar> gap{{0, q}, {2, q}};
    CHECK_THROWS_AS(solveProjective(gap, ScalarMode::Quantum), InputError);

    // classical: z_n = (x + n - 1)/(x + n)
    const LaurentScalar c(mpq_class(1, 3));
    std::map<long, LaurentScalar> zc;
    for (long p = -1; p <= 2; ++p) zc[p] = (c + p - 1) / (c + p);
    auto cs = solveProjective(zc, ScalarMode::Classical);
    CHECK(cs.x == ProjParam::finite(c));
    CHECK(cs.regular);
    std::map<long, LaurentScalar> zi;
    for (long p = 1; p <= 3; ++p) zi[p] = LaurentScalar(p + 1) / LaurentScalar(p + 2);
    CHECK(!solveProjective(zi, ScalarMode::Classical).regular);
}

TEST_CASE("classical round trip")
{
    auto a2 = RootSystem::build('A', 2);
    const LaurentScalar x12(mpq_class(1, 3)), x23(mpq_class(2, 5));
    std::vector<ProjParam> pos(3);
    pos[typeA::rootIndex(*a2, 1, 2)] = ProjParam::finite(x12);
    pos[typeA::rootIndex(*a2, 2, 3)] = ProjParam::finite(x23);
    pos[typeA::rootIndex(*a2, 1, 3)] = ProjParam::finite(x12 + x23);
    auto x = classicalFromPositive(a2, pos);
    CHECK(classicalValidate(x).ok());
    CHECK(x.at(typeA::rootIndex(*a2, 2, 1)) == ProjParam::finite(-x12));
    auto g = gammaFromToric(x, weightWindow(3, 2), ScalarMode::Classical);
    CHECK((g.mode == ScalarMode::Classical));
    auto res = classify(g);
    CHECK(res.chi == x);
    CHECK(res.axioms->ok());

    auto bad = pos;
    bad[typeA::rootIndex(*a2, 1, 3)] = ProjParam::finite(x12);
    auto rep = classicalValidate(classicalFromPositive(a2, bad));
    REQUIRE(!rep.ok());
    CHECK(rep.violations.front().kind == "additivity");

    auto integral = pos;
    integral[typeA::rootIndex(*a2, 1, 2)] = ProjParam::finite(LaurentScalar(2));
    integral[typeA::rootIndex(*a2, 1, 3)] = ProjParam::finite(LaurentScalar(2) + x23);
    rep = classicalValidate(classicalFromPositive(a2, integral));
    REQUIRE(!rep.ok());
    CHECK(rep.violations.front().kind == "regularity");

    // x = infinity on every root gives gamma = 1
    std::vector<ProjParam> inf(3, ProjParam::infinity());
    auto gi = gammaFromToric(classicalFromPositive(a2, inf), weightWindow(3, 1), ScalarMode::Classical);
    for (const auto& [k, v] : gi.entries) CHECK(v.isOne());
}

TEST_CASE("singleton expansion")
{
    auto a3 = RootSystem::build('A', 3);
    auto chi = ToricPoint::fromCharacter(a3, {q + 2, LaurentScalar(3), qp(-1) * 5});
    const auto window = weightWindow(4, 1);
    auto g = gammaFromToric(chi, window);
    auto singles = restrictToSingletons(g);
    CHECK(singles.size() == 12 * window.size());
    auto back = expandGamma(singles, 4, window);
    CHECK(back.entries == g.entries);

    auto broken = singles;
    broken.begin()->second = broken.begin()->second * 3;
    try {
        expandGamma(broken, 4, window);
        FAIL("expandGamma accepted inconsistent singletons");
    } catch (const Error& e) {
        CHECK(e.code() == "InconsistentSingletons");
    }
    auto missing = singles;
    missing.erase(missing.begin());
    CHECK_THROWS_AS(expandGamma(missing, 4, window), Error);
}
