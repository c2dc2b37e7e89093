// qflag command line front end; reports on stdout, diagnostics on stderr
#include "qflag/batch.hpp"
#include "qflag/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <random>

using namespace qflag;
using io::json;

namespace {

// "1,0,-2" or "[1,0,-2]"
IVec parseInts(const std::string& text, const char* what)
{
    std::string s;
    for (char c : text)
        if (c != '[' && c != ']' && c != ' ') s += c;
    IVec v;
    if (s.empty()) return v;
    size_t pos = 0;
    while (pos <= s.size()) {
        const size_t end = s.find(',', pos);
        const std::string tok = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        try {
            size_t used = 0;
            v.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw InputError("BadArgument", std::string(what) + ": cannot read '" + text + "'");
        }
        if (end == std::string::npos) break;
        pos = end + 1;
    }
    return v;
}

Weight weightArg(const std::string& text, const RootSystem& rs, const char* what)
{
    Weight w = parseInts(text, what);
    if (static_cast<int>(w.size()) != rs.rank())
        throw InputError("BadArgument", std::string(what) + " needs " + std::to_string(rs.rank()) + " entries");
    return w;
}

struct Outcome {
    bool ok = true;
    json details;
};

// gamma tables may come wrapped in a report from `gamma from-chi`
json unwrapGamma(const json& j)
{
    if (j.is_object() && j.contains("details") && j["details"].contains("gamma")) return j["details"]["gamma"];
    return j;
}

json unwrapChi(const json& j)
{
    if (j.is_object() && j.contains("details") && j["details"].contains("chi")) return j["details"]["chi"];
    if (j.is_object() && j.contains("chi") && !j.contains("entries")) return j["chi"];
    return j;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"qflag: parameter spaces, web relations, scalar systems and category O calculators"};
    app.require_subcommand(1);
    unsigned seed = 1;
    app.add_option("--seed", seed, "seed for randomly sampled verification instances");

    std::string command;
    std::function<Outcome()> action;

    // ---- poisson ----
    auto* poisson = app.add_subcommand("poisson", "Poisson parameter spaces");
    poisson->require_subcommand(1);
    std::string ptype = "A", pspace, phiFile;
    int prank = 0;
    auto* pcheck = poisson->add_subcommand("check", "membership of phi in a parameter space");
    pcheck->add_option("--type", ptype, "root system type");
    pcheck->add_option("--rank", prank, "rank");
    pcheck->add_option("--space", pspace, "fssorb | circ | quot | zero | zeroCirc")->required();
    pcheck->add_option("--phi", phiFile, "PhiParam JSON")->required();
    pcheck->callback([&] {
        command = "poisson check";
        action = [&] {
            const json j = io::readJsonFile(phiFile);
            if (prank && j.contains("rank") && j["rank"] != prank) throw InputError("BadArgument", "--rank disagrees with the file");
            if (j.contains("type") && j["type"] != ptype && pcheck->count("--type"))
                throw InputError("BadArgument", "--type disagrees with the file");
            const PhiParam phi = io::phiFromJson(j, ptype.empty() ? 'A' : ptype[0], prank);
            const auto rep = checkMembership(phi, parsePoissonSpace(pspace));
            return Outcome{rep.ok(), {{"space", pspace}, {"report", io::toJson(rep)}}};
        };
    });
    auto* pnorm = poisson->add_subcommand("normalize", "Weyl normalization of a quotient-type phi");
    pnorm->add_option("--type", ptype, "root system type");
    pnorm->add_option("--rank", prank, "rank");
    pnorm->add_option("--phi", phiFile, "PhiParam JSON")->required();
    pnorm->callback([&] {
        command = "poisson normalize";
        action = [&] {
            const PhiParam phi = io::phiFromJson(io::readJsonFile(phiFile), ptype.empty() ? 'A' : ptype[0], prank);
            const auto q = normalizeQuotient(phi);
            return Outcome{q.componentsOk, io::toJson(q)};
        };
    });

    // ---- toric ----
    auto* toric = app.add_subcommand("toric", "toric points chi");
    toric->require_subcommand(1);
    std::string chiFile;
    bool regular = false;
    auto* tval = toric->add_subcommand("validate", "inversion, cocycle and optional regularity");
    tval->add_flag("--regular", regular, "also require chi in X_R°");
    tval->add_option("--chi", chiFile, "ToricPoint JSON")->required();
    tval->callback([&] {
        command = "toric validate";
        action = [&] {
            const json j = unwrapChi(io::readJsonFile(chiFile));
            const ToricPoint chi = io::toricFromJson(j);
            const bool classical = io::toricMode(j) == ScalarMode::Classical;
            auto rep = classical ? classicalValidate(chi) : toricValidate(chi, regular);
            if (classical && !regular)
                std::erase_if(rep.violations, [](const Violation& v) { return v.kind == "regularity"; });
            return Outcome{rep.ok(), io::toJson(rep)};
        };
    });

    // ---- webs ----
    auto* webs = app.add_subcommand("webs", "web relations");
    webs->require_subcommand(1);
    int wn = 0, maxSize = -1, sample = 0;
    std::string relation;
    auto* wver = webs->add_subcommand("verify", "verify web relations exactly");
    wver->add_option("--n", wn, "rank parameter n of sl_n")->required()->check(CLI::Range(1, 8));
    wver->add_option("--relation", relation, "one relation (default: all)");
    wver->add_option("--max-size", maxSize, "largest exterior power used");
    wver->add_option("--sample", sample, "check this many random parameter tuples per relation (0: all)");
    wver->callback([&] {
        command = "webs verify";
        action = [&] {
            std::vector<std::string> rels = relation.empty() ? relationNames() : std::vector<std::string>{relation};
            std::mt19937_64 rng(seed);
            std::vector<std::pair<std::string, std::vector<int>>> jobs;
            for (const auto& r : rels) {
                auto ps = relationParams(r, wn, maxSize < 0 ? wn : maxSize);
                if (sample > 0 && static_cast<size_t>(sample) < ps.size()) {
                    std::shuffle(ps.begin(), ps.end(), rng);
                    ps.resize(sample);
                }
                for (auto& p : ps) jobs.emplace_back(r, p);
            }
            std::vector<std::function<RelationReport()>> tasks;
            for (const auto& [r, p] : jobs) tasks.push_back([r = r, p = p, n = wn] { return verifyRelation(r, p, n); });
            const auto reps = runBatch(tasks);
            Outcome out;
            json arr = json::array();
            long failed = 0;
            for (const auto& r : reps) {
                failed += !r.ok;
                arr.push_back(io::toJson(r));
            }
            out.ok = failed == 0;
            out.details = {{"n", wn}, {"checked", reps.size()}, {"failed", failed}, {"reports", arr}};
            return out;
        };
    });

    // ---- classify ----
    std::string gammaFile, outFile;
    bool skipAxioms = false;
    auto* cls = app.add_subcommand("classify", "recover chi from a scalar system");
    cls->add_option("--gamma", gammaFile, "GammaTable JSON")->required();
    cls->add_option("--out", outFile, "write the recovered ToricPoint here");
    cls->add_flag("--skip-axioms", skipAxioms, "do not run the axiom verification first");
    cls->callback([&] {
        command = "classify";
        action = [&] {
            const ScalarSystem g = io::gammaFromJson(unwrapGamma(io::readJsonFile(gammaFile)));
            const auto res = classify(g, !skipAxioms);
            if (!outFile.empty()) io::writeJsonFile(outFile, io::toJson(res.chi, res.mode));
            return Outcome{true, io::toJson(res)};
        };
    });

    // ---- gamma ----
    auto* gamma = app.add_subcommand("gamma", "scalar systems");
    gamma->require_subcommand(1);
    long window = 2;
    bool verify = false;
    auto* gfrom = gamma->add_subcommand("from-chi", "scalar system of a regular toric point");
    gfrom->add_option("--chi", chiFile, "ToricPoint JSON")->required();
    gfrom->add_option("--window", window, "fundamental coordinates in [-W, W]")->check(CLI::Range(0, 6));
    gfrom->add_option("--out", outFile, "write the GammaTable here");
    gfrom->add_flag("--verify", verify, "run the axiom verification on the result");
    gfrom->callback([&] {
        command = "gamma from-chi";
        action = [&] {
            const json j = unwrapChi(io::readJsonFile(chiFile));
            const ToricPoint chi = io::toricFromJson(j);
            const ScalarSystem g = gammaFromToric(chi, weightWindow(chi.system()->rank() + 1, window), io::toricMode(j));
            const json table = io::toJson(g);
            if (!outFile.empty()) io::writeJsonFile(outFile, table);
            Outcome out{true, {{"window", window}, {"entries", g.entries.size()}}};
            if (verify) {
                const auto rep = verifyScalarAxioms(g);
                out.ok = rep.ok();
                out.details["axioms"] = io::toJson(rep);
            }
            if (outFile.empty()) out.details["gamma"] = table;
            return out;
        };
    });

    // ---- cato ----
    auto* cato = app.add_subcommand("cato", "chi-shifted category O calculators");
    cato->require_subcommand(1);
    std::string lambdaText, modeText, nuText, muText, wText, psText, convText = "transport";
    long setRadius = -1;
    int eps = 1;

    auto* cdom = cato->add_subcommand("dominance", "dominance, simplicity and semisimplicity tests");
    cdom->add_option("--chi", chiFile, "ToricPoint JSON")->required();
    cdom->add_option("--lambda", lambdaText, "weight in fundamental coordinates, e.g. 1,0")->required();
    cdom->add_option("--mode", modeText,
                     "dominant | antidominant | simple | projectiveSufficient | semisimpleCategory | stronglyRegular")
        ->required();
    cdom->add_option("--set-radius", setRadius, "stronglyRegular: test lambda plus all weights in [-R, R]");
    cdom->callback([&] {
        command = "cato dominance";
        action = [&] {
            ShiftedWeight w;
            w.twist = io::toricFromJson(unwrapChi(io::readJsonFile(chiFile)));
            const auto& rs = *w.twist.system();
            w.integral = weightArg(lambdaText, rs, "--lambda");
            std::vector<Weight> set;
            if (setRadius >= 0) {
                if (rs.type() != 'A') throw InputError("BadArgument", "--set-radius needs type A");
                auto win = weightWindow(rs.rank() + 1, setRadius);
                set.assign(win.begin(), win.end());
                set.push_back(w.integral);
            }
            const auto mode = parseDominanceMode(modeText);
            const auto res = dominanceTest(w, mode, set);
            json d = io::toJson(res, rs);
            d["mode"] = toString(mode);
            d["lambda"] = w.integral;
            // a false answer is the result of the test, not a violation
            return Outcome{true, d};
        };
    });

    auto* cshap = cato->add_subcommand("shapovalov", "factor list of the Shapovalov determinant");
    cshap->add_option("--nu", nuText, "nu in simple-root coordinates, e.g. 1,1")->required();
    cshap->add_option("--chi", chiFile, "ToricPoint JSON")->required();
    cshap->add_option("--positive-system", psText, "positive-root indices of R_0+ (default: R+)");
    cshap->add_option("--lambda", lambdaText, "also evaluate the factors at this Verma weight");
    cshap->callback([&] {
        command = "cato shapovalov";
        action = [&] {
            const ToricPoint chi = io::toricFromJson(unwrapChi(io::readJsonFile(chiFile)));
            const auto& rs = *chi.system();
            const IVec nu = weightArg(nuText, rs, "--nu");
            std::vector<int> ps;
            if (psText.empty()) {
                for (int k = 0; k < rs.numPositive(); ++k) ps.push_back(k);
            } else {
                for (long k : parseInts(psText, "--positive-system")) {
                    if (k < 0 || k >= rs.numRoots()) throw InputError("BadArgument", "root index out of range");
                    ps.push_back(static_cast<int>(k));
                }
            }
            const auto fs = shapovalovDeterminant(nu, chi, ps);
            json d{{"nu", nu}, {"factors", io::toJson(fs, rs)}};
            if (!lambdaText.empty()) {
                const Weight lam = weightArg(lambdaText, rs, "--lambda");
                json vals = json::array();
                for (const auto& f : fs) vals.push_back(evaluateFactor(f, chi, lam).toString());
                d["values"] = vals;
                d["product"] = evaluateFactors(fs, chi, lam).toString();
            }
            return Outcome{true, d};
        };
    });

    auto* cinv = cato->add_subcommand("invariant-coeff", "invariant coefficient c_{mu,nu;w,eps}(chi;lambda)");
    cinv->add_option("--mu", muText, "mu in fundamental coordinates")->required();
    cinv->add_option("--nu", nuText, "nu in fundamental coordinates")->required();
    cinv->add_option("--w", wText, "reduced word of 1-based simple indices (empty: identity)");
    cinv->add_option("--eps", eps, "1-based simple root")->required();
    cinv->add_option("--chi", chiFile, "ToricPoint JSON")->required();
    cinv->add_option("--lambda", lambdaText, "weight in fundamental coordinates")->required();
    cinv->add_option("--convention", convText, "transport | printed");
    cinv->callback([&] {
        command = "cato invariant-coeff";
        action = [&] {
            const ToricPoint chi = io::toricFromJson(unwrapChi(io::readJsonFile(chiFile)));
            const auto& rsp = chi.system();
            std::vector<int> word;
            for (long s : parseInts(wText, "--w")) {
                if (s < 1 || s > rsp->rank()) throw InputError("BadArgument", "--w letter out of range");
                word.push_back(static_cast<int>(s - 1));
            }
            TwistConvention conv;
            if (convText == "transport") {
                conv = TwistConvention::Transport;
            } else if (convText == "printed") {
                conv = TwistConvention::Printed;
            } else {
                throw InputError("BadArgument", "--convention must be transport or printed");
            }
            const auto w = WeylElement::fromWord(rsp, word);
            const auto c = invariantCoefficient(weightArg(muText, *rsp, "--mu"), weightArg(nuText, *rsp, "--nu"), w,
                                                eps - 1, chi, weightArg(lambdaText, *rsp, "--lambda"), conv);
            return Outcome{true, {{"value", c.toString()}, {"w", w.word()}, {"convention", convText}}};
        };
    });

    // ---- identity ----
    auto* ident = app.add_subcommand("identity", "q-identities");
    ident->require_subcommand(1);
    long kmax = 6, mrange = 6;
    auto* ifrac = ident->add_subcommand("fraction", "fraction decomposition identity sweep");
    ifrac->add_option("--kmax", kmax, "0 <= k, l <= K")->check(CLI::Range(0, 30));
    ifrac->add_option("--mrange", mrange, "-M <= m <= M")->check(CLI::Range(0, 30));
    ifrac->callback([&] {
        command = "identity fraction";
        action = [&] {
            long checked = 0, skipped = 0;
            json failures = json::array();
            for (long k = 0; k <= kmax; ++k)
                for (long l = 0; l <= kmax; ++l)
                    for (long m = -mrange; m <= mrange; ++m) {
                        try {
                            if (!verifyFractionIdentity(k, l, m)) failures.push_back({k, l, m});
                            ++checked;
                        } catch (const Error& e) {
                            if (e.code() != "ZeroDenominator") throw;
                            ++skipped;
                        }
                    }
            return Outcome{failures.empty(),
                           {{"checked", checked}, {"skippedInadmissible", skipped}, {"failures", failures}}};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    json report{{"command", command}};
    int code = 0;
    try {
        Outcome out = action();
        report["ok"] = out.ok;
        report["details"] = std::move(out.details);
        code = out.ok ? 0 : 1;
    } catch (const InputError& e) {
        std::cerr << "qflag: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        report["ok"] = false;
        report["details"] = {{"error", e.code()}, {"message", e.what()}};
        code = 1;
    } catch (const std::exception& e) {
        std::cerr << "qflag: " << e.what() << '\n';
        return 2;
    }
    report["elapsedMillis"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::cout << report.dump(2) << '\n';
    return code;
}
