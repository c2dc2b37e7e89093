#include "qflag/io.hpp"

#include <fstream>
#include <sstream>

namespace qflag::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError("BadJson", what); }

const json& need(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string scalarText(const json& j)
{
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long>());
    bad("scalar must be a string or an integer");
}

IVec intVector(const json& j, const char* what)
{
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    IVec v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) bad(std::string(what) + " must hold integers");
        v.push_back(x.get<long>());
    }
    return v;
}

RootSystemPtr systemFrom(const json& j, char type, int rank)
{
    if (j.contains("type")) {
        const auto t = j.at("type");
        if (!t.is_string() || t.get<std::string>().size() != 1) bad("type must be a single letter");
        type = t.get<std::string>()[0];
    }
    if (j.contains("rank")) {
        if (!j.at("rank").is_number_integer()) bad("rank must be an integer");
        rank = j.at("rank").get<int>();
    }
    if (!type || rank < 1) bad("type and rank are required");
    return RootSystem::build(type, rank);
}

int rootFrom(const RootSystem& rs, const json& j)
{
    IVec r = intVector(j, "root");
    if (static_cast<int>(r.size()) != rs.rank()) bad("root has wrong length");
    const int idx = rs.indexOf(r);
    if (idx < 0) bad("not a root: " + j.dump());
    return idx;
}

IndexSet setFrom(const json& j)
{
    IVec v = intVector(j, "index set");
    return indexSet(std::vector<int>(v.begin(), v.end()));
}

json setJson(IndexSet s) { return json(indexList(s)); }

} // namespace

json readJsonFile(const std::string& path)
{
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parseJson(ss.str());
}

json parseJson(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        bad(e.what());
    }
}

void writeJsonFile(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out) throw InputError("BadPath", "cannot write " + path);
    out << j.dump(2) << '\n';
}

json toJson(const LaurentScalar& s) { return s.toString(); }

json toJson(const ProjParam& p) { return {{"x", p.x().toString()}, {"y", p.y().toString()}}; }

json weightJson(const IVec& w) { return json(w); }

json toJson(const ToricPoint& chi, ScalarMode mode)
{
    const auto& rs = *chi.system();
    json j;
    j["type"] = std::string(1, rs.type());
    j["rank"] = rs.rank();
    if (mode == ScalarMode::Classical) j["mode"] = "classical";
    json es = json::array();
    for (int k = 0; k < rs.numPositive(); ++k)
        es.push_back({{"root", rs.root(k)}, {"x", chi.at(k).x().toString()}, {"y", chi.at(k).y().toString()}});
    j["entries"] = es;
    return j;
}

ScalarMode toricMode(const json& j)
{
    if (j.is_object() && j.contains("mode")) {
        if (!j.at("mode").is_string()) bad("mode must be a string");
        return parseScalarMode(j.at("mode").get<std::string>());
    }
    return ScalarMode::Quantum;
}

ToricPoint toricFromJson(const json& j)
{
    auto rs = systemFrom(j, 0, 0);
    const ScalarMode mode = toricMode(j);
    const auto& es = need(j, "entries");
    if (!es.is_array()) bad("entries must be an array");
    std::vector<std::optional<ProjParam>> all(rs->numRoots());
    for (const auto& e : es) {
        const int idx = rootFrom(*rs, need(e, "root"));
        ProjParam p(LaurentScalar::parse(scalarText(need(e, "x"))), LaurentScalar::parse(scalarText(need(e, "y"))));
        if (all[idx] && *all[idx] != p) bad("root listed twice with different values");
        all[idx] = p;
    }
    std::vector<ProjParam> out(rs->numRoots());
    for (int k = 0; k < rs->numRoots(); ++k) {
        if (all[k]) {
            out[k] = *all[k];
            continue;
        }
        const auto& o = all[rs->negate(k)];
        if (!o) bad("no value for root " + json(rs->root(k)).dump());
        out[k] = mode == ScalarMode::Quantum ? o->inverted() : ProjParam(-o->x(), o->y());
    }
    return ToricPoint(rs, std::move(out));
}

json toJson(const PhiParam& phi)
{
    const auto& rs = *phi.system();
    json j;
    j["type"] = std::string(1, rs.type());
    j["rank"] = rs.rank();
    j["mode"] = phi.mode() == PhiMode::Quantum ? "quantum" : "classical";
    json es = json::array();
    for (int k = 0; k < rs.numPositive(); ++k) es.push_back({{"root", rs.root(k)}, {"value", phi.at(k).toString()}});
    j["entries"] = es;
    return j;
}

PhiParam phiFromJson(const json& j, char type, int rank)
{
    auto rs = systemFrom(j, type, rank);
    PhiMode mode = PhiMode::Quantum;
    if (j.contains("mode")) {
        const auto m = j.at("mode");
        if (m == "classical") {
            mode = PhiMode::Classical;
        } else if (m != "quantum") {
            bad("mode must be quantum or classical");
        }
    }
    const auto& es = need(j, "entries");
    if (!es.is_array()) bad("entries must be an array");
    std::vector<std::optional<LaurentScalar>> all(rs->numRoots());
    for (const auto& e : es) {
        const int idx = rootFrom(*rs, need(e, "root"));
        all[idx] = LaurentScalar::parse(scalarText(need(e, "value")));
    }
    std::vector<LaurentScalar> out(rs->numRoots());
    for (int k = 0; k < rs->numRoots(); ++k) {
        if (all[k]) {
            out[k] = *all[k];
        } else if (all[rs->negate(k)]) {
            out[k] = -*all[rs->negate(k)];
        } else {
            bad("no value for root " + json(rs->root(k)).dump());
        }
    }
    return PhiParam(rs, std::move(out), mode);
}

json toJson(const ShiftedWeight& w) { return {{"lambda", w.integral}, {"chi", toJson(w.twist)}}; }

ShiftedWeight shiftedWeightFromJson(const json& j)
{
    ShiftedWeight w;
    w.twist = toricFromJson(need(j, "chi"));
    w.integral = intVector(need(j, "lambda"), "lambda");
    if (static_cast<int>(w.integral.size()) != w.twist.system()->rank()) bad("lambda has wrong length");
    return w;
}

json toJson(const ScalarSystem& g)
{
    json j;
    j["n"] = g.n;
    j["mode"] = toString(g.mode);
    json es = json::array();
    for (const auto& [key, v] : g.entries)
        es.push_back({{"S", setJson(key.S)}, {"T", setJson(key.T)}, {"lambda", key.lambda}, {"value", v.toString()}});
    j["entries"] = es;
    return j;
}

ScalarSystem gammaFromJson(const json& j)
{
    ScalarSystem g;
    const auto& n = need(j, "n");
    if (!n.is_number_integer() || n.get<int>() < 2 || n.get<int>() > 8) bad("n must be an integer in [2, 8]");
    g.n = n.get<int>();
    g.mode = toricMode(j);
    const auto& es = need(j, "entries");
    if (!es.is_array()) bad("entries must be an array");
    for (const auto& e : es) {
        GammaKey key{setFrom(need(e, "S")), setFrom(need(e, "T")), intVector(need(e, "lambda"), "lambda")};
        if (!key.S || !key.T || (key.S & key.T) || ((key.S | key.T) >> g.n)) bad("S and T must be disjoint nonempty subsets of 1..n");
        if (static_cast<int>(key.lambda.size()) != g.n - 1) bad("lambda must have n-1 fundamental coordinates");
        g.window.insert(key.lambda);
        if (!g.entries.emplace(key, LaurentScalar::parse(scalarText(need(e, "value")))).second) bad("duplicate entry");
    }
    return g;
}

json toJson(const ValidationReport& r)
{
    json vs = json::array();
    for (const auto& v : r.violations) vs.push_back({{"kind", v.kind}, {"roots", v.roots}, {"detail", v.detail}});
    return {{"ok", r.ok()}, {"checked", r.checked}, {"violations", vs}};
}

json toJson(const RelationReport& r)
{
    json j{{"relation", r.relation}, {"params", r.params}, {"n", r.n}, {"ok", r.ok}};
    if (r.witness) j["witness"] = {{"sourceIndex", r.witness->source}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json toJson(const AxiomReport& r, size_t maxViolations)
{
    json per = json::object();
    for (const auto& [name, c] : r.perAxiom) per[name] = {{"passed", c.passed}, {"failed", c.failed}, {"skipped", c.skipped}};
    const auto t = r.total();
    json vs = json::array();
    for (size_t k = 0; k < r.violations.size() && k < maxViolations; ++k) {
        const auto& v = r.violations[k];
        json w{{"axiom", v.axiom}, {"lambda", v.lambda}};
        if (v.S) w["S"] = setJson(v.S);
        if (v.T) w["T"] = setJson(v.T);
        if (v.U) w["U"] = setJson(v.U);
        if (v.i) w["i"] = v.i;
        if (v.j) w["j"] = v.j;
        if (v.k) w["k"] = v.k;
        if (!v.detail.empty()) w["detail"] = v.detail;
        vs.push_back(w);
    }
    return {{"ok", r.ok()},
            {"passed", t.passed},
            {"failed", t.failed},
            {"skipped", t.skipped},
            {"axioms", per},
            {"violations", vs},
            {"violationCount", r.violations.size()}};
}

json toJson(const ClassificationResult& r)
{
    json pairs = json::array();
    for (const auto& p : r.pairs)
        pairs.push_back({{"i", p.i},
                         {"j", p.j},
                         {"x", toJson(p.x)},
                         {"pairingRange", {p.minPairing, p.maxPairing}},
                         {"samples", p.samples}});
    json cert{{"pairs", pairs}, {"multiplicativity", toJson(r.multiplicativity)}, {"reconstructedEntries", r.reconstructed}};
    if (r.axioms) cert["axioms"] = toJson(*r.axioms);
    return {{"mode", toString(r.mode)}, {"chi", toJson(r.chi, r.mode)}, {"certificate", cert}};
}

json toJson(const DominanceResult& r, const RootSystem& rs)
{
    json ws = json::array();
    for (const auto& w : r.witnesses)
        ws.push_back({{"root", rs.root(w.root)}, {"lambda", w.lambda}, {"exponent", w.exponent}});
    json j{{"holds", r.holds}, {"witnesses", ws}};
    if (r.category) j["category"] = toJson(*r.category);
    return j;
}

json toJson(const std::vector<ShapovalovFactor>& fs, const RootSystem& rs)
{
    json a = json::array();
    for (const auto& f : fs)
        a.push_back({{"root", rs.root(f.root)}, {"level", f.level}, {"exponent", f.exponent.get_str()}, {"flipped", f.flipped}});
    return a;
}

json toJson(const QuotientNormalization& q)
{
    json cs = json::array();
    for (const auto& c : q.components)
        cs.push_back({{"simples", c.simples}, {"outsideS", c.outsideS}, {"highestRoot", c.highestRoot}, {"ok", c.ok}});
    return {{"w", q.w.word()}, {"phi", toJson(q.normalized)}, {"components", cs}, {"componentsOk", q.componentsOk}};
}

} // namespace qflag::io
