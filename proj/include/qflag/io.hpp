#pragma once

#include "qflag/classifier.hpp"
#include "qflag/poissonspace.hpp"
#include "qflag/shiftedcat.hpp"
#include "qflag/webcalc.hpp"

#include <json.hpp>

#include <string>

namespace qflag::io {

using json = nlohmann::ordered_json;

// InputError("BadJson") on unreadable or malformed files
json readJsonFile(const std::string& path);
json parseJson(const std::string& text);
void writeJsonFile(const std::string& path, const json& j);

json toJson(const LaurentScalar& s);
json toJson(const ProjParam& p);
json weightJson(const IVec& w);

// { "type", "rank", "entries": [ { "root", "x", "y" } ] }, positive roots only;
// "mode": "classical" marks x_ij points (negatives by x -> -x)
json toJson(const ToricPoint& chi, ScalarMode mode = ScalarMode::Quantum);
ToricPoint toricFromJson(const json& j);
ScalarMode toricMode(const json& j);

// { "type", "rank", "mode", "entries": [ { "root", "value" } ] }
json toJson(const PhiParam& phi);
// type and rank fall back to the arguments when absent
PhiParam phiFromJson(const json& j, char type = 0, int rank = 0);

// { "lambda": [...], "chi": <ToricPoint> }
json toJson(const ShiftedWeight& w);
ShiftedWeight shiftedWeightFromJson(const json& j);

// { "n", "mode", "entries": [ { "S", "T", "lambda", "value" } ] }, lambda in fundamental coordinates
json toJson(const ScalarSystem& g);
ScalarSystem gammaFromJson(const json& j);

json toJson(const ValidationReport& r);
json toJson(const RelationReport& r);
json toJson(const AxiomReport& r, size_t maxViolations = 20);
json toJson(const ClassificationResult& r);
json toJson(const DominanceResult& r, const RootSystem& rs);
json toJson(const std::vector<ShapovalovFactor>& fs, const RootSystem& rs);
json toJson(const QuotientNormalization& q);

} // namespace qflag::io
