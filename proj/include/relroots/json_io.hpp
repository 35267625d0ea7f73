#ifndef RELROOTS_JSON_IO_HPP
#define RELROOTS_JSON_IO_HPP

#include <json.hpp>

#include "relroots/rootlab.hpp"
#include "relroots/survey.hpp"

namespace relroots {

// Conventions (documented in docs/FORMATS.md): polynomials are arrays of
// "num/den" strings, index = power of q; big integers are decimal strings;
// floats appear only in explicitly approximate fields.

nlohmann::json json_of(const RatPoly& p);
nlohmann::json json_of(const IsolatedRoot& r);
nlohmann::json json_of(const RootReport& r);
nlohmann::json json_of(const RelRootsReport& r);
nlohmann::json json_of(const RelForms& f);
nlohmann::json json_of(const Certificate& c);
nlohmann::json json_of(const GadgetEquation& e);
nlohmann::json json_of(const RootSynthesis& s);
nlohmann::json json_of(const SurveyRow& r);
nlohmann::json json_of(const RandomSurveySummary& s);
nlohmann::json json_of(const ExhaustiveSurveyResult& r);
nlohmann::json json_of(const KnTrendResult& r);

std::string branch_csv(const std::vector<BranchPoint>& pts);
std::string kn_trend_csv(const KnTrendResult& r);

}  // namespace relroots

#endif
