#pragma once

// JSON serialization of the shared data types.  The schema is documented
// in docs/schema.md; every document carries schema_version.

#include <json.hpp>

#include "torelli/johnson.hpp"
#include "torelli/presentation.hpp"
#include "torelli/presentations.hpp"
#include "torelli/virtual_rep.hpp"

namespace torelli::json_io {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Weight& w);
nlohmann::json to_json(const VirtualRep& r);
Weight weight_from_json(const nlohmann::json& j);
VirtualRep virtual_rep_from_json(const nlohmann::json& j);

nlohmann::json to_json(const presentation::GradedQuotientReport& r);
nlohmann::json to_json(const johnson::VerifiedConstants& vc);
nlohmann::json to_json(const std::vector<johnson::WalkReport>& walks);
nlohmann::json to_json(const presentations::AbelianGroupStructure& h);
nlohmann::json to_json(const presentations::RankSeries& rs);

// Presentation document: generators, relations (printed in the bracket
// grammar), metadata, notes.
nlohmann::json presentation_document(freelie::Context& ctx,
                                     const presentation::GradedPresentation& p);

}  // namespace torelli::json_io
