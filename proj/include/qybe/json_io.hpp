#pragma once

#include <string>

#include <json.hpp>

#include "qybe/census.hpp"
#include "qybe/hecke.hpp"
#include "qybe/matrix.hpp"
#include "qybe/presentation.hpp"
#include "qybe/quiver.hpp"
#include "qybe/relations.hpp"

namespace qybe {

// Key order in emitted objects is fixed, so identical inputs produce
// byte-identical files.
using Json = nlohmann::ordered_json;

Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json qybe_report_to_json(const QybeReport& r);
Json classification_to_json(const Classification& c);
Json census_report_to_json(const CensusReport& r);
Json tl_generator_to_json(const TLGenerator& x);
TLGenerator tl_generator_from_json(const Json& j);
Json hecke_candidate_to_json(const HeckeCandidate& c);
Json relation_set_to_json(const RelationSet& s);
Json presentation_to_json(const Presentation& p);

/// Human-readable relation list, one per line, deterministic order.
std::string relation_set_to_text(const RelationSet& s);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qybe
