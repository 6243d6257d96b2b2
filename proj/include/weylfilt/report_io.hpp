#pragma once

#include <string>

#include "json.hpp"
#include "weylfilt/g1.hpp"
#include "weylfilt/p_filtration.hpp"

namespace weylfilt {

using Json = nlohmann::ordered_json;

Json weight_json(const Weight& w);
Json character_json(const FormalCharacter& c);
Json chi_json(const ChiCombination& chi);

// field names and their order are frozen; schema_version is embedded
Json report_json(const FiltrationReport& r);
std::string report_csv(const FiltrationReport& r, bool header);

Json batch_json(const BatchSummary& s);
std::string batch_csv(const BatchSummary& s);

Json error_json(const Error& e);

}  // namespace weylfilt
