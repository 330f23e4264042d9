#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vbell/inequalities.hpp"
#include "vbell/linalg.hpp"
#include "vbell/probabilities.hpp"

namespace vbell::cli
{
using Json = nlohmann::ordered_json;

//! printf "%.*g" in the C locale
std::string format_number(double value, int precision);

//! value rounded to `precision` significant digits, as a JSON number
Json rounded(double value, int precision);

Json to_json(Direction const& d, int precision);
Json to_json(CenterOfMassState const& s, int precision);
Json to_json(MeasurementSettings const& s, int precision);
Json to_json(ProbabilityTable const& t, int precision);

//! Label of an outcome: "+1", "0" or "-1".
std::string outcome_label(Outcome o);

//! Flat "key,value" CSV lines for a list of scalar fields.
std::string key_value_csv(std::vector<std::pair<std::string, std::string>> const& rows);

}  // namespace vbell::cli
