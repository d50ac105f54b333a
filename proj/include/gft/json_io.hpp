// JSON bindings for series, policies, parameters, and every report type,
// plus small file helpers. Complex numbers serialize as [re, im] pairs.
#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "gft/classes.hpp"
#include "gft/sampling.hpp"
#include "gft/series.hpp"
#include "gft/theorems.hpp"

namespace gft {

void to_json(nlohmann::json& j, const TruncatedSeries& f);
void to_json(nlohmann::json& j, const SamplingPolicy& policy);
void to_json(nlohmann::json& j, const MembershipReport& report);
void to_json(nlohmann::json& j, const ClassParams& params);
void to_json(nlohmann::json& j, const ClassReport& report);
void to_json(nlohmann::json& j, const SchwarzWitness& witness);
void to_json(nlohmann::json& j, const HalfplaneCheck& check);
void to_json(nlohmann::json& j, const BoundSet& bounds);
void to_json(nlohmann::json& j, const SufficiencyResult& result);
void to_json(nlohmann::json& j, const CoeffCheckResult& row);
void to_json(nlohmann::json& j, const DistortionReport& report);
void to_json(nlohmann::json& j, const OrderInclusionReport& report);
void to_json(nlohmann::json& j, const NonvanishingReport& report);

// Parsers for the inputs the command line accepts. All throw
// std::runtime_error with a field-level message on malformed data.
TruncatedSeries series_from_json(const nlohmann::json& j);
SamplingPolicy policy_from_json(const nlohmann::json& j);
ClassParams params_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::filesystem::path& path);
void save_json_file(const std::filesystem::path& path,
                    const nlohmann::json& j);

TruncatedSeries read_series_file(const std::filesystem::path& path);
void write_series_file(const std::filesystem::path& path,
                       const TruncatedSeries& f);

}  // namespace gft
