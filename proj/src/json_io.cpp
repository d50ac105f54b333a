#include "gft/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gft {

namespace {

nlohmann::json complex_to_json(const Complex& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw std::runtime_error("expected a complex number as [re, im]");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

const nlohmann::json& require_field(const nlohmann::json& j,
                                    const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) {
    std::ostringstream msg;
    msg << "missing field \"" << name << "\"";
    throw std::runtime_error(msg.str());
  }
  return *it;
}

}  // namespace

void to_json(nlohmann::json& j, const TruncatedSeries& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Complex& c : f.coeffs()) coeffs.push_back(complex_to_json(c));
  j = nlohmann::json{{"lead", f.lead()}, {"coeffs", std::move(coeffs)}};
}

void to_json(nlohmann::json& j, const SamplingPolicy& policy) {
  j = nlohmann::json{{"radii", policy.radii},
                     {"angles_per_circle", policy.angles_per_circle},
                     {"r_max", policy.r_max},
                     {"margin_tol", policy.margin_tol}};
}

void to_json(nlohmann::json& j, const MembershipReport& report) {
  j = nlohmann::json{{"holds", report.holds},
                     {"min_margin", report.min_margin},
                     {"witness", complex_to_json(report.witness)},
                     {"checked_points", report.checked_points}};
}

void to_json(nlohmann::json& j, const ClassParams& params) {
  j = nlohmann::json{{"valence", params.valence},
                     {"symmetry", params.symmetry},
                     {"order", params.order}};
}

void to_json(nlohmann::json& j, const ClassReport& report) {
  j = nlohmann::json{{"starlike", report.starlike},
                     {"real_part", report.real_part},
                     {"min_modulus_margin", report.min_modulus_margin},
                     {"modulus_disagreements", report.modulus_disagreements},
                     {"holds", report.holds}};
}

void to_json(nlohmann::json& j, const SchwarzWitness& witness) {
  j = nlohmann::json{{"w", witness.w},
                     {"max_modulus", witness.max_modulus},
                     {"witness", complex_to_json(witness.witness)},
                     {"vanishes_at_origin", witness.vanishes_at_origin}};
}

void to_json(nlohmann::json& j, const HalfplaneCheck& check) {
  j = nlohmann::json{{"positive", check.positive},
                     {"avoids_excluded", check.avoids_excluded},
                     {"min_real", check.min_real},
                     {"excluded_hits", check.excluded_hits}};
}

void to_json(nlohmann::json& j, const BoundSet& bounds) {
  j = nlohmann::json{{"r", bounds.r},
                     {"deriv_lower", bounds.deriv_lower},
                     {"deriv_upper", bounds.deriv_upper},
                     {"growth_lower", bounds.growth_lower},
                     {"growth_upper", bounds.growth_upper},
                     {"comparison_lower", bounds.comparison_lower},
                     {"comparison_upper", bounds.comparison_upper},
                     {"ratio_lower", bounds.ratio_lower},
                     {"ratio_upper", bounds.ratio_upper}};
}

void to_json(nlohmann::json& j, const SufficiencyResult& result) {
  j = nlohmann::json{{"margin", result.margin},
                     {"horizon", result.horizon},
                     {"certifies", result.certifies}};
}

void to_json(nlohmann::json& j, const CoeffCheckResult& row) {
  j = nlohmann::json{{"n", row.n},
                     {"lhs", row.lhs},
                     {"rhs", row.rhs},
                     {"satisfied", row.satisfied}};
}

void to_json(nlohmann::json& j, const DistortionReport& report) {
  j = nlohmann::json{{"ok", report.ok},
                     {"deriv_slack", report.deriv_slack},
                     {"growth_slack", report.growth_slack},
                     {"comparison_slack", report.comparison_slack},
                     {"ratio_slack", report.ratio_slack}};
}

void to_json(nlohmann::json& j, const OrderInclusionReport& report) {
  j = nlohmann::json{{"original", report.original},
                     {"relaxed", report.relaxed},
                     {"identity_error", report.identity_error},
                     {"implication", report.implication}};
}

void to_json(nlohmann::json& j, const NonvanishingReport& report) {
  j = nlohmann::json{{"nonvanishing", report.nonvanishing},
                     {"min_modulus", report.min_modulus},
                     {"witness_z", complex_to_json(report.witness_z)},
                     {"witness_zeta", complex_to_json(report.witness_zeta)},
                     {"zeta_count", report.zeta_count},
                     {"winding_hits", report.winding_hits}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
  const nlohmann::json& lead = require_field(j, "lead");
  if (!lead.is_number_integer()) {
    throw std::runtime_error("field \"lead\" must be an integer");
  }
  const nlohmann::json& coeffs = require_field(j, "coeffs");
  if (!coeffs.is_array() || coeffs.empty()) {
    throw std::runtime_error("field \"coeffs\" must be a nonempty array");
  }
  std::vector<Complex> values;
  values.reserve(coeffs.size());
  for (const nlohmann::json& c : coeffs) values.push_back(complex_from_json(c));
  return make_series(lead.get<int>(), std::move(values));
}

SamplingPolicy policy_from_json(const nlohmann::json& j) {
  SamplingPolicy policy = SamplingPolicy::defaults();
  if (j.contains("radii")) {
    policy.radii = j.at("radii").get<std::vector<double>>();
  }
  if (j.contains("angles_per_circle")) {
    policy.angles_per_circle = j.at("angles_per_circle").get<int>();
  }
  if (j.contains("r_max")) policy.r_max = j.at("r_max").get<double>();
  if (j.contains("margin_tol")) {
    policy.margin_tol = j.at("margin_tol").get<double>();
  }
  policy.validate();
  return policy;
}

ClassParams params_from_json(const nlohmann::json& j) {
  const int valence = require_field(j, "valence").get<int>();
  const int symmetry = require_field(j, "symmetry").get<int>();
  const double order = require_field(j, "order").get<double>();
  return ClassParams::make(valence, symmetry, order);
}

nlohmann::json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false, false);
  if (j.is_discarded()) {
    throw std::runtime_error("malformed JSON in " + path.string());
  }
  return j;
}

void save_json_file(const std::filesystem::path& path,
                    const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << j.dump(2) << '\n';
}

TruncatedSeries read_series_file(const std::filesystem::path& path) {
  try {
    return series_from_json(load_json_file(path));
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_series_file(const std::filesystem::path& path,
                       const TruncatedSeries& f) {
  nlohmann::json j = f;
  save_json_file(path, j);
}

}  // namespace gft
