#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "gft/json_io.hpp"

using gft::Complex;
using gft::SamplingPolicy;
using gft::TruncatedSeries;

namespace {

std::filesystem::path test_dir() {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "gft_json_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("series round trips through json") {
  const TruncatedSeries f = gft::make_series(
      2, {Complex(1.0, 0.0), Complex(-0.25, 1.0 / 3.0),
          Complex(0.0, -7.5e-11), Complex(12345.6789, 0.0)});
  const nlohmann::json j = f;
  CHECK(j.at("lead") == 2);
  CHECK(j.at("coeffs").size() == 4);
  const TruncatedSeries back = gft::series_from_json(j);
  CHECK(back.lead() == 2);
  CHECK(gft::coeff_distance(f, back) == 0.0);
}

TEST_CASE("series_from_json rejects malformed input") {
  CHECK_THROWS_AS(gft::series_from_json(nlohmann::json{{"coeffs", {{1, 0}}}}),
                  std::runtime_error);
  CHECK_THROWS_AS(gft::series_from_json(nlohmann::json{{"lead", 1}}),
                  std::runtime_error);
  CHECK_THROWS_AS(
      gft::series_from_json(nlohmann::json{{"lead", 1.5},
                                           {"coeffs", {{1, 0}}}}),
      std::runtime_error);
  CHECK_THROWS_AS(
      gft::series_from_json(nlohmann::json{
          {"lead", 1}, {"coeffs", nlohmann::json::array()}}),
      std::runtime_error);
  CHECK_THROWS_AS(
      gft::series_from_json(nlohmann::json{{"lead", 1}, {"coeffs", {{1}}}}),
      std::runtime_error);
  // Structurally valid JSON with an impossible lead is the series
  // constructor's complaint, not the parser's.
  CHECK_THROWS_AS(
      gft::series_from_json(nlohmann::json{{"lead", -1},
                                           {"coeffs", {{1, 0}}}}),
      std::invalid_argument);
}

TEST_CASE("params round trip and validation") {
  const gft::ClassParams params = gft::ClassParams::make(2, 3, 0.75);
  const nlohmann::json j = params;
  const gft::ClassParams back = gft::params_from_json(j);
  CHECK(back.valence == 2);
  CHECK(back.symmetry == 3);
  CHECK(back.order == 0.75);

  CHECK_THROWS_AS(gft::params_from_json(nlohmann::json{{"valence", 1}}),
                  std::runtime_error);
  CHECK_THROWS_AS(
      gft::params_from_json(nlohmann::json{
          {"valence", 1}, {"symmetry", 1}, {"order", 2.0}}),
      std::invalid_argument);
}

TEST_CASE("policy merges over defaults") {
  // Raising r_max alone keeps the default radii valid; lowering it below
  // the outermost default radius would not.
  const SamplingPolicy merged =
      gft::policy_from_json(nlohmann::json{{"r_max", 0.98}});
  CHECK(merged.r_max == 0.98);
  CHECK(merged.angles_per_circle == 720);
  CHECK(merged.radii == SamplingPolicy::defaults().radii);

  const SamplingPolicy full = gft::policy_from_json(nlohmann::json{
      {"radii", {0.25, 0.5}},
      {"angles_per_circle", 90},
      {"r_max", 0.5},
      {"margin_tol", 1e-7}});
  CHECK(full.radii == std::vector<double>{0.25, 0.5});
  CHECK(full.angles_per_circle == 90);
  CHECK(full.margin_tol == 1e-7);

  const nlohmann::json round = full;
  const SamplingPolicy again = gft::policy_from_json(round);
  CHECK(again.radii == full.radii);
  CHECK(again.r_max == full.r_max);

  CHECK_THROWS_AS(gft::policy_from_json(nlohmann::json{{"r_max", 1.5}}),
                  std::invalid_argument);
}

TEST_CASE("json files save and load") {
  const std::filesystem::path dir = test_dir();
  const std::filesystem::path path = dir / "roundtrip.json";
  const nlohmann::json payload{{"alpha", 1}, {"beta", {1.5, -2.5}}};
  gft::save_json_file(path, payload);
  CHECK(gft::load_json_file(path) == payload);

  const std::filesystem::path series_path = dir / "series.json";
  const TruncatedSeries f = gft::make_series(
      1, {Complex(1.0, 0.0), Complex(0.125, -0.375), Complex(1.0 / 3.0, 0.0)});
  gft::write_series_file(series_path, f);
  CHECK(gft::coeff_distance(gft::read_series_file(series_path), f) == 0.0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("file errors carry the path") {
  const std::filesystem::path dir = test_dir();
  const std::filesystem::path missing = dir / "does_not_exist.json";

  try {
    gft::load_json_file(missing);
    FAIL("expected runtime_error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("does_not_exist.json") !=
          std::string::npos);
  }

  const std::filesystem::path garbled = dir / "garbled.json";
  {
    std::ofstream out(garbled);
    out << "{not json at all";
  }
  try {
    gft::read_series_file(garbled);
    FAIL("expected runtime_error");
  } catch (const std::runtime_error& e) {
    const std::string what = e.what();
    CHECK(what.find("garbled.json") != std::string::npos);
    CHECK(what.find("malformed") != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("reports serialize with their field names") {
  gft::ClassReport report;
  report.holds = true;
  report.real_part.min_margin = 0.5;
  report.real_part.witness = Complex(-0.95, 0.0);
  report.min_modulus_margin = 1.0;
  const nlohmann::json j = report;
  CHECK(j.at("holds") == true);
  CHECK(j.at("real_part").at("min_margin") == 0.5);
  CHECK(j.at("real_part").at("witness")[0] == -0.95);
  CHECK(j.at("min_modulus_margin") == 1.0);
  CHECK(j.at("modulus_disagreements") == 0);

  gft::BoundSet bounds;
  bounds.r = 0.5;
  bounds.ratio_upper = 3.0;
  const nlohmann::json b = bounds;
  CHECK(b.at("r") == 0.5);
  CHECK(b.at("ratio_upper") == 3.0);
}
