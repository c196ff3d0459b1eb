// Copyright 2026 The gatequiv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gatequiv_tools/cli.hpp"
#include "gatequiv_tools/scenario.hpp"

namespace gatequiv::tools {
namespace {

namespace fs = std::filesystem;

std::string scenario(const std::string& name) {
  return std::string(GATEQUIV_SCENARIO_DIR) + "/" + name + ".json";
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("gatequiv_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(std::vector<std::string> args) {
    args.push_back("--out");
    args.push_back(dir_.string());
    args.push_back("--quiet");
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  std::string read(const std::string& file) const {
    std::ifstream in(dir_ / file);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST(Scenario, ShippedScenariosParse) {
  for (const auto& entry : fs::directory_iterator(GATEQUIV_SCENARIO_DIR)) {
    if (entry.path().extension() != ".json") continue;
    EXPECT_NO_THROW(load_scenario(entry.path().string())) << entry.path();
  }
  const auto s = load_scenario(scenario("xpi2_dynamical"));
  EXPECT_EQ(s.name, "xpi2_dynamical");
  EXPECT_NEAR(s.duration(), 8 * std::numbers::pi, 1e-12);
  EXPECT_NEAR(s.gate_period(), 4 * std::numbers::pi, 1e-12);
  ASSERT_TRUE(s.transform.has_value());
  EXPECT_DOUBLE_EQ(s.transform->amplitude, -0.46186);
  EXPECT_EQ(s.noise_channels().size(), 2u);
  EXPECT_EQ(s.frequency_grid().size(), 4001u);
}

nlohmann::json minimal() {
  return nlohmann::json::parse(R"({
    "name": "m", "system": "su2",
    "pulse": {"type": "constant", "amplitude": 1.0, "phase": 0.0, "duration": 3.0},
    "channels": [{"name": "detuning", "psd": {"type": "white", "level": 1e-4}}]
  })");
}

TEST(Scenario, Validation) {
  EXPECT_NO_THROW(parse_scenario(minimal()));
  auto unknown = minimal();
  unknown["colour"] = "blue";
  EXPECT_THROW(parse_scenario(unknown), ValidationError);
  auto empty = minimal();
  empty["channels"] = nlohmann::json::array();
  try {
    parse_scenario(empty);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("no channels"), std::string::npos);
  }
  auto bad_type = minimal();
  bad_type["steps"] = "many";
  EXPECT_THROW(parse_scenario(bad_type), ValidationError);
  auto bad_channel = minimal();
  bad_channel["channels"][0]["name"] = "gravity";
  EXPECT_THROW(parse_scenario(bad_channel), ValidationError);
  EXPECT_THROW(load_scenario("/nonexistent/file.json"), ValidationError);
}

TEST(Scenario, ConfigHash) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST_F(CliTest, FilterFunctionsOfEquivalentPair) {
  ASSERT_EQ(run({"filterfn", "--config", scenario("xpi2_equivalence"), "--grid-points", "401"}),
            kSuccess)
      << err_.str();
  const std::string base = read("filterfn_base.csv");
  EXPECT_EQ(base.rfind("# gatequiv ", 0), 0u);
  EXPECT_NE(base.find("config-hash=fnv1a:"), std::string::npos);
  EXPECT_FALSE(read("filterfn_transformed.csv").empty());
  const std::string summary = read("filterfn_summary.txt");
  EXPECT_NE(summary.find("filter_mismatch detuning"), std::string::npos) << summary;
  EXPECT_EQ(summary.find("FAIL"), std::string::npos) << summary;
}

TEST_F(CliTest, BrokenTransformFlagsEndpoint) {
  EXPECT_EQ(run({"filterfn", "--config", scenario("xpi2_broken"), "--grid-points", "101"}),
            kValidationError);
  EXPECT_NE(read("filterfn_summary.txt").find("FAIL"), std::string::npos);
}

TEST_F(CliTest, PhasesOfGeometricScenario) {
  ASSERT_EQ(run({"phases", "--config", scenario("xpi2_dynamical")}), kSuccess) << err_.str();
  EXPECT_FALSE(read("phases_base.csv").empty());
  EXPECT_FALSE(read("phases_transformed.csv").empty());
  EXPECT_FALSE(read("phases_summary.txt").empty());
}

TEST_F(CliTest, CalibrationWritesBrackets) {
  ASSERT_EQ(run({"calibrate", "--config", scenario("xpi2_dynamical")}), kSuccess) << err_.str();
  EXPECT_NE(read("calibration.txt").find("amplitude"), std::string::npos);
  EXPECT_FALSE(read("calibration_brackets.csv").empty());
}

TEST_F(CliTest, BlochPathOfZeroPulseIsStatic) {
  ASSERT_EQ(run({"bloch-path", "--config", scenario("zero_pulse")}), kSuccess) << err_.str();
  std::istringstream in(read("bloch_base.csv"));
  std::string line;
  std::string first;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("t,", 0) == 0) continue;
    const std::string xyz = line.substr(line.find(',') + 1);
    if (first.empty()) first = xyz;
    EXPECT_EQ(xyz, first);
    ++rows;
  }
  EXPECT_GT(rows, 2);
}

TEST_F(CliTest, MissingConfigIsValidationError) {
  EXPECT_EQ(run({"verify", "--config", "/nonexistent.json"}), kValidationError);
  EXPECT_NE(err_.str().find("cannot open"), std::string::npos);
  EXPECT_EQ(run({"verify"}), kValidationError);
  EXPECT_EQ(run({"frobnicate"}), kValidationError);
}

}  // namespace
}  // namespace gatequiv::tools
