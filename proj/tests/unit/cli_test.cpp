/*
 * Copyright 2026 The rbessel Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"
#include "report.hpp"

namespace rbessel::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("rbessel_cli_test_" + name);
}

TEST(Lists, Parsing) {
  EXPECT_EQ(parse_real_list("0.5,1,2"), (std::vector<double>{0.5, 1.0, 2.0}));
  EXPECT_EQ(parse_real_list("0:1:0.5"), (std::vector<double>{0.0, 0.5, 1.0}));
  EXPECT_EQ(parse_int_list("-2:2:2"), (std::vector<long>{-2, 0, 2}));
  EXPECT_THROW(parse_real_list("1,abc"), std::invalid_argument);
  EXPECT_THROW(parse_real_list("0:1:0"), std::invalid_argument);
  EXPECT_THROW(parse_int_list("1.5"), std::invalid_argument);
}

TEST(Csv, RoundTripWithQuotes) {
  const std::vector<std::vector<std::string>> records{
      {"suite", "case", "value"}, {"eq1", "m=1, z=0.5", "1e-12"}, {"x", "say \"hi\"", "line\nbreak"}};
  EXPECT_EQ(parse_csv(write_csv(records)), records);
  EXPECT_EQ(write_csv({{"a,b"}}), "\"a,b\"\n");
}

TEST(Numbers, Formatting) {
  EXPECT_EQ(format_number(0.1, Format::csv), "0.10000000000000001");
  EXPECT_EQ(std::stod(format_number(1.0 / 3.0, Format::csv)), 1.0 / 3.0);
  EXPECT_EQ(format_number(NAN, Format::csv), "nan");
  EXPECT_EQ(format_number(-INFINITY, Format::plain), "-inf");
}

TEST(Phi, Examples) {
  auto r = call({"phi", "--order", "0", "--z", "0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][0], "order");
  EXPECT_EQ(std::stod(rows[1][2]), 1.0);

  r = call({"phi", "--order", "0.5", "--z", "1"});
  rows = parse_csv(r.out);
  EXPECT_NEAR(std::stod(rows[1][2]), 0.67139670714180311, 1e-15);
}

TEST(Phi, GridsAreDeduplicatedAndSorted) {
  const auto r = call({"phi", "--order", "1,0,1", "--z", "2,1"});
  ASSERT_EQ(r.code, kExitOk);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[1][0], "0");
  EXPECT_EQ(rows[4][0], "1");
}

TEST(Verify, LadderSuitePasses) {
  const auto r = call({"verify", "eq6"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("status=pass"), std::string::npos);
}

TEST(Verify, ImpossibleToleranceFails) {
  const auto r = call({"verify", "eq6prime", "--tolerance", "1e-30"});
  EXPECT_EQ(r.code, kExitCheckFailed);
  EXPECT_NE(r.err.find("status=fail"), std::string::npos);
}

TEST(Verify, FractionalDeformationDiffersFromRealOrder) {
  // The weighted sum realizes the Anger-type value, not phi_{n+lambda}.
  const auto r = call({"verify", "eq2", "--n", "0", "--lambda", "0.5", "--z", "1"});
  EXPECT_EQ(r.code, kExitCheckFailed);
}

TEST(Verify, UnknownSuiteIsUsageError) {
  EXPECT_EQ(call({"verify", "eq99"}).code, kExitUsage);
  EXPECT_EQ(call({"verify"}).code, kExitUsage);
}

TEST(Usage, BadInputs) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call({"phi", "--z", "abc"}).code, kExitUsage);
  EXPECT_EQ(call({"phi", "--z", "-1"}).code, kExitUsage);
  EXPECT_EQ(call({"phi", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(call({"sweep", "nothing"}).code, kExitUsage);
  EXPECT_EQ(call({"sweep", "deform", "--lambda", "1:0:0.5"}).code, kExitUsage);
  EXPECT_EQ(call({"verify", "eq6", "--abel-r", "1.5"}).code, kExitUsage);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(Sweep, DeformIntegerEndpointsMatchDirect) {
  const auto r = call({"sweep", "deform", "--n", "0", "--lambda", "0,0.5,1", "--z", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 4u);
  const auto& h = rows[0];
  const auto col = [&](const std::string& name) {
    return static_cast<std::size_t>(std::find(h.begin(), h.end(), name) - h.begin());
  };
  ASSERT_LT(col("residual"), h.size());
  EXPECT_EQ(std::stod(rows[1][col("residual")]), 0.0);
  EXPECT_LE(std::stod(rows[3][col("residual")]), 1e-12);
  EXPECT_GT(std::stod(rows[2][col("residual")]), 0.1);
}

TEST(Sweep, SpectrumLongFormat) {
  const auto r = call({"sweep", "spectrum", "--modes", "2", "--lambda", "0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"modes", "lambda", "index", "eigenvalue"}));
  for (int i = 0; i < 5; ++i) EXPECT_EQ(std::stod(rows[static_cast<std::size_t>(i + 1)][3]), i - 2.0);
}

TEST(Sweep, Deterministic) {
  const std::vector<std::string> args{"sweep", "eq13", "--lambda", "0.25,0.5", "--z", "0.5,1", "--theta", "0.5"};
  const auto a = call(args), b = call(args);
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
}

TEST(Output, JsonStructure) {
  const auto r = call({"phi", "--order", "0,1", "--z", "1", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["meta"]["command"], "phi");
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_DOUBLE_EQ(j["rows"][1]["order"].get<double>(), 1.0);
  EXPECT_EQ(j["summary"]["rows"], 2);
}

TEST(Output, FileAndPlain) {
  const auto path = temp_file("out.csv");
  std::filesystem::remove(path);
  const auto r = call({"phi", "--order", "0", "--z", "1", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(parse_csv(content.str()).size(), 2u);
  std::filesystem::remove(path);

  const auto plain = call({"phi", "--order", "0", "--z", "1", "--format", "plain"});
  EXPECT_NE(plain.out.find("rows: 1"), std::string::npos);
}

TEST(Config, FileValuesAndOverrides) {
  const auto path = temp_file("config.ini");
  {
    std::ofstream f(path);
    f << "order = \"0,1\"\nz = 2\n";
  }
  auto r = call({"phi", "--config", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(parse_csv(r.out).size(), 3u);
  r = call({"phi", "--config", path.string(), "--order", "0.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(parse_csv(r.out).size(), 2u);

  {
    std::ofstream f(path);
    f << "nonsense = 3\n";
  }
  EXPECT_EQ(call({"phi", "--config", path.string()}).code, kExitUsage);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace rbessel::cli
