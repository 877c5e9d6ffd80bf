// Copyright 2026 The conedepth Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "conedepth/cli.hpp"
#include "conedepth/errors.hpp"

namespace conedepth::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("conedepth_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path;
  }

  int invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "conedepth");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST(ParseCsv, Examples) {
  EXPECT_EQ(parse_csv_text("0,0\n1,1\n").size(), 2u);
  const DataSet X = parse_csv_text("x,y\n0,0\n");
  ASSERT_EQ(X.size(), 1u);
  EXPECT_EQ(X[0], (Point2{0, 0}));
  EXPECT_EQ(parse_csv_text("\n 1.5 , -2e1 \r\n\n+3,4\n").size(), 2u);
}

TEST(ParseCsv, Errors) {
  try {
    parse_csv_text("0,abc\n");
    FAIL() << "no ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  try {
    parse_csv_text("x,y\n1,2\n3\n");
    FAIL() << "no ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_csv_text("1,nan\n"), ParseError);
  EXPECT_THROW(parse_csv_text("x,y\n"), EmptyFile);
  EXPECT_THROW(parse_csv_text(""), EmptyFile);
  EXPECT_THROW(parse_csv("/nonexistent/conedepth.csv"), IoError);
}

TEST(ParseCone, Specs) {
  const ConeV o = parse_cone("orthant");
  EXPECT_EQ(o.b1, (Vec2{1, 0}));
  EXPECT_EQ(o.b2, (Vec2{0, 1}));
  const ConeV c = parse_cone("1,0;0,-1");
  EXPECT_EQ(c.b2, (Vec2{0, -1}));
  EXPECT_THROW(parse_cone("1,0"), std::invalid_argument);
  EXPECT_THROW(parse_cone("a,b;c,d"), std::invalid_argument);
}

TEST(FormatNumber, RoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 123456789.125, 2.0 / 3.0}) {
    EXPECT_EQ(std::stod(format_number(v)), v);
  }
  EXPECT_EQ(format_number(2.0), "2");
}

TEST_F(CliTest, QuantileJson) {
  const auto two = write("two.csv", "0,2\n2,0\n");
  ASSERT_EQ(invoke({"quantile", "-p", "0.5", "-i", two.string(), "--cone", "orthant"}), kOk);
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["hrep"].size(), 3u);
  EXPECT_EQ(j["vrep"]["vertices"], nlohmann::json::parse("[[0.0,2.0],[2.0,0.0]]"));
  EXPECT_EQ(j["vrep"]["directions"], nlohmann::json::parse("[[1.0,0.0],[0.0,1.0]]"));
  EXPECT_EQ(j["K"], 1);
  EXPECT_EQ(j["steps"], 2);
}

TEST_F(CliTest, SeveralLevelsSortedByP) {
  const auto data = write("d.csv", "x,y\n0,5\n1,3\n2,2\n4,1\n5,0\n3,3\n");
  ASSERT_EQ(invoke({"quantile", "-p", "0.9,0.1,0.5", "-i", data.string()}), kOk);
  const auto j = nlohmann::json::parse(out_.str());
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["p"], 0.1);
  EXPECT_EQ(j[1]["p"], 0.5);
  EXPECT_EQ(j[2]["p"], 0.9);
}

TEST_F(CliTest, JsonNumbersRoundTrip) {
  const auto data = write("d.csv", "0.1,0.7\n0.3,0.2\n0.9,0.15\n0.45,0.45\n");
  ASSERT_EQ(invoke({"quantile", "-p", "0.25", "-i", data.string(), "--cone", "1,0.3;0.2,1"}), kOk);
  const auto j = nlohmann::json::parse(out_.str());
  const auto P = cone_quantile(parse_csv(data), {{1, 0.3}, {0.2, 1}}, 0.25).first.poly;
  ASSERT_EQ(j["vrep"]["vertices"].size(), P.vertices.size());
  for (std::size_t i = 0; i < P.vertices.size(); ++i) {
    EXPECT_EQ(j["vrep"]["vertices"][i][0].get<double>(), P.vertices[i].x);
    EXPECT_EQ(j["vrep"]["vertices"][i][1].get<double>(), P.vertices[i].y);
  }
}

TEST_F(CliTest, CdfDepthTukey) {
  const auto two = write("two.csv", "0,2\n2,0\n");
  ASSERT_EQ(invoke({"cdf", "-z", "2,2", "-i", two.string(), "--cone", "orthant"}), kOk);
  auto j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["K"], 3);
  EXPECT_EQ(j["F"], 1.0);
  EXPECT_TRUE(j.contains("argmin_w"));

  ASSERT_EQ(invoke({"depth", "-z", "0,0", "-i", two.string()}), kOk);
  EXPECT_EQ(nlohmann::json::parse(out_.str())["K"], 1);

  ASSERT_EQ(invoke({"cdf", "-z", "2,2", "-i", two.string(), "--format", "csv"}), kOk);
  EXPECT_EQ(out_.str(), "x,y,K,F\n2,2,3,1\n");

  const auto sq = write("sq.csv", "0,0\n1,0\n1,1\n0,1\n");
  ASSERT_EQ(invoke({"tukey-depth", "-z", "0.5,0.5", "-i", sq.string()}), kOk);
  EXPECT_EQ(nlohmann::json::parse(out_.str())["depth"], 2);

  ASSERT_EQ(invoke({"tukey-region", "-p", "0.25,0.75", "-i", sq.string()}), kOk);
  j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j[0]["vrep"]["vertices"].size(), 4u);
  EXPECT_FALSE(j[0]["empty"].get<bool>());
  EXPECT_TRUE(j[1]["empty"].get<bool>());
}

TEST_F(CliTest, GridSinglePointBelowData) {
  const auto two = write("two.csv", "0,2\n2,0\n");
  ASSERT_EQ(invoke({"grid", "-i", two.string(), "--bounds", "-1,-1,-1,-1", "--nx", "1", "--ny",
                    "1"}),
            kOk);
  EXPECT_EQ(out_.str(), "x,y,F\n-1,-1,0\n");
}

TEST_F(CliTest, GridMatchesCdf) {
  const auto data = write("d.csv", "0,5\n1,3\n2,2\n4,1\n5,0\n3,3\n2.5,0.5\n");
  ASSERT_EQ(invoke({"grid", "-i", data.string(), "--nx", "7", "--ny", "6", "--cone", "1,0;1,2"}),
            kOk);
  std::istringstream rows(out_.str());
  std::string line;
  std::getline(rows, line);
  EXPECT_EQ(line, "x,y,F");
  std::size_t n = 0;
  const DataSet X = parse_csv(data);
  while (std::getline(rows, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const Point2 z{std::stod(line.substr(0, c1)), std::stod(line.substr(c1 + 1, c2 - c1 - 1))};
    EXPECT_EQ(std::stod(line.substr(c2 + 1)), cone_cdf(z, X, {{1, 0}, {1, 2}}));
    ++n;
  }
  EXPECT_EQ(n, 42u);
}

TEST_F(CliTest, PlotSvg) {
  const auto data = write("d.csv", "0,5\n1,3\n2,2\n4,1\n5,0\n");
  ASSERT_EQ(invoke({"plot", "-i", data.string(), "-p", "0.2,0.6"}), kOk);
  const std::string svg = out_.str();
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  std::size_t circles = 0;
  for (auto pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) {
    ++circles;
  }
  EXPECT_EQ(circles, 5u);
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
  EXPECT_NE(svg.find("<text"), std::string::npos);
}

TEST_F(CliTest, Deterministic) {
  const auto data = write("d.csv", "0,5\n1,3\n2,2\n4,1\n5,0\n3,3\n");
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"quantile", "-p", "0.3,0.7", "-i", data.string()},
        {"plot", "-p", "0.5", "-i", data.string()},
        {"grid", "-i", data.string(), "--nx", "5", "--ny", "5"}}) {
    ASSERT_EQ(invoke(args), kOk);
    const std::string first = out_.str();
    ASSERT_EQ(invoke(args), kOk);
    EXPECT_EQ(out_.str(), first);
  }
}

TEST_F(CliTest, ExitCodes) {
  const auto two = write("two.csv", "0,2\n2,0\n");
  const auto bad = write("bad.csv", "0,abc\n");
  EXPECT_EQ(invoke({}), kUsage);
  EXPECT_EQ(invoke({"quantile", "-i", two.string()}), kUsage);
  EXPECT_EQ(invoke({"quantile", "-p", "1.5", "-i", two.string()}), kUsage);
  EXPECT_EQ(invoke({"cdf", "-z", "1", "-i", two.string()}), kUsage);
  EXPECT_EQ(invoke({"depth", "-z", "1,1", "-i", two.string(), "--format", "svg"}), kUsage);
  EXPECT_EQ(invoke({"depth", "-z", "1,1", "-i", bad.string()}), kData);
  EXPECT_NE(err_.str().find("line 1"), std::string::npos);
  EXPECT_EQ(invoke({"depth", "-z", "1,1", "-i", (dir_ / "missing.csv").string()}), kData);
  EXPECT_EQ(invoke({"depth", "-z", "1,1", "-i", two.string(), "--cone", "1,0;2,0"}),
            kDegenerateCone);
  EXPECT_EQ(invoke({"depth", "-z", "1,1", "-i", two.string(), "--cone", "1,0;-1,0"}),
            kUnsupportedCone);
  EXPECT_EQ(invoke({"--help"}), kOk);
}

TEST_F(CliTest, OutputFileOnlyOnSuccess) {
  const auto two = write("two.csv", "0,2\n2,0\n");
  const fs::path target = dir_ / "out.json";
  ASSERT_EQ(invoke({"quantile", "-p", "0.5", "-i", two.string(), "-o", target.string()}), kOk);
  EXPECT_TRUE(fs::exists(target));
  EXPECT_TRUE(out_.str().empty());

  const fs::path failed = dir_ / "failed.json";
  EXPECT_EQ(invoke({"quantile", "-p", "0.5", "-i", two.string(), "--cone", "1,0;2,0", "-o",
                    failed.string()}),
            kDegenerateCone);
  EXPECT_FALSE(fs::exists(failed));
  EXPECT_FALSE(fs::exists(dir_ / "failed.json.tmp"));
}

}  // namespace
}  // namespace conedepth::cli
