#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "commands.hpp"
#include "output.hpp"
#include "report.hpp"

namespace cli = solitonlab::cli;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < s.size()) {
    const auto end = s.find("\r\n", start);
    out.push_back(s.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 2;
  }
  return out;
}

cli::VerifyConfig small_config() {
  cli::VerifyConfig c;
  c.samples = 10;
  c.lemma_pairs = 200;
  return c;
}

}  // namespace

TEST(Output, CsvFieldQuoting) {
  EXPECT_EQ(cli::csv_field("plain"), "plain");
  EXPECT_EQ(cli::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(cli::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(cli::csv_field("two\nlines"), "\"two\nlines\"");
  EXPECT_EQ(cli::csv_field(""), "");
}

TEST(Output, NumberFormat) {
  EXPECT_EQ(cli::format_number(1.0), "1.000000000000e+00");
  EXPECT_EQ(cli::format_number(-0.000125), "-1.250000000000e-04");
}

TEST(Output, CsvTableUsesCrlf) {
  std::ostringstream os;
  cli::write_csv(os, {"t", {"x", "y,z"}, {{1.0, 2.0}}});
  EXPECT_EQ(os.str(), "x,\"y,z\"\r\n1.000000000000e+00,2.000000000000e+00\r\n");
}

TEST(Output, JsonTableWritesNullForNonFinite) {
  const auto j = cli::to_json({"t", {"a", "b"}, {{1.5, std::numeric_limits<double>::infinity()}}});
  EXPECT_EQ(j["table"], "t");
  EXPECT_EQ(j["rows"][0]["a"], 1.5);
  EXPECT_TRUE(j["rows"][0]["b"].is_null());
}

TEST(Verify, SortedDeterministicAndPassing) {
  const auto a = cli::run_verify_suite(small_config());
  const auto b = cli::run_verify_suite(small_config());
  ASSERT_EQ(a.size(), 12u);
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LT(a[i - 1].check, a[i].check);
  EXPECT_EQ(cli::report_json(a).dump(), cli::report_json(b).dump());
  EXPECT_TRUE(cli::all_pass(a));
  for (const auto& r : a) {
    EXPECT_FALSE(r.paper_ref.empty()) << r.check;
    EXPECT_GT(r.samples, 0u) << r.check;
    EXPECT_TRUE(r.note.empty()) << r.check << ": " << r.note;
  }
}

TEST(Verify, ImpossibleToleranceFails) {
  auto c = small_config();
  c.tol = 1e-300;
  const auto res = cli::run_verify_suite(c);
  EXPECT_FALSE(cli::all_pass(res));
  const auto j = cli::report_json(res);
  EXPECT_FALSE(j["pass"].get<bool>());
}

TEST(Verify, ReportCsvHasOneRowPerCheck) {
  const auto res = cli::run_verify_suite(small_config());
  std::ostringstream os;
  cli::write_report_csv(os, res);
  const auto ls = lines(os.str());
  ASSERT_EQ(ls.size(), res.size() + 1);
  EXPECT_EQ(ls[0], "check,paper_ref,samples,max_residual,tolerance,pass,note");
}

TEST(Commands, ZooGrimReaperTable) {
  cli::RunConfig c;
  c.member = "grim-riemann";
  std::ostringstream os;
  EXPECT_EQ(cli::cmd_zoo(c, os), 0);
  const auto ls = lines(os.str());
  ASSERT_GT(ls.size(), 2u);
  EXPECT_EQ(ls[0], "x1,u,W,H,H_soliton,residual");
}

TEST(Commands, BoundsJsonAndUnknownMember) {
  cli::RunConfig c;
  c.g_spec = "affine:1,1";
  c.gm = true;
  c.format = cli::Format::json;
  std::ostringstream os;
  EXPECT_EQ(cli::cmd_bounds(c, os), 0);
  const auto j = nlohmann::json::parse(os.str());
  EXPECT_FALSE(j.empty());
  cli::RunConfig bad;
  bad.member = "nonsense";
  std::ostringstream sink;
  EXPECT_ANY_THROW(cli::cmd_zoo(bad, sink));
}

TEST(Commands, DirectrixLength) {
  cli::RunConfig c;
  c.curve = "directrix";
  c.S = 20.0;
  c.format = cli::Format::json;
  std::ostringstream os;
  EXPECT_EQ(cli::cmd_length(c, os), 0);
  EXPECT_NE(os.str().find("length"), std::string::npos);
}
