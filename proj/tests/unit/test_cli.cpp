#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dlpt/cli/app.hpp"
#include "dlpt/oracle/scaling.hpp"

using namespace dlpt;
using namespace dlpt::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "dlpt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  for (std::string cell; std::getline(is, cell, ',');) out.push_back(cell);
  return out;
}

RunConfig spectrum_config(double delta, double q, int l = 0) {
  RunConfig cfg;
  cfg.command = Command::spectrum;
  cfg.alpha = delta * delta;
  cfg.beta = q * cfg.alpha * cfg.alpha;
  cfg.l = l;
  return cfg;
}

}  // namespace

TEST(CliVerify, DefaultSeedPassesAndIsDeterministic) {
  const auto a = run_cli({"verify"});
  const auto b = run_cli({"verify", "--seed", "42"});
  EXPECT_EQ(a.code, exit_ok) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(lines(a.out).front(), "check,measured,limit,bound,passed,detail");
}

TEST(CliVerify, TenSeedsPass) {
  for (int seed = 1; seed <= 10; ++seed) {
    RunConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(seed);
    const auto r = cmd_verify(cfg);
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed()) << "seed " << seed << ' ' << c.name << ' ' << c.measured;
  }
}

TEST(CliVerify, InjectedDegeneracyIsReported) {
  const auto r = run_cli({"verify", "--inject-degenerate"});
  EXPECT_EQ(r.code, exit_verification_failed);
  EXPECT_NE(r.out.find("DegenerateSpectrum levels 1 and 3"), std::string::npos);
  EXPECT_NE(r.err.find("injected_degenerate_spectrum"), std::string::npos);
}

TEST(CliSpectrum, HeaderAndGroundRow) {
  const auto r = run_cli({"spectrum", "--alpha", "0.0025", "--beta", "6.25e-07"});
  ASSERT_EQ(r.code, exit_ok) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 7u);
  EXPECT_EQ(ls[0], "l,n_r,m,C2,E0_coeff,E1_coeff,E2_coeff,E3_coeff,E_over_V0_at_delta");
  const auto row = split(ls[1]);
  ASSERT_EQ(row.size(), 9u);
  EXPECT_EQ(row[0], "0");
  EXPECT_EQ(row[1], "0");
  EXPECT_EQ(std::stod(row[3]), -0.1875);
  for (std::size_t i = 2; i < ls.size(); ++i) EXPECT_EQ(split(ls[i]).size(), 9u);
}

TEST(CliSpectrum, ZeroBetaColumns) {
  auto cfg = spectrum_config(0.05, 0.0);
  cfg.l_max = 2;
  const auto r = cmd_spectrum(cfg);
  ASSERT_EQ(r.rows.rows.size(), 18u);
  for (const auto& row : r.rows.rows) {
    EXPECT_EQ(std::get<double>(row[6]), 0.0);
    EXPECT_EQ(std::get<double>(row[7]), 0.0);
  }
}

TEST(CliSpectrum, JsonRoundTripIsLossless) {
  auto cfg = spectrum_config(0.037, 0.13, 0);
  cfg.l_max = 2;
  const auto report = cmd_spectrum(cfg);
  std::ostringstream os;
  write_json(os, report);
  const auto doc = nlohmann::ordered_json::parse(os.str());
  EXPECT_EQ(rows_from_json(doc), report.rows);
  EXPECT_TRUE(doc.contains("config"));
  EXPECT_TRUE(doc.at("checks").is_array());
}

TEST(CliSpectrum, CsvRealsRoundTrip) {
  const auto report = cmd_spectrum(spectrum_config(0.037, 0.13, 1));
  std::ostringstream os;
  write_csv(os, report);
  const auto ls = lines(os.str());
  for (std::size_t i = 0; i < report.rows.rows.size(); ++i) {
    const auto cells = split(ls[i + 1]);
    for (std::size_t j = 2; j < cells.size(); ++j) {
      EXPECT_EQ(std::stod(cells[j]), std::get<double>(report.rows.rows[i][j]));
    }
  }
}

TEST(CliCompare, ZeroBetaIsExact) {
  auto cfg = spectrum_config(0.05, 0.0);
  cfg.command = Command::compare;
  const auto r = cmd_compare(cfg);
  ASSERT_EQ(r.rows.columns.size(), 7u);
  for (const auto& row : r.rows.rows) EXPECT_LE(std::get<double>(row[5]), 1e-12);
}

TEST(CliCompare, ErrorAndResidualShrinkWithDelta) {
  const std::vector<double> deltas{0.05, 0.03, 0.02, 0.01};
  std::vector<std::vector<double>> err(6), res(6);
  for (double d : deltas) {
    auto cfg = spectrum_config(d, 0.1);
    cfg.command = Command::compare;
    const auto r = cmd_compare(cfg);
    for (std::size_t n = 0; n < 6; ++n) {
      err[n].push_back(std::get<double>(r.rows.rows[n][5]));
      res[n].push_back(std::get<double>(r.rows.rows[n][6]));
    }
  }
  for (std::size_t n = 0; n < 6; ++n) {
    for (std::size_t i = 1; i < deltas.size(); ++i) EXPECT_LT(err[n][i], err[n][i - 1]);
    EXPECT_GE(oracle::loglog_slope(deltas, res[n]), 2.7);
  }
}

TEST(CliBands, SlopesAndErrors) {
  auto cfg = spectrum_config(0.04, 0.1);
  cfg.command = Command::bands;
  cfg.l_max = 2;
  const auto r = cmd_bands(cfg);
  for (const auto& row : r.rows.rows) {
    EXPECT_NEAR(std::get<double>(row[1]), -0.2, 1e-10);
    EXPECT_LT(std::get<double>(row[4]), 1e-10);
  }
  auto zero = spectrum_config(0.04, 0.0);
  zero.command = Command::bands;
  zero.l_max = 3;
  for (const auto& row : cmd_bands(zero).rows.rows) EXPECT_NEAR(std::get<double>(row[1]), 0.0, 1e-14);

  EXPECT_EQ(run_cli({"bands", "--l", "1"}).code, exit_config_error);
  EXPECT_EQ(run_cli({"bands", "--l-max", "1"}).code, exit_config_error);
  EXPECT_EQ(run_cli({"bands", "--l-max", "2", "--beta", "0.1"}).code, exit_ok);
}

TEST(CliConfig, ValidationErrorsExitTwo) {
  EXPECT_EQ(run_cli({"spectrum", "--dim", "12", "--states", "6"}).code, exit_config_error);
  EXPECT_EQ(run_cli({"spectrum", "--alpha", "-1"}).code, exit_config_error);
  EXPECT_EQ(run_cli({"spectrum", "--format", "xml"}).code, exit_config_error);
  EXPECT_EQ(run_cli({}).code, exit_config_error);
  EXPECT_EQ(run_cli({"spectrum", "--l", "3", "--l-max", "1"}).code, exit_config_error);
}

TEST(CliConfig, FileValuesAndFlagPrecedence) {
  const std::string path = ::testing::TempDir() + "dlpt_config.ini";
  {
    std::ofstream f(path);
    f << "alpha=0.0016\nbeta=2.56e-07\nstates=3\nformat=json\n";
  }
  const auto from_file = run_cli({"spectrum", "--config", path});
  ASSERT_EQ(from_file.code, exit_ok) << from_file.err;
  const auto doc = nlohmann::ordered_json::parse(from_file.out);
  EXPECT_EQ(doc.at("rows").size(), 3u);
  EXPECT_EQ(doc.at("config").at("alpha").get<double>(), 0.0016);

  const auto overridden = run_cli({"spectrum", "--config", path, "--states", "2", "--format", "csv"});
  ASSERT_EQ(overridden.code, exit_ok);
  EXPECT_EQ(lines(overridden.out).size(), 3u);

  {
    std::ofstream f(path);
    f << "unknown_key=1\n";
  }
  EXPECT_EQ(run_cli({"spectrum", "--config", path}).code, exit_config_error);
  std::remove(path.c_str());
}

TEST(CliOutput, WritesToFile) {
  const std::string path = ::testing::TempDir() + "dlpt_out.csv";
  const auto r = run_cli({"compare", "--beta", "0.01", "--alpha", "0.01", "--out", path});
  ASSERT_EQ(r.code, exit_ok);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  EXPECT_EQ(header, "state,E_exact,E_order1,E_order2,E_order3,abs_err_order3,residual_norm");
  std::remove(path.c_str());
}
