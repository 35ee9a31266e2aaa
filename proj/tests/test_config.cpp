#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "sfpds/config.hpp"
#include "sfpds/error.hpp"
#include "sfpds/report.hpp"

namespace sfpds {
namespace {

TEST(Config, ParsesKeysAndComments) {
  const RunConfig c = parse_config(
      "# H4 defaults\n"
      "spacings = 1.5, 2.0 ,2.5\n"
      "k_max = 6\n"
      "\n"
      "shots = 8192   # per batch\n"
      "seed = 7\n"
      "spam_p = 0.001\n"
      "mitigation_p = 0.001\n"
      "mode = parallel\n"
      "output_dir = out\n");
  ASSERT_TRUE(c.spacings.has_value());
  EXPECT_EQ(*c.spacings, (std::vector<double>{1.5, 2.0, 2.5}));
  EXPECT_EQ(c.k_max, 6u);
  EXPECT_EQ(c.shots, 8192u);
  EXPECT_EQ(c.seed, 7u);
  EXPECT_DOUBLE_EQ(c.spam_p, 1e-3);
  ASSERT_TRUE(c.mitigation_p.has_value());
  EXPECT_EQ(c.mode, Mode::kParallel);
  EXPECT_EQ(c.resolved_output_dir(), "out");
  EXPECT_NO_THROW(c.validate());
  const SamplingOptions s = c.sampling();
  EXPECT_EQ(s.shots, 8192u);
  EXPECT_EQ(s.mode, Mode::kParallel);
}

TEST(Config, DefaultsAndOverrides) {
  RunConfig c;
  EXPECT_EQ(c.k_max, 10u);
  EXPECT_EQ(c.shots, 100'000u);
  EXPECT_EQ(c.mode, Mode::kExact);
  EXPECT_FALSE(c.mitigation_p.has_value());
  apply_setting(c, "mitigation_p", "0.01");
  apply_setting(c, "mitigation_p", "none");
  EXPECT_FALSE(c.mitigation_p.has_value());
  EXPECT_EQ(parse_mode("serial"), Mode::kSerial);
  EXPECT_EQ(to_string(Mode::kParallel), "parallel");
}

TEST(Config, ErrorsNameTheLine) {
  try {
    parse_config("k_max = 4\nshots = many\n");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("config line 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_config("colour = blue\n"), ValidationError);
  EXPECT_THROW(parse_config("k_max 4\n"), ValidationError);
  EXPECT_THROW(parse_config("mode = quantum\n"), ValidationError);
  EXPECT_THROW(parse_config("spacings = 1.0,,2.0\n"), ValidationError);
  EXPECT_THROW(read_config("/nonexistent/sfpds.cfg"), ValidationError);
}

TEST(Config, ValidationRules) {
  RunConfig both = parse_config("spacings = 2,2,2\nfcidump = h4.fcidump\n");
  EXPECT_EQ(both.source_count(), 2u);
  EXPECT_THROW(both.validate(), ValidationError);
  EXPECT_THROW(load_integrals(both), ValidationError);
  EXPECT_THROW(parse_config("k_max = 0\n").validate(), ValidationError);
  EXPECT_THROW(parse_config("spam_p = 0.5\n").validate(), ValidationError);
  EXPECT_THROW(parse_config("mitigation_p = -0.1\n").validate(), ValidationError);
  EXPECT_THROW(parse_config("mode = serial\nshots = 0\n").validate(), ValidationError);
}

TEST(Config, OutputDirectoryFromEnvironment) {
  RunConfig c;
  ::setenv(kOutputDirEnv, "/tmp/sfpds_env_dir", 1);
  EXPECT_EQ(c.resolved_output_dir(), "/tmp/sfpds_env_dir");
  ::unsetenv(kOutputDirEnv);
  EXPECT_EQ(c.resolved_output_dir(), ".");
}

TEST(Pipeline, ErrorsCarryStageName) {
  RunConfig c;
  c.spacings = std::vector<double>{2.0, -1.0, 2.0};
  try {
    run_pipeline(c);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("stage 'integrals'"), std::string::npos) << e.what();
  }
}

TEST(Pipeline, ExactRunReportsAllFiles) {
  RunConfig c;
  c.k_max = 3;
  const ReportBundle b = run_pipeline(c);
  EXPECT_EQ(b.measurement_csv.substr(0, b.measurement_csv.find('\n')),
            "sector,original,qwc,tapered,tapered_qwc,tapered_qwc_parallel");
  EXPECT_NE(b.measurement_csv.find("singlet,4223,441,527,122,31"), std::string::npos) << b.measurement_csv;
  EXPECT_NE(b.measurement_csv.find("triplet,4223,441,379,66,17"), std::string::npos) << b.measurement_csv;
  EXPECT_EQ(std::count(b.convergence_csv.begin(), b.convergence_csv.end(), '\n'), 4);
  EXPECT_EQ(b.exact.method, "exact_diagonalization");
  EXPECT_EQ(b.selected.method, "pds3_exact");
  EXPECT_GE(b.selected.s0, b.exact.s0 - 1e-8);

  const auto dir = std::filesystem::temp_directory_path() / "sfpds_report_test";
  std::filesystem::remove_all(dir);
  write_reports(b, dir.string());
  for (const char* f : {"measurement.csv", "convergence.csv", "energies.csv", "summary.txt"})
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  std::ifstream in(dir / "energies.csv");
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "method,S0,S1,T0,S0_S1_eV,S0_T0_eV,fission_ratio");
  std::filesystem::remove_all(dir);
}

TEST(Pipeline, ParallelRerunsAreBitIdentical) {
  RunConfig c;
  c.k_max = 3;
  c.mode = Mode::kParallel;
  c.shots = 2000;
  c.seed = 99;
  c.spam_p = 1e-3;
  c.mitigation_p = 1e-3;
  const ReportBundle a = run_pipeline(c);
  const ReportBundle b = run_pipeline(c);
  EXPECT_EQ(a.energies_csv, b.energies_csv);
  EXPECT_EQ(a.summary, b.summary);
  c.seed = 100;
  EXPECT_NE(run_pipeline(c).energies_csv, a.energies_csv);
}

}  // namespace
}  // namespace sfpds
