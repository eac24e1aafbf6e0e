#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cyclegas/units.hpp"
#include "cyclegas_cli/cli.hpp"
#include "oracles.hpp"

namespace cyclegas::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(Cli, WeightsCsv) {
  const auto r = invoke({"weights", "--temperature", "1", "--s-max", "5", "--dispersion", "photon"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"s", "f_s"}));
  EXPECT_EQ(rows[1], (std::vector<std::string>{"1", "0.202642367"}));
  EXPECT_EQ(rows[2], (std::vector<std::string>{"2", "0.0253302959"}));
}

TEST(Cli, WeightsMassiveAndDecay) {
  auto r = invoke({"weights", "--dispersion", "massive", "--mass", "6.283185307179586", "--s-max", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(csv_rows(r.out)[1][1], "1");
  r = invoke({"weights", "--dispersion", "massive"});
  EXPECT_EQ(r.code, kExitUsage);
  r = invoke({"weights", "--decay", "--s-max", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"s", "photon_ratio", "matter_ratio"}));
  EXPECT_EQ(rows.size(), 5u);
}

TEST(Cli, DensityJson) {
  const auto r = invoke({"density", "--temperature", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_NEAR(doc["photon_number_density"].get<double>(), 0.24358766, 1e-8);
  EXPECT_NEAR(doc["coherence_volume_count"].get<double>(), 0.24358766, 1e-8);
  EXPECT_EQ(doc.begin().key(), "photon_number_density");
}

TEST(Cli, DensityMassive) {
  const auto r = invoke({"density", "--mass", "6.283185307179586", "--fugacity", "0.5", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(std::stod(rows[1][1]), 0.62484, 1e-5);
  EXPECT_NEAR(std::stod(rows[2][1]), std::stod(rows[1][1]), 1e-8);
}

TEST(Cli, UsageErrors) {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{{},
                                             {"bogus"},
                                             {"weights", "--temperature", "-1"},
                                             {"weights", "--temperature", "abc"},
                                             {"spectrum", "--fugacity", "0.5"},
                                             {"density", "--fugacity", "0.5"},
                                             {"weights", "--format", "xml"},
                                             {"fluctuations", "--nu", "1"},
                                             {"sample", "--units", "imperial"}}) {
    const auto r = invoke(args);
    EXPECT_EQ(r.code, kExitUsage) << (args.empty() ? "" : args[0]);
    EXPECT_EQ(r.err.rfind("ERROR usage:", 0), 0u) << r.err;
  }
}

TEST(Cli, ComputationalErrorsExitOne) {
  const auto r = invoke({"fluctuations", "--nu", "0.1", "--delta-nu", "0.001"});
  EXPECT_EQ(r.code, kExitComputation);
  EXPECT_EQ(r.err.rfind("ERROR degenerate_band:", 0), 0u) << r.err;
  const auto missing = invoke({"partition", "--spectrum-file", "/nonexistent/spectrum.txt"});
  EXPECT_EQ(missing.code, kExitComputation);
  EXPECT_EQ(missing.err.rfind("ERROR io:", 0), 0u) << missing.err;
}

TEST(Cli, PartitionRoutesAgree) {
  const auto r = invoke({"partition", "--format", "json", "--n-max", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["log_z_integral"].get<double>(), 0.219324542, 1e-9);
  EXPECT_NEAR(doc["log_z_cycle_series"].get<double>(), doc["log_z_integral"].get<double>(), 1e-9);
  EXPECT_EQ(doc["canonical"].size(), 5u);
  EXPECT_EQ(doc["canonical"][0]["Z_N"], 1.0);
}

TEST(Cli, PartitionFromSpectrumFile) {
  const auto path = std::filesystem::temp_directory_path() / "cyclegas_cli_spectrum.txt";
  {
    std::ofstream f(path);
    f << "# two modes\n0 1\n1 1\n";
  }
  const auto r = invoke({"partition", "--spectrum-file", path.string(), "--n-max", "2", "--fugacity", "0.5"});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  EXPECT_EQ(rows[3][0], "2");
  EXPECT_NEAR(std::stod(rows[3][1]), 1.5032147, 1e-7);
}

TEST(Cli, SpectrumColumns) {
  const auto r = invoke({"spectrum", "--points", "10", "--x-max", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"nu", "u_nu", "x", "planck_shape"}));
  EXPECT_EQ(rows[3][2], "3");
}

TEST(Cli, FluctuationsWithBand) {
  const auto r = invoke({"fluctuations", "--format", "json", "--nu", "1", "--delta-nu", "0.05", "--volume", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["variance"].get<double>(), 100.0 * 4.0 * M_PI * M_PI / 15.0, 1e-6);
  const auto& b = doc["band"];
  EXPECT_NEAR(b["particle_term"].get<double>() + b["wave_term"].get<double>(), b["relative_fluctuation"].get<double>(),
              1e-8 * b["relative_fluctuation"].get<double>());
}

TEST(Cli, SampleIsByteStable) {
  const std::vector<std::string> args = {"sample", "--replicas", "500", "--volume", "20", "--seed", "9"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto csv = invoke({"sample", "--replicas", "50", "--format", "csv", "--s-max", "3"});
  EXPECT_EQ(csv.out.rfind("s,photon_count\n", 0), 0u);
}

TEST(Cli, SiAndNaturalAgree) {
  const UnitsPolicy si = UnitsPolicy::si();
  const double v_si = si.volume_from_natural(5.0);
  const auto nat = invoke({"fluctuations", "--format", "json", "--temperature", "2", "--volume", "5"});
  const auto a = nlohmann::json::parse(nat.out);
  const double e = si.energy_from_natural(1.0);

  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v_si);
  const auto exact = invoke({"fluctuations", "--format", "json", "--units", "si", "--temperature", "2", "--volume", buf});
  ASSERT_EQ(exact.code, 0) << exact.err;
  const auto c = nlohmann::json::parse(exact.out);
  EXPECT_LT(testing::rel_diff(a["mean_energy"].get<double>() * e, c["mean_energy"].get<double>()), 1e-8);
  EXPECT_LT(testing::rel_diff(a["variance"].get<double>() * e * e, c["variance"].get<double>()), 1e-8);
  EXPECT_EQ(a["relative_fluctuation"], c["relative_fluctuation"]);

  const auto dn = nlohmann::json::parse(invoke({"density", "--temperature", "300"}).out);
  const auto ds = nlohmann::json::parse(invoke({"density", "--units", "si", "--temperature", "300"}).out);
  EXPECT_LT(testing::rel_diff(si.number_density_from_natural(dn["photon_number_density"].get<double>()),
                              ds["photon_number_density"].get<double>()),
            1e-8);
  // about 5.5e14 photons per cubic metre at 300 K
  EXPECT_NEAR(ds["photon_number_density"].get<double>() / 5.47e14, 1.0, 0.01);
}

TEST(Cli, OutputFileAndEnvironmentDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "cyclegas_cli_out";
  std::filesystem::remove_all(dir);
  auto r = invoke({"density", "--output", (dir / "d.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(std::filesystem::exists(dir / "d.json"));

  ::setenv(kOutputDirEnv, dir.c_str(), 1);
  r = invoke({"weights", "--s-max", "2"});
  ::unsetenv(kOutputDirEnv);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(std::filesystem::exists(dir / "weights.csv"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, VerifyPasses) {
  const auto r = invoke({"verify"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_GT(rows.size(), 5u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i][1], "PASS") << rows[i][0];
}

}  // namespace
}  // namespace cyclegas::cli
