#include "cyclegas_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "cyclegas/cycle_weights.hpp"
#include "cyclegas/errors.hpp"
#include "cyclegas/observables.hpp"
#include "cyclegas/oracle.hpp"
#include "cyclegas/partition.hpp"
#include "cyclegas/sampler.hpp"
#include "cyclegas/units.hpp"

namespace cyclegas::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  double temperature = 1.0;
  double volume = 1.0;
  double fugacity = 1.0;
  std::optional<double> mass;
  std::string units = "natural";
  std::optional<std::string> format;
  std::optional<std::string> output;
  std::uint64_t seed = 1;
  int replicas = 1000;
  std::optional<int> s_max;
  int n_max = 10;
  std::optional<std::string> spectrum_file;
  std::string dispersion = "photon";
  bool decay = false;
  std::optional<double> nu;
  std::optional<double> delta_nu;
  int points = 200;
  double x_max = 15.0;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(fmt(x).c_str(), nullptr);
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void row(std::vector<double> values) { rows_.push_back(std::move(values)); }

  std::string csv() const {
    std::string out;
    for (std::size_t i = 0; i < header_.size(); ++i) out += (i ? "," : "") + header_[i];
    out += "\n";
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + fmt(r[i]);
      out += "\n";
    }
    return out;
  }

  json rows_json() const {
    json arr = json::array();
    for (const auto& r : rows_) {
      json o;
      for (std::size_t i = 0; i < r.size(); ++i) o[header_[i]] = num(r[i]);
      arr.push_back(o);
    }
    return arr;
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
};

struct Output {
  std::string text;
  std::string extension;
};

Output emit(const std::string& format, const Table& table, const json& doc) {
  if (format == "csv") return {table.csv(), "csv"};
  return {doc.dump(2) + "\n", "json"};
}

UnitsPolicy policy(const RunConfig& c) { return c.units == "si" ? UnitsPolicy::si() : UnitsPolicy::natural(); }

ThermoState natural_state(const RunConfig& c) {
  return policy(c).to_natural(ThermoState(c.temperature, c.volume, c.fugacity));
}

int s_max_or(const RunConfig& c, int fallback) { return c.s_max.value_or(fallback); }

void validate(const RunConfig& c) {
  auto usage = [](bool ok, const std::string& msg) {
    if (!ok) throw UsageError(msg);
  };
  usage(c.temperature > 0.0, "--temperature must be > 0");
  usage(c.volume > 0.0, "--volume must be > 0");
  usage(c.fugacity >= 0.0 && c.fugacity <= 1.0, "--fugacity must lie in [0, 1]");
  usage(!c.s_max || *c.s_max >= 1, "--s-max must be >= 1");
  usage(c.n_max >= 0, "--n-max must be >= 0");
  usage(c.replicas >= 1, "--replicas must be >= 1");
  usage(c.points >= 2, "--points must be >= 2");
  usage(c.x_max > 0.0, "--x-max must be > 0");
  usage(!c.mass || *c.mass > 0.0, "--mass must be > 0");
  usage(c.nu.has_value() == c.delta_nu.has_value(), "--nu and --delta-nu go together");
  if (c.format) usage(*c.format == "csv" || *c.format == "json", "--format must be csv or json");

  const bool massive = c.dispersion == "massive" || (c.command == "density" && c.mass);
  usage(c.dispersion == "photon" || c.dispersion == "massive", "--dispersion must be photon or massive");
  if (c.command == "weights" && c.dispersion == "massive") usage(c.mass.has_value(), "massive dispersion needs --mass");
  const bool photon_only = c.command == "spectrum" || c.command == "fluctuations" || c.command == "sample" ||
                           (c.command == "partition" && !c.spectrum_file) ||
                           (c.command == "weights" && !massive) ||
                           (c.command == "density" && !massive);
  if (photon_only) usage(c.fugacity == 1.0, "the photon gas has fugacity 1");
  if (c.spectrum_file) usage(c.command == "partition", "--spectrum-file only applies to partition");
}

Output cmd_weights(const RunConfig& c) {
  const ThermoState state = natural_state(c);
  const UnitsPolicy u = policy(c);
  const int s_max = s_max_or(c, 10);
  if (c.decay) {
    Table t({"s", "photon_ratio", "matter_ratio"});
    for (const auto& r : decay_comparison(std::max(s_max, 2))) t.row({double(r.s), r.photon_ratio, r.matter_ratio});
    return emit(c.format.value_or("csv"), t, json{{"decay", t.rows_json()}});
  }
  const Dispersion d = c.dispersion == "photon" ? Dispersion::photon()
                                                : Dispersion::massive(u.mass_to_natural(*c.mass));
  Table t({"s", "f_s"});
  for (int s = 1; s <= s_max; ++s) {
    t.row({double(s), u.number_density_from_natural(closed_form_cycle_weight(d, state, s).value)});
  }
  return emit(c.format.value_or("csv"), t, json{{"dispersion", c.dispersion}, {"weights", t.rows_json()}});
}

Output cmd_partition(const RunConfig& c) {
  Table t({"N", "Z_N"});
  json doc;
  if (c.spectrum_file) {
    const auto spectrum = load_mode_spectrum(*c.spectrum_file);
    const double beta = 1.0 / policy(c).temperature_to_natural(c.temperature);
    const auto cycles = spectrum_cycle_sums(spectrum, beta, std::max(c.n_max, 1));
    const auto table = canonical_partition_table(cycles, c.n_max);
    for (int n = 0; n <= c.n_max; ++n) t.row({double(n), table[n]});
    doc["grand_partition_product"] = num(grand_partition_product(spectrum, c.fugacity, beta));
    if (c.fugacity * std::exp(-beta * spectrum.min_energy()) <= 0.9) {
      doc["grand_partition_cycle"] = num(grand_partition_cycle(spectrum, c.fugacity, beta));
    }
  } else {
    const ThermoState state = natural_state(c);
    const int s_max = s_max_or(c, 50);
    const auto series = log_grand_partition_cycle_series(state, s_max);
    const auto product = grand_partition_product_form(state, s_max);
    doc["log_z_integral"] = num(log_grand_partition_integral(state));
    doc["log_z_cycle_series"] = num(series.value);
    doc["log_z_partial_sum"] = num(series.partial_sum);
    doc["log_z_tail_lower"] = num(series.tail_lower);
    doc["log_z_tail_upper"] = num(series.tail_upper);
    doc["log_z_product"] = num(product.back().log_partial_product);
    const auto cycles = CycleSumSequence::photon_continuum(state, std::max(c.n_max, 1));
    const auto table = canonical_partition_table(cycles, c.n_max);
    for (int n = 0; n <= c.n_max; ++n) t.row({double(n), table[n]});
  }
  doc["canonical"] = t.rows_json();
  return emit(c.format.value_or("csv"), t, doc);
}

Output cmd_spectrum(const RunConfig& c) {
  const ThermoState state = natural_state(c);
  const UnitsPolicy u = policy(c);
  const double t_nat = state.temperature();
  Table t({"nu", "u_nu", "x", "planck_shape"});
  for (int i = 1; i <= c.points; ++i) {
    const double x = c.x_max * i / c.points;
    const double nu = x * t_nat / (2.0 * M_PI);
    t.row({u.frequency_from_natural(nu), u.spectral_density_from_natural(planck_spectral_density(state, nu)), x,
           planck_shape(x)});
  }
  const double x_star = wien_peak_x();
  json doc;
  doc["wien_peak_x"] = num(x_star);
  doc["wien_peak_nu"] = num(u.frequency_from_natural(x_star * t_nat / (2.0 * M_PI)));
  doc["energy_density"] = num(u.energy_density_from_natural(mean_energy(state.with_volume(1.0))));
  doc["spectrum"] = t.rows_json();
  return emit(c.format.value_or("csv"), t, doc);
}

Output cmd_fluctuations(const RunConfig& c) {
  const ThermoState state = natural_state(c);
  const UnitsPolicy u = policy(c);
  const double e2 = u.energy_from_natural(1.0) * u.energy_from_natural(1.0);
  const auto report = energy_variance(state, s_max_or(c, 200));
  Table t({"s", "variance_contribution", "share"});
  for (const auto& [s, v] : report.per_cycle_contribution) t.row({double(s), v * e2, v / report.variance});
  json doc;
  doc["mean_energy"] = num(u.energy_from_natural(report.mean_energy));
  doc["variance"] = num(report.variance * e2);
  doc["variance_finite_difference"] = num(energy_variance_finite_difference(state) * e2);
  doc["relative_fluctuation"] = num(report.relative_fluctuation);
  doc["tail"] = num(report.tail * e2);
  if (c.nu) {
    const BandSpec band{u.frequency_to_natural(*c.nu), u.frequency_to_natural(*c.delta_nu), state.volume()};
    const auto b = band_fluctuation(state, band);
    doc["band"] = {{"occupation", num(b.occupation)},
                   {"mode_count", num(b.mode_count)},
                   {"mean_energy", num(u.energy_from_natural(b.mean_energy))},
                   {"variance", num(b.variance * e2)},
                   {"relative_fluctuation", num(b.relative_fluctuation)},
                   {"particle_term", num(b.particle_term)},
                   {"wave_term", num(b.wave_term)}};
  }
  doc["per_cycle"] = t.rows_json();
  return emit(c.format.value_or("csv"), t, doc);
}

Output cmd_density(const RunConfig& c) {
  const UnitsPolicy u = policy(c);
  json doc;
  Table t({"quantity", "value"});
  std::vector<std::pair<std::string, double>> values;
  if (c.mass) {
    const ThermoState state = natural_state(c);
    const double m = u.mass_to_natural(*c.mass);
    values.emplace_back("bose_number_density_cycle", u.number_density_from_natural(bose_number_density_cycle(state, m)));
    values.emplace_back("bose_number_density_integral",
                        u.number_density_from_natural(bose_number_density_integral(state, m)));
  } else {
    const ThermoState state = natural_state(c);
    values.emplace_back("photon_number_density", u.number_density_from_natural(photon_number_density(state)));
    values.emplace_back("coherence_volume_count", coherence_volume_photon_count(state));
  }
  std::string csv = "quantity,value\n";
  for (const auto& [k, v] : values) {
    doc[k] = num(v);
    csv += k + "," + fmt(v) + "\n";
  }
  if (c.format.value_or("json") == "csv") return {csv, "csv"};
  return {doc.dump(2) + "\n", "json"};
}

Output cmd_sample(const RunConfig& c) {
  const UnitsPolicy u = policy(c);
  SampleConfig config;
  config.seed = c.seed;
  config.replicas = c.replicas;
  config.s_max = s_max_or(c, 50);
  config.state = natural_state(c);
  SampleReport report = estimate_observables(config);
  if (c.format.value_or("json") == "csv") return {histogram_csv(report), "csv"};
  if (u.mode() == UnitSystem::si) {
    const double e = u.energy_from_natural(1.0);
    for (auto& [name, est] : report.estimates) {
      double scale = 1.0;
      if (name == "energy" || name == "mean_cycle_energy" || name.rfind("cycle_energy_s", 0) == 0) scale = e;
      if (name == "energy_variance") scale = e * e;
      est.mean *= scale;
      est.se *= scale;
    }
    report.config.state = u.from_natural(report.config.state);
  }
  return {to_json(report), "json"};
}

Output cmd_verify(const RunConfig&, bool& all_passed) {
  const auto results = run_verification();
  std::string out = "check,status,deviation,tolerance\n";
  all_passed = true;
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s,%s,%.3e,%.0e\n", r.name.c_str(), r.passed ? "PASS" : "FAIL", r.deviation,
                  r.tolerance);
    out += buf;
  }
  return {out, "csv"};
}

void write_output(const RunConfig& c, const Output& o, std::ostream& out) {
  std::optional<std::filesystem::path> path;
  if (c.output) {
    path = *c.output;
  } else if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
    path = std::filesystem::path(dir) / (c.command + "." + o.extension);
  }
  if (!path || *path == "-") {
    out << o.text;
    return;
  }
  if (path->has_parent_path()) std::filesystem::create_directories(path->parent_path());
  std::ofstream f(*path, std::ios::binary);
  require(static_cast<bool>(f), ErrorCode::io, "cannot open " + path->string());
  f << o.text;
  require(static_cast<bool>(f), ErrorCode::io, "cannot write " + path->string());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Cycle-expansion thermodynamics of the photon and ideal Bose gas", "cyclegas"};
  app.require_subcommand(1);
  app.add_option("--temperature", c.temperature, "Temperature (natural units, or K with --units si)");
  app.add_option("--volume", c.volume, "Volume (natural units, or m^3)");
  app.add_option("--fugacity", c.fugacity, "Fugacity z in [0, 1]");
  app.add_option("--mass", c.mass, "Boson mass (natural units, or kg)");
  app.add_option("--units", c.units)->check(CLI::IsMember({"natural", "si"}));
  app.add_option("--format", c.format, "csv or json");
  app.add_option("--output", c.output, "Output file; '-' for stdout");
  app.add_option("--seed", c.seed);
  app.add_option("--replicas", c.replicas);
  app.add_option("--s-max", c.s_max);
  app.add_option("--n-max", c.n_max);
  app.add_option("--spectrum-file", c.spectrum_file, "Mode spectrum, one 'energy degeneracy' pair per line");
  app.add_option("--dispersion", c.dispersion, "photon or massive");
  app.add_flag("--decay", c.decay, "Compare f_s/f_1 for photons and massive bosons");
  app.add_option("--nu", c.nu, "Band centre frequency");
  app.add_option("--delta-nu", c.delta_nu, "Band width");
  app.add_option("--points", c.points);
  app.add_option("--x-max", c.x_max);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"weights", "Cycle weights f_s"},
      {"partition", "log Z in its equivalent forms and the canonical table Z_N"},
      {"spectrum", "Planck spectrum"},
      {"fluctuations", "Energy variance by cycle size and band fluctuations"},
      {"density", "Photon or massive boson number density"},
      {"sample", "Monte Carlo estimates"},
      {"verify", "Cross-validation suite"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ERROR usage: " << e.what() << "\n";
    return kExitUsage;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    validate(c);
    Output o;
    bool passed = true;
    if (c.command == "weights") o = cmd_weights(c);
    else if (c.command == "partition") o = cmd_partition(c);
    else if (c.command == "spectrum") o = cmd_spectrum(c);
    else if (c.command == "fluctuations") o = cmd_fluctuations(c);
    else if (c.command == "density") o = cmd_density(c);
    else if (c.command == "sample") o = cmd_sample(c);
    else o = cmd_verify(c, passed);
    write_output(c, o, out);
    if (!passed) {
      err << "ERROR invariant: verification failed\n";
      return kExitComputation;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "ERROR usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "ERROR " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "ERROR internal: " << e.what() << "\n";
    return kExitComputation;
  }
}

}  // namespace cyclegas::cli
