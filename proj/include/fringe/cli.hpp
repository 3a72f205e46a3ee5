#pragma once

// Command-line front end: config parsing, experiment dispatch, and
// deterministic CSV/JSON writers.  Kept header-only so the test suite can
// drive parse/execute directly without spawning processes.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "fringe/constants.hpp"
#include "fringe/errors.hpp"
#include "fringe/experiments.hpp"
#include "fringe/kinematics.hpp"
#include "fringe/philox.hpp"
#include "fringe/sampler.hpp"
#include "fringe/version.hpp"

namespace fringe::cli {

/// Configuration or usage problem (maps to process exit code 2).
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fully merged run description: subcommand, sampling controls, and the
/// experiment parameters as raw strings (typed on access).
struct RunConfig {
  std::string subcommand;
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000;
  std::uint64_t bins = 256;
  std::string out = "run";
  std::map<std::string, std::string> params;
};

/// Values captured from command-line flags; set fields override the file.
struct FlagOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> bins;
  std::optional<std::string> out;
  std::vector<std::string> params;  // repeated "key=value" entries
};

namespace detail {

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {
      "kinematics", "two-slit", "mach-zehnder", "cavity", "two-laser"};
  return names;
}

struct ParamInfo {
  const char* key;
  bool required;
};

/// Parameter vocabulary per subcommand.  Keys carry SI-unit suffixes so a
/// config file reads unambiguously.
inline const std::vector<ParamInfo>& param_table(const std::string& subcommand) {
  static const std::map<std::string, std::vector<ParamInfo>> table = {
      {"kinematics",
       {{"rest_mass_kg", true}, {"speed_mps", false}, {"beta", false}}},
      {"two-slit",
       {{"wavelength_m", true},
        {"slit_separation_m", true},
        {"slit_width_m", true},
        {"screen_distance_m", true},
        {"screen_halfwidth_m", true},
        {"open_a", false},
        {"open_b", false},
        {"grid_points", false}}},
      {"mach-zehnder", {{"phase_rad", true}, {"second_beamsplitter", false}}},
      {"cavity",
       {{"cavity_length_m", true},
        {"wavelength_m", true},
        {"resonance_tolerance", false},
        {"grid_points", false}}},
      {"two-laser",
       {{"wavelength_m", true},
        {"slit_separation_m", true},
        {"screen_distance_m", true},
        {"screen_halfwidth_m", true},
        {"relative_phase_rad", true},
        {"grid_points", false}}},
  };
  auto found = table.find(subcommand);
  if (found == table.end()) {
    std::string message = "unknown subcommand '" + subcommand + "'; valid: ";
    for (std::size_t i = 0; i < subcommands().size(); ++i) {
      if (i > 0) message += ", ";
      message += subcommands()[i];
    }
    throw config_error(message);
  }
  return found->second;
}

inline std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

/// Shortest round-trip decimal form; locale-independent and deterministic.
inline std::string format_double(double value) {
  std::array<char, 32> buffer{};
  auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), ptr);
}

inline double parse_double(const std::string& key, const std::string& text) {
  const std::string value = trim(text);
  if (value.empty()) throw config_error(key + ": empty value");
  std::size_t used = 0;
  double parsed = 0;
  try {
    parsed = std::stod(value, &used);
  } catch (const std::exception&) {
    throw config_error(key + ": cannot parse '" + value + "' as a number");
  }
  if (used != value.size())
    throw config_error(key + ": trailing characters in '" + value + "'");
  if (!std::isfinite(parsed))
    throw config_error(key + ": value must be finite");
  return parsed;
}

/// Nonnegative integer; scientific notation (e.g. 1e6) is accepted as long
/// as the value is integral.
inline std::uint64_t parse_count(const std::string& key, const std::string& text) {
  const std::string value = trim(text);
  if (!value.empty() && value.find_first_not_of("0123456789") == std::string::npos) {
    std::uint64_t parsed = 0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec == std::errc{} && ptr == value.data() + value.size()) return parsed;
    throw config_error(key + ": integer out of range: '" + value + "'");
  }
  const double parsed = parse_double(key, value);
  if (parsed < 0) throw config_error(key + ": must be >= 0");
  if (parsed > 9.007199254740992e15)
    throw config_error(key + ": too large for an exact integer");
  const double rounded = std::nearbyint(parsed);
  if (rounded != parsed)
    throw config_error(key + ": expected an integer, got '" + value + "'");
  return static_cast<std::uint64_t>(rounded);
}

inline bool parse_bool(const std::string& key, const std::string& text) {
  std::string value = trim(text);
  std::transform(value.begin(), value.end(), value.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw config_error(key + ": cannot parse '" + trim(text) + "' as a boolean");
}

inline std::pair<std::string, std::string> split_key_value(const std::string& entry) {
  const auto eq = entry.find('=');
  if (eq == std::string::npos)
    throw config_error("expected key=value, got '" + entry + "'");
  const std::string key = trim(entry.substr(0, eq));
  const std::string value = trim(entry.substr(eq + 1));
  if (key.empty()) throw config_error("empty key in '" + entry + "'");
  return {key, value};
}

/// Renders a JSON scalar back to the flat-string form used by RunConfig.
inline std::string json_scalar_to_string(const std::string& key,
                                         const nlohmann::ordered_json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_number_integer()) return std::to_string(value.get<std::int64_t>());
  if (value.is_number_unsigned()) return std::to_string(value.get<std::uint64_t>());
  if (value.is_number_float()) return format_double(value.get<double>());
  throw config_error(key + ": expected a scalar value");
}

/// Reads either a flat key=value file ('#' comments, blank lines allowed) or
/// a JSON object.  A JSON object with a top-level "config" object (as written
/// by the run summary) is unwrapped so a summary file can be replayed as-is.
inline std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> entries;
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::ordered_json root;
    try {
      root = nlohmann::ordered_json::parse(body);
    } catch (const nlohmann::json::parse_error& error) {
      throw config_error(std::string("malformed JSON config: ") + error.what());
    }
    if (!root.is_object()) throw config_error("JSON config must be an object");
    if (root.contains("config") && root["config"].is_object()) root = root["config"];
    for (const auto& [key, value] : root.items())
      entries[key] = json_scalar_to_string(key, value);
    return entries;
  }
  std::istringstream stream(body);
  std::string line;
  while (std::getline(stream, line)) {
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto [key, value] = split_key_value(stripped);
    entries[key] = value;
  }
  return entries;
}

}  // namespace detail

/// Reads a config file into memory; missing/unreadable files are usage errors.
inline std::string read_config_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw config_error("cannot open config file '" + path + "'");
  std::ostringstream contents;
  contents << stream.rdbuf();
  return contents.str();
}

/// Merges a config file (optional) with flag overrides and validates the
/// result against the subcommand's parameter vocabulary.  Every missing or
/// unknown key is reported in a single message.
inline RunConfig parse_config(const std::string& subcommand,
                              const std::string& config_text,
                              const FlagOverrides& overrides) {
  const auto& table = detail::param_table(subcommand);

  RunConfig config;
  config.subcommand = subcommand;

  std::map<std::string, std::string> entries;
  if (!detail::trim(config_text).empty())
    entries = detail::parse_config_text(config_text);
  for (const auto& entry : overrides.params) {
    const auto [key, value] = detail::split_key_value(entry);
    entries[key] = value;
  }

  if (auto found = entries.find("subcommand"); found != entries.end()) {
    if (found->second != subcommand)
      throw config_error("config file is for subcommand '" + found->second +
                         "', not '" + subcommand + "'");
    entries.erase(found);
  }

  // Reserved sampling keys; flags win over file values.
  if (auto found = entries.find("seed"); found != entries.end()) {
    config.seed = detail::parse_count("seed", found->second);
    entries.erase(found);
  }
  if (auto found = entries.find("samples"); found != entries.end()) {
    config.samples = detail::parse_count("samples", found->second);
    entries.erase(found);
  }
  if (auto found = entries.find("bins"); found != entries.end()) {
    config.bins = detail::parse_count("bins", found->second);
    entries.erase(found);
  }
  if (auto found = entries.find("out"); found != entries.end()) {
    config.out = found->second;
    entries.erase(found);
  }
  if (overrides.seed) config.seed = *overrides.seed;
  if (overrides.samples) config.samples = *overrides.samples;
  if (overrides.bins) config.bins = *overrides.bins;
  if (overrides.out) config.out = *overrides.out;

  std::vector<std::string> missing;
  for (const auto& info : table)
    if (info.required && entries.find(info.key) == entries.end())
      missing.emplace_back(info.key);

  std::vector<std::string> unknown;
  for (const auto& [key, value] : entries) {
    const bool known = std::any_of(table.begin(), table.end(),
                                   [&](const auto& info) { return key == info.key; });
    if (known)
      config.params[key] = value;
    else
      unknown.emplace_back(key);
  }

  if (!missing.empty() || !unknown.empty()) {
    std::string message;
    if (!missing.empty()) {
      message += "missing required keys for " + subcommand + ":";
      for (const auto& key : missing) message += " " + key;
    }
    if (!unknown.empty()) {
      if (!message.empty()) message += "; ";
      message += "unknown keys:";
      for (const auto& key : unknown) message += " " + key;
      message += " (valid:";
      for (const auto& info : table) message += std::string(" ") + info.key;
      message += ")";
    }
    throw config_error(message);
  }

  if (config.subcommand == "kinematics") {
    const bool has_speed = config.params.count("speed_mps") > 0;
    const bool has_beta = config.params.count("beta") > 0;
    if (has_speed == has_beta)
      throw config_error("kinematics needs exactly one of speed_mps or beta");
  }
  if (config.bins == 0) throw config_error("bins: must be >= 1");

  return config;
}

namespace detail {

inline double require_double(const RunConfig& config, const std::string& key) {
  return parse_double(key, config.params.at(key));
}

inline double optional_double(const RunConfig& config, const std::string& key,
                              double fallback) {
  auto found = config.params.find(key);
  return found == config.params.end() ? fallback : parse_double(key, found->second);
}

inline std::uint64_t optional_count(const RunConfig& config, const std::string& key,
                                    std::uint64_t fallback) {
  auto found = config.params.find(key);
  return found == config.params.end() ? fallback : parse_count(key, found->second);
}

inline bool optional_bool(const RunConfig& config, const std::string& key,
                          bool fallback) {
  auto found = config.params.find(key);
  return found == config.params.end() ? fallback : parse_bool(key, found->second);
}

/// CSV cell for a double; integers render without exponent noise.
inline void append_csv_row(std::string& csv, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) csv += ',';
    csv += cells[i];
  }
  csv += '\n';
}

inline nlohmann::ordered_json fit_to_json(const FitReport& fit) {
  return {{"chi_square_per_dof", fit.chi_square_per_dof},
          {"dof", fit.dof},
          {"bins_merged", fit.bins_merged}};
}

/// Shared tail for the binned experiments: sample, bin, fit, and emit the
/// per-bin CSV plus the sampling/fit blocks of the JSON summary.
struct BinnedRun {
  Histogram histogram;
  std::optional<FitReport> fit;
  std::string csv;
};

inline BinnedRun run_binned(const ScreenIntensity& intensity, double range_min,
                            double range_max, const RunConfig& config) {
  BinnedRun result;
  const SeededStream stream{config.seed, 0};
  const std::vector<double> positions = sample_positions(
      intensity, static_cast<std::size_t>(config.samples), stream);
  result.histogram = accumulate(positions, static_cast<std::size_t>(config.bins),
                                range_min, range_max);
  if (result.histogram.total >= 100)
    result.fit = goodness_of_fit(result.histogram, intensity);

  result.csv =
      "bin_left_edge_m,bin_right_edge_m,count,analytic_density_per_m,"
      "expected_count\n";
  const TrapezoidCdf cdf(intensity);
  const std::vector<double> expected = expected_counts(result.histogram, intensity);
  for (std::size_t i = 0; i < result.histogram.counts.size(); ++i) {
    const double left = result.histogram.bin_edges[i];
    const double right = result.histogram.bin_edges[i + 1];
    const double width = right - left;
    const double mass = cdf.segment_mass(left, right);
    append_csv_row(result.csv,
                   {format_double(left), format_double(right),
                    std::to_string(result.histogram.counts[i]),
                    format_double(mass / width), format_double(expected[i])});
  }
  return result;
}

}  // namespace detail

/// Everything a run produces, before any file is written.
struct RunOutput {
  nlohmann::ordered_json summary;
  std::string csv;
};

/// Executes a run and renders its outputs in memory.  Throws
/// std::domain_error / std::invalid_argument on parameter problems and
/// fringe::analysis_error when a result is undefined for valid inputs.
inline RunOutput execute(const RunConfig& config) {
  using nlohmann::ordered_json;

  RunOutput output;
  ordered_json& summary = output.summary;
  summary["artifact"] = {{"name", kArtifactName}, {"version", kArtifactVersion}};
  summary["generator"] = kGeneratorId;

  ordered_json echo;
  echo["subcommand"] = config.subcommand;
  echo["seed"] = config.seed;
  echo["samples"] = config.samples;
  echo["bins"] = config.bins;

  if (config.subcommand == "kinematics") {
    const double rest_mass = detail::require_double(config, "rest_mass_kg");
    const bool has_beta = config.params.count("beta") > 0;
    const double speed = has_beta
                             ? detail::require_double(config, "beta") * si::c
                             : detail::require_double(config, "speed_mps");
    echo["rest_mass_kg"] = rest_mass;
    if (has_beta)
      echo["beta"] = detail::require_double(config, "beta");
    else
      echo["speed_mps"] = speed;
    summary["config"] = echo;

    const ParticleState particle{rest_mass, speed};
    const KinematicState state = kinematic_state(particle);

    ordered_json results;
    results["gamma"] = state.gamma;
    results["relativistic_mass_kg"] = state.relativistic_mass;
    results["momentum_kg_mps"] = state.momentum;
    results["total_energy_j"] = state.total_energy;
    results["internal_energy_j"] = state.internal_energy;
    results["kinetic_term_j"] = state.kinetic_term;
    results["direction_angle_cos"] = state.direction_angle_cos;

    output.csv = "quantity,value\n";
    detail::append_csv_row(output.csv, {"gamma", detail::format_double(state.gamma)});
    detail::append_csv_row(
        output.csv,
        {"relativistic_mass_kg", detail::format_double(state.relativistic_mass)});
    detail::append_csv_row(output.csv,
                           {"momentum_kg_mps", detail::format_double(state.momentum)});
    detail::append_csv_row(
        output.csv, {"total_energy_j", detail::format_double(state.total_energy)});
    detail::append_csv_row(
        output.csv,
        {"internal_energy_j", detail::format_double(state.internal_energy)});
    detail::append_csv_row(output.csv,
                           {"kinetic_term_j", detail::format_double(state.kinetic_term)});
    detail::append_csv_row(
        output.csv,
        {"direction_angle_cos", detail::format_double(state.direction_angle_cos)});

    if (speed > 0) {
      const WavelengthTriple triple = wavelengths(particle);
      results["wavelengths"] = {{"compton_m", triple.compton},
                                {"transformed_compton_m", triple.transformed_compton},
                                {"de_broglie_m", triple.de_broglie}};
      detail::append_csv_row(output.csv,
                             {"compton_m", detail::format_double(triple.compton)});
      detail::append_csv_row(
          output.csv,
          {"transformed_compton_m", detail::format_double(triple.transformed_compton)});
      detail::append_csv_row(output.csv,
                             {"de_broglie_m", detail::format_double(triple.de_broglie)});
    } else {
      results["wavelengths"] = nullptr;
    }
    summary["results"] = results;
    return output;
  }

  if (config.subcommand == "two-slit") {
    TwoSlitConfig experiment;
    experiment.wavelength = detail::require_double(config, "wavelength_m");
    experiment.slit_separation = detail::require_double(config, "slit_separation_m");
    experiment.slit_width = detail::require_double(config, "slit_width_m");
    experiment.screen_distance = detail::require_double(config, "screen_distance_m");
    experiment.screen_halfwidth = detail::require_double(config, "screen_halfwidth_m");
    experiment.open_a = detail::optional_bool(config, "open_a", true);
    experiment.open_b = detail::optional_bool(config, "open_b", true);
    const std::uint64_t grid_points = detail::optional_count(config, "grid_points", 4097);

    echo["wavelength_m"] = experiment.wavelength;
    echo["slit_separation_m"] = experiment.slit_separation;
    echo["slit_width_m"] = experiment.slit_width;
    echo["screen_distance_m"] = experiment.screen_distance;
    echo["screen_halfwidth_m"] = experiment.screen_halfwidth;
    echo["open_a"] = experiment.open_a;
    echo["open_b"] = experiment.open_b;
    echo["grid_points"] = grid_points;
    summary["config"] = echo;

    const ScreenIntensity intensity =
        two_slit_intensity(experiment, static_cast<std::size_t>(grid_points));

    ordered_json results;
    const double period = experiment.wavelength * experiment.screen_distance /
                          experiment.slit_separation;
    const double window =
        std::min(period / 2, experiment.screen_halfwidth);
    results["visibility_central_period"] = visibility(intensity, window);
    if (experiment.open_a && experiment.open_b) {
      results["fringe_spacing_m"] = fringe_spacing(intensity);
      results["fringe_spacing_analytic_m"] = period;
    } else {
      results["fringe_spacing_m"] = nullptr;
      results["fringe_spacing_analytic_m"] = period;
    }

    detail::BinnedRun binned = detail::run_binned(
        intensity, -experiment.screen_halfwidth, experiment.screen_halfwidth, config);
    results["counted"] = binned.histogram.total;
    results["overflow"] = binned.histogram.overflow;
    summary["results"] = results;
    summary["fit"] = binned.fit ? detail::fit_to_json(*binned.fit)
                                : ordered_json(nullptr);
    output.csv = std::move(binned.csv);
    return output;
  }

  if (config.subcommand == "mach-zehnder") {
    MachZehnderConfig experiment;
    experiment.phase_difference = detail::require_double(config, "phase_rad");
    experiment.second_beamsplitter_present =
        detail::optional_bool(config, "second_beamsplitter", true);

    echo["phase_rad"] = experiment.phase_difference;
    echo["second_beamsplitter"] = experiment.second_beamsplitter_present;
    summary["config"] = echo;

    const DetectorProbabilities probabilities = mach_zehnder_probabilities(experiment);
    const SeededStream stream{config.seed, 0};
    const auto [hits_1, hits_2] = sample_detectors(
        probabilities, static_cast<std::size_t>(config.samples), stream);

    ordered_json results;
    results["p1"] = probabilities.p1;
    results["p2"] = probabilities.p2;
    results["detector_1_count"] = hits_1;
    results["detector_2_count"] = hits_2;
    summary["results"] = results;

    const double total = static_cast<double>(config.samples);
    output.csv = "detector,probability,count,expected_count\n";
    detail::append_csv_row(output.csv,
                           {"1", detail::format_double(probabilities.p1),
                            std::to_string(hits_1),
                            detail::format_double(probabilities.p1 * total)});
    detail::append_csv_row(output.csv,
                           {"2", detail::format_double(probabilities.p2),
                            std::to_string(hits_2),
                            detail::format_double(probabilities.p2 * total)});
    return output;
  }

  if (config.subcommand == "cavity") {
    CavityConfig experiment;
    experiment.cavity_length = detail::require_double(config, "cavity_length_m");
    experiment.wavelength = detail::require_double(config, "wavelength_m");
    const double tolerance = detail::optional_double(config, "resonance_tolerance",
                                                     kDefaultResonanceTolerance);

    echo["cavity_length_m"] = experiment.cavity_length;
    echo["wavelength_m"] = experiment.wavelength;
    echo["resonance_tolerance"] = tolerance;

    const ResonanceResult resonance = resonance_check(
        experiment.cavity_length, experiment.wavelength, tolerance);

    // Default grid places every node of the resonant mode exactly on a grid
    // point: (points - 1) is a multiple of the mode number.
    const auto mode = static_cast<std::uint64_t>(resonance.mode_number);
    const std::uint64_t segments_per_antinode = std::max<std::uint64_t>(1, 512 / mode);
    const std::uint64_t default_points = mode * segments_per_antinode + 1;
    const std::uint64_t grid_points =
        detail::optional_count(config, "grid_points", default_points);
    echo["grid_points"] = grid_points;
    summary["config"] = echo;

    const ScreenIntensity intensity = cavity_profile(
        experiment, static_cast<std::size_t>(grid_points), tolerance);

    ordered_json results;
    results["mode_number"] = resonance.mode_number;
    results["length_offset_m"] =
        experiment.cavity_length -
        static_cast<double>(resonance.mode_number) * experiment.wavelength / 2;
    ordered_json nodes = ordered_json::array();
    for (long node = 0; node <= resonance.mode_number; ++node)
      nodes.push_back(static_cast<double>(node) * experiment.wavelength / 2);
    results["node_positions_m"] = nodes;

    detail::BinnedRun binned =
        detail::run_binned(intensity, 0.0, experiment.cavity_length, config);
    results["counted"] = binned.histogram.total;
    results["overflow"] = binned.histogram.overflow;
    summary["results"] = results;
    summary["fit"] = binned.fit ? detail::fit_to_json(*binned.fit)
                                : ordered_json(nullptr);
    output.csv = std::move(binned.csv);
    return output;
  }

  if (config.subcommand == "two-laser") {
    const double wavelength = detail::require_double(config, "wavelength_m");
    const double separation = detail::require_double(config, "slit_separation_m");
    const double distance = detail::require_double(config, "screen_distance_m");
    const double halfwidth = detail::require_double(config, "screen_halfwidth_m");
    const double phase = detail::require_double(config, "relative_phase_rad");
    const std::uint64_t grid_points = detail::optional_count(config, "grid_points", 4097);

    echo["wavelength_m"] = wavelength;
    echo["slit_separation_m"] = separation;
    echo["screen_distance_m"] = distance;
    echo["screen_halfwidth_m"] = halfwidth;
    echo["relative_phase_rad"] = phase;
    echo["grid_points"] = grid_points;
    summary["config"] = echo;

    const ScreenIntensity intensity =
        two_laser_intensity(wavelength, separation, distance, halfwidth, phase,
                            static_cast<std::size_t>(grid_points));

    ordered_json results;
    results["fringe_spacing_m"] = fringe_spacing(intensity);
    results["fringe_spacing_analytic_m"] = wavelength * distance / separation;

    detail::BinnedRun binned =
        detail::run_binned(intensity, -halfwidth, halfwidth, config);
    results["counted"] = binned.histogram.total;
    results["overflow"] = binned.histogram.overflow;
    summary["results"] = results;
    summary["fit"] = binned.fit ? detail::fit_to_json(*binned.fit)
                                : ordered_json(nullptr);
    output.csv = std::move(binned.csv);
    return output;
  }

  throw config_error("unknown subcommand '" + config.subcommand + "'");
}

/// Runs and writes <out>.csv and <out>.json next to each other.
inline void run_to_files(const RunConfig& config) {
  const RunOutput output = execute(config);

  const std::string csv_path = config.out + ".csv";
  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) throw config_error("cannot write '" + csv_path + "'");
  csv << output.csv;

  const std::string json_path = config.out + ".json";
  std::ofstream json(json_path, std::ios::binary);
  if (!json) throw config_error("cannot write '" + json_path + "'");
  json << output.summary.dump(2) << '\n';
}

}  // namespace fringe::cli
