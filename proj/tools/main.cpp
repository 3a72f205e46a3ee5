// fringe: command-line laboratory for localized-wave-packet interference
// experiments.  Each subcommand runs one experiment, writes <out>.csv and
// <out>.json, and prints the JSON summary path on success.
//
// Exit codes: 0 success, 2 configuration/usage error, 3 analysis failure
// (a result is undefined for otherwise valid inputs).

#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fringe/cli.hpp"
#include "fringe/errors.hpp"
#include "fringe/version.hpp"

namespace {

struct SubcommandCapture {
  CLI::App* app = nullptr;
  std::string config_path;
  fringe::cli::FlagOverrides overrides;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> bins;
  std::optional<std::string> out;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(fringe::kArtifactName) +
               " - photon-by-photon interference experiments with localized "
               "wave packets"};
  app.set_version_flag("--version", std::string(fringe::kArtifactVersion));
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"kinematics", "relativistic state and matter wavelengths of a particle"},
      {"two-slit", "double-slit diffraction pattern built photon by photon"},
      {"mach-zehnder", "delayed-choice interferometer detector statistics"},
      {"cavity", "standing-wave photon distribution in a resonant cavity"},
      {"two-laser", "interference of two independent equal-frequency sources"},
  };

  std::vector<SubcommandCapture> captures(commands.size());
  for (std::size_t i = 0; i < commands.size(); ++i) {
    SubcommandCapture& capture = captures[i];
    capture.app = app.add_subcommand(commands[i].first, commands[i].second);
    capture.app->add_option("--config", capture.config_path,
                            "config file (key=value lines or JSON object)");
    capture.app->add_option("--seed", capture.seed, "random stream seed");
    capture.app->add_option("--samples", capture.samples,
                            "number of detection events to draw");
    capture.app->add_option("--bins", capture.bins, "histogram bin count");
    capture.app->add_option("--out", capture.out,
                            "output stem; writes <out>.csv and <out>.json");
    capture.app->add_option("--param", capture.overrides.params,
                            "experiment parameter as key=value (repeatable)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? 0 : 2;
  }

  const SubcommandCapture* chosen = nullptr;
  std::string subcommand;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    if (captures[i].app->parsed()) {
      chosen = &captures[i];
      subcommand = commands[i].first;
      break;
    }
  }
  if (chosen == nullptr) {
    std::cerr << "fringe: no subcommand selected\n";
    return 2;
  }

  try {
    fringe::cli::FlagOverrides overrides = chosen->overrides;
    overrides.seed = chosen->seed;
    overrides.samples = chosen->samples;
    overrides.bins = chosen->bins;
    overrides.out = chosen->out;

    std::string config_text;
    if (!chosen->config_path.empty())
      config_text = fringe::cli::read_config_file(chosen->config_path);

    const fringe::cli::RunConfig config =
        fringe::cli::parse_config(subcommand, config_text, overrides);
    fringe::cli::run_to_files(config);
    std::cout << config.out << ".json\n";
    return 0;
  } catch (const fringe::analysis_error& error) {
    std::cerr << "fringe: analysis error: " << error.what() << '\n';
    return 3;
  } catch (const fringe::cli::config_error& error) {
    std::cerr << "fringe: " << error.what() << '\n';
    return 2;
  } catch (const std::domain_error& error) {
    std::cerr << "fringe: " << error.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& error) {
    std::cerr << "fringe: " << error.what() << '\n';
    return 2;
  }
}
