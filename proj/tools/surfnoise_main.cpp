// surfnoise: electromagnetic noise sweeps above a conducting surface.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "surfnoise/config.hpp"
#include "surfnoise/sweep.hpp"

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal electromagnetic noise near a metal surface with charge diffusion"};
  app.require_subcommand(1);
  CLI::App* run_cmd = app.add_subcommand("run", "Run a sweep and write tables");

  std::string config_path;
  std::vector<std::string> models, channels, overrides;
  std::string figure, format, out;
  std::vector<double> fit;
  int jobs = -1;
  double tol = 0.0;

  run_cmd->add_option("--config", config_path, "Configuration file (key = value, [sections])");
  run_cmd->add_option("--model", models, "Models: local, charge_layer, continuous_charge")
      ->delimiter(',');
  run_cmd->add_option("--channel", channels, "Channels: alpha_zz, alpha_xx, b_zz, delta_b_xx")
      ->delimiter(',');
  run_cmd->add_option("--figure", figure, "Figure preset: fig1, fig2 or none");
  run_cmd->add_option("--fit", fit, "Fit a power law over the grid window START STOP")
      ->expected(2);
  run_cmd->add_option("--format", format, "Output format: csv or json");
  run_cmd->add_option("--out", out, "Output path; several tables get .<model>.<channel> infixes");
  run_cmd->add_option("--jobs", jobs, "Worker threads (0: all processors)");
  run_cmd->add_option("--tol", tol, "Relative quadrature tolerance");
  run_cmd->add_option("--set", overrides, "Override any config key: section.key=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : surfnoise::exit_config;
  }

  try {
    surfnoise::ConfigEntries entries;
    if (!config_path.empty()) entries = surfnoise::read_config_file(config_path);

    // --set section.key=value goes through the file parser for key checking.
    std::string extra;
    for (const auto& kv : overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw surfnoise::ConfigError("--set", "expected section.key=value, got '" + kv + "'");
      const std::string key = kv.substr(0, eq);
      const auto dot = key.find('.');
      extra += "[" + (dot == std::string::npos ? std::string() : key.substr(0, dot)) + "]\n";
      extra += key.substr(dot == std::string::npos ? 0 : dot + 1) + " = " + kv.substr(eq + 1) + "\n";
    }
    for (const auto& [key, value] : surfnoise::parse_config_text(extra)) entries[key] = value;

    if (run_cmd->count("--model")) entries["run.models"] = join(models);
    if (run_cmd->count("--channel")) entries["run.channels"] = join(channels);
    if (!figure.empty()) entries["run.figure"] = figure;
    if (!format.empty()) entries["run.format"] = format;
    if (!out.empty()) entries["run.output"] = out;
    if (jobs >= 0) entries["run.jobs"] = std::to_string(jobs);
    if (run_cmd->count("--tol")) entries["quadrature.rel_tol"] = surfnoise::format_number(tol);
    if (fit.size() == 2) {
      entries["fit.start"] = surfnoise::format_number(fit[0]);
      entries["fit.stop"] = surfnoise::format_number(fit[1]);
    }

    const surfnoise::RunConfig config = surfnoise::build_config(entries);
    config.validate();
    const int status = surfnoise::run(config, std::cout);
    if (status == surfnoise::exit_nonconverged)
      std::cerr << "warning: some grid points did not converge (marked NONCONVERGED)\n";
    return status;
  } catch (const surfnoise::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return surfnoise::exit_config;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return surfnoise::exit_error;
  }
}
