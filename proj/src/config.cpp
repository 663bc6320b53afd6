#include "surfnoise/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace surfnoise {

std::string_view to_string(RunMode mode) {
  return mode == RunMode::Dimensionless ? "dimensionless" : "physical";
}

std::string_view to_string(GridVariable variable) {
  switch (variable) {
    case GridVariable::DistanceOverDelta: return "z0_over_delta";
    case GridVariable::WaveNumberDelta: return "k_delta";
    case GridVariable::Distance: return "z0";
    case GridVariable::Omega: return "omega";
  }
  return "unknown";
}

std::string_view to_string(FigurePreset preset) {
  switch (preset) {
    case FigurePreset::None: return "none";
    case FigurePreset::Fig1: return "fig1";
    case FigurePreset::Fig2: return "fig2";
  }
  return "unknown";
}

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::Csv ? "csv" : "json";
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::vector<double> GridSpec::values() const {
  std::vector<double> out(static_cast<std::size_t>(std::max(count, 0)));
  if (out.empty()) return out;
  if (out.size() == 1) {
    out[0] = start;
    return out;
  }
  const double l0 = std::log10(start);
  const double l1 = std::log10(stop);
  const auto n = static_cast<double>(out.size() - 1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::pow(10.0, l0 + (l1 - l0) * static_cast<double>(i) / n);
  }
  out.front() = start;
  out.back() = stop;
  return out;
}

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "run.mode", "run.models", "run.channels", "run.figure", "run.format", "run.output",
      "run.jobs", "grid.variable", "grid.start", "grid.stop", "grid.count",
      "dimensionless.omega_delta_over_c", "dimensionless.D0",
      "dimensionless.bulk_diffusion_number", "physical.conductivity_si",
      "physical.bulk_diffusion_si", "physical.surface_diffusion_si", "physical.omega",
      "physical.distance", "physical.temperature", "quadrature.rel_tol", "quadrature.abs_floor",
      "quadrature.max_subdivisions", "quadrature.tail_multiplier", "fit.start", "fit.stop"};
  return keys;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& field, const std::string& text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value))
    throw ConfigError(field, "not a finite number: '" + text + "'");
  return value;
}

int parse_int(const std::string& field, const std::string& text) {
  int value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) throw ConfigError(field, "not an integer: '" + text + "'");
  return value;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

FigurePreset parse_preset(const std::string& text) {
  if (text == "none") return FigurePreset::None;
  if (text == "fig1") return FigurePreset::Fig1;
  if (text == "fig2") return FigurePreset::Fig2;
  throw ConfigError("run.figure", "expected fig1, fig2 or none, got '" + text + "'");
}

void apply_entry(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "run.mode") {
    if (value == "dimensionless")
      c.mode = RunMode::Dimensionless;
    else if (value == "physical")
      c.mode = RunMode::Physical;
    else
      throw ConfigError(key, "expected dimensionless or physical, got '" + value + "'");
  } else if (key == "run.models") {
    c.models.clear();
    for (const auto& item : split_list(value)) {
      const auto m = parse_model(item);
      if (!m) throw ConfigError("models", "unknown model '" + item + "'");
      c.models.push_back(*m);
    }
  } else if (key == "run.channels") {
    c.channels.clear();
    for (const auto& item : split_list(value)) {
      const auto ch = parse_channel(item);
      if (!ch) throw ConfigError("channels", "unknown channel '" + item + "'");
      c.channels.push_back(*ch);
    }
  } else if (key == "run.figure") {
    c.figure = parse_preset(value);
  } else if (key == "run.format") {
    if (value == "csv")
      c.format = OutputFormat::Csv;
    else if (value == "json")
      c.format = OutputFormat::Json;
    else
      throw ConfigError(key, "expected csv or json, got '" + value + "'");
  } else if (key == "run.output") {
    c.output = value;
  } else if (key == "run.jobs") {
    c.jobs = parse_int(key, value);
  } else if (key == "grid.variable") {
    if (value == "z0_over_delta")
      c.grid.variable = GridVariable::DistanceOverDelta;
    else if (value == "k_delta")
      c.grid.variable = GridVariable::WaveNumberDelta;
    else if (value == "z0")
      c.grid.variable = GridVariable::Distance;
    else if (value == "omega")
      c.grid.variable = GridVariable::Omega;
    else
      throw ConfigError(key, "expected z0_over_delta, k_delta, z0 or omega, got '" + value + "'");
  } else if (key == "grid.start") {
    c.grid.start = parse_double(key, value);
  } else if (key == "grid.stop") {
    c.grid.stop = parse_double(key, value);
  } else if (key == "grid.count") {
    c.grid.count = parse_int(key, value);
  } else if (key == "dimensionless.omega_delta_over_c") {
    c.omega_delta_over_c = parse_double(key, value);
  } else if (key == "dimensionless.D0") {
    c.diffusion_numbers.clear();
    for (const auto& item : split_list(value)) c.diffusion_numbers.push_back(parse_double(key, item));
  } else if (key == "dimensionless.bulk_diffusion_number") {
    if (value == "D0")
      c.bulk_diffusion_number.reset();  // D = D_s
    else
      c.bulk_diffusion_number = parse_double(key, value);
  } else if (key == "physical.conductivity_si") {
    c.physical.conductivity_si = parse_double(key, value);
  } else if (key == "physical.bulk_diffusion_si") {
    c.physical.bulk_diffusion_si = parse_double(key, value);
  } else if (key == "physical.surface_diffusion_si") {
    c.physical.surface_diffusion_si = parse_double(key, value);
  } else if (key == "physical.omega") {
    c.physical.omega = parse_double(key, value);
  } else if (key == "physical.distance") {
    c.physical.distance = parse_double(key, value);
  } else if (key == "physical.temperature") {
    c.temperature = parse_double(key, value);
  } else if (key == "quadrature.rel_tol") {
    c.quad.rel_tol = parse_double(key, value);
  } else if (key == "quadrature.abs_floor") {
    c.quad.abs_floor = parse_double(key, value);
  } else if (key == "quadrature.max_subdivisions") {
    c.quad.max_subdivisions = parse_int(key, value);
  } else if (key == "quadrature.tail_multiplier") {
    c.quad.tail_multiplier = parse_double(key, value);
  } else if (key == "fit.start") {
    const double v = parse_double(key, value);
    c.fit = std::pair{v, c.fit ? c.fit->second : v};
  } else if (key == "fit.stop") {
    const double v = parse_double(key, value);
    c.fit = std::pair{c.fit ? c.fit->first : v, v};
  } else {
    throw ConfigError(key, "unknown key");
  }
}

}  // namespace

ConfigEntries parse_config_text(std::string_view text) {
  ConfigEntries entries;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find_first_of("#;");
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(line_no), "unterminated section header");
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    const std::string full = section.empty() ? key : section + "." + key;
    if (!known_keys().count(full)) throw ConfigError(full, "unknown key");
    entries[full] = value;
  }
  return entries;
}

ConfigEntries read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

void apply_preset(RunConfig& c, FigurePreset preset) {
  c.figure = preset;
  switch (preset) {
    case FigurePreset::None:
      break;
    case FigurePreset::Fig1:
      c.mode = RunMode::Dimensionless;
      c.models = {ModelKind::Local, ModelKind::ChargeLayer, ModelKind::ContinuousCharge};
      c.channels = {Channel::AlphaZZ};
      c.grid = {GridVariable::WaveNumberDelta, 1e-2, 1e4, 61};
      c.omega_delta_over_c = 0.02;
      c.diffusion_numbers = {1.0};
      c.bulk_diffusion_number.reset();
      break;
    case FigurePreset::Fig2:
      c.mode = RunMode::Dimensionless;
      c.models = {ModelKind::Local, ModelKind::ChargeLayer};
      c.channels = {Channel::AlphaZZ};
      c.grid = {GridVariable::DistanceOverDelta, 1e-2, 1e2, 81};
      c.omega_delta_over_c = 1e-6;
      c.diffusion_numbers = {0.0, 10.0, 100.0};
      c.bulk_diffusion_number.reset();
      break;
  }
}

RunConfig build_config(const ConfigEntries& entries) {
  RunConfig c;
  if (const auto it = entries.find("run.figure"); it != entries.end())
    apply_preset(c, parse_preset(it->second));
  for (const auto& [key, value] : entries) {
    if (key == "run.figure") continue;
    apply_entry(c, key, value);
  }
  return c;
}

void RunConfig::validate() const {
  if (models.empty()) throw ConfigError("models", "at least one model is required");
  if (channels.empty()) throw ConfigError("channels", "at least one channel is required");
  if (grid.count < 2) throw ConfigError("grid.count", "needs at least 2 points");
  if (!(grid.start > 0.0)) throw ConfigError("grid.start", "must be positive (log grid)");
  if (!(grid.stop > grid.start)) throw ConfigError("grid.stop", "must exceed grid.start");
  if (jobs < 0) throw ConfigError("run.jobs", "must be >= 0");
  if (temperature && !(*temperature > 0.0))
    throw ConfigError("physical.temperature", "must be positive");
  if (fit && !(fit->first > 0.0 && fit->second > fit->first))
    throw ConfigError("fit", "window must satisfy 0 < start < stop");

  if (!(quad.rel_tol > 0.0 && quad.rel_tol <= 1e-2))
    throw ConfigError("quadrature.rel_tol", "must lie in (0, 1e-2]");
  if (!(quad.abs_floor >= 0.0)) throw ConfigError("quadrature.abs_floor", "must be >= 0");
  if (quad.max_subdivisions < 1)
    throw ConfigError("quadrature.max_subdivisions", "must be >= 1");
  if (!(quad.tail_multiplier >= 20.0))
    throw ConfigError("quadrature.tail_multiplier", "must be >= 20");

  const bool has_continuous =
      std::find(models.begin(), models.end(), ModelKind::ContinuousCharge) != models.end();
  const bool has_dbxx =
      std::find(channels.begin(), channels.end(), Channel::DeltaBXX) != channels.end();
  if (has_continuous && has_dbxx)
    throw ConfigError("channels", "delta_b_xx is not defined for the continuous_charge model");

  if (mode == RunMode::Dimensionless) {
    if (grid.variable != GridVariable::DistanceOverDelta &&
        grid.variable != GridVariable::WaveNumberDelta)
      throw ConfigError("grid.variable", "dimensionless runs take z0_over_delta or k_delta");
    if (!(omega_delta_over_c > 0.0))
      throw ConfigError("dimensionless.omega_delta_over_c", "must be positive");
    if (diffusion_numbers.empty())
      throw ConfigError("dimensionless.D0", "at least one value is required");
    for (double d : diffusion_numbers)
      if (!(d >= 0.0)) throw ConfigError("dimensionless.D0", "values must be >= 0");
    if (bulk_diffusion_number && !(*bulk_diffusion_number >= 0.0))
      throw ConfigError("dimensionless.bulk_diffusion_number", "must be >= 0");
    if (has_continuous) {
      for (double d : diffusion_numbers) {
        const double bulk = bulk_diffusion_number.value_or(d);
        if (!(bulk > 0.0))
          throw ConfigError("dimensionless.bulk_diffusion_number",
                            "continuous_charge needs a positive bulk diffusion number");
      }
    }
  } else {
    if (grid.variable != GridVariable::Distance && grid.variable != GridVariable::Omega)
      throw ConfigError("grid.variable", "physical runs take z0 or omega");
    if (!(physical.conductivity_si > 0.0))
      throw ConfigError("physical.conductivity_si", "must be positive");
    if (!(physical.bulk_diffusion_si >= 0.0))
      throw ConfigError("physical.bulk_diffusion_si", "must be >= 0");
    if (!(physical.surface_diffusion_si >= 0.0))
      throw ConfigError("physical.surface_diffusion_si", "must be >= 0");
    if (grid.variable == GridVariable::Distance && !(physical.omega > 0.0))
      throw ConfigError("physical.omega", "must be positive for a distance grid");
    if (grid.variable == GridVariable::Omega && !(physical.distance > 0.0))
      throw ConfigError("physical.distance", "must be positive for a frequency grid");
    if (has_continuous && !(physical.bulk_diffusion_si > 0.0))
      throw ConfigError("physical.bulk_diffusion_si", "continuous_charge needs D > 0");
  }
}

std::vector<std::pair<std::string, std::string>> RunConfig::resolved() const {
  std::vector<std::pair<std::string, std::string>> out;
  std::vector<std::string> names;
  for (auto m : models) names.emplace_back(to_string(m));
  out.emplace_back("run.mode", std::string(to_string(mode)));
  out.emplace_back("run.models", join(names));
  names.clear();
  for (auto ch : channels) names.emplace_back(to_string(ch));
  out.emplace_back("run.channels", join(names));
  out.emplace_back("run.figure", std::string(to_string(figure)));
  out.emplace_back("grid.variable", std::string(to_string(grid.variable)));
  out.emplace_back("grid.start", format_number(grid.start));
  out.emplace_back("grid.stop", format_number(grid.stop));
  out.emplace_back("grid.count", std::to_string(grid.count));
  if (mode == RunMode::Dimensionless) {
    out.emplace_back("dimensionless.omega_delta_over_c", format_number(omega_delta_over_c));
    names.clear();
    for (double d : diffusion_numbers) names.push_back(format_number(d));
    out.emplace_back("dimensionless.D0", join(names));
    out.emplace_back("dimensionless.bulk_diffusion_number",
                     bulk_diffusion_number ? format_number(*bulk_diffusion_number) : "D0");
  } else {
    out.emplace_back("physical.conductivity_si", format_number(physical.conductivity_si));
    out.emplace_back("physical.bulk_diffusion_si", format_number(physical.bulk_diffusion_si));
    out.emplace_back("physical.surface_diffusion_si",
                     format_number(physical.surface_diffusion_si));
    if (grid.variable == GridVariable::Distance)
      out.emplace_back("physical.omega", format_number(physical.omega));
    else
      out.emplace_back("physical.distance", format_number(physical.distance));
  }
  if (temperature) out.emplace_back("physical.temperature", format_number(*temperature));
  out.emplace_back("quadrature.rel_tol", format_number(quad.rel_tol));
  out.emplace_back("quadrature.abs_floor", format_number(quad.abs_floor));
  out.emplace_back("quadrature.max_subdivisions", std::to_string(quad.max_subdivisions));
  out.emplace_back("quadrature.tail_multiplier", format_number(quad.tail_multiplier));
  if (fit) {
    out.emplace_back("fit.start", format_number(fit->first));
    out.emplace_back("fit.stop", format_number(fit->second));
  }
  return out;
}

}  // namespace surfnoise
