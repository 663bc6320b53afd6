#include "surfnoise/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "surfnoise/kernels.hpp"
#include "surfnoise/response.hpp"

#ifndef SURFNOISE_VERSION
#define SURFNOISE_VERSION "0.0.0"
#endif

namespace surfnoise {

std::string_view library_version() { return SURFNOISE_VERSION; }

std::size_t SweepTable::column_index(std::string_view column) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == column) return i;
  throw std::out_of_range("no column '" + std::string(column) + "'");
}

namespace {

// Runs body(i) for i in [0, n) on `jobs` threads; the first exception in
// index order is rethrown.
template <class Body>
void parallel_for(std::size_t n, int jobs, Body body) {
  std::size_t workers = jobs > 0 ? static_cast<std::size_t>(jobs)
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(n, 1));
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct Point {
  std::size_t series = 0;  // index into the D0 list of the table
  double x = 0.0;          // grid value
};

struct PointResult {
  double z_over_delta = 0.0;
  double diffusion_number = 0.0;
  std::optional<ResponseValue> response;
  std::optional<NoiseResult> noise;
  cplx reflection;
  double im_eps = 0.0;
  std::vector<std::string> warnings;
};

// Diffusion numbers used for a model: the local model ignores D0.
std::vector<double> series_for(const RunConfig& c, ModelKind model) {
  if (c.mode == RunMode::Physical) return {0.0};
  if (model == ModelKind::Local) return {0.0};
  std::vector<double> d0 = c.diffusion_numbers;
  std::sort(d0.begin(), d0.end());
  d0.erase(std::unique(d0.begin(), d0.end()), d0.end());
  return d0;
}

DimensionlessSpec dimensionless_spec(const RunConfig& c, ModelKind model, double d0, double z) {
  DimensionlessSpec spec;
  spec.omega_delta_over_c = c.omega_delta_over_c;
  spec.diffusion_number = d0;
  spec.bulk_diffusion_number = model == ModelKind::Local ? 0.0 : c.bulk_diffusion_number.value_or(d0);
  spec.model = model;
  spec.grid = {z};
  return spec;
}

PointResult evaluate(const RunConfig& c, ModelKind model, Channel channel, double d0, double x) {
  PointResult r;
  if (c.grid.variable == GridVariable::WaveNumberDelta) {
    const KernelParams p = KernelParams::dimensionless(
        model, c.omega_delta_over_c, d0,
        model == ModelKind::Local ? 0.0 : c.bulk_diffusion_number.value_or(d0));
    r.diffusion_number = d0;
    r.reflection = reflect_tm_z(x, p).r;
    r.im_eps = p.permittivity.imag();
    return r;
  }

  MediumSpec medium;
  ProbeSpec probe;
  if (c.mode == RunMode::Dimensionless) {
    std::tie(medium, probe) = from_dimensionless(dimensionless_spec(c, model, d0, x));
    probe.distance = x;  // delta = 1 cm
  } else {
    medium = MediumSpec::from_si(c.physical.conductivity_si, c.physical.bulk_diffusion_si,
                                 c.physical.surface_diffusion_si, model);
    if (c.grid.variable == GridVariable::Distance) {
      probe.omega = c.physical.omega;
      probe.distance = x;
    } else {
      probe.omega = x;
      probe.distance = c.physical.distance;
    }
  }
  probe.temperature = c.temperature;

  const DerivedScales s = derive_scales(medium, probe);
  r.z_over_delta = probe.distance / s.skin_depth;
  r.diffusion_number = c.mode == RunMode::Dimensionless ? d0 : s.diffusion_number;
  r.warnings = validity_report(medium, probe);
  r.response = compute_response(channel, medium, probe, c.quad);
  if (c.temperature && is_electric(channel) && r.response->quad.converged)
    r.noise = fdt_noise(*r.response, *c.temperature);
  return r;
}

std::vector<std::string> columns_for(const RunConfig& c) {
  if (c.grid.variable == GridVariable::WaveNumberDelta)
    return {"k_delta", "model", "D0", "quantity", "value", "re_r", "im_r"};
  std::vector<std::string> cols;
  if (c.grid.variable == GridVariable::Omega) cols.emplace_back("omega");
  for (const char* name : {"z0_over_delta", "model", "D0", "channel", "im_scaled", "im_raw_cgs",
                           "quad_rel_err", "local_slope"})
    cols.emplace_back(name);
  if (c.mode == RunMode::Physical) {
    cols.emplace_back("z0_cm");
    if (c.grid.variable == GridVariable::Distance) cols.emplace_back("omega");
    if (c.temperature) {
      cols.emplace_back("spectral_density");
      cols.emplace_back("heating_factor");
    }
  }
  return cols;
}

void add_unique(std::vector<std::string>& into, const std::vector<std::string>& items) {
  for (const auto& w : items)
    if (std::find(into.begin(), into.end(), w) == into.end()) into.push_back(w);
}

Cell slope_cell(const std::optional<double>& slope, bool neighbour_failed) {
  if (slope) return *slope;
  return std::string(neighbour_failed ? nonconverged_marker : undefined_marker);
}

SweepTable build_table(const RunConfig& c, ModelKind model, Channel channel,
                       const std::vector<double>& grid) {
  const bool kgrid = c.grid.variable == GridVariable::WaveNumberDelta;
  SweepTable t;
  t.name = std::string(to_string(model)) + "." + (kgrid ? "r_p" : std::string(to_string(channel)));
  t.config = c.resolved();
  t.columns = columns_for(c);

  const std::vector<double> d0s = series_for(c, model);
  std::vector<Point> points;
  for (std::size_t s = 0; s < d0s.size(); ++s)
    for (double x : grid) points.push_back({s, x});

  std::vector<PointResult> results(points.size());
  parallel_for(points.size(), c.jobs, [&](std::size_t i) {
    results[i] = evaluate(c, model, channel, d0s[points[i].series], points[i].x);
  });

  const std::size_t n = grid.size();
  for (std::size_t s = 0; s < d0s.size(); ++s) {
    const std::size_t base = s * n;
    std::vector<std::optional<double>> values(n);
    std::vector<bool> failed(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      const PointResult& r = results[base + i];
      add_unique(t.warnings, r.warnings);
      if (kgrid) {
        values[i] = r.im_eps * r.reflection.imag();
      } else if (r.response->quad.converged) {
        values[i] = r.response->scaled;
      } else {
        failed[i] = true;
        t.nonconverged = true;
      }
    }
    const auto slopes = local_slopes(grid, values);

    for (std::size_t i = 0; i < n; ++i) {
      const PointResult& r = results[base + i];
      std::vector<Cell> row;
      if (kgrid) {
        row = {grid[i], std::string(to_string(model)), d0s[s], std::string("im_eps_im_r_p"),
               *values[i], r.reflection.real(), r.reflection.imag()};
        t.rows.push_back(std::move(row));
        continue;
      }
      const ResponseValue& resp = *r.response;
      const Cell marker = std::string(nonconverged_marker);
      if (c.grid.variable == GridVariable::Omega) row.emplace_back(grid[i]);
      row.emplace_back(r.z_over_delta);
      row.emplace_back(std::string(to_string(model)));
      row.emplace_back(r.diffusion_number);
      row.emplace_back(std::string(to_string(channel)));
      row.push_back(failed[i] ? marker : Cell{resp.scaled});
      row.push_back(failed[i] ? marker : Cell{resp.value.imag()});
      row.emplace_back(resp.quad.rel_error_imag);
      const bool neighbour_failed = failed[i] || (i > 0 && failed[i - 1]) ||
                                    (i + 1 < n && failed[i + 1]);
      row.push_back(slope_cell(slopes[i], neighbour_failed));
      if (c.mode == RunMode::Physical) {
        row.emplace_back(resp.distance);
        if (c.grid.variable == GridVariable::Distance) row.emplace_back(resp.omega);
        if (c.temperature) {
          if (r.noise) {
            row.emplace_back(r.noise->spectral_density);
            row.emplace_back(r.noise->heating_factor);
          } else {
            const Cell na = std::string(failed[i] ? nonconverged_marker : undefined_marker);
            row.push_back(na);
            row.push_back(na);
          }
        }
      }
      t.rows.push_back(std::move(row));
    }

    if (c.fit) {
      SeriesFit f;
      f.diffusion_number = d0s[s];
      f.start = c.fit->first;
      f.stop = c.fit->second;
      // Relative slack so that grid end points equal to the window bounds are kept.
      const double lo = f.start * (1.0 - 1e-12);
      const double hi = f.stop * (1.0 + 1e-12);
      std::size_t first = n, last = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (grid[i] >= lo && grid[i] <= hi) {
          first = std::min(first, i);
          last = i;
        }
      }
      try {
        if (first == n) throw std::domain_error("no grid points inside the fit window");
        const std::string column = kgrid ? "value" : "im_scaled";
        f.fit = fit_power_law(t, column, base + first, base + last);
      } catch (const std::exception& e) {
        f.error = e.what();
      }
      t.fits.push_back(std::move(f));
    }
  }
  return t;
}

std::string cell_text(const Cell& cell) {
  if (const double* d = std::get_if<double>(&cell)) return format_number(*d);
  return std::get<std::string>(cell);
}

std::string scaling_note(const RunConfig& c) {
  if (c.grid.variable == GridVariable::WaveNumberDelta)
    return "value = Im eps * Im r_p (TM reflection at k delta)";
  return "im_scaled = (8 pi sigma/omega) delta^3 Im alpha for alpha_*, c delta^3 Im B for "
         "b_zz/delta_b_xx";
}

std::string units_note(const RunConfig& c) {
  if (c.mode == RunMode::Dimensionless)
    return "Gaussian CGS with delta = 1 cm; im_raw_cgs in 1/cm^3 (alpha) or s/cm^4 (B)";
  return "Gaussian CGS; z0_cm in cm, omega in rad/s; im_raw_cgs in 1/cm^3 (alpha) or s/cm^4 (B)";
}

}  // namespace

std::vector<SweepTable> run_sweep(const RunConfig& config) {
  config.validate();
  const std::vector<double> grid = config.grid.values();
  std::vector<SweepTable> tables;
  const bool kgrid = config.grid.variable == GridVariable::WaveNumberDelta;
  for (ModelKind model : config.models) {
    if (kgrid) {
      tables.push_back(build_table(config, model, Channel::AlphaZZ, grid));
      continue;
    }
    for (Channel channel : config.channels) {
      tables.push_back(build_table(config, model, channel, grid));
    }
  }
  for (SweepTable& t : tables) {
    t.config.insert(t.config.begin(), {"table", t.name});
    t.config.emplace_back("units", units_note(config));
    t.config.emplace_back("scaling", scaling_note(config));
  }
  return tables;
}

PowerLawFit fit_power_law(const SweepTable& table, std::string_view column, std::size_t first,
                          std::size_t last) {
  const std::size_t col = table.column_index(column);
  if (last >= table.rows.size() || first > last)
    throw std::invalid_argument("fit window out of range");
  std::vector<double> x, y;
  for (std::size_t i = first; i <= last; ++i) {
    const auto* xv = std::get_if<double>(&table.rows[i][0]);
    const auto* yv = std::get_if<double>(&table.rows[i][col]);
    if (!xv || !yv)
      throw std::domain_error("non-numeric cell in fit window at row " + std::to_string(i));
    x.push_back(*xv);
    y.push_back(*yv);
  }
  return fit_power_law(x, y, 0, x.size() - 1);
}

std::string to_csv(const SweepTable& table) {
  std::ostringstream os;
  os << "# surfnoise " << library_version() << "\n";
  for (const auto& [key, value] : table.config) os << "# " << key << " = " << value << "\n";
  for (const auto& w : table.warnings) os << "# warning: " << w << "\n";
  for (const auto& f : table.fits) {
    os << "# fit D0 = " << format_number(f.diffusion_number) << ", window = ["
       << format_number(f.start) << ", " << format_number(f.stop) << "]: ";
    if (f.error.empty())
      os << "exponent = " << format_number(f.fit.exponent)
         << ", stderr = " << format_number(f.fit.standard_error) << ", points = " << f.fit.points;
    else
      os << "failed: " << f.error;
    os << "\n";
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    os << (i ? "," : "") << table.columns[i];
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << "\n";
  }
  return os.str();
}

std::string to_json(const SweepTable& table) {
  using nlohmann::ordered_json;
  ordered_json meta;
  meta["version"] = std::string(library_version());
  ordered_json config = ordered_json::object();
  for (const auto& [key, value] : table.config) config[key] = value;
  meta["config"] = config;
  meta["warnings"] = table.warnings;
  ordered_json fits = ordered_json::array();
  for (const auto& f : table.fits) {
    ordered_json j;
    j["D0"] = f.diffusion_number;
    j["start"] = f.start;
    j["stop"] = f.stop;
    if (f.error.empty()) {
      j["exponent"] = f.fit.exponent;
      j["stderr"] = f.fit.standard_error;
      j["points"] = f.fit.points;
    } else {
      j["error"] = f.error;
    }
    fits.push_back(j);
  }
  meta["fits"] = fits;

  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json r;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (const double* d = std::get_if<double>(&row[i]))
        r[table.columns[i]] = *d;
      else
        r[table.columns[i]] = std::get<std::string>(row[i]);
    }
    rows.push_back(r);
  }
  ordered_json doc;
  doc["meta"] = meta;
  doc["rows"] = rows;
  return doc.dump(2) + "\n";
}

std::string output_path(const std::string& configured, const SweepTable& table,
                        std::size_t table_count) {
  if (configured.empty() || table_count <= 1) return configured;
  const std::filesystem::path p(configured);
  std::filesystem::path out = p.parent_path() / (p.stem().string() + "." + table.name);
  out += p.extension();
  return out.string();
}

int run(const RunConfig& config, std::ostream& out) {
  const std::vector<SweepTable> tables = run_sweep(config);
  bool nonconverged = false;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const SweepTable& t = tables[i];
    nonconverged = nonconverged || t.nonconverged;
    const std::string text = config.format == OutputFormat::Csv ? to_csv(t) : to_json(t);
    const std::string path = output_path(config.output, t, tables.size());
    if (path.empty()) {
      if (i) out << "\n";
      out << text;
      continue;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + path + "'");
    file << text;
    if (!file) throw std::runtime_error("write failed for '" + path + "'");
  }
  return nonconverged ? exit_nonconverged : exit_ok;
}

}  // namespace surfnoise
