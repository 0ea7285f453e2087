#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kfl/decay.hpp"
#include "kfl/errors.hpp"
#include "kfl/grassmannian.hpp"
#include "kfl/kakeya_measure.hpp"
#include "kfl/orientation.hpp"
#include "kfl/scaling.hpp"
#include "kfl/version.hpp"

namespace kfl {

// --- config -----------------------------------------------------------

// Flat "key = value" text with dotted keys; '#' starts a comment.
struct config_entry {
  std::string value;
  int line = 0;
  mutable bool used = false;
};

struct experiment_config {
  std::string name;  // report/file stem
  std::map<std::string, config_entry> entries;

  bool has(const std::string& key) const { return entries.count(key) != 0; }
};

struct config_error {
  int line = 0;        // 0 when the problem is a missing key
  std::string field;
  std::string message;
};

inline experiment_config parse_config_text(const std::string& text, const std::string& name,
                                           std::vector<config_error>& errors) {
  experiment_config cfg;
  cfg.name = name;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const char* ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      errors.push_back({lineno, line, "expected 'key = value'"});
      continue;
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      errors.push_back({lineno, key, "empty key or value"});
      continue;
    }
    if (cfg.entries.count(key)) {
      errors.push_back({lineno, key, "duplicate key"});
      continue;
    }
    cfg.entries[key] = {value, lineno, false};
  }
  return cfg;
}

namespace detail {

struct config_reader {
  const experiment_config& cfg;
  std::vector<config_error>& errors;

  std::optional<std::string> raw(const std::string& key) {
    auto it = cfg.entries.find(key);
    if (it == cfg.entries.end()) return std::nullopt;
    it->second.used = true;
    return it->second.value;
  }
  int line_of(const std::string& key) const {
    auto it = cfg.entries.find(key);
    return it == cfg.entries.end() ? 0 : it->second.line;
  }
  std::string require_string(const std::string& key) {
    auto v = raw(key);
    if (!v) {
      errors.push_back({0, key, "missing required key"});
      return {};
    }
    return *v;
  }
  double require_number(const std::string& key) {
    auto v = raw(key);
    if (!v) {
      errors.push_back({0, key, "missing required key"});
      return 0.0;
    }
    try {
      std::size_t pos = 0;
      double d = std::stod(*v, &pos);
      if (pos != v->size()) throw std::invalid_argument("trailing junk");
      return d;
    } catch (const std::exception&) {
      errors.push_back({line_of(key), key, "not a number: '" + *v + "'"});
      return 0.0;
    }
  }
  double number_or(const std::string& key, double fallback) {
    return cfg.has(key) ? require_number(key) : fallback;
  }
  std::int64_t integer_or(const std::string& key, std::int64_t fallback) {
    if (!cfg.has(key)) return fallback;
    const double d = require_number(key);
    if (d != std::floor(d)) errors.push_back({line_of(key), key, "must be an integer"});
    return static_cast<std::int64_t>(d);
  }
  std::int64_t require_integer(const std::string& key) {
    const double d = require_number(key);
    if (d != std::floor(d)) errors.push_back({line_of(key), key, "must be an integer"});
    return static_cast<std::int64_t>(d);
  }
  std::string string_or(const std::string& key, const std::string& fallback) {
    return cfg.has(key) ? *raw(key) : fallback;
  }
};

inline std::vector<double> dyadic_grid(std::int64_t log2_min, std::int64_t log2_max) {
  std::vector<double> g;
  for (std::int64_t j = log2_max; j >= log2_min; --j) g.push_back(std::pow(2.0, static_cast<double>(j)));
  return g;
}

}  // namespace detail

// --- report -----------------------------------------------------------

struct report_row {
  double grid = 0.0;
  double value = 0.0;
  std::string aux;
};

struct experiment_report {
  std::string name;
  std::string kind;
  std::vector<report_row> rows;
  nlohmann::json fit;        // exponent(s) + r_squared, kind-specific
  nlohmann::json predicted;  // value + provenance, when a prediction exists
  nlohmann::json flags;
  std::map<std::string, std::string> config_echo;
  double wall_clock_seconds = 0.0;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["library_version"] = version;
    j["experiment"] = kind;
    j["name"] = name;
    j["config"] = config_echo;
    nlohmann::json rowsj = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json rj;
      rj["grid"] = r.grid;
      rj["value"] = r.value;
      rj["aux"] = r.aux;
      rowsj.push_back(rj);
    }
    j["rows"] = rowsj;
    j["fit"] = fit;
    j["predicted"] = predicted;
    j["flags"] = flags;
    j["wall_clock_seconds"] = wall_clock_seconds;
    return j;
  }
};

namespace detail {

inline std::string format_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string join_vector(const Eigen::VectorXd& v) {
  std::string s;
  for (int i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += format_full(v[i]);
  }
  return s;
}

}  // namespace detail

// --- runners ----------------------------------------------------------

namespace detail {

inline frame coordinate_hyperplane(int d, int normal_coordinate) {
  Eigen::MatrixXd raw(d, d - 1);
  raw.setZero();
  int c = 0;
  for (int i = 0; i < d; ++i) {
    if (i == normal_coordinate - 1) continue;  // 1-based coordinate
    raw(i, c++) = 1.0;
  }
  return orthonormalize(raw);
}

inline discrete_orientation_measure build_family(config_reader& r, std::uint64_t seed) {
  const std::string family = r.require_string("family.name");
  const int d = static_cast<int>(r.require_integer("family.d"));
  if (!r.errors.empty()) return {};
  if (family == "uniform") {
    const int k = static_cast<int>(r.integer_or("family.k", 1));
    const int n = static_cast<int>(r.integer_or("family.n", 64));
    const std::int64_t budget = r.integer_or("budget.stream", 100000);
    return uniform_grassmannian_measure(d, k, n, budget, seed);
  }
  if (family == "sphere") {
    const double angle = r.number_or("family.polar_angle", M_PI / 4.0);
    const int m = static_cast<int>(r.integer_or("family.atoms", 4096));
    Eigen::VectorXd axis = Eigen::VectorXd::Zero(d);
    axis[d - 1] = 1.0;
    return nondegenerate_sphere_measure(d, axis, angle, m, seed);
  }
  if (family == "hyperplane") {
    const int k = static_cast<int>(r.integer_or("family.k", 1));
    const int n = static_cast<int>(r.integer_or("family.n", 256));
    const std::int64_t budget = r.integer_or("budget.stream", 100000);
    const int nc = static_cast<int>(r.integer_or("family.normal_coordinate", d));
    return hyperplane_family_measure(d, k, coordinate_hyperplane(d, nc), n, budget, seed);
  }
  r.errors.push_back({r.line_of("family.name"), "family.name",
                      "unknown family '" + family + "' (uniform|sphere|hyperplane)"});
  return {};
}

inline void predicted_beta_for_family(const std::string& family, int d, int k,
                                      experiment_report& rep, std::optional<double>& predicted) {
  if (family == "sphere") {
    predicted = (d == 3) ? 0.5 : 1.0;
    rep.predicted["value"] = *predicted;
    rep.predicted["provenance"] =
        (d == 3) ? "non-degenerate sphere of directions in R^3: 1/2-scaling"
                 : "non-degenerate sphere of directions in R^d, d >= 4: 1-scaling";
  } else if (family == "uniform") {
    predicted = static_cast<double>(k);
    rep.predicted["value"] = *predicted;
    rep.predicted["provenance"] =
        "full Grassmannian: Frostman exponent k(d-k) minus covering exponent k(d-1-k) = k";
  } else if (family == "hyperplane") {
    predicted = 0.0;
    rep.predicted["value"] = 0.0;
    rep.predicted["provenance"] =
        "all subspaces of a hyperplane stay in one slab: scaling exponent 0";
  }
}

}  // namespace detail

inline experiment_report run_experiment(const experiment_config& cfg,
                                        std::vector<config_error>& errors) {
  detail::config_reader r{cfg, errors};
  experiment_report rep;
  rep.name = cfg.name;
  rep.kind = r.require_string("experiment");
  const std::uint64_t seed = static_cast<std::uint64_t>(r.require_integer("seed"));
  if (!errors.empty()) return rep;

  // every branch calls this after reading its keys and before computing, so
  // typos surface as config errors rather than after a long run
  auto ready = [&]() {
    for (const auto& [key, entry] : cfg.entries)
      if (!entry.used) errors.push_back({entry.line, key, "unknown key for this experiment"});
    return errors.empty();
  };

  const auto t0 = std::chrono::steady_clock::now();

  if (rep.kind == "metric-oracle") {
    const int d = static_cast<int>(r.require_integer("grassmannian.d"));
    const int k = static_cast<int>(r.require_integer("grassmannian.k"));
    const int pairs = static_cast<int>(r.integer_or("pairs", 100));
    const int samples = static_cast<int>(r.integer_or("oracle_samples", 4096));
    if (!ready()) return rep;
    double worst = 0.0;
    std::vector<double> diffs(pairs);
    detail::parallel_for(pairs, [&](std::int64_t i) {
      frame a = random_subspace(d, k, detail::mix_stream(seed, 2 * i));
      frame b = random_subspace(d, k, detail::mix_stream(seed, 2 * i + 1));
      diffs[static_cast<std::size_t>(i)] =
          std::fabs(metric(a, b) - metric_oracle(a, b, samples, seed + i));
    });
    for (int i = 0; i < pairs; ++i) {
      rep.rows.push_back({static_cast<double>(i), diffs[i], ""});
      worst = std::max(worst, diffs[i]);
    }
    rep.fit["max_abs_difference"] = worst;
    rep.predicted["value"] = 0.0;
    rep.predicted["provenance"] =
        "Hausdorff distance of subspace spheres equals sqrt(2 - 2 cos theta_max)";
  } else if (rep.kind == "covering") {
    const int d = static_cast<int>(r.require_integer("grassmannian.d"));
    const int k = static_cast<int>(r.require_integer("grassmannian.k"));
    const std::int64_t lmin = r.integer_or("grid.log2_eta_min", -4);
    const std::int64_t lmax = r.integer_or("grid.log2_eta_max", -1);
    const std::int64_t budget = r.integer_or("budget.stream", 100000);
    if (!ready()) return rep;
    auto scan = covering_scan(d, k, detail::dyadic_grid(lmin, lmax), budget, seed);
    for (std::size_t i = 0; i < scan.eta_grid.size(); ++i)
      rep.rows.push_back({scan.eta_grid[i], static_cast<double>(scan.net_sizes[i]), ""});
    rep.fit["exponent"] = scan.exponent;
    rep.fit["r_squared"] = scan.r_squared;
    rep.predicted["value"] = k * (d - k);
    rep.predicted["provenance"] = "dimension of G(d,k) is k(d-k)";
  } else if (rep.kind == "scaling") {
    const std::string family = r.string_or("family.name", "");
    const int d = static_cast<int>(r.integer_or("family.d", 0));
    const int k = static_cast<int>(r.integer_or("family.k", 1));
    const std::int64_t lmin = r.integer_or("grid.log2_eta_min", -7);
    const std::int64_t lmax = r.integer_or("grid.log2_eta_max", -3);
    const int budget = static_cast<int>(r.integer_or("budget.search", 2000));
    if (!errors.empty()) return rep;
    auto gamma = detail::build_family(r, seed);
    if (!ready()) return rep;
    std::optional<double> predicted;
    detail::predicted_beta_for_family(family, d, k, rep, predicted);
    auto fit = fit_beta(gamma, detail::dyadic_grid(lmin, lmax), budget,
                        detail::mix_stream(seed, 0x736561ull), predicted);
    for (std::size_t i = 0; i < fit.eta_grid.size(); ++i)
      rep.rows.push_back(
          {fit.eta_grid[i], fit.sup_masses[i], detail::join_vector(fit.witnesses[i])});
    rep.fit["beta_hat"] = fit.beta_hat;
    rep.fit["r_squared"] = fit.r_squared;
    rep.flags["low_confidence_fit"] = fit.r_squared < 0.9;
    // the positive-measure regime is reported as a flag only, never asserted
    rep.flags["beta_above_half_dim"] = fit.beta_hat > 0.5 * d;
  } else if (rep.kind == "decay" || rep.kind == "cone") {
    int dim = 0;
    std::function<std::complex<double>(const Eigen::VectorXd&)> f;
    kakeya_measure_spec spec;
    if (rep.kind == "cone") {
      dim = static_cast<int>(r.integer_or("family.d", 3));
      const int m = static_cast<int>(r.integer_or("family.atoms", 4096));
      if (!errors.empty()) return rep;
      spec = cone_measure_spec(dim, m);
      f = [&spec](const Eigen::VectorXd& xi) { return mu_hat(spec, xi); };
      rep.flags["exploratory"] = true;
      rep.predicted["value"] = dim - 2;
      rep.predicted["provenance"] =
          "cone over a 45-degree direction circle; decay at least as for Fourier dimension 1, "
          "value d-2 probed empirically";
    } else {
      const std::string family = r.require_string("family.name");
      if (family == "circle") {
        dim = 2;
        const double radius = r.number_or("family.radius", 1.0);
        if (!errors.empty()) return rep;
        f = [radius](const Eigen::VectorXd& xi) { return circle_surface_mu_hat(radius, xi); };
        rep.predicted["value"] = 1.0;
        rep.predicted["provenance"] = "circle surface measure has Fourier dimension d-1 = 1";
      } else if (family == "kakeya_uniform") {
        dim = static_cast<int>(r.require_integer("family.d"));
        const int k = static_cast<int>(r.integer_or("family.k", 1));
        const int n = static_cast<int>(r.integer_or("family.n", 256));
        const std::int64_t budget = r.integer_or("budget.stream", 200000);
        const std::string strategy = r.string_or("translations.strategy", "zero");
        if (!errors.empty()) return rep;
        auto gamma = uniform_grassmannian_measure(dim, k, n, budget, seed);
        translation_strategy ts = translation_strategy::zero();
        if (strategy == "random_box")
          ts = translation_strategy::random_box(r.number_or("translations.side", 1.0));
        else if (strategy != "zero") {
          errors.push_back({r.line_of("translations.strategy"), "translations.strategy",
                            "unknown strategy '" + strategy + "' (zero|random_box)"});
          return rep;
        }
        spec = assign_translations(std::move(gamma), ts, detail::mix_stream(seed, 0x74ull));
        f = [&spec](const Eigen::VectorXd& xi) { return mu_hat(spec, xi); };
        rep.predicted["value"] = 2 * k;
        rep.predicted["provenance"] =
            "restricted-orientation lower bound: Fourier dimension >= 2k";
      } else {
        errors.push_back({r.line_of("family.name"), "family.name",
                          "unknown family '" + family + "' (kakeya_uniform|circle)"});
        return rep;
      }
    }
    const std::int64_t lmin = r.integer_or("grid.log2_r_min", 2);
    const std::int64_t lmax = r.integer_or("grid.log2_r_max", 9);
    const int m = static_cast<int>(r.integer_or("budget.directions", 2048));
    if (!ready()) return rep;
    std::vector<double> radii = detail::dyadic_grid(lmin, lmax);
    std::sort(radii.begin(), radii.end());
    auto fit = fit_decay(f, dim, radii, m, detail::mix_stream(seed, 0x646563ull));
    for (std::size_t i = 0; i < fit.radii.size(); ++i)
      rep.rows.push_back(
          {fit.radii[i], fit.shell_maxima[i], detail::join_vector(fit.witnesses[i])});
    rep.fit["slope"] = fit.slope;
    rep.fit["fourier_dim_estimate"] = fit.fourier_dim_estimate;
    rep.fit["r_squared"] = fit.r_squared;
    rep.flags["low_confidence_fit"] = fit.r_squared < 0.9;
  } else if (rep.kind == "dual-sphere") {
    const int dim = static_cast<int>(r.integer_or("family.d", 2));
    const std::string centers_kind = r.string_or("centers.kind", "zero");
    const int n_r = static_cast<int>(r.integer_or("quad.n_r", 64));
    const int n_theta = static_cast<int>(r.integer_or("quad.n_theta", 64));
    const std::int64_t lmin = r.integer_or("grid.log2_r_min", 2);
    const std::int64_t lmax = r.integer_or("grid.log2_r_max", 6);
    const int m = static_cast<int>(r.integer_or("budget.directions", 16));
    if (centers_kind != "zero")
      errors.push_back({r.line_of("centers.kind"), "centers.kind", "only 'zero' is supported"});
    if (!ready()) return rep;
    auto centers = [dim](double) { return Eigen::VectorXd::Zero(dim); };
    auto f = [&](const Eigen::VectorXd& xi) {
      return sphere_dual_mu_hat(dim, centers, xi, n_r, n_theta);
    };
    std::vector<double> radii = detail::dyadic_grid(lmin, lmax);
    std::sort(radii.begin(), radii.end());
    auto fit = fit_decay(f, dim, radii, m, detail::mix_stream(seed, 0x647561ull));
    for (std::size_t i = 0; i < fit.radii.size(); ++i)
      rep.rows.push_back(
          {fit.radii[i], fit.shell_maxima[i], detail::join_vector(fit.witnesses[i])});
    rep.fit["slope"] = fit.slope;
    rep.fit["fourier_dim_estimate"] = fit.fourier_dim_estimate;
    rep.fit["r_squared"] = fit.r_squared;
    rep.flags["exploratory"] = true;
    rep.predicted["provenance"] =
        "all centers zero: smooth compactly supported density, superpolynomial decay";
  } else {
    errors.push_back({r.line_of("experiment"), "experiment",
                      "unknown experiment '" + rep.kind +
                          "' (scaling|decay|metric-oracle|covering|dual-sphere|cone)"});
    return rep;
  }

  for (const auto& [key, entry] : cfg.entries) rep.config_echo[key] = entry.value;
  rep.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// --- output writers ----------------------------------------------------

inline void write_report_files(const experiment_report& rep, const std::filesystem::path& dir,
                               bool emit_plot) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream js(dir / (rep.name + "_report.json"));
    js << rep.to_json().dump(2) << "\n";
  }
  {
    std::ofstream csv(dir / (rep.name + ".csv"));
    csv << "grid,value,aux\n";
    for (const auto& row : rep.rows)
      csv << detail::format_full(row.grid) << ',' << detail::format_full(row.value) << ','
          << row.aux << "\n";
  }
  if (emit_plot) {
    std::ofstream gp(dir / (rep.name + ".gp"));
    gp << "# gnuplot script for " << rep.name << "\n"
       << "set datafile separator ','\n"
       << "set logscale xy\n"
       << "set xlabel 'grid'\n"
       << "set ylabel 'value'\n"
       << "set key left bottom\n"
       << "plot '" << rep.name << ".csv' every ::1 using 1:2 with linespoints title '"
       << rep.name << "'";
    // two-term split bound overlay for decay experiments, anchored at the
    // first shell (the constants are suppressed, so only the slope matters)
    if ((rep.kind == "decay" || rep.kind == "cone") && rep.predicted.contains("value") &&
        !rep.rows.empty()) {
      const double beta = 0.5 * rep.predicted["value"].get<double>();
      if (beta > 0) {
        const double alpha = 0.95;
        const double r0 = rep.rows.front().grid;
        const double v0 = std::max(rep.rows.front().value, 1e-300);
        gp << ", \\\n     " << detail::format_full(v0) << " * (x/" << detail::format_full(r0)
           << ")**(-" << detail::format_full(alpha * beta)
           << ") with lines dashtype 2 title 'split bound slope, up to constants'";
      }
    }
    gp << "\n";
  }
}

// --- fixtures -----------------------------------------------------------

struct fixture {
  std::string name;
  std::string description;
  std::string text;
};

inline const std::vector<fixture>& bundled_fixtures() {
  static const std::vector<fixture> fx = {
      {"metric_oracle_g42",
       "principal-angle metric vs brute-force Hausdorff oracle on G(4,2)",
       "experiment = metric-oracle\n"
       "grassmannian.d = 4\n"
       "grassmannian.k = 2\n"
       "pairs = 100\n"
       "oracle_samples = 4096\n"
       "seed = 11\n"},
      {"covering_g21", "covering exponent of G(2,1), dimension 1",
       "experiment = covering\n"
       "grassmannian.d = 2\n"
       "grassmannian.k = 1\n"
       "grid.log2_eta_min = -4\n"
       "grid.log2_eta_max = -1\n"
       "budget.stream = 40000\n"
       "seed = 5\n"},
      {"covering_g31", "covering exponent of G(3,1), dimension 2",
       "experiment = covering\n"
       "grassmannian.d = 3\n"
       "grassmannian.k = 1\n"
       "grid.log2_eta_min = -4\n"
       "grid.log2_eta_max = -1\n"
       "budget.stream = 150000\n"
       "seed = 5\n"},
      {"covering_g42", "covering exponent of G(4,2), dimension 4 (takes ~1 min)",
       "experiment = covering\n"
       "grassmannian.d = 4\n"
       "grassmannian.k = 2\n"
       "grid.log2_eta_min = -4\n"
       "grid.log2_eta_max = -1\n"
       "budget.stream = 1500000\n"
       "seed = 5\n"},
      {"scaling_sphere_d3", "beta-scaling of the 45-degree direction circle in R^3 (predicted 1/2)",
       "experiment = scaling\n"
       "family.name = sphere\n"
       "family.d = 3\n"
       "family.polar_angle = 0.78539816339744831\n"
       "family.atoms = 4096\n"
       "grid.log2_eta_min = -7\n"
       "grid.log2_eta_max = -3\n"
       "budget.search = 2000\n"
       "seed = 7\n"},
      {"scaling_sphere_d4", "beta-scaling of the direction 2-sphere in R^4 (predicted 1)",
       "experiment = scaling\n"
       "family.name = sphere\n"
       "family.d = 4\n"
       "family.polar_angle = 0.78539816339744831\n"
       "family.atoms = 4096\n"
       "grid.log2_eta_min = -7\n"
       "grid.log2_eta_max = -3\n"
       "budget.search = 2000\n"
       "seed = 7\n"},
      {"scaling_hyperplane_d3", "hyperplane-restricted lines in R^3: slab mass 1, beta 0",
       "experiment = scaling\n"
       "family.name = hyperplane\n"
       "family.d = 3\n"
       "family.k = 1\n"
       "family.n = 256\n"
       "family.normal_coordinate = 3\n"
       "budget.stream = 100000\n"
       "grid.log2_eta_min = -7\n"
       "grid.log2_eta_max = -3\n"
       "budget.search = 2000\n"
       "seed = 2\n"},
      {"scaling_uniform_g21", "beta-scaling of the full G(2,1) (predicted 1)",
       "experiment = scaling\n"
       "family.name = uniform\n"
       "family.d = 2\n"
       "family.k = 1\n"
       "family.n = 256\n"
       "budget.stream = 100000\n"
       "grid.log2_eta_min = -7\n"
       "grid.log2_eta_max = -3\n"
       "budget.search = 2000\n"
       "seed = 3\n"},
      {"decay_kakeya_d2", "Fourier decay of the uniform-direction measure in R^2",
       "experiment = decay\n"
       "family.name = kakeya_uniform\n"
       "family.d = 2\n"
       "family.k = 1\n"
       "family.n = 256\n"
       "budget.stream = 200000\n"
       "translations.strategy = zero\n"
       "grid.log2_r_min = 2\n"
       "grid.log2_r_max = 9\n"
       "budget.directions = 2048\n"
       "seed = 3\n"},
      {"decay_circle_s1", "decay of the unit-circle surface measure (slope 1/2)",
       "experiment = decay\n"
       "family.name = circle\n"
       "family.radius = 1\n"
       "grid.log2_r_min = 2\n"
       "grid.log2_r_max = 9\n"
       "budget.directions = 64\n"
       "seed = 7\n"},
      {"cone_d3", "decay probe of the cone measure in R^3 (exploratory)",
       "experiment = cone\n"
       "family.d = 3\n"
       "family.atoms = 4096\n"
       "grid.log2_r_min = 2\n"
       "grid.log2_r_max = 9\n"
       "budget.directions = 2048\n"
       "seed = 7\n"},
      {"dual_sphere_d2", "spheres of every radius, centers at zero: dual-sphere decay probe",
       "experiment = dual-sphere\n"
       "family.d = 2\n"
       "centers.kind = zero\n"
       "quad.n_r = 64\n"
       "quad.n_theta = 64\n"
       "grid.log2_r_min = 2\n"
       "grid.log2_r_max = 6\n"
       "budget.directions = 16\n"
       "seed = 7\n"},
  };
  return fx;
}

}  // namespace kfl
