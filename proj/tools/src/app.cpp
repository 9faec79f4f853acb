#include "plaquette/cli/app.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "plaquette/cli/settings.hpp"
#include "plaquette/cli/svg.hpp"
#include "plaquette/cli/verify.hpp"
#include "plaquette/costratified.hpp"
#include "plaquette/errors.hpp"
#include "plaquette/geometry.hpp"
#include "plaquette/mathieu.hpp"
#include "plaquette/spectrum.hpp"

#ifndef PLAQUETTE_QGAUGE_VERSION
#define PLAQUETTE_QGAUGE_VERSION "0.0.0"
#endif

namespace plaquette::cli {
namespace {

using json = nlohmann::json;
constexpr double kPi = std::numbers::pi;

// Each grid point is independent; results land in their own slot so output
// order never depends on scheduling. The lowest failing index is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
          try {
            body(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string join_csv(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string render_csv(const Table& table, const json& config) {
  std::string text = "# plaquette-qgauge v";
  text += version();
  text += " config=" + config.dump() + "\n";
  text += join_csv(table.columns) + "\n";
  for (const auto& row : table.rows) text += join_csv(row) + "\n";
  return text;
}

// range text used when the key is absent: the default with `grid` points
std::string default_range(const Settings& s, const std::string& kind, double a, double b, long long points) {
  const long long grid = s.integer("grid", points);
  if (grid < 1) throw UsageError("grid must be >= 1");
  return kind + ":" + format_number(a) + ":" + format_number(b) + ":" + std::to_string(grid);
}

unsigned positive_count(const Settings& s, const std::string& key, long long fallback, long long lo) {
  const long long v = s.integer(key, fallback);
  if (v < lo || v > 100000) throw UsageError(key + " must be in [" + std::to_string(lo) + ", 100000]");
  return static_cast<unsigned>(v);
}

std::size_t truncation_override(const Settings& s, json& config) {
  if (!s.has("trunc")) return 0;
  const long long v = s.integer("trunc", 0);
  if (v < 1 || v > 1000000) throw UsageError("trunc must be in [1, 1e6]");
  config["trunc"] = v;
  return static_cast<std::size_t>(v);
}

void reject_both_couplings(const Settings& s) {
  if (s.has("coupling_g") && s.has("nu_tilde")) {
    throw UsageError("coupling_g and nu_tilde are mutually exclusive");
  }
}

// (hbar, beta2) for commands with a single t: hbar_beta2 wins, beta2 follows.
std::pair<double, double> resolve_scale(const Settings& s, double default_t, json& config) {
  const double hbar = s.number("hbar", 1.0);
  if (!(hbar > 0.0)) throw UsageError("hbar must be > 0");
  double beta2 = 0.0;
  if (s.has("hbar_beta2")) {
    const double t = s.number("hbar_beta2", default_t);
    if (!(t > 0.0)) throw UsageError("hbar_beta2 must be > 0");
    if (s.has("beta2") && std::abs(hbar * s.number("beta2", 0.0) - t) > 1e-12 * t) {
      throw UsageError("hbar * beta2 disagrees with hbar_beta2");
    }
    beta2 = t / hbar;
  } else {
    beta2 = s.number("beta2", default_t / hbar);
    if (!(beta2 > 0.0)) throw UsageError("beta2 must be > 0");
  }
  config["hbar"] = hbar;
  config["beta2"] = beta2;
  return {hbar, beta2};
}

// t grid for sweep commands: explicit range, else hbar*beta2, else the default
std::vector<double> resolve_t_values(const Settings& s, const std::string& fallback, json& config) {
  std::string range_text;
  if (s.has("hbar_beta2")) {
    range_text = *s.get("hbar_beta2");
  } else if (s.has("hbar") || s.has("beta2")) {
    range_text = format_number(s.number("hbar", 1.0) * s.number("beta2", 1.0));
  } else {
    range_text = fallback;
  }
  auto ts = parse_range(range_text, "hbar_beta2");
  if (!(ts.front() > 0.0)) throw UsageError("hbar_beta2 values must be > 0");
  config["hbar_beta2"] = range_text;
  return ts;
}

enum class Format { Csv, Svg };

Format resolve_format(const Settings& s, json& config) {
  const auto f = s.get_or("format", "csv");
  if (f != "csv" && f != "svg") throw UsageError("format must be csv or svg");
  config["format"] = f;
  return f == "csv" ? Format::Csv : Format::Svg;
}

struct Output {
  std::string text;
};

// --- subcommands -----------------------------------------------------------

Output cmd_tunneling(const Settings& s, json config) {
  const Format format = resolve_format(s, config);
  const auto ts = resolve_t_values(s, default_range(s, "log", 0.01, 5.0, 200), config);
  std::vector<double> overlaps(ts.size());
  parallel_for(ts.size(), [&](std::size_t i) { overlaps[i] = costratified::tunneling_overlap(ts[i]); });

  if (format == Format::Svg) {
    PlotSeries series{"probability", ts, {}};
    for (double o : overlaps) series.y.push_back(o * o);
    return {render_svg({"Tunneling probability", "hbar beta^2", "|<psi+,psi->|^2", true, {series}})};
  }
  Table table{{"hbar_beta2", "overlap", "probability"}, {}};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double o = overlaps[i];
    table.rows.push_back({format_number(ts[i]), format_number(o), format_number(o * o)});
  }
  return {render_csv(table, config)};
}

Output cmd_spectrum(const Settings& s, json config) {
  const Format format = resolve_format(s, config);
  reject_both_couplings(s);
  const unsigned levels = positive_count(s, "n_max", 8, 1);
  config["n_max"] = levels;
  const std::size_t trunc = truncation_override(s, config);

  std::vector<double> nus;
  if (s.has("coupling_g")) {
    const auto [hbar, beta2] = resolve_scale(s, 1.0, config);
    const auto range_text = *s.get("coupling_g");
    config["coupling_g"] = range_text;
    for (double g : parse_range(range_text, "coupling_g")) nus.push_back(ModelParams::from_coupling(hbar, beta2, g).nu_tilde());
  } else {
    const auto range_text = s.get_or("nu_tilde", default_range(s, "lin", 0.0, 24.0, 25));
    config["nu_tilde"] = range_text;
    nus = parse_range(range_text, "nu_tilde");
  }
  for (double nu : nus)
    if (!(nu >= 0.0)) throw UsageError("nu_tilde values must be >= 0");

  // E_n / (hbar^2 beta^2) depends on nu~ only
  std::vector<std::vector<double>> energies(nus.size());
  parallel_for(nus.size(), [&](std::size_t i) {
    const auto p = ModelParams::reduced(1.0, nus[i]);
    const auto sols = mathieu::solve_levels(levels + 1, spectrum::mathieu_q(p), trunc);
    for (const auto& sol : sols) energies[i].push_back(spectrum::energy_from_characteristic(sol.b, p) / p.energy_unit());
  });

  if (format == Format::Svg) {
    PlotData plot{"Energy eigenvalues", "nu~", "E_n / (hbar^2 beta^2)", false, {}};
    for (unsigned n = 0; n < levels; ++n) {
      PlotSeries series{"E_" + std::to_string(n), nus, {}};
      for (const auto& e : energies) series.y.push_back(e[n]);
      plot.series.push_back(std::move(series));
    }
    return {render_svg(plot)};
  }
  Table table{{"nu_tilde", "n", "E_n", "E_np1_minus_E_n"}, {}};
  for (std::size_t i = 0; i < nus.size(); ++i) {
    for (unsigned n = 0; n < levels; ++n) {
      const auto& e = energies[i];
      table.rows.push_back({format_number(nus[i]), std::to_string(n), format_number(e[n]), format_number(e[n + 1] - e[n])});
    }
  }
  return {render_csv(table, config)};
}

Output cmd_states(const Settings& s, json config) {
  const Format format = resolve_format(s, config);
  reject_both_couplings(s);
  const auto which = s.get_or("state", "psi+");
  if (which != "psi+" && which != "psi-" && which != "xi") throw UsageError("state must be psi+, psi- or xi");
  config["state"] = which;
  const unsigned samples = positive_count(s, "grid", 201, 2);
  config["grid"] = samples;
  const std::size_t trunc = truncation_override(s, config);

  const auto [hbar, beta2] = resolve_scale(s, 0.125, config);
  ModelParams p = ModelParams::from_nu_tilde(hbar, beta2, 0.0);
  if (s.has("coupling_g")) {
    const double g = s.number("coupling_g", 1.0);
    config["coupling_g"] = g;
    p = ModelParams::from_coupling(hbar, beta2, g);
  } else {
    const double nu = s.number("nu_tilde", 0.0);
    config["nu_tilde"] = nu;
    p = ModelParams::from_nu_tilde(hbar, beta2, nu);
  }

  std::vector<double> xs(samples);
  for (unsigned i = 0; i < samples; ++i) xs[i] = i + 1 == samples ? kPi : kPi * i / (samples - 1.0);
  // samples at x_i = pi i / (samples - 1), evaluated on exact fractions of pi
  const long long den = samples - 1;
  std::optional<costratified::StateVector> state;
  std::string label = which;
  if (which == "xi") {
    const long long n = s.integer("n", 0);
    if (n < 0 || n > 10000) throw UsageError("n must be in [0, 10000]");
    config["n"] = n;
    label = "xi_" + std::to_string(n);
    const double q = spectrum::mathieu_q(p);
    const auto level = static_cast<unsigned>(n);
    const auto sol = trunc ? mathieu::solve(level, q, trunc) : mathieu::solve(level, q);
    if (sol.truncation_warning) throw TruncationError("states: truncation too small for xi_" + std::to_string(n));
    state = spectrum::eigenstate_from_solution(sol, p);
  } else {
    const auto cap = trunc ? std::optional(trunc) : std::nullopt;
    state = which == "psi+" ? costratified::psi_plus(p, cap) : costratified::psi_minus(p, cap);
  }
  std::vector<double> values(samples);
  for (unsigned i = 0; i < samples; ++i) values[i] = state->value_at_pi_fraction(i, den).real();

  if (format == Format::Svg) return {render_svg({"State " + label, "x", "value", false, {{label, xs, values}}})};
  Table table{{"x", "value"}, {}};
  for (unsigned i = 0; i < samples; ++i) table.rows.push_back({format_number(xs[i]), format_number(values[i])});
  return {render_csv(table, config)};
}

Output cmd_projector_expectations(const Settings& s, json config) {
  constexpr unsigned kCompletenessLevels = 60;
  const Format format = resolve_format(s, config);
  reject_both_couplings(s);
  const unsigned shown = positive_count(s, "n_max", 6, 1);
  config["n_max"] = shown;
  const std::size_t trunc = truncation_override(s, config);
  const auto ts = resolve_t_values(s, "0.03125,0.125,0.5", config);
  const double hbar = s.number("hbar", 1.0);
  if (!(hbar > 0.0)) throw UsageError("hbar must be > 0");

  const bool by_coupling = s.has("coupling_g");
  const auto range_text = by_coupling ? *s.get("coupling_g") : s.get_or("nu_tilde", default_range(s, "log", 0.1, 100.0, 30));
  config[by_coupling ? "coupling_g" : "nu_tilde"] = range_text;
  const auto axis = parse_range(range_text, by_coupling ? "coupling_g" : "nu_tilde");
  if (!by_coupling && !(axis.front() >= 0.0)) throw UsageError("nu_tilde values must be >= 0");
  if (by_coupling) config["hbar"] = hbar;

  struct Point {
    ModelParams params;
    spectrum::ProjectorTable table;
  };
  std::vector<Point> points;
  for (double t : ts) {
    for (double v : axis) {
      const auto p = by_coupling ? ModelParams::from_coupling(hbar, t / hbar, v) : ModelParams::reduced(t, v);
      points.push_back({p, {}});
    }
  }
  const unsigned levels = std::max(shown, kCompletenessLevels);
  parallel_for(points.size(), [&](std::size_t i) {
    points[i].table = spectrum::projector_expectations(points[i].params, levels, spectrum::stratum_overlap, trunc);
  });

  if (format == Format::Svg) {
    PlotData plot{"Projector expectations P_+,n", "nu~", "P_+,n", true, {}};
    for (double t : ts) {
      for (unsigned n = 0; n < shown; ++n) {
        PlotSeries series{"t=" + format_number(t) + " n=" + std::to_string(n), {}, {}};
        for (const auto& pt : points) {
          if (pt.params.hbar_beta2() != t) continue;
          series.x.push_back(pt.params.nu_tilde());
          series.y.push_back(pt.table.plus[n]);
        }
        plot.series.push_back(std::move(series));
      }
    }
    return {render_svg(plot)};
  }
  Table table{{"hbar_beta2", "nu_tilde", "n", "P_plus", "P_minus", "sum_P_plus"}, {}};
  for (const auto& pt : points) {
    double sum = 0.0;
    for (double v : pt.table.plus) sum += v;
    for (unsigned n = 0; n < shown; ++n) {
      table.rows.push_back({format_number(pt.params.hbar_beta2()), format_number(pt.params.nu_tilde()),
                            std::to_string(n), format_number(pt.table.plus[n]), format_number(pt.table.minus[n]),
                            format_number(sum)});
    }
  }
  return {render_csv(table, config)};
}

Output cmd_decomp(const Settings& s, json config) {
  if (resolve_format(s, config) == Format::Svg) throw UsageError("decomp only writes csv");
  const long long sv = s.integer("s", 2);
  const long long kv = s.integer("k", 4);
  if (sv < 1 || sv > 64) throw UsageError("s must be in [1, 64]");
  if (kv < 0 || kv > 200) throw UsageError("k must be in [0, 200]");
  config["s"] = sv;
  config["k"] = kv;
  const auto dim = static_cast<unsigned>(sv);
  const auto degree = static_cast<unsigned>(kv);

  const auto list = geometry::monomial_decomposition(dim, degree);
  Table table{{"index", "monomial", "exponents", "restriction"}, {}};
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::string exps;
    for (std::size_t m = 0; m < list[i].size(); ++m) exps += (m ? " " : "") + std::to_string(list[i][m]);
    const char* restriction = dim < 2 ? "n/a" : (list[i].back() >= 1 ? "kernel" : "image");
    table.rows.push_back({std::to_string(i), geometry::monomial_label(list[i]), exps, restriction});
  }
  return {render_csv(table, config)};
}

Output report(const std::vector<CheckResult>& checks, int& code) {
  std::ostringstream o;
  write_report(o, checks);
  code = all_passed(checks) ? kExitOk : kExitVerifyFailed;
  return {o.str()};
}

void emit(const Settings& s, const Output& output, std::ostream& out) {
  if (const auto path = s.get("out"); path && !path->empty() && *path != "-") {
    std::ofstream file(*path, std::ios::binary | std::ios::trunc);
    if (!(file << output.text)) throw UsageError("cannot write '" + *path + "'");
  } else {
    out << output.text;
  }
}

std::string flag_name(const std::string& key) {
  std::string name = "--" + key;
  std::ranges::replace(name, '_', '-');
  return name;
}

const std::map<std::string, std::string>& key_help() {
  static const std::map<std::string, std::string> help{
      {"hbar", "Planck constant hbar > 0"},
      {"beta2", "beta^2 > 0"},
      {"coupling_g", "coupling g (list or range); excludes nu_tilde"},
      {"nu_tilde", "reduced coupling nu~ (list or range); excludes coupling_g"},
      {"hbar_beta2", "t = hbar beta^2 (list, lin:a:b:N or log:a:b:N)"},
      {"n_max", "number of levels reported"},
      {"trunc", "minimum basis truncation"},
      {"grid", "points in the default sweep, or x samples for states"},
      {"out", "output path (default stdout)"},
      {"format", "csv or svg"},
      {"state", "psi+, psi- or xi"},
      {"n", "level index for state xi"},
      {"s", "dimension s"},
      {"k", "degree k"},
  };
  return help;
}

}  // namespace

const char* version() { return PLAQUETTE_QGAUGE_VERSION; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SU(2) single-plaquette costratified quantum model", "plaquette-qgauge"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(version()));

  struct Command {
    std::string name;
    std::vector<std::string> keys;
    std::string description;
  };
  const std::vector<Command> commands{
      {"tunneling", {"hbar", "beta2", "hbar_beta2", "grid", "out", "format"}, "tunneling probability against t"},
      {"spectrum",
       {"hbar", "beta2", "hbar_beta2", "coupling_g", "nu_tilde", "n_max", "trunc", "grid", "out", "format"},
       "energy levels in units of hbar^2 beta^2"},
      {"states",
       {"hbar", "beta2", "hbar_beta2", "coupling_g", "nu_tilde", "state", "n", "trunc", "grid", "out", "format"},
       "psi+, psi- or xi_n sampled on [0, pi]"},
      {"projector-expectations",
       {"hbar", "beta2", "hbar_beta2", "coupling_g", "nu_tilde", "n_max", "trunc", "grid", "out", "format"},
       "P_+,n and P_-,n over t and nu~"},
      {"decomp", {"s", "k", "out", "format"}, "monomial decomposition of degree-k invariants"},
      {"geometry-verify", {"out"}, "Poisson geometry residual suites"},
      {"verify", {"out"}, "all verification suites"},
  };

  std::map<std::string, std::string> flag_values;
  std::map<std::string, std::vector<std::pair<std::string, CLI::Option*>>> flag_options;
  std::map<std::string, std::string> config_paths;
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.description);
    subs[c.name] = sub;
    sub->add_option("--config", config_paths[c.name], "flat key = value file; flags override it");
    for (const auto& key : c.keys) {
      auto* opt = sub->add_option(flag_name(key), flag_values[c.name + "/" + key], key_help().at(key));
      flag_options[c.name].emplace_back(key, opt);
    }
  }

  std::vector<std::string> storage{"plaquette-qgauge"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string name;
  for (const auto& [n, sub] : subs)
    if (sub->parsed()) name = n;

  try {
    std::map<std::string, std::string> file;
    if (!config_paths[name].empty()) file = read_config_file(config_paths[name]);
    std::map<std::string, std::string> flags;
    for (const auto& [key, opt] : flag_options[name])
      if (opt->count() > 0) flags[key] = flag_values[name + "/" + key];
    const Settings settings(std::move(file), std::move(flags));

    json config = json::object();
    config["command"] = name;
    Output output;
    int code = kExitOk;
    if (name == "tunneling") output = cmd_tunneling(settings, config);
    if (name == "spectrum") output = cmd_spectrum(settings, config);
    if (name == "states") output = cmd_states(settings, config);
    if (name == "projector-expectations") output = cmd_projector_expectations(settings, config);
    if (name == "decomp") output = cmd_decomp(settings, config);
    if (name == "geometry-verify") output = report(geometry_checks(), code);
    if (name == "verify") {
      auto checks = geometry_checks();
      auto spectral = spectral_checks();
      checks.insert(checks.end(), spectral.begin(), spectral.end());
      output = report(checks, code);
    }
    emit(settings, output, out);
    if (code != kExitOk) err << "verification failed\n";
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace plaquette::cli
