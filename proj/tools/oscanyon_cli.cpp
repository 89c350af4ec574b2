// oscanyon: spectra, wavefunctions, duality tables and verification suites
// for the half-line oscillator and the 1D Coulomb anyon.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oscanyon/anyon.hpp"
#include "oscanyon/core_model.hpp"
#include "oscanyon/duality.hpp"
#include "oscanyon/oscillator.hpp"
#include "oscanyon/verification.hpp"

namespace {

using namespace oscanyon;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string system;
  double mu = 1.0;
  double hbar = 1.0;
  std::optional<double> alpha;
  std::optional<double> omega;
  std::optional<int> n;
  std::optional<int> level;
  std::optional<std::string> s_text;
  std::optional<std::string> nu_text;
  std::optional<int> n_max;
  std::optional<double> x_min;
  std::optional<double> x_max;
  int points = 1000;
  bool extended = false;
  std::string output;
  std::string format = "json";
  std::string suite = "all";
  std::optional<double> tol;
};

// "0.25", "0.75", "1/4", "3/4" (and "0", "0.5", "1/2" for s).
double parse_fraction(const std::string& text, const std::string& flag) {
  const auto slash = text.find('/');
  auto number = [&](std::string_view part) {
    double v = 0.0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || end != part.data() + part.size() || part.empty())
      throw UsageError(flag + ": not a number: " + text);
    return v;
  };
  if (slash == std::string::npos) return number(text);
  const std::string_view all(text);
  const double den = number(all.substr(slash + 1));
  if (den == 0.0) throw UsageError(flag + ": zero denominator");
  return number(all.substr(0, slash)) / den;
}

std::optional<StatParam> requested_nu(const RunConfig& c) {
  if (c.nu_text && c.s_text) throw UsageError("give either --s or --nu, not both");
  if (c.nu_text) {
    const double v = parse_fraction(*c.nu_text, "--nu");
    if (v != 0.25 && v != 0.75) throw UsageError("nu must be 1/4 or 3/4");
    return stat_param_from_value(v);
  }
  if (c.s_text) {
    const double v = parse_fraction(*c.s_text, "--s");
    if (v != 0.0 && v != 0.5) throw UsageError("s must be 0 or 1/2");
    return stat_param_for(spin_from_value(v));
  }
  return std::nullopt;
}

std::string number_text(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, end) : "nan";
}

std::string cell_text(const Json& v) {
  if (v.is_number_float()) return number_text(v.get<double>());
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "";
  return v.get<std::string>();
}

std::string csv_field(const Json& v) {
  std::string text = cell_text(v);
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return quoted + '"';
}

bool is_anyon(const RunConfig& c) { return c.system == "anyon"; }

// Oscillator side takes ω, anyon side α; the other one is a usage error.
PhysicalParams physical(const RunConfig& c) {
  if (is_anyon(c)) {
    if (c.omega) throw UsageError("--omega is not used with --system anyon");
    return PhysicalParams::anyon(c.alpha.value_or(1.0), c.mu, c.hbar);
  }
  if (c.alpha) throw UsageError("--alpha is not used with --system oscillator");
  return PhysicalParams::oscillator(c.omega.value_or(1.0), c.mu, c.hbar);
}

Json meta(const RunConfig& c, const PhysicalParams& p) {
  Json m;
  m["program"] = "oscanyon";
  m["version"] = kVersion;
  m["command"] = c.command;
  if (!c.system.empty()) m["system"] = c.system;
  m["mu"] = p.mass;
  m["hbar"] = p.hbar;
  if (p.coupling) m["alpha"] = *p.coupling;
  if (p.frequency) m["omega"] = *p.frequency;
  return m;
}

void require_system(const RunConfig& c) {
  if (c.system.empty()) throw UsageError("--system is required (oscillator or anyon)");
}

// --- commands ----------------------------------------------------------------

struct Table {
  Json meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

Table cmd_spectrum(const RunConfig& c) {
  require_system(c);
  const PhysicalParams p = physical(c);
  const int n_max = c.n_max.value_or(5);
  if (n_max < 0) throw UsageError("--n-max must be nonnegative");
  Table t{meta(c, p), {}, {}};
  t.meta["n_max"] = n_max;
  if (is_anyon(c)) {
    const auto nu = requested_nu(c);
    if (nu) t.meta["nu"] = value(*nu);
    t.columns = {"n", "nu", "level", "energy", "dual_omega", "dual_E"};
    for (int n = 0; n <= n_max; ++n) {
      for (StatParam v : {StatParam::quarter, StatParam::three_quarters}) {
        if (nu && *nu != v) continue;
        const DualityPair d = duality_from_anyon(make_state(n, v), p);
        t.rows.push_back({n, value(v), d.level(), d.anyon_energy, d.frequency, d.oscillator_energy});
      }
    }
  } else {
    if (c.nu_text || c.s_text) throw UsageError("--s/--nu are not used by the oscillator spectrum");
    t.columns = {"N", "energy", "dual_alpha", "dual_epsilon"};
    for (int level = 0; level <= n_max; ++level) {
      const double e = osc_energy(level, p);
      const AnyonSide a = to_anyon_params(e, *p.frequency, p);
      t.rows.push_back({level, e, a.coupling, a.energy});
    }
  }
  return t;
}

Table cmd_wavefunction(const RunConfig& c) {
  require_system(c);
  const PhysicalParams p = physical(c);
  if (c.points < 3) throw UsageError("--points must be at least 3");
  Table t{meta(c, p), {}, {}};
  if (is_anyon(c)) {
    if (c.level) throw UsageError("--level is an oscillator flag; use --n with --nu");
    const int n = c.n.value_or(0);
    const StatParam nu = requested_nu(c).value_or(StatParam::quarter);
    const double x_min = c.x_min.value_or(0.01);
    const double x_max = c.x_max.value_or(10.0);
    if (!c.extended && x_min <= 0.0) throw UsageError("grid must stay in x > 0 for the anyon wavefunction");
    const Grid grid(x_min, x_max, c.points);
    t.meta["n"] = n;
    t.meta["nu"] = value(nu);
    t.meta["energy"] = anyon_energy(n, nu, p);
    t.meta["x_min"] = x_min;
    t.meta["x_max"] = x_max;
    t.meta["points"] = c.points;
    t.meta["extended"] = c.extended;
    if (c.extended) {
      t.columns = {"y", "re", "im"};
      for (double y : grid.points()) {
        if (y == 0.0) throw UsageError("grid must not contain y = 0 for the extended wavefunction");
        const auto v = extended_wavefunction(n, nu, p, y);
        t.rows.push_back({y, v.real(), v.imag()});
      }
    } else {
      t.columns = {"x", "phi"};
      for (double x : grid.points()) t.rows.push_back({x, anyon_wavefunction(n, nu, p, x)});
    }
  } else {
    if (c.extended) throw UsageError("--extended applies to the anyon side only");
    if (c.nu_text) throw UsageError("--nu is an anyon flag; use --level or --n with --s");
    if (c.level && (c.n || c.s_text)) throw UsageError("give either --level or --n/--s");
    int level = c.level.value_or(0);
    if (!c.level) {
      const auto nu = requested_nu(c);
      level = QuantumState(c.n.value_or(0), nu ? spin_for(*nu) : Spin::zero).level();
    }
    const double x_min = c.x_min.value_or(0.0);
    const double x_max = c.x_max.value_or(6.0);
    if (x_min < 0.0) throw UsageError("grid must stay in u >= 0 for the half-line oscillator");
    const Grid grid(x_min, x_max, c.points);
    t.meta["level"] = level;
    t.meta["energy"] = osc_energy(level, p);
    t.meta["x_min"] = x_min;
    t.meta["x_max"] = x_max;
    t.meta["points"] = c.points;
    t.columns = {"u", "psi"};
    for (double u : grid.points()) t.rows.push_back({u, osc_wavefunction(level, p, u)});
  }
  return t;
}

Table cmd_dual(const RunConfig& c) {
  require_system(c);
  const PhysicalParams p = physical(c);
  if (c.n && c.n_max) throw UsageError("give either --n or --n-max");
  const int first = c.n.value_or(0);
  const int last = c.n ? *c.n : c.n_max.value_or(0);
  if (first < 0 || last < 0) throw UsageError("--n/--n-max must be nonnegative");
  const auto nu = requested_nu(c);
  Table t{meta(c, p), {}, {}};
  if (c.n) t.meta["n"] = *c.n;
  if (c.n_max) t.meta["n_max"] = *c.n_max;
  if (nu) t.meta["nu"] = value(*nu);
  t.columns = {"n", "s", "nu", "level", "omega", "E", "alpha", "epsilon", "constant_residual"};
  for (int n = first; n <= last; ++n) {
    for (StatParam v : {StatParam::quarter, StatParam::three_quarters}) {
      if (nu && *nu != v) continue;
      const QuantumState q = make_state(n, v);
      const DualityPair d = is_anyon(c) ? duality_from_anyon(q, p) : duality_from_oscillator(q, p);
      t.rows.push_back({n, q.s(), q.nu(), d.level(), d.frequency, d.oscillator_energy, d.coupling, d.anyon_energy,
                        constant_equality_residual(n, v)});
    }
  }
  return t;
}

std::optional<double> tolerance_override(const RunConfig& c) {
  if (c.tol) return c.tol;
  const char* env = std::getenv("ANYON_DEFAULT_TOL");
  if (env == nullptr || *env == '\0') return std::nullopt;
  const std::string text(env);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size())
    throw UsageError("ANYON_DEFAULT_TOL: not a number: " + text);
  return v;
}

Table cmd_verify(const RunConfig& c, bool& passed) {
  const Suite suite = suite_from_name(c.suite);
  const auto tol = tolerance_override(c);
  if (tol && !(*tol > 0.0)) throw UsageError("tolerance must be positive");
  Table t;
  t.meta["program"] = "oscanyon";
  t.meta["version"] = kVersion;
  t.meta["command"] = c.command;
  t.meta["suite"] = suite_name(suite);
  t.meta["tol"] = tol ? Json(*tol) : Json(nullptr);
  t.columns = {"check", "residual", "tolerance", "bound", "passed"};
  const auto reports = run_suite(suite, {tol});
  for (const auto& r : reports) {
    std::cerr << (r.passed ? "PASS " : "FAIL ") << r.check_name << ": " << number_text(r.residual)
              << (r.lower_bound ? " >= " : " <= ") << number_text(r.tolerance) << '\n';
    t.rows.push_back({r.check_name, r.residual, r.tolerance, r.lower_bound ? "min" : "max", r.passed});
  }
  passed = all_passed(reports);
  t.meta["passed"] = passed;
  return t;
}

// --- output ------------------------------------------------------------------

std::string render(const Table& t, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    Json doc;
    doc["meta"] = t.meta;
    Json rows = Json::array();
    for (const auto& row : t.rows) {
      Json obj;
      for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i];
      rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& [key, v] : t.meta.items()) out << "# " << key << '=' << cell_text(v) << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << '\n';
    }
  }
  return out.str();
}

void emit(const Table& t, const RunConfig& c) {
  Table copy = t;
  copy.meta["format"] = c.format;
  const std::string text = render(copy, c.format);
  if (c.output.empty() || c.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw UsageError("cannot open output file: " + c.output);
  file << text;
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--output,-o", c.output, "Output path (default stdout)");
  sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

void add_physics(CLI::App* sub, RunConfig& c) {
  sub->add_option("--system", c.system, "oscillator or anyon")->check(CLI::IsMember({"oscillator", "anyon"}));
  sub->add_option("--mu", c.mu, "Mass")->check(CLI::PositiveNumber);
  sub->add_option("--hbar", c.hbar, "Reduced Planck constant")->check(CLI::PositiveNumber);
  sub->add_option("--alpha", c.alpha, "Coulomb coupling (anyon side)")->check(CLI::PositiveNumber);
  sub->add_option("--omega", c.omega, "Frequency (oscillator side)")->check(CLI::PositiveNumber);
  sub->add_option("--s", c.s_text, "Spin label 0 or 1/2");
  sub->add_option("--nu", c.nu_text, "Statistical parameter 1/4 or 3/4");
}

int run(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"Quantum oscillator / 1D Coulomb anyon duality toolkit", "oscanyon"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto* spectrum = app.add_subcommand("spectrum", "Energy table with dual parameters");
  add_physics(spectrum, c);
  spectrum->add_option("--n-max", c.n_max, "Largest index");
  add_common(spectrum, c);

  auto* wave = app.add_subcommand("wavefunction", "Sample an eigenfunction on a grid");
  add_physics(wave, c);
  wave->add_option("--n", c.n, "Radial index n");
  wave->add_option("--level", c.level, "Oscillator level N");
  wave->add_option("--x-min", c.x_min, "Grid start");
  wave->add_option("--x-max", c.x_max, "Grid end");
  wave->add_option("--points", c.points, "Grid points");
  wave->add_flag("--extended", c.extended, "Parity-extended anyon function on the full line");
  add_common(wave, c);

  auto* dual = app.add_subcommand("dual", "Duality dictionary for given states");
  add_physics(dual, c);
  dual->add_option("--n", c.n, "Radial index n");
  dual->add_option("--n-max", c.n_max, "Tabulate n = 0..n-max");
  add_common(dual, c);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", c.suite, "identities, normalization, duality, oracle or all");
  verify->add_option("--tol", c.tol, "Tolerance override for all accuracy checks");
  add_common(verify, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    bool passed = true;
    Table t;
    if (spectrum->parsed()) {
      c.command = "spectrum";
      t = cmd_spectrum(c);
    } else if (wave->parsed()) {
      c.command = "wavefunction";
      t = cmd_wavefunction(c);
    } else if (dual->parsed()) {
      c.command = "dual";
      t = cmd_dual(c);
    } else {
      c.command = "verify";
      t = cmd_verify(c, passed);
    }
    emit(t, c);
    return passed ? kExitOk : kExitFailed;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
