#include "annulus/cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "annulus/bounds.hpp"
#include "annulus/error.hpp"
#include "annulus/means.hpp"
#include "annulus/operators.hpp"
#include "annulus/sampling.hpp"
#include "annulus/series_json.hpp"
#include "annulus/verify.hpp"

namespace annulus::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

RunManifest make_manifest(const CLI::App& sub, unsigned long long seed, std::map<std::string, double> tolerances) {
  RunManifest m;
  m.command = sub.get_name();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->get_name() == "--help" || opt->get_name().empty()) continue;
    std::string value;
    if (opt->count() > 0) {
      for (const std::string& r : opt->results()) value += (value.empty() ? "" : " ") + r;
    } else {
      value = opt->get_default_str();
    }
    m.flags[opt->get_name()] = value;
  }
  m.seed = seed;
  m.timestamp = utc_timestamp();
  m.tolerances = std::move(tolerances);
  return m;
}

Json to_json(const RunManifest& m) {
  Json flags = Json::object();
  for (const auto& [k, v] : m.flags) flags[k] = v;
  Json tol = Json::object();
  for (const auto& [k, v] : m.tolerances) tol[k] = v;
  return Json{{"command", m.command}, {"flags", flags},     {"seed", m.seed},
              {"version", m.version}, {"timestamp", m.timestamp}, {"tolerances", tol}};
}

std::map<std::string, double> default_tolerances() {
  auto table = Tolerances{}.table();
  table["gate"] = kGateTolerance;
  return table;
}

class Sink {
 public:
  Sink(std::ostream& out, std::string path) : out_(out), path_(std::move(path)) {}
  void write(const std::string& text) {
    if (path_.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(path_);
    if (!file) throw Error(ErrorKind::Format, "cannot write " + path_);
    file << text;
  }

 private:
  std::ostream& out_;
  std::string path_;
};

void require_format(const std::string& format) {
  if (format != "json" && format != "csv") throw Error(ErrorKind::ParameterDomain, "format must be json or csv");
}

std::vector<double> grid(double lo, double hi, int steps) {
  if (steps < 1) throw Error(ErrorKind::ParameterDomain, "steps must be >= 1");
  if (steps == 1) return {lo};
  if (!(lo < hi)) throw Error(ErrorKind::ParameterDomain, "range needs min < max");
  std::vector<double> out;
  for (int i = 0; i < steps; ++i) out.push_back(i + 1 == steps ? hi : lo + (hi - lo) * i / (steps - 1));
  return out;
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  std::string text;
  for (std::size_t i = 0; i < header.size(); ++i) text += (i ? "," : "") + header[i];
  text += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) text += (i ? "," : "") + format_double(row[i]);
    text += "\n";
  }
  return text;
}

Json rows_json(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json r = Json::object();
    for (std::size_t i = 0; i < header.size(); ++i) r[header[i]] = row[i];
    out.push_back(r);
  }
  return out;
}

HarmonicSeries series_or_lambda(const std::string& path, const std::optional<double>& lambda) {
  if (!path.empty() && lambda) throw Error(ErrorKind::ParameterDomain, "give either --series or --lambda");
  if (!path.empty()) return load_series(path);
  if (lambda) return extremal_map(*lambda);
  throw Error(ErrorKind::ParameterDomain, "one of --series or --lambda is required");
}

void apply_config(const std::string& path, QuadratureConfig& cfg, Tolerances& tol) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Format, "cannot read config " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Format, std::string("config: ") + e.what());
  }
  try {
    if (doc.contains("angular_nodes")) cfg.angular_nodes = doc["angular_nodes"].get<int>();
    if (doc.contains("radial_nodes")) cfg.radial_nodes = doc["radial_nodes"].get<int>();
    if (doc.contains("refinement")) cfg.refinement = doc["refinement"].get<int>();
    if (doc.contains("rtol")) cfg.rtol = doc["rtol"].get<double>();
    if (doc.contains("atol")) cfg.atol = doc["atol"].get<double>();
    if (doc.contains("tolerances")) {
      for (const auto& [k, v] : doc["tolerances"].items()) {
        if (!tol.set(k, v.get<double>())) throw Error(ErrorKind::Format, "config: unknown tolerance " + k);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Format, std::string("config: ") + e.what());
  }
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParameterDomain:
    case ErrorKind::OutOfRange:
    case ErrorKind::Index:
    case ErrorKind::Format:
      return kExitUsage;
    case ErrorKind::Precondition:
    case ErrorKind::OutOfClass:
    case ErrorKind::Degenerate:
      return kExitNotApplicable;
    default:
      return kExitFail;
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harmonic maps of annuli: bounds, identity checks and evolution tables"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Nitsche, Kalaj and Weitsman bounds for one R or a sweep");
  std::optional<double> b_R;
  double b_min = 1.5, b_max = 5.0;
  int b_steps = 10;
  std::string b_format = "json", b_out;
  bounds->add_option("--R", b_R, "Outer radius");
  bounds->add_option("--R-min", b_min, "Sweep start")->capture_default_str();
  bounds->add_option("--R-max", b_max, "Sweep end")->capture_default_str();
  bounds->add_option("--steps", b_steps, "Sweep points")->capture_default_str();
  bounds->add_option("--format", b_format, "json or csv")->capture_default_str();
  bounds->add_option("--out", b_out, "Output file");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string v_suite;
  unsigned long long v_seed = 1;
  int v_trials = 100;
  std::optional<int> v_angular, v_radial;
  std::string v_config, v_out;
  verify->add_option("suite", v_suite, "identities|subsolution|kfunctional|certificates|schottky|all")->required();
  verify->add_option("--seed", v_seed)->capture_default_str();
  verify->add_option("--trials", v_trials)->capture_default_str();
  verify->add_option("--angular-nodes", v_angular, "Angular trapezoid nodes (0 = automatic)");
  verify->add_option("--radial-nodes", v_radial, "Radial Gauss nodes per unit log(rho)");
  verify->add_option("--config", v_config, "JSON quadrature and tolerance config");
  verify->add_option("--out", v_out, "Output file");
  std::map<std::string, std::optional<double>> tol_flags;
  for (const auto& [name, value] : Tolerances{}.table()) {
    verify->add_option("--tol-" + name, tol_flags[name], "Tolerance override (default " + format_double(value) + ")");
  }

  // evolve
  auto* evolve = app.add_subcommand("evolve", "Mean radius along rho against the initial-speed bound");
  std::string e_series, e_format = "csv", e_out;
  std::optional<double> e_lambda;
  double e_R = 2.0;
  int e_steps = 50;
  evolve->add_option("--series", e_series, "Series JSON file");
  evolve->add_option("--lambda", e_lambda, "Use the extremal map h^lambda");
  evolve->add_option("--R", e_R, "Outer radius")->capture_default_str();
  evolve->add_option("--steps", e_steps, "Grid points on [1, R]")->capture_default_str();
  evolve->add_option("--format", e_format, "csv or json")->capture_default_str();
  evolve->add_option("--out", e_out, "Output file");

  // check
  auto* check = app.add_subcommand("check", "Bound report for a series on A(1, R)");
  std::string c_series, c_out;
  double c_R = 0.0;
  check->add_option("--series", c_series, "Series JSON file")->required();
  check->add_option("--R", c_R, "Outer radius")->required();
  check->add_option("--out", c_out, "Output file");

  // sample
  auto* sample = app.add_subcommand("sample", "Draw a random series");
  SamplerConfig s_cfg;
  std::string s_out;
  sample->add_option("--seed", s_cfg.seed)->capture_default_str();
  sample->add_option("--N", s_cfg.N)->capture_default_str();
  sample->add_option("--decay", s_cfg.decay)->capture_default_str();
  sample->add_option("--outer-radius", s_cfg.outer_radius)->capture_default_str();
  sample->add_flag("--include-log", s_cfg.include_log);
  sample->add_flag("--include-const", s_cfg.include_const);
  sample->add_option("--out", s_out, "Output file");

  // profile
  auto* profile = app.add_subcommand("profile", "Closed-form U, V or U_n samples");
  std::string p_series, p_which = "U", p_format = "csv", p_out;
  std::optional<double> p_lambda;
  int p_mode = 1, p_steps = 50;
  double p_min = 1.0, p_max = 2.0;
  profile->add_option("--series", p_series, "Series JSON file");
  profile->add_option("--lambda", p_lambda, "Use the extremal map h^lambda");
  profile->add_option("--which", p_which, "U, V or mode")->capture_default_str();
  profile->add_option("--mode", p_mode, "Mode index for --which mode")->capture_default_str();
  profile->add_option("--R-min", p_min)->capture_default_str();
  profile->add_option("--R-max", p_max)->capture_default_str();
  profile->add_option("--steps", p_steps)->capture_default_str();
  profile->add_option("--format", p_format, "csv or json")->capture_default_str();
  profile->add_option("--out", p_out, "Output file");

  std::vector<char*> argv;
  std::vector<std::string> storage = args.empty() ? std::vector<std::string>{"annulus"} : args;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (bounds->parsed()) {
      require_format(b_format);
      const std::vector<double> radii = b_R ? std::vector<double>{*b_R} : grid(b_min, b_max, b_steps);
      const std::vector<std::string> header{"R", "modulus", "nitsche", "kalaj", "weitsman", "cosh_modulus"};
      std::vector<std::vector<double>> rows;
      for (double R : radii) {
        rows.push_back({R, Annulus{R}.modulus(), nitsche_bound(R), kalaj_bound(R), weitsman_bound(R),
                        std::cosh(std::log(R))});
      }
      Sink sink(out, b_out);
      if (b_format == "csv") {
        sink.write(csv(header, rows));
      } else {
        Json doc{{"manifest", to_json(make_manifest(*bounds, 0, default_tolerances()))},
                 {"rows", rows_json(header, rows)}};
        sink.write(doc.dump(2) + "\n");
      }
      return kExitPass;
    }

    if (verify->parsed()) {
      if (!is_suite(v_suite)) {
        err << "unknown suite: " << v_suite << "\n";
        return kExitUsage;
      }
      QuadratureConfig cfg;
      Tolerances tol;
      if (!v_config.empty()) apply_config(v_config, cfg, tol);
      if (v_angular) cfg.angular_nodes = *v_angular;
      if (v_radial) cfg.radial_nodes = *v_radial;
      for (const auto& [name, value] : tol_flags) {
        if (value) tol.set(name, *value);
      }
      cfg.validate();
      const VerificationReport report = run_suite(v_suite, v_seed, v_trials, tol, cfg);
      Json checks = Json::array();
      for (const VerificationCheck& c : report.checks) {
        checks.push_back(Json{{"name", c.name},           {"anchor", c.anchor}, {"residual", c.residual},
                              {"tolerance", c.tolerance}, {"pass", c.pass},     {"trials", c.trials}});
      }
      auto table = tol.table();
      table["gate"] = kGateTolerance;
      Json doc{{"manifest", to_json(make_manifest(*verify, v_seed, table))},
               {"suite", report.suite},
               {"all_pass", report.all_pass()},
               {"checks", checks}};
      Sink(out, v_out).write(doc.dump(2) + "\n");
      return report.all_pass() ? kExitPass : kExitFail;
    }

    if (evolve->parsed()) {
      if (e_format != "json" && e_format != "csv") require_format(e_format);
      const HarmonicSeries h = series_or_lambda(e_series, e_lambda);
      Annulus{e_R};
      if (e_steps < 2) throw Error(ErrorKind::ParameterDomain, "evolve needs --steps >= 2");
      const RadialProfile u = U_closed(h);
      const RadialJet inner = u.jet(1.0);
      if (!(inner.value > 0.0)) throw Error(ErrorKind::Degenerate, "quadratic mean vanishes on the inner circle");
      const double lambda = lambda_from_speed(inner.d1 / (2.0 * inner.value));
      const std::vector<std::string> header{"rho", "mean_radius", "bound", "margin"};
      std::vector<std::vector<double>> rows;
      for (double rho : grid(1.0, e_R, e_steps)) {
        const double measured = std::sqrt(u.value(rho) / inner.value);
        const double bound = (rho * rho + lambda) / ((1.0 + lambda) * rho);
        rows.push_back({rho, measured, bound, measured - bound});
      }
      Sink sink(out, e_out);
      if (e_format == "csv") {
        sink.write(csv(header, rows));
      } else {
        Json doc{{"manifest", to_json(make_manifest(*evolve, 0, default_tolerances()))},
                 {"lambda", lambda},
                 {"rows", rows_json(header, rows)}};
        sink.write(doc.dump(2) + "\n");
      }
      return kExitPass;
    }

    if (check->parsed()) {
      const HarmonicSeries h = load_series(c_series);
      const BoundReport r = theorem_gate(h, c_R);
      Json doc{{"manifest", to_json(make_manifest(*check, 0, default_tolerances()))},
               {"R", r.R},
               {"modulus", r.modulus},
               {"class_D", r.class_D},
               {"class_N", r.class_N},
               {"theorem", r.theorem},
               {"applicable", r.applicable},
               {"bound", r.bound},
               {"nitsche", r.nitsche},
               {"measured", r.measured},
               {"margin", r.margin},
               {"initial_speed", r.speed},
               {"lambda", r.lambda},
               {"verdict", to_string(r.verdict)}};
      Sink(out, c_out).write(doc.dump(2) + "\n");
      switch (r.verdict) {
        case Verdict::Pass: return kExitPass;
        case Verdict::Fail: return kExitFail;
        case Verdict::NotApplicable: return kExitNotApplicable;
      }
    }

    if (sample->parsed()) {
      Sink(out, s_out).write(series_to_json(random_series(s_cfg)));
      return kExitPass;
    }

    if (profile->parsed()) {
      require_format(p_format);
      const HarmonicSeries h = series_or_lambda(p_series, p_lambda);
      std::optional<RadialProfile> prof;
      if (p_which == "U") prof = U_closed(h);
      else if (p_which == "V") prof = V_closed(h);
      else if (p_which == "mode") prof = U_mode(h, p_mode);
      else throw Error(ErrorKind::ParameterDomain, "--which must be U, V or mode");
      if (!(p_min > 0.0)) throw Error(ErrorKind::ParameterDomain, "--R-min must be > 0");
      const std::vector<std::string> header{"rho", "value", "deriv1", "deriv2"};
      std::vector<std::vector<double>> rows;
      for (double rho : grid(p_min, p_max, p_steps)) {
        const RadialJet j = prof->jet(rho);
        rows.push_back({rho, j.value, j.d1, j.d2});
      }
      Sink sink(out, p_out);
      if (p_format == "csv") {
        sink.write(csv(header, rows));
      } else {
        Json doc{{"manifest", to_json(make_manifest(*profile, 0, default_tolerances()))},
                 {"label", prof->label()},
                 {"rows", rows_json(header, rows)}};
        sink.write(doc.dump(2) + "\n");
      }
      return kExitPass;
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}

}  // namespace annulus::cli
