#include "swlw/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "swlw/errors.hpp"

namespace swlw {

namespace {

using Errors = std::vector<std::string>;
using Handler = std::function<void(const YAML::Node&, const std::string&)>;
using Table = std::map<std::string, Handler>;

std::string at(const YAML::Node& n) {
  return "line " + std::to_string(n.Mark().line + 1);
}

template <class T>
Handler scalar(T& target, const char* kind, Errors& errs) {
  return [&target, kind, &errs](const YAML::Node& n, const std::string& path) {
    try {
      if (!n.IsScalar()) throw YAML::Exception(n.Mark(), "not a scalar");
      target = n.as<T>();
    } catch (const YAML::Exception&) {
      errs.push_back(at(n) + ": " + path + ": expected " + kind);
    }
  };
}

Handler number(double& t, Errors& e) { return scalar(t, "a number", e); }
Handler integer(int& t, Errors& e) { return scalar(t, "an integer", e); }
Handler boolean(bool& t, Errors& e) { return scalar(t, "true or false", e); }
Handler text(std::string& t, Errors& e) { return scalar(t, "a string", e); }

Handler number_list(std::vector<double>& target, Errors& errs) {
  return [&target, &errs](const YAML::Node& n, const std::string& path) {
    if (!n.IsSequence()) {
      errs.push_back(at(n) + ": " + path + ": expected a list of numbers");
      return;
    }
    target.clear();
    for (const auto& item : n) {
      try {
        target.push_back(item.as<double>());
      } catch (const YAML::Exception&) {
        errs.push_back(at(item) + ": " + path + ": expected a number");
      }
    }
  };
}

template <class E>
Handler choice(E& target, std::function<E(const std::string&)> parse, Errors& errs) {
  return [&target, parse, &errs](const YAML::Node& n, const std::string& path) {
    try {
      target = parse(n.as<std::string>());
    } catch (const YAML::Exception&) {
      errs.push_back(at(n) + ": " + path + ": expected a string");
    } catch (const ValidationError& ex) {
      errs.push_back(at(n) + ": " + path + ": " + ex.what());
    }
  };
}

void section(const YAML::Node& n, const std::string& path, const Table& table, Errors& errs) {
  if (!n || n.IsNull()) return;
  if (!n.IsMap()) {
    errs.push_back(at(n) + ": " + (path.empty() ? "document" : path) + ": expected a mapping");
    return;
  }
  for (const auto& kv : n) {
    const std::string key = kv.first.as<std::string>();
    const std::string full = path.empty() ? key : path + "." + key;
    const auto it = table.find(key);
    if (it == table.end()) {
      errs.push_back(at(kv.first) + ": unknown key '" + full + "'");
      continue;
    }
    it->second(kv.second, full);
  }
}

Integrator parse_integrator(const std::string& s) {
  if (s == "lawson-rk4") return Integrator::LawsonRK4;
  if (s == "rk4") return Integrator::RK4;
  throw ValidationError("unknown integrator '" + s + "' (expected lawson-rk4 or rk4)");
}

HForm parse_h_form(const std::string& s) {
  if (s == "paper") return HForm::Paper;
  if (s == "conservative") return HForm::Conservative;
  throw ValidationError("unknown h_form '" + s + "' (expected paper or conservative)");
}

SnapshotFormat parse_snapshot_format(const std::string& s) {
  if (s == "binary") return SnapshotFormat::Binary;
  if (s == "csv") return SnapshotFormat::Csv;
  throw ValidationError("unknown snapshot_format '" + s + "' (expected binary or csv)");
}

}  // namespace

const char* snapshot_format_name(SnapshotFormat f) {
  return f == SnapshotFormat::Binary ? "binary" : "csv";
}

RunConfig parse_config_text(const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(source);
  } catch (const YAML::ParserException& ex) {
    throw ValidationError("line " + std::to_string(ex.mark.line + 1) + ": parse error: " + ex.msg);
  }
  RunConfig cfg;
  cfg.source = source;
  Errors errs;
  GasParams& g = cfg.solver.params;
  SolverConfig& sc = cfg.solver;
  InitialData& in = sc.initial;
  SweepSettings& sw = cfg.sweep;
  int sweep_n = 0;
  double sweep_dt = 0;
  long long seed = static_cast<long long>(cfg.seed);

  const Table gas = {
      {"a", number(g.a, errs)},           {"gamma", number(g.gamma, errs)},
      {"delta", number(g.delta, errs)},   {"epsilon", number(g.epsilon, errs)},
      {"mu", number(g.mu, errs)},         {"nu", number(g.nu, errs)},
      {"beta", number(g.beta, errs)},     {"alpha", number(g.alpha, errs)},
      {"r", number(g.r, errs)},           {"q", number(g.q, errs)},
      {"e1", number(g.e1, errs)},         {"e2", number(g.e2, errs)},
      {"k1", number(g.k1, errs)},         {"k2", number(g.k2, errs)},
      {"p0", number(g.p0, errs)},         {"Gamma", number(g.Gamma, errs)},
      {"allow_gamma_above_3", boolean(g.allow_gamma_above_3, errs)},
  };
  const Table solver = {
      {"n", integer(sc.n, errs)},
      {"dt", number(sc.dt, errs)},
      {"t_end", number(sc.t_end, errs)},
      {"collocation_points", integer(sc.collocation_points, errs)},
      {"dealias", boolean(sc.dealias, errs)},
      {"monitor_every", integer(sc.monitor_every, errs)},
      {"snapshot_every", integer(sc.snapshot_every, errs)},
      {"integrator", choice<Integrator>(sc.integrator, parse_integrator, errs)},
      {"h_form", choice<HForm>(sc.h_form, parse_h_form, errs)},
      {"snapshot_format", choice<SnapshotFormat>(cfg.snapshot_format, parse_snapshot_format, errs)},
  };
  const Table initial = {
      {"profile", text(in.profile, errs)},
      {"rho_mean", number(in.rho_mean, errs)},
      {"rho_amplitude", number(in.rho_amplitude, errs)},
      {"u_amplitude", number(in.u_amplitude, errs)},
      {"w_amplitude", number(in.w_amplitude, errs)},
      {"h_amplitude", number(in.h_amplitude, errs)},
      {"theta_mean", number(in.theta_mean, errs)},
      {"theta_amplitude", number(in.theta_amplitude, errs)},
      {"psi_amplitude", number(in.psi_amplitude, errs)},
      {"psi_amplitude2", number(in.psi_amplitude2, errs)},
      {"psi_center", number(in.psi_center, errs)},
      {"psi_width", number(in.psi_width, errs)},
      {"mollify", boolean(in.mollify, errs)},
      {"mollify_scale", number(in.mollify_scale, errs)},
  };
  EulerSettings& eu = cfg.euler;
  const Table euler = {
      {"cells", integer(eu.cells, errs)},
      {"cfl", number(eu.params.cfl, errs)},
      {"flux", choice<EulerFlux>(eu.params.flux, parse_euler_flux, errs)},
      {"t_end", number(eu.t_end, errs)},
      {"profile", text(eu.profile, errs)},
      {"rho_left", number(eu.rho_left, errs)},
      {"rho_right", number(eu.rho_right, errs)},
      {"width", number(eu.width, errs)},
      {"samples", integer(eu.samples, errs)},
  };
  const Table nls = {
      {"points", integer(cfg.nls.points, errs)},
      {"dt", number(cfg.nls.dt, errs)},
      {"cubic", boolean(cfg.nls.cubic, errs)},
  };
  const Table sweep = {
      {"eps_ladder", number_list(sw.eps_ladder, errs)},
      {"alpha_exp", number(sw.alpha_exp, errs)},
      {"beta_exp", number(sw.beta_exp, errs)},
      {"delta_exp", number(sw.delta_exp, errs)},
      {"comparison_time", number(sw.comparison_time, errs)},
      {"comparison_samples", integer(sw.comparison_samples, errs)},
      {"comparison_points", integer(sw.comparison_points, errs)},
      {"reference_cells", integer(sw.reference_cells, errs)},
      {"reference_nls_points", integer(sw.reference_nls_points, errs)},
      {"reference_nls_dt", number(sw.reference_nls_dt, errs)},
      {"reference_flux", choice<EulerFlux>(sw.reference_flux, parse_euler_flux, errs)},
      {"thermal_test_amplitude", number(sw.thermal_test_amplitude, errs)},
      {"workers", integer(sw.workers, errs)},
      {"n", integer(sweep_n, errs)},
      {"dt", number(sweep_dt, errs)},
  };
  EntropySettings& en = cfg.entropy;
  const Table entropy = {
      {"quadrature_nodes", integer(en.quadrature_nodes, errs)},
      {"samples", integer(en.samples, errs)},
      {"tolerance", number(en.tolerance, errs)},
      {"rho_max", number(en.rho_max, errs)},
      {"u_max", number(en.u_max, errs)},
      {"bump_a", number(en.bump_a, errs)},
      {"bump_b", number(en.bump_b, errs)},
  };
  auto nested = [&](const Table& t) {
    return [&t, &errs](const YAML::Node& n, const std::string& path) { section(n, path, t, errs); };
  };
  const Table top = {
      {"gas", nested(gas)},
      {"solver", nested(solver)},
      {"initial_data", nested(initial)},
      {"euler", nested(euler)},
      {"nls", nested(nls)},
      {"sweep", nested(sweep)},
      {"entropy", nested(entropy)},
      {"seed", scalar(seed, "a nonnegative integer", errs)},
      {"output_dir", text(cfg.output_dir, errs)},
  };
  if (root && !root.IsNull()) section(root, "", top, errs);

  // Physical and structural constraints, all collected.
  for (auto& v : sc.violations()) errs.push_back(v);
  sw.base = sc;
  if (sweep_n > 0) sw.base.n = sweep_n;
  if (sweep_dt > 0) sw.base.dt = sweep_dt;
  for (auto& v : sw.violations()) errs.push_back("sweep: " + v);
  eu.params.a = g.a;
  eu.params.gamma = g.gamma;
  for (auto& v : eu.params.violations()) errs.push_back("euler: " + v);
  if (eu.cells < 4) errs.push_back("euler: cells must be >= 4");
  if (!(eu.t_end > 0)) errs.push_back("euler: t_end must be positive");
  if (eu.profile != "dam-break" && eu.profile != "initial-data")
    errs.push_back("euler: profile must be dam-break or initial-data");
  if (!(eu.rho_left > 0 && eu.rho_right > 0)) errs.push_back("euler: dam-break densities must be positive");
  if (eu.samples < 1) errs.push_back("euler: samples must be >= 1");
  if (cfg.nls.points < 4) errs.push_back("nls: points must be >= 4");
  if (!(cfg.nls.dt > 0)) errs.push_back("nls: dt must be positive");
  if (en.quadrature_nodes < 2) errs.push_back("entropy: quadrature_nodes must be >= 2");
  if (en.samples < 1) errs.push_back("entropy: samples must be >= 1");
  if (!(en.tolerance > 0)) errs.push_back("entropy: tolerance must be positive");
  if (!(en.rho_max > 0 && en.u_max > 0)) errs.push_back("entropy: rho_max and u_max must be positive");
  if (!(en.bump_b > en.bump_a)) errs.push_back("entropy: bump_a < bump_b required");
  if (seed < 0) errs.push_back("seed must be nonnegative");
  if (cfg.output_dir.empty()) errs.push_back("output_dir must not be empty");
  if (!errs.empty()) throw ValidationError(std::move(errs));
  cfg.seed = static_cast<std::uint64_t>(seed);
  return cfg;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open config");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError(path, "cannot read config");
  return parse_config_text(ss.str());
}

std::string resolve_output_dir(const RunConfig& cfg) {
  const std::filesystem::path dir(cfg.output_dir);
  if (dir.is_absolute()) return dir.string();
  if (const char* root = std::getenv("SWLW_OUTPUT_ROOT"); root && *root)
    return (std::filesystem::path(root) / dir).string();
  return dir.string();
}

}  // namespace swlw
