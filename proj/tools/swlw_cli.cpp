#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "swlw/config.hpp"
#include "swlw/entropy_pairs.hpp"
#include "swlw/errors.hpp"
#include "swlw/euler_limit.hpp"
#include "swlw/initial_data.hpp"
#include "swlw/invariants.hpp"
#include "swlw/io.hpp"
#include "swlw/simulation.hpp"
#include "swlw/sweep.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace swlw;

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kNumerical = 3;
constexpr int kIo = 4;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

json base_manifest(const std::string& command, const std::string& config_path, const RunConfig& cfg) {
  json m;
  m["command"] = command;
  m["config"] = config_path;
  m["config_hash"] = content_hash(cfg.source);
  m["seed"] = cfg.seed;
  return m;
}

void write_manifest(const std::string& dir, const json& m) {
  write_text((fs::path(dir) / "manifest.json").string(), m.dump(2) + "\n");
}

json solver_json(const SolverConfig& c) {
  const GasParams& p = c.params;
  return {{"n", c.n},
          {"M", c.M()},
          {"dt", c.dt},
          {"t_end", c.t_end},
          {"integrator", integrator_name(c.integrator)},
          {"h_form", h_form_name(c.h_form)},
          {"dealias", c.dealias},
          {"initial_profile", c.initial.profile},
          {"mollify", c.initial.mollify},
          {"gas",
           {{"a", p.a}, {"gamma", p.gamma}, {"delta", p.delta}, {"epsilon", p.epsilon},
            {"mu", p.mu}, {"nu", p.nu}, {"beta", p.beta}, {"alpha", p.alpha}, {"r", p.r},
            {"q", p.q}}}};
}

std::string snapshot_name(int index, SnapshotFormat f) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "snap_%05d.%s", index, f == SnapshotFormat::Binary ? "bin" : "csv");
  return buf;
}

int cmd_simulate(const std::string& path) {
  const RunConfig cfg = parse_config(path);
  const std::string out = resolve_output_dir(cfg);
  const std::string snaps = (fs::path(out) / "snapshots").string();
  ensure_directory(snaps);
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<MonitorRecord> monitors;
  int count = 0;
  RunCallbacks cb;
  cb.on_monitor = [&](const MonitorRecord& m) { monitors.push_back(m); };
  cb.on_snapshot = [&](const GalerkinSolver& s, const GalerkinState& st) {
    write_snapshot((fs::path(snaps) / snapshot_name(count++, cfg.snapshot_format)).string(),
                   s.reconstruct(st), cfg.snapshot_format);
  };
  json m = base_manifest("simulate", path, cfg);
  m["solver"] = solver_json(cfg.solver);
  m["snapshot_format"] = snapshot_format_name(cfg.snapshot_format);
  int code = kOk;
  try {
    const RunResult r = run(cfg.solver, cb);
    m["status"] = "ok";
    m["steps"] = r.steps;
    m["energy_drift"] = energy_drift(r.monitors);
    m["mass_drift"] = mass_drift(r.monitors);
    m["min_entropy_rate"] = r.min_entropy_rate;
    m["energy_scale"] = r.energy_scale;
  } catch (const NumericalError& e) {
    m["status"] = "failed";
    m["error"] = e.what();
    std::cerr << "numerical failure: " << e.what() << "\n";
    code = kNumerical;
  }
  write_monitors((fs::path(out) / "monitors.csv").string(), monitors);
  m["snapshots"] = count;
  m["wall_seconds"] = seconds_since(t0);
  write_manifest(out, m);
  std::cout << "simulate: " << monitors.size() << " monitor rows, " << count << " snapshots -> "
            << out << "\n";
  return code;
}

int cmd_sweep(const std::string& path) {
  const RunConfig cfg = parse_config(path);
  const std::string out = resolve_output_dir(cfg);
  const std::string mon = (fs::path(out) / "monitors").string();
  ensure_directory(mon);
  const auto t0 = std::chrono::steady_clock::now();
  const SweepPlan plan = make_plan(cfg.sweep);
  const SweepResult res = run_sweep(plan);
  write_sweep((fs::path(out) / "sweep.csv").string(), res.rows);
  for (std::size_t i = 0; i < res.monitors.size(); ++i) {
    char name[64];
    std::snprintf(name, sizeof name, "monitors_%02zu.csv", i);
    write_monitors((fs::path(mon) / name).string(), res.monitors[i]);
  }
  json m = base_manifest("sweep", path, cfg);
  m["solver"] = solver_json(plan.settings.base);
  const SweepSettings& s = plan.settings;
  m["scalings"] = {{"alpha_exp", s.alpha_exp}, {"beta_exp", s.beta_exp}, {"delta_exp", s.delta_exp}};
  m["comparison"] = {{"time", s.comparison_time},
                     {"samples", s.comparison_samples},
                     {"points", s.comparison_points},
                     {"reference_cells", s.reference_cells},
                     {"reference_nls_points", s.reference_nls_points},
                     {"reference_nls_dt", s.reference_nls_dt},
                     {"reference_flux", euler_flux_name(s.reference_flux)}};
  json rows = json::array();
  bool all_ok = true;
  for (const auto& r : res.rows) {
    rows.push_back({{"eps", r.eps}, {"status", r.status}, {"wall_seconds", r.wall_seconds}});
    all_ok = all_ok && r.status == "ok";
  }
  m["rows"] = rows;
  json fits = json::object();
  if (all_ok && res.rows.size() >= 3) {
    for (const char* c : {"l1_rho", "l1_m", "psi_dist", "beta_half_h_l2"}) {
      try {
        const RateFit f = fit_rate(res.rows, c);
        fits[c] = {{"slope", f.slope}, {"residual", f.residual}};
      } catch (const ValidationError&) {
      }
    }
  }
  m["fits"] = fits;
  m["reference_seconds"] = res.reference_seconds;
  m["wall_seconds"] = seconds_since(t0);
  write_manifest(out, m);
  std::cout << "sweep: " << res.rows.size() << " rows -> " << out << "\n";
  return all_ok ? kOk : kNumerical;
}

int cmd_check_invariants(const std::string& path) {
  const RunConfig cfg = parse_config(path);
  const std::string out = resolve_output_dir(cfg);
  ensure_directory(out);
  const RunResult a = run(cfg.solver);
  SolverConfig half = cfg.solver;
  half.dt *= 0.5;
  half.monitor_every *= 2;
  const RunResult b = run(half);
  const double scale = std::abs(a.energy_scale);
  const double mass = mass_drift(a.monitors);
  const double e1 = energy_drift(a.monitors), e2 = energy_drift(b.monitors);
  const double ratio = e2 > 0 ? e1 / e2 : INFINITY;
  struct Check {
    const char* name;
    bool pass;
    double value;
  };
  const Check checks[] = {
      {"mass_drift<=1e-8", mass <= 1e-8, mass},
      {"energy_drift<=1e-5", e1 <= 1e-5, e1},
      {"energy_drift_halving_ratio>=8", ratio >= 8 || e1 <= 1e-13, ratio},
      {"entropy_rate>=-1e-6*scale", a.min_entropy_rate >= -1e-6 * scale, a.min_entropy_rate},
  };
  json m = base_manifest("check-invariants", path, cfg);
  m["solver"] = solver_json(cfg.solver);
  bool ok = true;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " value=" << format_double(c.value) << "\n";
    m["checks"][c.name] = {{"pass", c.pass}, {"value", c.value}};
    ok = ok && c.pass;
  }
  write_monitors((fs::path(out) / "monitors.csv").string(), a.monitors);
  write_manifest(out, m);
  return ok ? kOk : kNumerical;
}

Zeta zeta_from_id(const std::string& id, const EntropySettings& s) {
  if (id == "bump") return Zeta::bump(s.bump_a, s.bump_b);
  return Zeta::builtin(id);
}

int cmd_entropy_diag(const std::string& path, const std::string& zeta_id) {
  const RunConfig cfg = parse_config(path);
  const std::string out = resolve_output_dir(cfg);
  ensure_directory(out);
  EntropyPairSpec spec =
      EntropyPairSpec::make(zeta_from_id(zeta_id, cfg.entropy), cfg.solver.params,
                            cfg.entropy.quadrature_nodes);
  spec.tolerance = cfg.entropy.tolerance;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> ur(0.0, cfg.entropy.rho_max), uu(-cfg.entropy.u_max, cfg.entropy.u_max);
  std::vector<std::pair<double, double>> samples;
  for (int i = 0; i < cfg.entropy.samples; ++i) {
    const double rho = (i % 20 == 0) ? 0.0 : ur(rng);
    samples.emplace_back(rho, uu(rng));
  }
  const PairBoundsReport rep = pair_bounds_check(spec, samples);
  std::vector<std::vector<double>> rows;
  for (const auto& [rho, u] : samples) {
    const EntropyPair e = entropy_pair(rho, rho * u, spec);
    rows.push_back({rho, u, e.eta, e.q});
  }
  write_table((fs::path(out) / "entropy_diag.csv").string(), {"rho", "u", "eta", "q"}, rows);
  json m = base_manifest("entropy-diag", path, cfg);
  m["zeta"] = zeta_id;
  m["gamma"] = spec.gamma;
  m["wave_scale"] = spec.wave_scale;
  m["nodes"] = spec.nodes;
  m["normalization"] = spec.normalization;
  m["samples"] = rep.samples;
  m["max_ratio"] = rep.max_ratio;
  m["analytic_bound"] = rep.analytic_bound;
  m["support_violations"] = rep.support_violations;
  m["vacuum_violations"] = rep.vacuum_violations;
  m["ok"] = rep.ok();
  write_manifest(out, m);
  std::cout << (rep.ok() ? "PASS" : "FAIL") << " zeta=" << zeta_id
            << " max_ratio=" << format_double(rep.max_ratio)
            << " bound=" << format_double(rep.analytic_bound) << "\n";
  return rep.ok() ? kOk : kNumerical;
}

int cmd_limit_run(const std::string& path) {
  const RunConfig cfg = parse_config(path);
  const std::string out = resolve_output_dir(cfg);
  const std::string snaps = (fs::path(out) / "snapshots").string();
  ensure_directory(snaps);
  const EulerSettings& es = cfg.euler;
  const Profile prof = make_profile(cfg.solver.initial, cfg.solver.params.epsilon);
  EulerState e0;
  std::array<std::vector<double>, 2> w0;
  if (es.profile == "dam-break") {
    e0 = dam_break(es.cells, es.rho_left, es.rho_right, es.width);
  } else {
    e0 = EulerState::from_profile(es.cells, prof.rho, prof.u);
  }
  const auto xc = e0.centers();
  for (int c = 0; c < 2; ++c) {
    w0[c].assign(xc.size(), 0.0);
    if (es.profile != "dam-break")
      for (std::size_t i = 0; i < xc.size(); ++i) w0[c][i] = prof.w[c](xc[i]);
  }
  LimitConfig lc;
  lc.euler = es.params;
  lc.mu = cfg.solver.params.mu;
  lc.cells = es.cells;
  lc.nls_intervals = cfg.nls.points;
  lc.nls_dt = cfg.nls.dt;
  double mass = 0;
  for (double r : e0.rho) mass += r * e0.dx();
  lc.nls_length = mass;
  lc.t_end = es.t_end;
  lc.samples = es.samples;
  NlsState z;
  z.length = mass;
  z.psi.assign(cfg.nls.points + 1, 0.0);
  for (int j = 1; j < cfg.nls.points; ++j) z.psi[j] = prof.psi(static_cast<double>(j) / cfg.nls.points);
  if (!cfg.nls.cubic) throw ValidationError("limit-run uses the cubic NLS; set nls.cubic: true");

  const LimitResult res = limit_run(lc, e0, w0, z);
  std::vector<std::vector<double>> rows;
  for (std::size_t k = 0; k < res.samples.size(); ++k) {
    const LimitSample& s = res.samples[k];
    EulerState st = e0;
    st.rho = s.rho;
    st.m = s.m;
    NlsState zs = z;
    zs.psi = s.psi;
    double mtot = 0, ptot = 0;
    for (int i = 0; i < st.cells(); ++i) {
      mtot += st.rho[i] * st.dx();
      ptot += st.m[i] * st.dx();
    }
    rows.push_back({s.t, mtot, ptot, mechanical_energy(st, lc.euler), nls_mass(zs), nls_energy(zs)});
    FieldSnapshot fe;
    fe.frame = Frame::Eulerian;
    fe.t = s.t;
    fe.coords = res.x;
    fe.set("rho", s.rho);
    fe.set("m", s.m);
    fe.set("w1", s.w[0]);
    fe.set("w2", s.w[1]);
    write_snapshot((fs::path(snaps) / ("euler_" + snapshot_name(static_cast<int>(k), cfg.snapshot_format))).string(),
                   fe, cfg.snapshot_format);
    FieldSnapshot fl;
    fl.frame = Frame::Lagrangian;
    fl.t = s.t;
    fl.coords = res.y;
    std::vector<double> pr(s.psi.size()), pi(s.psi.size());
    for (std::size_t j = 0; j < s.psi.size(); ++j) {
      pr[j] = s.psi[j].real();
      pi[j] = s.psi[j].imag();
    }
    fl.set("psi_re", pr);
    fl.set("psi_im", pi);
    write_snapshot((fs::path(snaps) / ("nls_" + snapshot_name(static_cast<int>(k), cfg.snapshot_format))).string(),
                   fl, cfg.snapshot_format);
  }
  write_table((fs::path(out) / "limit_monitors.csv").string(),
              {"t", "mass", "momentum", "mechanical_energy", "nls_mass", "nls_energy"}, rows);

  const EulerTrajectory tr = euler_run(e0, es.t_end, lc.euler);
  const TestFunction phi = TestFunction::bump(0.5, 0.3, es.t_end);
  json m = base_manifest("limit-run", path, cfg);
  m["profile"] = es.profile;
  m["cells"] = es.cells;
  m["flux"] = euler_flux_name(lc.euler.flux);
  m["steps"] = tr.steps.size();
  const double scale = mechanical_energy(e0, lc.euler);
  m["energy_scale"] = scale;
  std::vector<std::vector<double>> er;
  const std::vector<std::string> ids = Zeta::builtin_ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const double r = entropy_inequality_residual(tr, ids[i], phi);
    m["entropy_residuals"][ids[i]] = r;
    er.push_back({static_cast<double>(i), r, r / scale});
  }
  write_table((fs::path(out) / "entropy_residuals.csv").string(), {"zeta_index", "residual", "relative"}, er);
  write_manifest(out, m);
  std::cout << "limit-run: " << res.samples.size() << " samples, " << tr.steps.size()
            << " Euler steps -> " << out << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Short wave-long wave MHD simulator"};
  app.require_subcommand(1);
  std::string config, zeta;
  auto* sim = app.add_subcommand("simulate", "Run one viscous simulation");
  sim->add_option("config", config, "YAML configuration")->required();
  auto* sw = app.add_subcommand("sweep", "Run the vanishing-viscosity sweep");
  sw->add_option("config", config, "YAML configuration")->required();
  auto* chk = app.add_subcommand("check-invariants", "Run and check conservation properties");
  chk->add_option("config", config, "YAML configuration")->required();
  auto* ent = app.add_subcommand("entropy-diag", "Entropy-pair bound diagnostics");
  ent->add_option("config", config, "YAML configuration")->required();
  ent->add_option("--zeta", zeta, "Generator: +1, -1, +s, -s, s2, sharp or bump")->required();
  auto* lim = app.add_subcommand("limit-run", "Run the limit reference solvers");
  lim->add_option("config", config, "YAML configuration")->required();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }
  try {
    if (*sim) return cmd_simulate(config);
    if (*sw) return cmd_sweep(config);
    if (*chk) return cmd_check_invariants(config);
    if (*ent) return cmd_entropy_diag(config, zeta);
    if (*lim) return cmd_limit_run(config);
  } catch (const ValidationError& e) {
    std::cerr << "invalid configuration:\n";
    if (e.violations().empty()) std::cerr << "  " << e.what() << "\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v << "\n";
    return kValidation;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  }
  return kOk;
}
