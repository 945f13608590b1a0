#include "swlw/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "swlw/entropy_pairs.hpp"
#include "swlw/errors.hpp"
#include "swlw/initial_data.hpp"
#include "swlw/simulation.hpp"
#include "swlw/test_functions.hpp"

namespace swlw {

namespace {

double trapz(const std::vector<double>& x, const std::vector<double>& f) {
  double s = 0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) s += 0.5 * (x[i + 1] - x[i]) * (f[i] + f[i + 1]);
  return s;
}

// Piecewise-linear interpolation from cell centers, constant beyond the outermost centers.
std::vector<double> centers_to_nodes(const std::vector<double>& xc, const std::vector<double>& f,
                                     const std::vector<double>& x) {
  std::vector<double> out(x.size());
  const double dx = xc[1] - xc[0];
  const std::size_t n = xc.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double s = (x[i] - xc[0]) / dx;
    if (s <= 0) {
      out[i] = f[0];
    } else if (s >= n - 1) {
      out[i] = f[n - 1];
    } else {
      const std::size_t k = static_cast<std::size_t>(s);
      const double th = s - k;
      out[i] = (1.0 - th) * f[k] + th * f[k + 1];
    }
  }
  return out;
}

struct Reference {
  LimitResult limit;
};

Reference compute_reference(const SweepSettings& s) {
  InitialData init = s.base.initial;
  init.mollify = false;
  const Profile prof = make_profile(init, s.base.params.epsilon);
  LimitConfig lc;
  lc.euler = EulerParams::from(s.base.params);
  lc.euler.flux = s.reference_flux;
  lc.mu = s.base.params.mu;
  lc.cells = s.reference_cells;
  lc.nls_intervals = s.reference_nls_points;
  lc.nls_dt = s.reference_nls_dt;
  lc.nls_length = prof.total_mass();
  lc.t_end = s.comparison_time;
  lc.samples = s.comparison_samples;
  const EulerState e0 = EulerState::from_profile(lc.cells, prof.rho, prof.u);
  std::array<std::vector<double>, 2> w0;
  const auto xc = e0.centers();
  for (int c = 0; c < 2; ++c) {
    w0[c].resize(xc.size());
    for (std::size_t i = 0; i < xc.size(); ++i) w0[c][i] = prof.w[c](xc[i]);
  }
  NlsState z;
  z.length = lc.nls_length;
  z.psi.resize(lc.nls_intervals + 1);
  for (int j = 0; j <= lc.nls_intervals; ++j)
    z.psi[j] = (j == 0 || j == lc.nls_intervals) ? 0.0 : prof.psi(static_cast<double>(j) / lc.nls_intervals);
  return {limit_run(lc, e0, w0, z)};
}

struct Sample {
  EulerianFields fields;
  std::vector<std::complex<double>> psi;  // at the reference NLS nodes
};

void fill_row(SweepRow& row, const SweepSettings& s, const SweepJob& job, const Reference& ref,
              const std::vector<double>& x, const std::vector<Sample>& samples,
              const std::vector<MonitorRecord>& monitors, const Gas& gas) {
  const auto& rs = ref.limit.samples;
  if (samples.size() != rs.size()) throw NumericalError("sample count mismatch");
  const double beta = job.beta;
  // Density and momentum at the comparison time.
  {
    const EulerianFields& e = samples.back().fields;
    const auto rr = centers_to_nodes(ref.limit.x, rs.back().rho, x);
    const auto rm = centers_to_nodes(ref.limit.x, rs.back().m, x);
    std::vector<double> dr(x.size()), dm(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      dr[i] = std::abs(e.rho[i] - rr[i]);
      dm[i] = std::abs(e.rho[i] * e.u[i] - rm[i]);
    }
    row.l1_rho = trapz(x, dr);
    row.l1_m = trapz(x, dm);
  }
  std::vector<double> ts(samples.size()), wnorm(samples.size()), energy(samples.size());
  const auto& y = ref.limit.y;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const EulerianFields& e = samples[k].fields;
    ts[k] = e.t;
    for (int c = 0; c < 2; ++c) {
      const auto wr = centers_to_nodes(ref.limit.x, rs[k].w[c], x);
      std::vector<double> W(x.size(), 0.0), W2(x.size(), 0.0);
      for (std::size_t i = 1; i < x.size(); ++i) {
        W[i] = W[i - 1] + 0.5 * (x[i] - x[i - 1]) * ((e.w[c][i] - wr[i]) + (e.w[c][i - 1] - wr[i - 1]));
        W2[i] = W[i] * W[i];
      }
      wnorm[k] += trapz(x, W2);
    }
    std::vector<double> d4(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) {
      const double a = std::abs(samples[k].psi[j] - rs[k].psi[j]);
      d4[j] = a * a * a * a;
    }
    row.psi_dist = std::max(row.psi_dist, std::pow(trapz(y, d4), 0.25));
    std::vector<double> h2(x.size()), en(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      h2[i] = e.h[0][i] * e.h[0][i] + e.h[1][i] * e.h[1][i];
      row.beta_h_sup = std::max(row.beta_h_sup, beta * std::sqrt(h2[i]));
      const double rho = e.rho[i];
      const double w2 = e.w[0][i] * e.w[0][i] + e.w[1][i] * e.w[1][i];
      en[i] = rho * (gas.elastic_potential(rho) + gas.Q(e.theta[i]) + 0.5 * e.u[i] * e.u[i] + 0.5 * w2);
    }
    row.beta_half_h_l2 = std::max(row.beta_half_h_l2, std::sqrt(beta * trapz(x, h2)));
    energy[k] = trapz(x, en);
  }
  row.w_dist = std::sqrt(std::max(0.0, trapz(ts, wnorm)));
  row.energy_ratio = 0;
  for (double e : energy) row.energy_ratio = std::max(row.energy_ratio, e / energy.front());

  for (const auto& m : monitors) {
    row.unif1 = std::max(row.unif1, m.unif1);
    row.unif2 = std::max(row.unif2, m.unif2);
    row.unif2_time = std::max(row.unif2_time, m.unif2_time);
    row.unif3 = std::max(row.unif3, m.unif3);
    row.unif4 = std::max(row.unif4, m.unif4);
    row.unif5 = std::max(row.unif5, m.unif5);
    row.dissipation = std::max(row.dissipation, m.dissipation);
  }

  std::vector<EulerianFields> traj;
  traj.reserve(samples.size());
  for (const auto& sm : samples) traj.push_back(sm.fields);
  const double T = s.comparison_time;
  const GasParams& p = job.config.params;
  const auto spec = EntropyPairSpec::make(Zeta::builtin("s2"), p);
  const auto bal = dissipation_balance_residual(traj, spec, TestFunction::bump(0.5, 0.3, T), p,
                                                job.config.coupling);
  row.balance_eps = std::abs(bal.eps);
  row.balance_delta = std::abs(bal.delta);
  row.balance_beta = std::abs(bal.beta);
  row.balance_alpha = std::abs(bal.alpha);
  const auto th = thermal_inequality_residual(
      traj, TestFunction::neumann(s.thermal_test_amplitude, T, x.back()), gas);
  const double scale = monitors.empty() ? 1.0 : std::abs(monitors.front().total_energy);
  row.thermal_residual = th.value / scale;
  row.vacuum_measure = th.vacuum_measure;
}

SweepRow run_job(const SweepSettings& s, const SweepJob& job, const Reference& ref,
                 std::vector<MonitorRecord>& monitors) {
  const auto start = std::chrono::steady_clock::now();
  SweepRow row;
  row.eps = job.eps;
  row.alpha = job.alpha;
  row.beta = job.beta;
  row.delta = job.delta;
  try {
    const GalerkinSolver solver(job.config);
    const int K = s.comparison_points;
    std::vector<double> x(K + 1);
    for (int i = 0; i <= K; ++i) x[i] = static_cast<double>(i) / K;
    const auto& y = ref.limit.y;
    std::vector<Sample> samples;
    auto sample = [&](const GalerkinState& st) {
      Sample sm;
      sm.fields = solver.to_eulerian(st, x);
      const FieldSnapshot snap = solver.reconstruct(st, y);
      const auto& pr = snap.get("psi_re");
      const auto& pi = snap.get("psi_im");
      sm.psi.resize(y.size());
      for (std::size_t j = 0; j < y.size(); ++j) sm.psi[j] = {pr[j], pi[j]};
      samples.push_back(std::move(sm));
    };
    const long total = step_count(job.config);
    const long every = total / s.comparison_samples;
    GalerkinState st = solver.initial_state();
    sample(st);
    RunCallbacks cb;
    cb.on_monitor = [&](const MonitorRecord& m) { monitors.push_back(m); };
    cb.on_step = [&](const GalerkinSolver&, const GalerkinState& cur) {
      const long k = std::lround(cur.t / job.config.dt);
      if (k % every == 0) sample(cur);
    };
    run(solver, st, cb);
    fill_row(row, s, job, ref, x, samples, monitors, solver.gas());
  } catch (const PositivityError&) {
    row.status = "positivity";
  } catch (const DivergenceError&) {
    row.status = "divergence";
  } catch (const NumericalError&) {
    row.status = "numerical";
  }
  if (row.status != "ok") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const SweepRow keep = row;
    row = SweepRow{};
    row.eps = keep.eps;
    row.alpha = keep.alpha;
    row.beta = keep.beta;
    row.delta = keep.delta;
    row.status = keep.status;
    row.l1_rho = row.l1_m = row.w_dist = row.psi_dist = nan;
    row.beta_h_sup = row.beta_half_h_l2 = nan;
    row.unif1 = row.unif2 = row.unif2_time = row.unif3 = row.unif4 = row.unif5 = nan;
    row.dissipation = nan;
    row.balance_eps = row.balance_delta = row.balance_beta = row.balance_alpha = nan;
    row.thermal_residual = row.vacuum_measure = row.energy_ratio = nan;
  }
  row.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

std::vector<std::string> SweepSettings::violations() const {
  std::vector<std::string> v;
  if (!(alpha_exp > 0.5))
    v.push_back("alpha_exp > 0.5 required (alpha = o(eps^1/2)): alpha_exp=" + std::to_string(alpha_exp));
  if (!(beta_exp > 1.0))
    v.push_back("beta_exp > 1 required (beta = o(eps)): beta_exp=" + std::to_string(beta_exp));
  if (!(delta_exp > 1.0))
    v.push_back("delta_exp > 1 required (delta = o(eps)): delta_exp=" + std::to_string(delta_exp));
  for (std::size_t i = 0; i < eps_ladder.size(); ++i) {
    if (!(eps_ladder[i] > 0 && eps_ladder[i] < 1))
      v.push_back("eps_ladder entries must lie in (0, 1)");
    if (i > 0 && !(eps_ladder[i] < eps_ladder[i - 1]))
      v.push_back("eps_ladder must be strictly decreasing");
  }
  if (!(comparison_time > 0)) v.push_back("comparison_time must be positive");
  if (comparison_samples < 1) v.push_back("comparison_samples must be >= 1");
  if (comparison_points < 4) v.push_back("comparison_points must be >= 4");
  if (reference_cells < 16) v.push_back("reference_cells must be >= 16");
  if (reference_nls_points < 4) v.push_back("reference_nls_points must be >= 4");
  if (!(reference_nls_dt > 0)) v.push_back("reference_nls_dt must be positive");
  if (workers < 1) v.push_back("workers must be >= 1");
  return v;
}

void SweepSettings::validate() const {
  auto v = violations();
  if (!v.empty()) throw ValidationError(std::move(v));
}

SweepPlan make_plan(const SweepSettings& s) {
  s.validate();
  SweepPlan plan;
  plan.settings = s;
  // Make every comparison time a whole number of steps.
  const double span = s.comparison_time / s.comparison_samples;
  const double per = std::ceil(span / s.base.dt - 1e-9);
  for (double eps : s.eps_ladder) {
    SweepJob job;
    job.eps = eps;
    job.alpha = std::pow(eps, s.alpha_exp);
    job.beta = std::pow(eps, s.beta_exp);
    job.delta = std::pow(eps, s.delta_exp);
    job.config = s.base;
    job.config.params.epsilon = eps;
    job.config.params.alpha = job.alpha;
    job.config.params.beta = job.beta;
    job.config.params.delta = job.delta;
    job.config.t_end = s.comparison_time;
    job.config.dt = span / per;
    job.config.snapshot_every = 0;
    job.config.validate();
    plan.jobs.push_back(std::move(job));
  }
  return plan;
}

const std::vector<std::string>& SweepRow::columns() {
  static const std::vector<std::string> c = {
      "eps",           "alpha",         "beta",          "delta",          "status",
      "l1_rho",        "l1_m",          "w_dist",        "psi_dist",       "beta_h_sup",
      "beta_half_h_l2", "unif1",        "unif2",         "unif2_time",     "unif3",
      "unif4",         "unif5",         "dissipation",   "balance_eps",    "balance_delta",
      "balance_beta",  "balance_alpha", "thermal_residual", "vacuum_measure", "energy_ratio"};
  return c;
}

std::vector<double> SweepRow::values() const {
  return {l1_rho,        l1_m,          w_dist,      psi_dist,         beta_h_sup,
          beta_half_h_l2, unif1,        unif2,       unif2_time,       unif3,
          unif4,         unif5,         dissipation, balance_eps,      balance_delta,
          balance_beta,  balance_alpha, thermal_residual, vacuum_measure, energy_ratio};
}

double SweepRow::column(const std::string& name) const {
  if (name == "eps") return eps;
  if (name == "alpha") return alpha;
  if (name == "beta") return beta;
  if (name == "delta") return delta;
  const auto& c = columns();
  const auto v = values();
  for (std::size_t i = 5; i < c.size(); ++i)
    if (c[i] == name) return v[i - 5];
  throw ValidationError("unknown sweep column '" + name + "'");
}

SweepResult run_sweep(const SweepPlan& plan) {
  SweepResult res;
  const std::size_t n = plan.jobs.size();
  res.rows.resize(n);
  res.monitors.resize(n);
  if (n == 0) return res;
  const auto start = std::chrono::steady_clock::now();
  const Reference ref = compute_reference(plan.settings);
  res.reference_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < n; i = next++)
      res.rows[i] = run_job(plan.settings, plan.jobs[i], ref, res.monitors[i]);
  };
  const std::size_t count = std::min<std::size_t>(plan.settings.workers, n);
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < count; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return res;
}

RateFit fit_rate(const std::vector<SweepRow>& rows, const std::string& column) {
  if (rows.size() < 3) throw ValidationError("fit_rate needs at least 3 rows");
  std::vector<double> lx, ly;
  for (const auto& r : rows) {
    const double v = r.column(column);
    if (!(v > 0) || !(r.eps > 0))
      throw ValidationError("fit_rate needs positive values in column '" + column + "'");
    lx.push_back(std::log(r.eps));
    ly.push_back(std::log(v));
  }
  const double m = static_cast<double>(lx.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0) throw ValidationError("fit_rate needs distinct eps values");
  RateFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double rss = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double e = ly[i] - (f.intercept + f.slope * lx[i]);
    rss += e * e;
  }
  f.residual = std::sqrt(rss / m);
  return f;
}

}  // namespace swlw
