// Acceptance suite: end-to-end checks of the toolkit's headline guarantees,
// one printed line per criterion.  Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "kerrmet/bounds.hpp"
#include "kerrmet/config.hpp"
#include "kerrmet/constants.hpp"
#include "kerrmet/feasibility.hpp"
#include "kerrmet/fock.hpp"
#include "kerrmet/geometry.hpp"
#include "kerrmet/interferometer.hpp"
#include "kerrmet/sweep.hpp"

using namespace kerrmet;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& name, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double log_uniform(std::uint64_t& state, double lo_exp, double hi_exp) {
  state = mix(state);
  const double u = static_cast<double>(state >> 11) * 0x1.0p-53;
  return std::pow(10.0, lo_exp + (hi_exp - lo_exp) * u);
}

Geometry earth_geometry(double h = 10.0) {
  return Geometry::make(8.87e-3, 6.37e6, h, 0.01, 1.0);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log10(x[i]);
    const double ly = std::log10(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---------------------------------------------------------------------------

void criterion_1_oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  bool pass = true;
  for (double n_a : {0.5, 1.0, 2.0, 4.0}) {
    for (double chi : {0.0, 0.1, 1.0}) {
      for (double omega : {0.0, 1.0, 10.0}) {
        const Probe probe = Probe::from_photon_number(n_a, omega, chi);
        const double analytic = qfi_kerr(probe).value;
        const double numeric = numeric_qfi(probe, 0.7).value;
        if (analytic == 0.0) {
          if (std::abs(numeric) > 1e-12) pass = false;
        } else {
          const double rel = std::abs(numeric - analytic) / analytic;
          worst = std::max(worst, rel);
          if (rel >= 1e-6) pass = false;
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 30.0) pass = false;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "36-point grid, max relative error %.3g vs gate 1e-6, %.2f s", worst,
                elapsed);
  report(1, pass, "Fock finite-difference QFI matches the closed form", detail);
}

void criterion_2_algebraic_identity() {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t rng = 0x5eedULL;
  double worst = 0.0;
  for (int draw = 0; draw < 1000; ++draw) {
    const Probe probe = Probe::from_photon_number(
        log_uniform(rng, -2.0, 3.0), log_uniform(rng, -3.0, 3.0), log_uniform(rng, -3.0, 3.0));
    const double h = qfi_kerr(probe).value;
    const double dtau = std::sqrt(1e-18 / second_order_fidelity_coefficient(probe));
    const double from_fidelity = qfi_from_fidelity_expansion(probe, dtau);
    worst = std::max(worst, std::abs(from_fidelity - h) / h);
  }
  const double elapsed = seconds_since(start);
  const bool pass = worst < 1e-12 && elapsed < 1.0;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "1000 draws, max relative mismatch %.3g vs gate 1e-12, %.3f s", worst,
                elapsed);
  report(2, pass, "8(1-sqrt(F))/dtau^2 equals the closed-form QFI", detail);
}

void criterion_3_scaling_laws() {
  const Geometry g = earth_geometry();
  const double m = 1e10;

  // Nonlinear-dominated regime N chi >= 100 omega: N >= 1e17 at chi = 0.1.
  std::vector<double> ns, bounds;
  for (double n = 1e18; n <= 1.001e20; n *= std::sqrt(10.0)) {
    ns.push_back(n);
    bounds.push_back(cr_bound_rs(Probe::from_photon_number(n, 1e14, 0.1), g, m).relative_error);
  }
  const double kerr_slope = loglog_slope(ns, bounds);

  ns.clear();
  bounds.clear();
  for (double n = 1e10; n <= 1.001e20; n *= 100.0) {
    ns.push_back(n);
    bounds.push_back(cr_bound_rs(Probe::from_photon_number(n, 1e14, 0.0), g, m).relative_error);
  }
  const double sql_slope = loglog_slope(ns, bounds);

  ns.clear();
  bounds.clear();
  for (double n = 1e17; n <= 1.001e19; n *= std::sqrt(10.0)) {
    const Probe probe = Probe::from_photon_number(n, 1e14, 1e-18, 3, KerrVariant::monomial);
    ns.push_back(n);
    bounds.push_back(cr_bound_rs_general_q(probe, g, m).relative_error);
  }
  const double q3_slope = loglog_slope(ns, bounds);

  const bool pass = std::abs(kerr_slope + 1.5) <= 0.05 && std::abs(sql_slope + 0.5) <= 0.01 &&
                    std::abs(q3_slope + 2.5) <= 0.05;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "slopes: Kerr %.4f (want -1.5+-0.05), chi=0 %.4f (-0.5+-0.01), q=3 %.4f "
                "(-2.5+-0.05)",
                kerr_slope, sql_slope, q3_slope);
  report(3, pass, "photon-number scaling of the Fisher bounds", detail);
}

void criterion_4_measurement_suboptimality() {
  const Geometry g = earth_geometry();
  MeasurementPlan plan;
  plan.measurements = 1e10;

  bool in_band = true;
  double lo = 1e300, hi = 0.0;
  for (double chi : {1e-6, 1e-2, 0.1, 1.0, 6.0}) {
    for (double n = 1e10; n <= 1.001e20; n *= 10.0) {
      const Probe probe = Probe::from_photon_number(n, 1e14, chi);
      const double ratio = quadrature_bound_rs(probe, g, plan).relative_error /
                           cr_bound_rs(probe, g, plan.measurements).relative_error;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      if (ratio < 1.0 || ratio > 2.1) in_band = false;
    }
  }

  const Probe big = Probe::from_photon_number(1e21, 1e14, 0.1);
  const double asymptote = quadrature_bound_rs(big, g, plan).relative_error /
                           cr_bound_rs(big, g, plan.measurements).relative_error;
  const bool pass = in_band && std::abs(asymptote - 2.0) <= 0.01;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "ratio range [%.4f, %.4f] within [1, 2.1]; N=1e21 asymptote %.5f vs 2+-0.01",
                lo, hi, asymptote);
  report(4, pass, "homodyne bound trails the Fisher bound by at most 2x", detail);
}

void criterion_5_shot_noise_restoration() {
  const Geometry g = earth_geometry();
  double worst = 0.0;
  int tested = 0;
  for (double chi : {1e-6, 1e-2, 0.1, 1.0, 6.0}) {
    for (double n = 1e10; n <= 1.001e20; n *= 100.0) {
      const Probe probe = Probe::from_photon_number(n, 1e14, chi);
      if (linearization_metric(probe, g) > linearization_threshold) continue;
      const DerivedPhases phases = derived_phases(probe, g);
      const ArmTimes times = arm_proper_times(g);
      const OptimalSettings opt = optimal_settings(probe, phases, times);
      MeasurementPlan plan;
      plan.theta = opt.theta;
      plan.beta = opt.beta;
      worst = std::max(worst,
                       std::abs(quadrature_variance(plan, probe, phases, times) - 1.0));
      ++tested;
    }
  }

  // Anti-squeezing penalty for a mis-set beta at the working point.
  const Probe probe = Probe::from_photon_number(1e17, 1e14, 0.1);
  const DerivedPhases phases = derived_phases(probe, g);
  const ArmTimes times = arm_proper_times(g);
  const OptimalSettings opt = optimal_settings(probe, phases, times);
  MeasurementPlan plan;
  plan.theta = opt.theta;
  plan.beta = opt.beta + 1.5e-3;
  const double db = 10.0 * std::log10(quadrature_variance(plan, probe, phases, times));

  const bool pass = tested >= 15 && worst <= 1e-9 && db >= 0.5 && db <= 2.0;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "%d valid grid points, max |V-1| = %.3g vs 1e-9; 1.5e-3 beta offset adds "
                "%.2f dB (want ~1 dB within 2x)",
                tested, worst, db);
  report(5, pass, "optimal settings restore shot noise", detail);
}

void criterion_6_loss_behavior() {
  const Geometry g = earth_geometry();
  const double m = 1e10;

  std::vector<double> ns, bounds;
  for (double n = 1e10; n <= 1.001e16; n *= 10.0) {
    SqueezedProbe sq{0.5 * n, 0.5 * n, 20.0, 1.0 - 1e-6};
    ns.push_back(n);
    bounds.push_back(squeezed_lossy_bound(sq, g, 1e14, m).relative_error);
  }
  const double squeezed_slope = loglog_slope(ns, bounds);

  ns.clear();
  bounds.clear();
  MeasurementPlan plan;
  plan.measurements = m;
  plan.eps_a = 0.5;
  plan.eps_b = 0.5;
  for (double n = 1e18; n <= 1.001e20; n *= std::sqrt(10.0)) {
    ns.push_back(n);
    bounds.push_back(
        quadrature_bound_rs(Probe::from_photon_number(n, 1e14, 0.1), g, plan).relative_error);
  }
  const double lossy_kerr_slope = loglog_slope(ns, bounds);

  const bool pass =
      std::abs(squeezed_slope + 0.5) <= 0.02 && std::abs(lossy_kerr_slope + 1.5) <= 0.05;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "lossy squeezed slope %.4f (want -0.5+-0.02); eps=0.5 Kerr slope %.4f "
                "(want -1.5+-0.05)",
                squeezed_slope, lossy_kerr_slope);
  report(6, pass, "loss breaks squeezing but not the nonlinear scaling", detail);
}

void criterion_7_monte_carlo() {
  const auto start = std::chrono::steady_clock::now();
  const Geometry g = earth_geometry();
  const Probe probe = Probe::from_photon_number(1e17, 1e14, 0.1);
  const DerivedPhases phases = derived_phases(probe, g);
  const ArmTimes times = arm_proper_times(g);
  const OptimalSettings opt = optimal_settings(probe, phases, times);
  MeasurementPlan plan;
  plan.theta = opt.theta;
  plan.beta = opt.beta;
  plan.measurements = 1e10;

  const MonteCarloStats stats = monte_carlo_estimate(probe, g, plan, 10000, 20240809);
  const double bound = quadrature_bound_rs(probe, g, plan).relative_error;
  const double mismatch = std::abs(stats.relative_std / bound - 1.0);
  const double elapsed = seconds_since(start);
  const bool pass = mismatch <= 0.05 && elapsed < 60.0;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "10^4 trials: empirical %.4e vs bound %.4e (|mismatch| %.2f%% vs 5%%), %.2f s",
                stats.relative_std, bound, 100.0 * mismatch, elapsed);
  report(7, pass, "Monte-Carlo estimator spread matches the homodyne bound", detail);
}

void criterion_8_figure2_reproduction() {
  // SQL reference lines for three interferometer heights over the desk-scale
  // sweep: identical slopes, factor-10 vertical offsets.
  std::vector<std::vector<double>> sql_lines;
  std::vector<double> ns;
  for (double h : {10.0, 100.0, 1000.0}) {
    SweepSpec spec;
    spec.decade_min = 10.0;
    spec.decade_max = 20.0;
    spec.points_per_decade = 2;
    spec.chi_values = {0.0};
    spec.geometry = earth_geometry(h);
    spec.omega = 1e14;
    spec.measurements = 1e10;
    spec.methods = {BoundMethod::sql};
    const auto rows = run_sweep(spec);
    std::vector<double> line;
    ns.clear();
    for (const SweepRow& row : rows) {
      ns.push_back(row.photon_number);
      line.push_back(*row.bound_sql);
    }
    sql_lines.push_back(line);
  }

  bool parallel = true;
  double worst_offset = 0.0;
  for (std::size_t i = 0; i + 1 < ns.size(); ++i) {
    for (const auto& line : sql_lines) {
      const double slope = std::log10(line[i + 1] / line[i]) / std::log10(ns[i + 1] / ns[i]);
      if (std::abs(slope - (-0.5)) > 1e-12) parallel = false;
    }
  }
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double r01 = sql_lines[0][i] / sql_lines[1][i];
    const double r12 = sql_lines[1][i] / sql_lines[2][i];
    worst_offset = std::max({worst_offset, std::abs(r01 / 10.0 - 1.0),
                             std::abs(r12 / 10.0 - 1.0)});
  }

  const ImprovementReport improvement =
      report_improvement(1e18, 0.1, earth_geometry(), 1e14, 1e10);
  const bool pass = parallel && worst_offset <= 1e-3 && improvement.ratio >= 1e3;
  char detail[200];
  std::snprintf(detail, sizeof(detail),
                "SQL lines parallel at slope -1/2; offset deviation %.2e vs 1e-3; "
                "improvement at N=1e18, chi=0.1 is %.4g",
                worst_offset, improvement.ratio);
  report(8, pass, "desk-scale sweep reproduces the reference curves", detail);
  std::printf(
      "        note: computed SQL-to-nonlinear improvement is %.4g (~3 orders of "
      "magnitude); the ~4-order figure sometimes quoted for this operating point is "
      "not recoverable from its stated inputs.\n",
      improvement.ratio);
}

void criterion_9_feasibility_numbers() {
  const double peak = peak_power(1e20, 1e14, 30e-15);
  const bool peak_ok = peak / 4e13 >= 0.8 && peak / 4e13 <= 1.2;

  const double chi_lo = chi_from_single_photon_phase(1e-8, 4.5, 1.0);
  const double chi_hi = chi_from_single_photon_phase(1e-7, 4.5, 1.0);
  const double chi_mid = chi_from_single_photon_phase(std::sqrt(1e-8 * 1e-7), 4.5, 1.0);
  const bool fibre_ok = chi_lo <= 1.0 && chi_hi >= 6.0 && chi_mid > 1.0 && chi_mid < 6.0;

  const bool pass = peak_ok && fibre_ok;
  char detail[200];
  std::snprintf(detail, sizeof(detail),
                "peak power %.3e W (within 20%% of 4e13); fibre back-out spans [%.2f, %.2f] "
                "covering chi in [1, 6]",
                peak, chi_lo, chi_hi);
  report(9, pass, "experimental feasibility calculators", detail);
}

}  // namespace

int main() {
  criterion_1_oracle_equivalence();
  criterion_2_algebraic_identity();
  criterion_3_scaling_laws();
  criterion_4_measurement_suboptimality();
  criterion_5_shot_noise_restoration();
  criterion_6_loss_behavior();
  criterion_7_monte_carlo();
  criterion_8_figure2_reproduction();
  criterion_9_feasibility_numbers();

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}
