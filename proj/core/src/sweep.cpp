#include "kerrmet/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "kerrmet/constants.hpp"

namespace kerrmet {

namespace {

std::string format17(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string format_cell(const std::optional<double>& value) {
  return value ? format17(*value) : std::string{};
}

bool wants(const SweepSpec& spec, BoundMethod method) {
  return std::find(spec.methods.begin(), spec.methods.end(), method) != spec.methods.end();
}

}  // namespace

void SweepSpec::validate() const {
  if (!(decade_max >= decade_min)) {
    throw std::invalid_argument("photon-number decade bounds are inverted");
  }
  if (points_per_decade < 1) throw std::invalid_argument("points_per_decade must be >= 1");
  if (chi_values.empty()) throw std::invalid_argument("chi list must be non-empty");
  for (double chi : chi_values) {
    if (!(chi >= 0.0)) throw std::invalid_argument("all chi values must be >= 0");
  }
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be > 0");
  if (!(measurements >= 1.0)) throw std::invalid_argument("measurement count M must be >= 1");
  if (!(validity_threshold > 0.0)) throw std::invalid_argument("validity threshold must be > 0");
  if (!(squeezed.coherent_fraction >= 0.0 && squeezed.coherent_fraction <= 1.0)) {
    throw std::invalid_argument("squeezed coherent_fraction must lie in [0, 1]");
  }
  geometry.validate();
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();

  const int span_points =
      static_cast<int>(std::lround((spec.decade_max - spec.decade_min) *
                                   spec.points_per_decade));
  std::vector<double> photon_grid;
  photon_grid.reserve(span_points + 1);
  for (int j = 0; j <= span_points; ++j) {
    photon_grid.push_back(std::pow(
        10.0, spec.decade_min + static_cast<double>(j) / spec.points_per_decade));
  }

  std::vector<double> chis = spec.chi_values;
  std::sort(chis.begin(), chis.end());
  chis.erase(std::unique(chis.begin(), chis.end()), chis.end());

  const double tau1 = spec.geometry.arm_length / speed_of_light;

  // Every grid point is a pure function of the spec; evaluation order is
  // irrelevant to the output.
  std::vector<SweepRow> rows;
  rows.reserve(chis.size() * photon_grid.size());
  for (double chi : chis) {
    for (double n : photon_grid) {
      const Probe probe = Probe::from_photon_number(n, spec.omega, chi);
      SweepRow row;
      row.photon_number = n;
      row.chi = chi;
      row.y_tilde = y_tilde(probe, spec.geometry.n_prime);
      row.validity_metric = chi * tau1 * std::sqrt(n);
      row.valid = row.validity_metric <= spec.validity_threshold;

      if (wants(spec, BoundMethod::fisher)) {
        row.bound_fisher = cr_bound_rs(probe, spec.geometry, spec.measurements).relative_error;
      }
      if (wants(spec, BoundMethod::quadrature) && row.valid) {
        MeasurementPlan plan;
        plan.measurements = spec.measurements;
        plan.eps_a = spec.eps_a;
        plan.eps_b = spec.eps_b;
        row.bound_quadrature =
            quadrature_bound_rs(probe, spec.geometry, plan).relative_error;
      }
      if (wants(spec, BoundMethod::sql)) {
        row.bound_sql = sql_bound_rs(probe, spec.geometry, spec.measurements).relative_error;
      }
      if (wants(spec, BoundMethod::squeezed_lossy)) {
        SqueezedProbe sq;
        sq.n_coherent = spec.squeezed.coherent_fraction * n;
        sq.n_squeezed = (1.0 - spec.squeezed.coherent_fraction) * n;
        sq.squeeze_r = spec.squeezed.squeeze_r;
        sq.transmission = spec.squeezed.transmission;
        row.bound_squeezed_lossy =
            squeezed_lossy_bound(sq, spec.geometry, spec.omega, spec.measurements)
                .relative_error;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "N,chi,y_tilde,bound_fisher,bound_quadrature,bound_sql,"
      "bound_squeezed_lossy,validity_metric,valid_flag\n";
  for (const SweepRow& row : rows) {
    out += format17(row.photon_number);
    out += ',';
    out += format17(row.chi);
    out += ',';
    out += format17(row.y_tilde);
    out += ',';
    out += format_cell(row.bound_fisher);
    out += ',';
    out += format_cell(row.bound_quadrature);
    out += ',';
    out += format_cell(row.bound_sql);
    out += ',';
    out += format_cell(row.bound_squeezed_lossy);
    out += ',';
    out += format17(row.validity_metric);
    out += ',';
    out += row.valid ? "true" : "false";
    out += '\n';
  }
  return out;
}

double y_tilde(const Probe& probe, double n_prime) {
  if (!(probe.omega > 0.0)) throw std::invalid_argument("y_tilde requires omega > 0");
  return probe.photon_number() * probe.chi * n_prime / probe.omega;
}

ImprovementReport report_improvement(double photon_number, double chi, const Geometry& g,
                                     double omega, double measurements) {
  const Probe probe = Probe::from_photon_number(photon_number, omega, chi);
  MeasurementPlan plan;
  plan.measurements = measurements;

  ImprovementReport report;
  report.sql_bound = sql_bound_rs(probe, g, measurements).relative_error;
  report.quadrature_bound = quadrature_bound_rs(probe, g, plan).relative_error;
  report.ratio = report.sql_bound / report.quadrature_bound;
  return report;
}

}  // namespace kerrmet
