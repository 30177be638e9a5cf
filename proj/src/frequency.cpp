#include "ctf/frequency.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "ctf/error.hpp"
#include "ctf/transmission.hpp"

namespace ctf {

namespace {

using cd = std::complex<double>;

Characteristics sized(const FrequencyGrid& grid) {
  Characteristics ch;
  ch.omega = grid.omegas();
  for (auto& f : ch.flow) f.resize(grid.size());
  return ch;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

}  // namespace

FrequencyGrid::FrequencyGrid(double omega_min, double omega_max, int n_points)
    : omega_min_(omega_min), omega_max_(omega_max), n_(n_points) {
  if (!(omega_min > 0.0) || !(omega_max > omega_min) || !std::isfinite(omega_max))
    throw InputError("frequency grid: need 0 < freq-min < freq-max");
  if (n_points < 2) throw InputError("frequency grid: need at least 2 points");
  const double lo = std::log10(omega_min), hi = std::log10(omega_max);
  omega_.resize(n_points);
  for (int i = 0; i < n_points; ++i) omega_[i] = std::pow(10.0, lo + (hi - lo) * i / (n_points - 1));
}

Characteristics exact_characteristics(const Construction& c, const FrequencyGrid& grid) {
  Characteristics ch = sized(grid);
  const std::span<const Layer> layers(c.layers());
  for (int i = 0; i < grid.size(); ++i) {
    const ScaledMatrix m = chain_matrix(layers, cd(0.0, ch.omega[i]));
    const cd b = m.scaled(0, 1);
    ch.flow[0][i] = m.scaled(0, 0) / b;
    ch.flow[1][i] = std::exp(-m.log_scale) / b;
    ch.flow[2][i] = m.scaled(1, 1) / b;
  }
  return ch;
}

cd evaluate_ztf(const Eigen::VectorXd& num, const Eigen::VectorXd& d, cd w) {
  return horner(num, w) / horner(d, w);
}

Characteristics ztf_characteristics(const CtfSet& ctf, const FrequencyGrid& grid) {
  Characteristics ch = sized(grid);
  for (int i = 0; i < grid.size(); ++i) {
    const cd w = std::polar(1.0, -ch.omega[i] * ctf.dt);
    ch.flow[0][i] = evaluate_ztf(ctf.a, ctf.d, w);
    ch.flow[1][i] = evaluate_ztf(ctf.b, ctf.d, w);
    ch.flow[2][i] = evaluate_ztf(ctf.c, ctf.d, w);
  }
  return ch;
}

Characteristics rf_characteristics(const ResponseFactorSeq& rf, int terms, const FrequencyGrid& grid) {
  if (terms < 1 || terms > rf.y.size())
    throw InputError("response factor truncation " + std::to_string(terms) + " exceeds the sequence length " +
                     std::to_string(rf.y.size()));
  Characteristics ch = sized(grid);
  const std::array<const Eigen::VectorXd*, 3> seq{&rf.x, &rf.y, &rf.z};
  for (int i = 0; i < grid.size(); ++i) {
    const cd w = std::polar(1.0, -ch.omega[i] * rf.dt);
    for (int f = 0; f < 3; ++f) ch.flow[f][i] = horner(seq[f]->head(terms), w);
  }
  return ch;
}

double l2_error(const Eigen::VectorXd& exact_magnitude, const Eigen::VectorXcd& approx, double u) {
  if (exact_magnitude.size() != approx.size() || approx.size() == 0)
    throw InputError("l2 error: sample vectors must be non-empty and of equal length");
  const Eigen::VectorXd diff = exact_magnitude - approx.cwiseAbs();
  return std::sqrt(diff.squaredNorm() / static_cast<double>(diff.size())) / u;
}

double l2_error(const Eigen::VectorXcd& exact, const Eigen::VectorXcd& approx, double u) {
  return l2_error(Eigen::VectorXd(exact.cwiseAbs()), approx, u);
}

Eigen::VectorXd unwrapped_phase(const Eigen::VectorXcd& samples) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  Eigen::VectorXd phase(samples.size());
  for (Eigen::Index i = 0; i < samples.size(); ++i) {
    phase[i] = std::arg(samples[i]);
    if (i > 0) phase[i] -= two_pi * std::round((phase[i] - phase[i - 1]) / two_pi);
  }
  return phase;
}

BodeSamples bode_samples(const Eigen::VectorXd& omega, const Eigen::VectorXcd& exact, const Eigen::VectorXcd& approx) {
  return {omega, exact.cwiseAbs(), unwrapped_phase(exact), approx.cwiseAbs(), unwrapped_phase(approx)};
}

std::string bode_csv(const BodeSamples& s) {
  std::ostringstream out;
  out << "omega_rad_s,mag_exact,phase_exact_rad,mag_approx,phase_approx_rad\n";
  for (Eigen::Index i = 0; i < s.omega.size(); ++i)
    out << fmt(s.omega[i]) << ',' << fmt(s.mag_exact[i]) << ',' << fmt(s.phase_exact[i]) << ','
        << fmt(s.mag_approx[i]) << ',' << fmt(s.phase_approx[i]) << '\n';
  return out.str();
}

ValidationReport quality_control(const Construction& c, const CtfSet& ctf, const FrequencyGrid& grid, double eps_u,
                                 double eps_l2) {
  ValidationReport r;
  r.u = u_value(c);
  r.dt = ctf.dt;
  r.eps_u = eps_u;
  r.eps_l2 = eps_l2;
  r.warnings = warnings(c);
  if (grid.omega_max() * ctf.dt >= std::numbers::pi)
    r.warnings.push_back("freq-max " + fmt(grid.omega_max()) + " rad/s is at or above the Nyquist limit pi/dt");

  const Characteristics exact = exact_characteristics(c, grid);
  const Characteristics approx = ztf_characteristics(ctf, grid);
  const std::array<const Eigen::VectorXd*, 3> nums{&ctf.a, &ctf.b, &ctf.c};
  r.pass = true;
  for (int f = 0; f < 3; ++f) {
    FlowCheck& fc = r.flows[f];
    fc.u_ratio = steady_gain(*nums[f], ctf.d);
    fc.u_deviation = std::abs(fc.u_ratio - r.u) / r.u;
    fc.l2 = l2_error(exact.flow[f], approx.flow[f], r.u);
    fc.pass = fc.u_deviation < eps_u && fc.l2 < eps_l2;
    r.pass = r.pass && fc.pass;
    r.bode[f] = bode_samples(grid.omegas(), exact.flow[f], approx.flow[f]);
  }
  return r;
}

void attach_truncation_errors(ValidationReport& report, const ResponseFactorSeq& rf, int terms,
                              const FrequencyGrid& grid) {
  const Characteristics approx = rf_characteristics(rf, terms, grid);
  report.rf_terms = terms;
  for (int f = 0; f < 3; ++f) {
    if (report.bode[f].omega.size() != grid.size() || report.bode[f].omega != grid.omegas())
      throw InputError("truncation errors must use the report's frequency grid");
    report.flows[f].truncated_l2 = l2_error(report.bode[f].mag_exact, approx.flow[f], report.u);
  }
}

}  // namespace ctf
