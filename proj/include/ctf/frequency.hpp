#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ctf/realization.hpp"
#include "ctf/wall.hpp"

namespace ctf {

/// Logarithmically spaced angular frequencies, both ends included.
class FrequencyGrid {
 public:
  /// Throws InputError unless 0 < omega_min < omega_max and n_points >= 2.
  FrequencyGrid(double omega_min, double omega_max, int n_points);

  double omega_min() const { return omega_min_; }
  double omega_max() const { return omega_max_; }
  int size() const { return n_; }
  const Eigen::VectorXd& omegas() const { return omega_; }

 private:
  double omega_min_, omega_max_;
  int n_;
  Eigen::VectorXd omega_;
};

inline constexpr std::array<const char*, 3> kFlowNames{"X", "Y", "Z"};

/// Complex samples of the external (X), cross (Y) and internal (Z) transfer
/// functions on a grid.
struct Characteristics {
  Eigen::VectorXd omega;
  std::array<Eigen::VectorXcd, 3> flow;
};

/// A/B, 1/B and D/B of the exact hyperbolic chain at s = j omega.
Characteristics exact_characteristics(const Construction& c, const FrequencyGrid& grid);

/// num(w) / d(w) at w = z^-1.
std::complex<double> evaluate_ztf(const Eigen::VectorXd& num, const Eigen::VectorXd& d, std::complex<double> w);

/// The three z-transfer functions at z^-1 = exp(-j omega dt).
Characteristics ztf_characteristics(const CtfSet& ctf, const FrequencyGrid& grid);

/// Truncated response-factor sums over the first `terms` factors
/// (k = 0 .. terms - 1) at z^-1 = exp(-j omega dt).
/// Throws InputError if terms exceeds the sequence length.
Characteristics rf_characteristics(const ResponseFactorSeq& rf, int terms, const FrequencyGrid& grid);

/// (1/U) sqrt(mean((|exact| - |approx|)^2)). Throws InputError on unequal lengths.
double l2_error(const Eigen::VectorXcd& exact, const Eigen::VectorXcd& approx, double u);
double l2_error(const Eigen::VectorXd& exact_magnitude, const Eigen::VectorXcd& approx, double u);

/// Phase angles continued onto the branch nearest the previous sample.
Eigen::VectorXd unwrapped_phase(const Eigen::VectorXcd& samples);

struct BodeSamples {
  Eigen::VectorXd omega;
  Eigen::VectorXd mag_exact, phase_exact;
  Eigen::VectorXd mag_approx, phase_approx;
};

BodeSamples bode_samples(const Eigen::VectorXd& omega, const Eigen::VectorXcd& exact, const Eigen::VectorXcd& approx);

/// CSV with header omega_rad_s,mag_exact,phase_exact_rad,mag_approx,phase_approx_rad.
std::string bode_csv(const BodeSamples& samples);

struct FlowCheck {
  double u_ratio = 0.0;      // sum(num) / sum(d)
  double u_deviation = 0.0;  // |u_ratio - U| / U
  double l2 = 0.0;
  std::optional<double> truncated_l2;  // response-factor sum, when requested
  bool pass = false;
};

struct ValidationReport {
  double u = 0.0;
  double dt = 0.0;
  double eps_u = 0.0;
  double eps_l2 = 0.0;
  int rf_terms = 0;  // 0 when no truncation error was computed
  std::array<FlowCheck, 3> flows;
  std::array<BodeSamples, 3> bode;
  std::vector<std::string> warnings;
  bool pass = false;
};

/// Gates each flow on relative U-ratio deviation < eps_u and L2 error < eps_l2.
ValidationReport quality_control(const Construction& c, const CtfSet& ctf, const FrequencyGrid& grid, double eps_u,
                                 double eps_l2);

/// Adds the L2 error of the `terms`-long response-factor sums to each flow.
/// Informational; pass/fail is unchanged.
void attach_truncation_errors(ValidationReport& report, const ResponseFactorSeq& rf, int terms,
                              const FrequencyGrid& grid);

}  // namespace ctf
