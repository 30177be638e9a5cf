#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "ctf/polynomial.hpp"

namespace ctf {

/// Roots of a transfer-function denominator, grouped by kind.
struct PoleSet {
  std::vector<double> real;                 // each < 0
  std::vector<std::complex<double>> pairs;  // one member per conjugate pair, Im < 0

  int count() const { return static_cast<int>(real.size() + 2 * pairs.size()); }
  std::vector<std::complex<double>> all() const;
};

/// Roots of `denom` via the reciprocal companion matrix. Throws RootFailure
/// on non-convergence or an unmatched complex root, and InstabilityError for
/// any root with non-negative real part.
PoleSet find_poles(const RealSeries& denom);

/// residue * exp(-rate * t)
struct RealTerm {
  double rate;
  double residue;
};

/// 2 exp(-sigma1 t) (re cos(sigma2 t) + im sin(sigma2 t)), from the pole
/// -sigma1 - j sigma2 with residue re + j im.
struct PairTerm {
  double sigma1;
  double sigma2;
  double re;
  double im;
};

/// Ramp response of G(s) = N/D split as
///   G(s)/s^2 = K1/s^2 + K2/s + sum of first-order (and paired) terms.
struct PoleResidueForm {
  double k1 = 0.0;  // ramp gain, equals G(0)
  double k2 = 0.0;  // offset, equals G'(0)
  std::vector<RealTerm> real_terms;
  std::vector<PairTerm> pair_terms;

  int order() const { return static_cast<int>(real_terms.size() + 2 * pair_terms.size()); }

  /// The decomposed G(s)/s^2 evaluated at s.
  std::complex<double> ramp_transform(std::complex<double> s) const;

  /// Inverse transform q(t) for t >= 0 (unit-slope ramp input).
  double ramp_response(double t) const;
};

/// Residue decomposition of num(s) / (s^2 denom(s)) over the given poles.
/// Throws MultiplicityError when two poles lie within 1e-7 relative.
PoleResidueForm partial_fractions(const RealSeries& num, const RealSeries& denom, const PoleSet& poles);

/// Conduction transfer function coefficients in powers of z^-1:
///   G_X = sum a_k z^-k / sum d_k z^-k, likewise b (cross) and c (internal).
struct CtfSet {
  double dt = 0.0;
  Eigen::VectorXd a, b, c, d;  // length order + 1, d[0] == 1

  int order() const { return static_cast<int>(d.size()) - 1; }
};

/// sum(num) / sum(d), the steady-state gain of a z-transfer function.
double steady_gain(const Eigen::VectorXd& num, const Eigen::VectorXd& d);

/// Z-transform of the triangular-pulse response for the three transfer
/// functions. The denominator is built once from the poles of `prf_y`; the
/// other two forms must carry the same poles.
/// Throws AssemblyError if super-order terms fail to cancel.
CtfSet assemble_ctf(const PoleResidueForm& prf_x, const PoleResidueForm& prf_y, const PoleResidueForm& prf_z,
                    double dt);

/// Roots of the CTF denominator in the z plane.
Eigen::VectorXcd z_poles(const CtfSet& ctf);

/// Response factors X[k], Y[k], Z[k], in W/(m^2 K).
struct ResponseFactorSeq {
  double dt = 0.0;
  Eigen::VectorXd x, y, z;
};

/// Impulse-response expansion of num(z^-1) / d(z^-1), first `count` terms.
Eigen::VectorXd expand_ztf(const Eigen::VectorXd& num, const Eigen::VectorXd& d, int count);

ResponseFactorSeq response_factors(const CtfSet& ctf, int count);

}  // namespace ctf
