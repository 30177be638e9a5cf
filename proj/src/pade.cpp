#include "ctf/pade.hpp"

#include <cmath>
#include <string>

#include <Eigen/LU>

#include "ctf/error.hpp"

namespace ctf {

PadeApproximant pade_from_reciprocal(const RealSeries& b_series, int m) {
  if (m < 0) throw InputError("pade: order must be non-negative");
  if (b_series.max_order() < 2 * m)
    throw InputError("pade: order " + std::to_string(m) + " needs a series of order >= " +
                     std::to_string(2 * m));
  if (b_series[0] == 0.0) throw ApproximationFailure("pade: series has a zero constant term");

  // Unknowns x = [P_0..P_m, Q_1..Q_m]. Row k matches the s^k coefficient of
  // T(s) Q(s) - P(s):  sum_{l=1..m} T_{k-l} Q_l - P_k = -T_k  (P_k = 0 for k > m).
  const int n = 2 * m + 1;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd rhs(n);
  for (int k = 0; k < n; ++k) {
    if (k <= m) A(k, k) = -1.0;
    for (int l = 1; l <= m && l <= k; ++l) A(k, m + l) = b_series[k - l];
    rhs[k] = -b_series[k];
  }

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  const Eigen::VectorXd diag = lu.matrixLU().diagonal();
  const double pivot_floor = A.cwiseAbs().maxCoeff() * 1e-300;
  if ((diag.cwiseAbs().array() <= pivot_floor).any())
    throw ApproximationFailure("pade: singular system at order " + std::to_string(m) +
                               "; try a lower order");

  Eigen::VectorXd x = lu.solve(rhs);
  for (int sweep = 0; sweep < 2; ++sweep) x += lu.solve(rhs - A * x);

  const double scale = rhs.cwiseAbs().maxCoeff();
  const double residual = (A * x - rhs).cwiseAbs().maxCoeff() / (scale > 0.0 ? scale : 1.0);
  if (!x.allFinite() || residual > 1e-6)
    throw ApproximationFailure("pade: residual " + std::to_string(residual) + " at order " +
                               std::to_string(m) + "; try a lower order");

  PadeApproximant out{RealSeries(m), RealSeries::constant(1.0, m), residual};
  for (int k = 0; k <= m; ++k) out.numerator[k] = x[k];
  for (int l = 1; l <= m; ++l) out.denominator[l] = x[m + l];
  return out;
}

std::pair<RealSeries, RealSeries> companion_numerators(const TransmissionMatrixSeries& chain,
                                                       const RealSeries& shared_denom, int m) {
  const double b0 = chain.m12[0];
  if (b0 == 0.0) throw InvalidConstruction("zero total resistance");
  // Clear denominators in A/B = Q_X/P:  Q_X B = A P, solved term by term.
  const auto solve = [&](const RealSeries& top) {
    const RealSeries ap = mul_truncated(top, shared_denom, m);
    RealSeries q(m);
    for (int k = 0; k <= m; ++k) {
      double acc = ap[k];
      for (int j = 0; j < k; ++j) acc -= q[j] * chain.m12[k - j];
      q[k] = acc / b0;
    }
    return q;
  };
  return {solve(chain.m11), solve(chain.m22)};
}

RationalStf estimate_stf(const Construction& c, const StfOptions& options) {
  if (options.order < 1 || options.order > 10) throw InputError("order must lie in 1..10");
  if (options.series_order < 2 * options.order || options.series_order > 40)
    throw InputError("series order must lie in [2*order, 40]");

  const int m = c.is_purely_resistive() ? 0 : options.order;
  const TransmissionMatrixSeries chain = chain_product(c, options.series_order);
  const PadeApproximant pade = pade_from_reciprocal(chain.m12, m);

  RationalStf stf;
  stf.order = m;
  stf.denom = pade.numerator;
  stf.num_y = pade.denominator;
  std::tie(stf.num_x, stf.num_z) = companion_numerators(chain, stf.denom, m);
  return stf;
}

RealSeries series_quotient(const RealSeries& num, const RealSeries& den, int order) {
  if (den[0] == 0.0) throw std::invalid_argument("series quotient: zero constant term");
  RealSeries q(order);
  for (int k = 0; k <= order; ++k) {
    double acc = k <= num.max_order() ? num[k] : 0.0;
    for (int j = 1; j <= k && j <= den.max_order(); ++j) acc -= den[j] * q[k - j];
    q[k] = acc / den[0];
  }
  return q;
}

}  // namespace ctf
