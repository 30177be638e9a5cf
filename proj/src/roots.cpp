#include "ctf/roots.hpp"

#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Eigenvalues>

#include "ctf/error.hpp"

namespace ctf {

namespace {

// Parlett-Reinsch balancing with powers of two: a diagonal similarity that
// equalises row and column norms, leaving eigenvalues and the Hessenberg
// pattern unchanged and the scaling itself exact.
void balance(Eigen::MatrixXd& a) {
  constexpr double radix = 2.0, sq = radix * radix;
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      double c = a.col(i).cwiseAbs().sum() - std::abs(a(i, i));
      double r = a.row(i).cwiseAbs().sum() - std::abs(a(i, i));
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      for (double g = r / radix; c < g; c *= sq) f *= radix;
      for (double g = r * radix; c >= g; c /= sq) f /= radix;
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

// Newton steps on the polynomial in extended precision. A step is kept only
// while it reduces |P|, so a root already at the rounding floor is untouched.
std::complex<double> polish(const Eigen::VectorXd& alpha, std::complex<double> root) {
  using cl = std::complex<long double>;
  const auto residual = [&](cl x, cl& slope) {
    cl p = 0.0L;
    slope = 0.0L;
    for (Eigen::Index k = alpha.size() - 1; k >= 0; --k) {
      slope = slope * x + p;
      p = p * x + static_cast<long double>(alpha[k]);
    }
    return p;
  };
  cl x(root.real(), root.imag()), slope;
  cl p = residual(x, slope);
  for (int it = 0; it < 4 && std::abs(slope) != 0.0L; ++it) {
    const cl next = x - p / slope;
    cl next_slope;
    const cl q = residual(next, next_slope);
    if (!(std::abs(q) < std::abs(p))) break;
    x = next;
    p = q;
    slope = next_slope;
  }
  return {static_cast<double>(x.real()), static_cast<double>(x.imag())};
}

}  // namespace

Eigen::VectorXcd companion_eigenvalues(const Eigen::VectorXd& alpha) {
  if (alpha.size() == 0 || alpha[0] == 0.0)
    throw RootFailure("roots: polynomial has a zero constant term");
  Eigen::Index n = alpha.size() - 1;
  while (n > 0 && alpha[n] == 0.0) --n;
  if (n == 0) return Eigen::VectorXcd(0);

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  companion.row(0) = -alpha.segment(1, n).transpose() / alpha[0];
  companion.diagonal(-1).setOnes();
  balance(companion);

  // Real Schur form by Francis QR; the companion matrix is already Hessenberg.
  Eigen::EigenSolver<Eigen::MatrixXd> solver;
  solver.setMaxIterations(static_cast<Eigen::Index>(40 * n));
  solver.compute(companion, /* computeEigenvectors = */ false);
  if (solver.info() != Eigen::Success)
    throw RootFailure("roots: eigenvalue iteration did not converge (degree " + std::to_string(n) + ")");
  return solver.eigenvalues();
}

Eigen::VectorXcd polynomial_roots(const Eigen::VectorXd& alpha) {
  const Eigen::VectorXcd eig = companion_eigenvalues(alpha);
  Eigen::VectorXcd roots(eig.size());
  for (Eigen::Index i = 0; i < eig.size(); ++i) {
    if (eig[i] == 0.0) throw RootFailure("roots: zero eigenvalue in companion matrix");
    roots[i] = polish(alpha, 1.0 / eig[i]);
  }
  return roots;
}

}  // namespace ctf
