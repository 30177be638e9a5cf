#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

namespace ctf {

/// Eigenvalues of the upper Hessenberg companion matrix of
/// alpha_0 + alpha_1 x + ... + alpha_n x^n whose first row is
/// [-alpha_1/alpha_0, ..., -alpha_n/alpha_0] with ones on the subdiagonal.
/// They are the reciprocals of the polynomial's roots. Trailing zero
/// coefficients are dropped; alpha_0 must be nonzero.
/// Throws RootFailure when the QR iteration does not converge.
Eigen::VectorXcd companion_eigenvalues(const Eigen::VectorXd& alpha);

/// Roots of alpha_0 + ... + alpha_n x^n (alpha_0 != 0), polished by Newton
/// steps in extended precision.
Eigen::VectorXcd polynomial_roots(const Eigen::VectorXd& alpha);

}  // namespace ctf
