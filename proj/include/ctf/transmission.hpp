#pragma once

#include <complex>
#include <span>

#include <Eigen/Core>

#include "ctf/polynomial.hpp"
#include "ctf/wall.hpp"

namespace ctf {

/// Series form of a 2x2 transmission matrix [[A, B], [C, D]] relating
/// (temperature, flux) on the outer face to the inner face.
struct TransmissionMatrixSeries {
  RealSeries m11, m12, m21, m22;

  int max_order() const { return m11.max_order(); }

  /// m11 m22 - m12 m21, truncated at max_order.
  RealSeries determinant() const;
};

/// Truncated Taylor series of one layer's matrix. Resistance layers give
/// [[1, R], [0, 1]]; massive layers give the cosh / sinh expansions in s.
/// Zero-thickness massive layers give the identity.
TransmissionMatrixSeries layer_matrix_series(const Layer& layer, int order);

/// Product of all layer matrices, innermost on the left:
/// M = L[n-1] * ... * L[1] * L[0], truncated after every pairwise product.
TransmissionMatrixSeries chain_product(std::span<const Layer> layers, int order);

inline TransmissionMatrixSeries chain_product(const Construction& c, int order) {
  return chain_product(std::span<const Layer>(c.layers()), order);
}

/// Exact layer matrix at complex s, returned as scaled * exp(log_scale) so
/// thick layers at high frequency never overflow.
struct ScaledMatrix {
  Eigen::Matrix2cd scaled;
  std::complex<double> log_scale;
};

ScaledMatrix layer_matrix(const Layer& layer, std::complex<double> s);

ScaledMatrix chain_matrix(std::span<const Layer> layers, std::complex<double> s);

}  // namespace ctf
