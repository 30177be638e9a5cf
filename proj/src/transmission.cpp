#include "ctf/transmission.hpp"

#include <cmath>
#include <stdexcept>

namespace ctf {

RealSeries TransmissionMatrixSeries::determinant() const {
  const int n = max_order();
  return mul_truncated(m11, m22, n) - mul_truncated(m12, m21, n);
}

TransmissionMatrixSeries layer_matrix_series(const Layer& layer, int order) {
  if (order < 1) throw std::invalid_argument("series order must be at least 1");
  TransmissionMatrixSeries t{RealSeries::constant(1.0, order), RealSeries(order), RealSeries(order),
                             RealSeries::constant(1.0, order)};

  if (const auto* r = std::get_if<ResistanceLayer>(&layer)) {
    t.m12[0] = r->resistance;
    return t;
  }
  const auto& m = std::get<MassiveLayer>(layer);
  if (m.thickness == 0.0) return t;

  // With x = L sqrt(s / alpha) and tau = L^2 / alpha:
  //   cosh x              = sum tau^k s^k / (2k)!
  //   sinh x / sqrt(s/a)  = L sum tau^k s^k / (2k+1)!
  //   sqrt(s/a) sinh x    = (L/a) sum tau^(k-1) s^k / (2k-1)!,  k >= 1
  const double L = m.thickness;
  const double tau = L * L / m.diffusivity();
  double ch = 1.0;
  double sh = L / m.conductivity;
  double sd = m.conductivity * L / m.diffusivity();
  t.m11[0] = t.m22[0] = ch;
  t.m12[0] = sh;
  t.m21[0] = 0.0;
  for (int k = 1; k <= order; ++k) {
    ch *= tau / ((2.0 * k - 1.0) * (2.0 * k));
    sh *= tau / ((2.0 * k) * (2.0 * k + 1.0));
    if (k > 1) sd *= tau / ((2.0 * k - 2.0) * (2.0 * k - 1.0));
    t.m11[k] = t.m22[k] = ch;
    t.m12[k] = sh;
    t.m21[k] = sd;
  }
  return t;
}

namespace {

template <class It>
TransmissionMatrixSeries ordered_product(It first, It last, int order) {
  TransmissionMatrixSeries acc = layer_matrix_series(*first, order);
  for (++first; first != last; ++first) {
    const TransmissionMatrixSeries l = layer_matrix_series(*first, order);
    TransmissionMatrixSeries next{
        mul_truncated(l.m11, acc.m11, order) + mul_truncated(l.m12, acc.m21, order),
        mul_truncated(l.m11, acc.m12, order) + mul_truncated(l.m12, acc.m22, order),
        mul_truncated(l.m21, acc.m11, order) + mul_truncated(l.m22, acc.m21, order),
        mul_truncated(l.m21, acc.m12, order) + mul_truncated(l.m22, acc.m22, order),
    };
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

TransmissionMatrixSeries chain_product(std::span<const Layer> layers, int order) {
  if (layers.empty()) throw std::invalid_argument("chain product of an empty layer list");
  TransmissionMatrixSeries acc = ordered_product(layers.begin(), layers.end(), order);
  // Every layer has equal diagonal entries, so the reversed product is J M^T J and its
  // (0,0) entry is exactly D. Taking D from there makes symmetric walls give D == A bitwise.
  acc.m22 = ordered_product(layers.rbegin(), layers.rend(), order).m11;
  return acc;
}

ScaledMatrix layer_matrix(const Layer& layer, std::complex<double> s) {
  using cd = std::complex<double>;
  ScaledMatrix out{Eigen::Matrix2cd::Identity(), cd(0.0)};
  if (const auto* r = std::get_if<ResistanceLayer>(&layer)) {
    out.scaled(0, 1) = r->resistance;
    return out;
  }
  const auto& m = std::get<MassiveLayer>(layer);
  if (m.thickness == 0.0) return out;

  const cd g = std::sqrt(s / m.diffusivity());
  const cd x = m.thickness * g;
  const double k = m.conductivity;
  if (std::abs(g) == 0.0) {
    out.scaled(0, 1) = m.resistance();
    return out;
  }
  cd ch, sh;
  if (x.real() <= 1.0) {
    ch = std::cosh(x);
    sh = std::sinh(x);
  } else {
    // cosh x = e^x (1 + e^-2x) / 2, sinh x = e^x (1 - e^-2x) / 2
    const cd e = std::exp(-2.0 * x);
    ch = 0.5 * (1.0 + e);
    sh = 0.5 * (1.0 - e);
    out.log_scale = x;
  }
  out.scaled << ch, sh / (k * g), k * g * sh, ch;
  return out;
}

ScaledMatrix chain_matrix(std::span<const Layer> layers, std::complex<double> s) {
  ScaledMatrix acc{Eigen::Matrix2cd::Identity(), {0.0, 0.0}};
  for (const auto& layer : layers) {
    const ScaledMatrix l = layer_matrix(layer, s);
    acc.scaled = (l.scaled * acc.scaled).eval();
    acc.log_scale += l.log_scale;
  }
  return acc;
}

}  // namespace ctf
