#pragma once

#include <utility>

#include "ctf/polynomial.hpp"
#include "ctf/transmission.hpp"
#include "ctf/wall.hpp"

namespace ctf {

/// Rational s-domain transfer functions sharing one denominator:
///   G_X = num_x / denom,  G_Y = num_y / denom,  G_Z = num_z / denom.
/// All polynomials have degree <= order.
struct RationalStf {
  RealSeries denom;
  RealSeries num_x;
  RealSeries num_y;
  RealSeries num_z;
  int order = 0;
};

/// [m/m] Pade approximant of b(s) ~ P(s) / Q(s) with Q(0) = 1, from one dense
/// LU solve of the (2m+1)x(2m+1) coefficient-matching system.
struct PadeApproximant {
  RealSeries numerator;    // P, degree m
  RealSeries denominator;  // Q, degree m, Q[0] = 1
  double relative_residual = 0.0;
};

/// Throws ApproximationFailure when the system is singular or its relative
/// residual exceeds 1e-6.
PadeApproximant pade_from_reciprocal(const RealSeries& b_series, int m);

/// Numerators Q_X, Q_Z over the shared denominator P such that
/// Q_X / P ~ A / B and Q_Z / P ~ D / B through order m.
std::pair<RealSeries, RealSeries> companion_numerators(const TransmissionMatrixSeries& chain,
                                                       const RealSeries& shared_denom, int m);

struct StfOptions {
  int order = 6;          // Pade order m, 1..10
  int series_order = 20;  // truncation order N, >= 2m, <= 40
};

/// Full s-domain estimation for a construction. Purely resistive stacks get
/// order 0 (constant transfer functions).
RationalStf estimate_stf(const Construction& c, const StfOptions& options = {});

/// Power-series expansion of num / den through `order` (den[0] != 0).
RealSeries series_quotient(const RealSeries& num, const RealSeries& den, int order);

}  // namespace ctf
