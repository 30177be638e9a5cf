#pragma once

#include <string>

#include <Eigen/Core>
#include <Eigen/SparseCholesky>

#include "ctf/realization.hpp"
#include "ctf/wall.hpp"

namespace ctf {

struct FdConfig {
  int nodes_per_layer = 50;   // cells per massive layer, >= 3
  double fd_timestep = 10.0;  // s; rounded so that dt is a whole number of steps
  double horizon = 93600.0;   // s, >= dt
  double tolerance = 0.02;    // relative, on factors k_min..k_max
  int k_min = 2;
  int k_max = 24;
};

/// Throws InputError on an invalid configuration for CTF step `dt`.
void validate_config(const FdConfig& cfg, double dt);

/// Cell-centred finite-volume model of the layer stack, advanced by implicit
/// Euler. Resistance layers and films are series resistances between cells
/// or between the boundary air and the first or last cell.
class FdModel {
 public:
  /// Throws InputError when the stack has no massive layer of positive thickness.
  FdModel(const Construction& c, int nodes_per_layer);

  int cells() const { return static_cast<int>(capacity_.size()); }

  /// Factorises the step matrix; throws OracleError on failure.
  void set_timestep(double h);
  double timestep() const { return h_; }

  void set_temperatures(const Eigen::VectorXd& t);
  const Eigen::VectorXd& temperatures() const { return temp_; }

  /// One implicit step with the outside and inside air held at the given
  /// temperatures over the step.
  void step(double outside_air, double inside_air);

  /// Heat flux into the room, W/m^2.
  double inside_flux(double inside_air) const;
  /// Heat flux entering the outside face, W/m^2.
  double outside_flux(double outside_air) const;

 private:
  Eigen::VectorXd capacity_;     // J/(m^2 K) per cell
  Eigen::VectorXd conductance_;  // W/(m^2 K), links air-cell, cell-cell, cell-air
  Eigen::VectorXd temp_;
  double h_ = 0.0;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver_;
};

/// Inside-face flux response to a unit triangular outside-air pulse that
/// rises from 0 at t = 0 to 1 at t = dt and returns to 0 at t = 2 dt, with
/// the inside air at 0. Element k of `y` is the flux at t = (k + 1) dt; the
/// sequence runs to the horizon. x and z are left empty.
ResponseFactorSeq simulate_pulse_response(const Construction& c, double dt, const FdConfig& cfg = {});

struct OracleComparison {
  Eigen::VectorXd y_empirical;
  Eigen::VectorXd y_analytic;
  Eigen::VectorXd rel_dev;  // |emp - ana| / |ana|
  int k_min = 0;
  int k_max = 0;  // inclusive, clipped to the shorter sequence
  double max_dev = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

OracleComparison compare_with_analytic(const ResponseFactorSeq& empirical, const ResponseFactorSeq& analytic,
                                       const FdConfig& cfg);

/// CSV with header k,Y_empirical,Y_analytic,rel_dev.
std::string oracle_csv(const OracleComparison& cmp);

}  // namespace ctf
