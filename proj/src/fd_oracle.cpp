#include "ctf/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include <Eigen/SparseCore>

#include "ctf/error.hpp"

namespace ctf {

void validate_config(const FdConfig& cfg, double dt) {
  if (!(dt > 0.0)) throw InputError("time step must be positive");
  if (cfg.nodes_per_layer < 3) throw InputError("nodes per layer must be at least 3");
  if (!(cfg.fd_timestep > 0.0)) throw InputError("fd time step must be positive");
  if (cfg.fd_timestep > dt) throw InputError("fd time step must not exceed the CTF time step");
  if (!(cfg.horizon >= dt)) throw InputError("horizon must be at least the CTF time step");
  if (!(cfg.tolerance > 0.0)) throw InputError("oracle tolerance must be positive");
  if (cfg.k_min < 0 || cfg.k_max < cfg.k_min) throw InputError("oracle factor range is empty");
}

FdModel::FdModel(const Construction& c, int nodes_per_layer) {
  if (nodes_per_layer < 1) throw InputError("nodes per layer must be positive");
  std::vector<double> cap, res;
  double pending = 0.0;  // series resistance since the last cell centre
  for (const Layer& layer : c.layers()) {
    if (const auto* r = std::get_if<ResistanceLayer>(&layer)) {
      pending += r->resistance;
      continue;
    }
    const auto& m = std::get<MassiveLayer>(layer);
    if (m.thickness <= 0.0) continue;
    const double h = m.thickness / nodes_per_layer;
    const double half = h / (2.0 * m.conductivity);
    for (int i = 0; i < nodes_per_layer; ++i) {
      res.push_back(pending + half);
      cap.push_back(m.density * m.specific_heat * h);
      pending = half;
    }
  }
  if (cap.empty()) throw InputError("finite-difference oracle needs at least one massive layer");
  res.push_back(pending);

  capacity_ = Eigen::Map<const Eigen::VectorXd>(cap.data(), static_cast<Eigen::Index>(cap.size()));
  conductance_ = Eigen::Map<const Eigen::VectorXd>(res.data(), static_cast<Eigen::Index>(res.size())).cwiseInverse();
  temp_ = Eigen::VectorXd::Zero(cells());
}

void FdModel::set_timestep(double h) {
  if (!(h > 0.0)) throw InputError("fd time step must be positive");
  const int n = cells();
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(3 * n);
  for (int i = 0; i < n; ++i) {
    t.emplace_back(i, i, capacity_[i] / h + conductance_[i] + conductance_[i + 1]);
    if (i + 1 < n) {
      t.emplace_back(i, i + 1, -conductance_[i + 1]);
      t.emplace_back(i + 1, i, -conductance_[i + 1]);
    }
  }
  Eigen::SparseMatrix<double> a(n, n);
  a.setFromTriplets(t.begin(), t.end());
  solver_.compute(a);
  if (solver_.info() != Eigen::Success) throw OracleError("fd oracle: step matrix factorisation failed");
  h_ = h;
}

void FdModel::set_temperatures(const Eigen::VectorXd& t) {
  if (t.size() != cells()) throw InputError("fd oracle: temperature vector has the wrong length");
  temp_ = t;
}

void FdModel::step(double outside_air, double inside_air) {
  if (h_ <= 0.0) throw OracleError("fd oracle: time step not set");
  Eigen::VectorXd rhs = capacity_.cwiseProduct(temp_) / h_;
  rhs[0] += conductance_[0] * outside_air;
  rhs[cells() - 1] += conductance_[cells()] * inside_air;
  Eigen::VectorXd next = solver_.solve(rhs);
  if (solver_.info() != Eigen::Success || !next.allFinite()) throw OracleError("fd oracle: linear solve failed");
  temp_ = std::move(next);
}

double FdModel::inside_flux(double inside_air) const {
  return conductance_[cells()] * (temp_[cells() - 1] - inside_air);
}

double FdModel::outside_flux(double outside_air) const { return conductance_[0] * (outside_air - temp_[0]); }

ResponseFactorSeq simulate_pulse_response(const Construction& c, double dt, const FdConfig& cfg) {
  validate_config(cfg, dt);
  FdModel model(c, cfg.nodes_per_layer);
  const long per_dt = std::max(1L, std::lround(dt / cfg.fd_timestep));
  model.set_timestep(dt / static_cast<double>(per_dt));

  const int count = static_cast<int>(std::floor(cfg.horizon / dt * (1.0 + 1e-12)));
  ResponseFactorSeq rf;
  rf.dt = dt;
  rf.y = Eigen::VectorXd::Zero(count);
  const auto pulse = [dt](double t) { return std::max(0.0, 1.0 - std::abs(t - dt) / dt); };
  for (long s = 1; s <= per_dt * count; ++s) {
    model.step(pulse(model.timestep() * static_cast<double>(s)), 0.0);
    if (s % per_dt == 0) rf.y[s / per_dt - 1] = model.inside_flux(0.0);
  }
  return rf;
}

OracleComparison compare_with_analytic(const ResponseFactorSeq& empirical, const ResponseFactorSeq& analytic,
                                       const FdConfig& cfg) {
  if (empirical.dt != analytic.dt) throw InputError("oracle: sequences use different time steps");
  const Eigen::Index n = std::min(empirical.y.size(), analytic.y.size());
  OracleComparison cmp;
  cmp.k_min = cfg.k_min;
  cmp.k_max = static_cast<int>(std::min<Eigen::Index>(cfg.k_max, n - 1));
  if (cmp.k_max < cmp.k_min)
    throw InputError("oracle: horizon too short for factors " + std::to_string(cfg.k_min) + ".." +
                     std::to_string(cfg.k_max));
  cmp.y_empirical = empirical.y.head(n);
  cmp.y_analytic = analytic.y.head(n);
  cmp.rel_dev = (cmp.y_empirical - cmp.y_analytic).cwiseAbs().cwiseQuotient(cmp.y_analytic.cwiseAbs());
  cmp.max_dev = cmp.rel_dev.segment(cmp.k_min, cmp.k_max - cmp.k_min + 1).maxCoeff();
  cmp.tolerance = cfg.tolerance;
  cmp.pass = cmp.max_dev < cfg.tolerance;
  return cmp;
}

std::string oracle_csv(const OracleComparison& cmp) {
  std::ostringstream out;
  out << "k,Y_empirical,Y_analytic,rel_dev\n";
  char buf[96];
  for (Eigen::Index k = 0; k < cmp.y_empirical.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%ld,%.8e,%.8e,%.8e\n", static_cast<long>(k), cmp.y_empirical[k],
                  cmp.y_analytic[k], cmp.rel_dev[k]);
    out << buf;
  }
  return out.str();
}

}  // namespace ctf
