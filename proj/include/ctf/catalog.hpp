#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "ctf/wall.hpp"

namespace ctf {

/// Published CTF coefficient rows at one time step and order. An empty row
/// was not published.
struct ExpectedCtf {
  double dt;
  int order;
  Eigen::VectorXd a, b, c, d;
  std::optional<double> sum_num;  // published sum of a, b and c
  std::optional<double> sum_d;
};

/// Published cross response factors Y[0..n-1].
struct ExpectedFactors {
  double dt;
  int order;
  Eigen::VectorXd y;
};

/// Published L2 error of a CTF (rf_terms == 0) or of a truncated
/// response-factor sum with rf_terms terms.
struct ExpectedError {
  double dt;
  int order;
  int rf_terms;
  double omega_min, omega_max;
  int n_points;
  double value;  // fraction, not percent
};

struct CatalogEntry {
  std::string id;
  std::string description;
  std::string source;  // where the construction and pinned values come from
  Construction construction;
  std::optional<double> u;
  std::vector<ExpectedCtf> ctf;
  std::optional<ExpectedFactors> factors;
  std::vector<ExpectedError> errors;
};

/// All embedded walls, in a fixed order.
const std::vector<CatalogEntry>& catalog();

/// Throws InputError listing the known ids when `id` is unknown.
const CatalogEntry& catalog_entry(std::string_view id);

}  // namespace ctf
