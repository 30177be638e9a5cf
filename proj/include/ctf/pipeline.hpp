#pragma once

#include <array>
#include <string>
#include <vector>

#include "ctf/pade.hpp"
#include "ctf/realization.hpp"
#include "ctf/wall.hpp"

namespace ctf {

struct SolverOptions {
  double dt = 3600.0;
  int order = 6;
  int series_order = 20;
  int rf_count = 144;
};

/// Throws InputError for a non-positive time step, an order outside 1..10,
/// a series order outside [2 order, 40] or a response-factor count below 1.
void validate_options(const SolverOptions& opts);

struct Solution {
  double u = 0.0;
  RationalStf stf;
  PoleSet poles;
  std::array<PoleResidueForm, 3> prf;  // X, Y, Z
  CtfSet ctf;
  ResponseFactorSeq rf;
  std::vector<std::string> warnings;
};

/// Series expansion, Pade approximation, poles, residues, z-domain assembly
/// and response factors for one construction.
Solution solve(const Construction& c, const SolverOptions& opts = {});

}  // namespace ctf
