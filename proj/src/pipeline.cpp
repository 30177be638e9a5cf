#include "ctf/pipeline.hpp"

#include <cmath>

#include "ctf/error.hpp"

namespace ctf {

void validate_options(const SolverOptions& opts) {
  if (!(opts.dt > 0.0) || !std::isfinite(opts.dt)) throw InputError("time step must be positive and finite");
  if (opts.order < 1 || opts.order > 10) throw InputError("order must lie in 1..10");
  if (opts.series_order < 2 * opts.order || opts.series_order > 40)
    throw InputError("series order must lie in [2*order, 40]");
  if (opts.rf_count < 1) throw InputError("response factor count must be at least 1");
}

Solution solve(const Construction& c, const SolverOptions& opts) {
  validate_options(opts);
  Solution s;
  s.u = u_value(c);
  s.warnings = warnings(c);
  s.stf = estimate_stf(c, {opts.order, opts.series_order});
  s.poles = find_poles(s.stf.denom);
  s.prf = {partial_fractions(s.stf.num_x, s.stf.denom, s.poles), partial_fractions(s.stf.num_y, s.stf.denom, s.poles),
           partial_fractions(s.stf.num_z, s.stf.denom, s.poles)};
  s.ctf = assemble_ctf(s.prf[0], s.prf[1], s.prf[2], opts.dt);
  s.rf = response_factors(s.ctf, opts.rf_count);
  return s;
}

}  // namespace ctf
