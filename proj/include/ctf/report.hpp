#pragma once

#include <span>
#include <string>

#include "ctf/fd_oracle.hpp"
#include "ctf/frequency.hpp"
#include "ctf/pipeline.hpp"

namespace ctf {

/// Scientific notation with 9 significant digits.
std::string format_number(double v);

struct NamedSolution {
  std::string name;
  const Solution* solution;
};

/// Coefficients with their sums and U, plus response factors when
/// `include_factors` is set. JSON is an array with one object per wall; CSV
/// is long format `wall,series,k,value`.
std::string solutions_json(std::span<const NamedSolution> solutions, bool include_factors);
std::string solutions_csv(std::span<const NamedSolution> solutions, bool include_factors);

std::string report_json(const std::string& name, const ValidationReport& report);

/// Flow-level summary rows `wall,flow,u_ratio,u_deviation,l2,truncated_l2,pass`.
std::string report_csv(const std::string& name, const ValidationReport& report);

std::string oracle_json(const std::string& name, const OracleComparison& cmp);

}  // namespace ctf
