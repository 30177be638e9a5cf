#include "ctf/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace ctf {

namespace {

using json = nlohmann::ordered_json;

// Rounded to the printed precision so JSON and CSV carry the same digits.
double rounded(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

json array(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(rounded(v[i]));
  return out;
}

json solution_object(const NamedSolution& ns, bool include_factors) {
  const Solution& s = *ns.solution;
  json j;
  j["wall"] = ns.name;
  j["u_value"] = rounded(s.u);
  j["dt_s"] = s.ctf.dt;
  j["order"] = s.ctf.order();
  json coeffs;
  json sums;
  const std::array<std::pair<const char*, const Eigen::VectorXd*>, 4> rows{
      {{"a", &s.ctf.a}, {"b", &s.ctf.b}, {"c", &s.ctf.c}, {"d", &s.ctf.d}}};
  for (const auto& [key, v] : rows) {
    coeffs[key] = array(*v);
    sums[key] = rounded(v->sum());
  }
  j["coefficients"] = coeffs;
  j["sums"] = sums;
  if (include_factors) {
    json rf;
    rf["x"] = array(s.rf.x);
    rf["y"] = array(s.rf.y);
    rf["z"] = array(s.rf.z);
    j["response_factors"] = rf;
  }
  j["warnings"] = s.warnings;
  return j;
}

json bode_object(const BodeSamples& b) {
  json j;
  j["omega_rad_s"] = array(b.omega);
  j["mag_exact"] = array(b.mag_exact);
  j["phase_exact_rad"] = array(b.phase_exact);
  j["mag_approx"] = array(b.mag_approx);
  j["phase_approx_rad"] = array(b.phase_approx);
  return j;
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

std::string solutions_json(std::span<const NamedSolution> solutions, bool include_factors) {
  json out = json::array();
  for (const auto& ns : solutions) out.push_back(solution_object(ns, include_factors));
  return out.dump(2) + "\n";
}

std::string solutions_csv(std::span<const NamedSolution> solutions, bool include_factors) {
  std::ostringstream out;
  out << "wall,series,k,value\n";
  for (const auto& ns : solutions) {
    const Solution& s = *ns.solution;
    out << ns.name << ",U,," << format_number(s.u) << '\n';
    out << ns.name << ",dt,," << format_number(s.ctf.dt) << '\n';
    const auto emit = [&](const char* series, const Eigen::VectorXd& v, bool with_sum) {
      for (Eigen::Index k = 0; k < v.size(); ++k)
        out << ns.name << ',' << series << ',' << k << ',' << format_number(v[k]) << '\n';
      if (with_sum) out << ns.name << ',' << series << ",sum," << format_number(v.sum()) << '\n';
    };
    emit("a", s.ctf.a, true);
    emit("b", s.ctf.b, true);
    emit("c", s.ctf.c, true);
    emit("d", s.ctf.d, true);
    if (include_factors) {
      emit("X", s.rf.x, false);
      emit("Y", s.rf.y, false);
      emit("Z", s.rf.z, false);
    }
  }
  return out.str();
}

std::string report_json(const std::string& name, const ValidationReport& r) {
  json j;
  j["wall"] = name;
  j["pass"] = r.pass;
  j["u_value"] = rounded(r.u);
  j["dt_s"] = r.dt;
  j["eps_u"] = r.eps_u;
  j["eps_l2"] = r.eps_l2;
  if (r.rf_terms > 0) j["rf_terms"] = r.rf_terms;
  json flows;
  json bode;
  for (int f = 0; f < 3; ++f) {
    const FlowCheck& fc = r.flows[f];
    json o;
    o["u_ratio"] = rounded(fc.u_ratio);
    o["u_deviation"] = rounded(fc.u_deviation);
    o["l2_error"] = rounded(fc.l2);
    if (fc.truncated_l2) o["truncated_l2_error"] = rounded(*fc.truncated_l2);
    o["pass"] = fc.pass;
    flows[kFlowNames[f]] = o;
    bode[kFlowNames[f]] = bode_object(r.bode[f]);
  }
  j["flows"] = flows;
  j["warnings"] = r.warnings;
  j["bode"] = bode;
  return j.dump(2) + "\n";
}

std::string report_csv(const std::string& name, const ValidationReport& r) {
  std::ostringstream out;
  out << "wall,flow,u_ratio,u_deviation,l2,truncated_l2,pass\n";
  for (int f = 0; f < 3; ++f) {
    const FlowCheck& fc = r.flows[f];
    out << name << ',' << kFlowNames[f] << ',' << format_number(fc.u_ratio) << ',' << format_number(fc.u_deviation)
        << ',' << format_number(fc.l2) << ',' << (fc.truncated_l2 ? format_number(*fc.truncated_l2) : "") << ','
        << (fc.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string oracle_json(const std::string& name, const OracleComparison& cmp) {
  json j;
  j["wall"] = name;
  j["pass"] = cmp.pass;
  j["k_min"] = cmp.k_min;
  j["k_max"] = cmp.k_max;
  j["max_rel_dev"] = rounded(cmp.max_dev);
  j["tolerance"] = cmp.tolerance;
  j["y_empirical"] = array(cmp.y_empirical);
  j["y_analytic"] = array(cmp.y_analytic);
  j["rel_dev"] = array(cmp.rel_dev);
  return j.dump(2) + "\n";
}

}  // namespace ctf
