// Runs each acceptance criterion once and prints one PASS/FAIL line per criterion.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ctf/catalog.hpp"
#include "ctf/error.hpp"
#include "ctf/fd_oracle.hpp"
#include "ctf/frequency.hpp"
#include "ctf/pade.hpp"
#include "ctf/pipeline.hpp"
#include "ctf/realization.hpp"
#include "ctf/transmission.hpp"

using namespace ctf;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& note) {
    if (!ok) pass = false;
    notes.push_back((ok ? "" : "[x] ") + note);
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

const ExpectedCtf& published(const CatalogEntry& e, double dt) {
  for (const auto& t : e.ctf)
    if (t.dt == dt) return t;
  throw std::runtime_error("no published coefficients for " + e.id);
}

std::string run_command(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("cannot run " + cmd);
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  if (pclose(p) != 0) throw std::runtime_error("command failed: " + cmd);
  return out;
}

Eigen::VectorXd as_vector(const nlohmann::json& arr) {
  Eigen::VectorXd v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) v[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
  return v;
}

Outcome brick_regression(const std::string& ctfkit) {
  Outcome o;
  const auto& e = catalog_entry("brick-cavity");
  const ExpectedCtf& t = published(e, 3600.0);
  const auto t0 = Clock::now();
  const std::string text = run_command(ctfkit + " compute --catalog brick-cavity --dt 3600 --order 5");
  const double elapsed = seconds_since(t0);
  const auto doc = nlohmann::json::parse(text).at(0);
  const auto& coeff = doc.at("coefficients");
  const double u = doc.at("u_value").get<double>();

  double worst = 0.0;
  const std::array<std::pair<const char*, const Eigen::VectorXd*>, 4> rows{
      {{"a", &t.a}, {"b", &t.b}, {"c", &t.c}, {"d", &t.d}}};
  for (const auto& [name, want] : rows) {
    const Eigen::VectorXd got = as_vector(coeff.at(name));
    o.require(got.size() == want->size(), std::string("row ") + name + " has order 5");
    if (got.size() == want->size()) worst = std::max(worst, (got - *want).cwiseAbs().maxCoeff());
  }
  o.require(worst <= 1e-3, "max |coefficient - published| = " + fmt("%.3g", worst));

  const double sum_d = as_vector(coeff.at("d")).sum();
  for (const char* n : {"a", "b", "c"}) {
    const double ratio = as_vector(coeff.at(n)).sum() / sum_d;
    o.require(rel(ratio, u) <= 1e-3, std::string("sum ") + n + " / sum d vs U: " + fmt("%.3g", rel(ratio, u)));
  }
  o.require(rel(u, 1.0 / 0.54635) <= 1e-3, "U = " + fmt("%.6f", u));
  o.notes.push_back("sums a " + fmt("%.6f", as_vector(coeff.at("a")).sum()) + " d " + fmt("%.6f", sum_d) +
                    " (published " + fmt("%.6f", *t.sum_num) + ", " + fmt("%.6f", *t.sum_d) + ")");
  o.require(elapsed < 0.1, "runtime " + fmt("%.1f", elapsed * 1e3) + " ms");
  return o;
}

Outcome heavyweight_regression() {
  Outcome o;
  const auto& e = catalog_entry("heavyweight-cn");
  const ExpectedFactors& f = *e.factors;
  const Solution s = solve(e.construction, {f.dt, f.order, 20, 144});
  double worst = 0.0;
  for (Eigen::Index k = 4; k <= 71; ++k) worst = std::max(worst, std::abs(s.rf.y[k] - f.y[k]));
  o.require(worst <= 1e-5, "max |Y[k] - published|, k = 4..71: " + fmt("%.3g", worst));

  const FrequencyGrid g(1e-9, 1e-3, 50);
  const Characteristics exact = exact_characteristics(e.construction, g);
  for (const auto& err : e.errors) {
    if (err.rf_terms != 72 && err.rf_terms != 144) continue;
    const double got = l2_error(exact.flow[1], rf_characteristics(s.rf, err.rf_terms, g).flow[1], s.u);
    o.require(std::abs(got - err.value) <= 0.003, "K = " + std::to_string(err.rf_terms) + ": " +
                                                      fmt("%.4f%%", 100 * got) + " vs " +
                                                      fmt("%.4f%%", 100 * err.value));
  }
  return o;
}

Outcome wall_group_regression() {
  Outcome o;
  const auto& e = catalog_entry("wall-group-2");
  o.require(rel(u_value(e.construction), 0.317398) <= 1e-3, "U = " + fmt("%.6f", u_value(e.construction)));

  double prev = std::numeric_limits<double>::infinity();
  for (const auto& err : e.errors) {
    const FrequencyGrid g(err.omega_min, err.omega_max, err.n_points);
    const Solution s = solve(e.construction, {err.dt, err.order, 20, 4});
    const double got = l2_error(exact_characteristics(e.construction, g).flow[1], ztf_characteristics(s.ctf, g).flow[1],
                                s.u);
    o.require(rel(got, err.value) <= 0.1, "dt " + fmt("%g", err.dt) + ": " + fmt("%.4g%%", 100 * got) + " vs " +
                                              fmt("%.4g%%", 100 * err.value));
    o.require(got < prev, "error decreases at dt " + fmt("%g", err.dt));
    prev = got;
  }

  int checked = 0;
  double worst = 0.0;
  for (const auto& t : e.ctf) {
    const Solution s = solve(e.construction, {t.dt, t.order, 20, 4});
    const std::array<std::pair<const Eigen::VectorXd*, const Eigen::VectorXd*>, 4> rows{
        {{&t.a, &s.ctf.a}, {&t.b, &s.ctf.b}, {&t.c, &s.ctf.c}, {&t.d, &s.ctf.d}}};
    for (const auto& [want, got] : rows)
      for (Eigen::Index k = 0; k < want->size(); ++k) {
        const double w = (*want)[k];
        const double dev = std::abs((*got)[k] - w);
        const double scaled = std::abs(w) > 1e-3 ? dev / (1e-3 * std::abs(w)) : dev / 1e-5;
        worst = std::max(worst, scaled);
        ++checked;
        if (scaled > 1.0)
          o.require(false, "dt " + fmt("%g", t.dt) + " k " + std::to_string(k) + ": " + fmt("%.6e", (*got)[k]) +
                               " vs " + fmt("%.6e", w));
      }
  }
  o.require(worst <= 1.0, std::to_string(checked) + " coefficients, worst deviation " + fmt("%.3f", worst) +
                              " of tolerance");
  return o;
}

Outcome property_gate() {
  Outcome o;
  int cases = 0, failures = 0;
  double zmax = 0.0, worst_dev = 0.0;
  for (const auto& e : catalog()) {
    const double u = u_value(e.construction);
    for (double dt : {60.0, 300.0, 600.0, 900.0, 1200.0, 1800.0, 3600.0}) {
      ++cases;
      const std::string where = e.id + " dt " + fmt("%g", dt);
      const auto fail = [&](const std::string& why) {
        ++failures;
        o.require(false, where + ": " + why);
      };
      try {
        const Solution s = solve(e.construction, {dt, 6, 20, 4});
        for (const auto& p : s.poles.all())
          if (!(p.real() < 0.0)) fail("pole " + fmt("%.3g", p.real()) + " not in the left half-plane");
        const double z = z_poles(s.ctf).cwiseAbs().maxCoeff();
        if (!(z < 1.0)) fail("z pole on or outside the unit circle, |z| = " + fmt("%.6f", z));
        zmax = std::max(zmax, z);
        double dev = 0.0;
        for (const auto* n : {&s.ctf.a, &s.ctf.b, &s.ctf.c}) dev = std::max(dev, rel(steady_gain(*n, s.ctf.d), u));
        if (dev > 1e-3)
          fail("U-identity deviation " + fmt("%.3g", dev) + ", sum d = " + fmt("%.3g", s.ctf.d.sum()) +
               " against max |d_k| = " + fmt("%.3g", s.ctf.d.cwiseAbs().maxCoeff()));
        else
          worst_dev = std::max(worst_dev, dev);
      } catch (const NumericalError& err) {
        fail(err.what());
      }
    }
  }
  o.notes.insert(o.notes.begin(), std::to_string(cases) + " wall/step cases at m = 6, " + std::to_string(failures) +
                                      " failing; max |z pole| " + fmt("%.6f", zmax) +
                                      ", worst U-identity deviation among passing cases " + fmt("%.3g", worst_dev));
  return o;
}

Outcome pade_suite() {
  Outcome o;
  double worst = 0.0;
  for (const auto& e : catalog()) {
    const auto chain = chain_product(e.construction, 20);
    for (int m = 2; m <= 10; ++m) {
      try {
        const PadeApproximant p = pade_from_reciprocal(chain.m12, m);
        const RealSeries back = series_quotient(p.numerator, p.denominator, 2 * m);
        for (int k = 0; k <= 2 * m; ++k) worst = std::max(worst, rel(back[k], chain.m12[k]));
      } catch (const NumericalError& err) {
        o.require(false, e.id + " m " + std::to_string(m) + ": " + err.what());
      }
    }
  }
  o.require(worst <= 1e-9, "worst relative re-expansion error " + fmt("%.3g", worst));
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto& c = catalog_entry("brick-cavity").construction;
  const Solution s = solve(c, {3600.0, 6, 20, 27});
  double prev = std::numeric_limits<double>::infinity();
  for (int n : {25, 50, 100}) {
    FdConfig cfg;
    cfg.nodes_per_layer = n;
    const OracleComparison cmp = compare_with_analytic(simulate_pulse_response(c, 3600.0, cfg), s.rf, cfg);
    if (n == 50)
      o.require(cmp.pass && cmp.k_min == 2 && cmp.k_max == 24,
                "max deviation k = 2..24 at 50 nodes, 10 s: " + fmt("%.3g", cmp.max_dev));
    o.require(cmp.max_dev < prev, std::to_string(n) + " nodes: " + fmt("%.4g", cmp.max_dev));
    prev = cmp.max_dev;
  }
  const double elapsed = seconds_since(t0);
  o.require(elapsed < 30.0, "runtime " + fmt("%.2f", elapsed) + " s");
  return o;
}

Outcome trivial_wall() {
  Outcome o;
  const Construction c("resistive", {ResistanceLayer{0.04}, ResistanceLayer{0.5}, ResistanceLayer{0.13}});
  const double u = u_value(c);
  const Solution s = solve(c, {3600.0, 6, 20, 24});
  const auto exact = [](double got, double want) { return std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)); };
  o.require(s.ctf.b.size() == 1 && exact(s.ctf.b[0], u), "b = [U]");
  o.require(s.ctf.d.size() == 1 && s.ctf.d[0] == 1.0, "d = [1]");
  o.require(exact(s.rf.y[0], u), "Y[0] = U");
  o.require(s.rf.y.tail(s.rf.y.size() - 1).cwiseAbs().maxCoeff() <= 1e-12, "Y[k > 0] = 0");
  const FrequencyGrid g(1e-8, 1e-3, 100);
  const Characteristics ex = exact_characteristics(c, g);
  const Characteristics ap = ztf_characteristics(s.ctf, g);
  double worst = 0.0;
  for (int f = 0; f < 3; ++f) worst = std::max(worst, l2_error(ex.flow[f], ap.flow[f], u));
  o.require(worst <= 1e-12, "L2 error " + fmt("%.3g", worst));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path to ctfkit>\n");
    return 2;
  }
  const std::string ctfkit = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"brick-cavity coefficients, dt 3600 s, m 5", [&] { return brick_regression(ctfkit); }},
      {"heavyweight-cn response factors and truncation errors", heavyweight_regression},
      {"wall-group-2 L2 errors and coefficients", wall_group_regression},
      {"stability and U-identity for every wall and step", property_gate},
      {"Pade re-expansion for m = 2..10", pade_suite},
      {"finite-difference oracle on brick-cavity", oracle_equivalence},
      {"pure-resistance wall is exact", trivial_wall},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("error: ") + e.what());
    }
    std::printf("%s %zu: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str());
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
