#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctf/catalog.hpp"
#include "ctf/error.hpp"
#include "ctf/fd_oracle.hpp"
#include "ctf/frequency.hpp"
#include "ctf/pipeline.hpp"
#include "ctf/report.hpp"
#include "ctf/wall.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

struct WallSource {
  std::vector<std::string> catalog_ids;
  std::vector<std::string> files;

  void add_to(CLI::App* cmd, bool many) {
    if (many) {
      cmd->add_option("walls", files, "Wall files (JSON)")->check(CLI::ExistingFile);
      cmd->add_option("--catalog", catalog_ids, "Embedded wall id (repeatable)");
    } else {
      files.resize(0);
      cmd->add_option("wall", files, "Wall file (JSON)")->check(CLI::ExistingFile)->expected(0, 1);
      cmd->add_option("--catalog", catalog_ids, "Embedded wall id")->expected(0, 1);
    }
  }

  // Catalog ids first, then files, each in command-line order.
  std::vector<std::pair<std::string, ctf::Construction>> resolve() const {
    std::vector<std::pair<std::string, ctf::Construction>> walls;
    for (const auto& id : catalog_ids) walls.emplace_back(id, ctf::catalog_entry(id).construction);
    for (const auto& path : files) {
      ctf::Construction c = ctf::load_construction(path);
      walls.emplace_back(c.name().empty() ? std::filesystem::path(path).stem().string() : c.name(), std::move(c));
    }
    if (walls.empty()) throw ctf::InputError("no wall given: pass a wall file or --catalog <id>");
    return walls;
  }
};

struct GridFlags {
  double freq_min = 1e-8;
  double freq_max = 1e-3;
  int nfreq = 100;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--freq-min", freq_min, "Lowest angular frequency, rad/s")->capture_default_str();
    cmd->add_option("--freq-max", freq_max, "Highest angular frequency, rad/s")->capture_default_str();
    cmd->add_option("--nfreq", nfreq, "Number of logarithmically spaced frequencies")->capture_default_str();
  }
  ctf::FrequencyGrid grid() const { return {freq_min, freq_max, nfreq}; }
};

void add_solver_flags(CLI::App* cmd, ctf::SolverOptions& o) {
  cmd->add_option("--dt", o.dt, "Time step, s")->capture_default_str();
  cmd->add_option("--order", o.order, "Pade order m")->capture_default_str();
  cmd->add_option("--series-order", o.series_order, "Series truncation order N")->capture_default_str();
  cmd->add_option("--rf-count", o.rf_count, "Number of response factors")->capture_default_str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw ctf::InputError("cannot write " + out_path);
  f << text;
}

void print_warnings(const std::string& name, const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << name << ": " << w << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conduction transfer functions and response factors for multilayer walls"};
  app.require_subcommand(1);

  ctf::SolverOptions solver;
  GridFlags grid;
  std::string format = "json";
  std::string out_path;
  double eps_u = 1e-3;
  double eps_l2 = 0.02;
  bool include_factors = false;
  ctf::FdConfig fd;
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  };

  WallSource compute_src;
  auto* compute = app.add_subcommand("compute", "CTF coefficients and response factors");
  compute_src.add_to(compute, true);
  add_solver_flags(compute, solver);
  add_format(compute);
  compute->add_flag("--factors", include_factors, "Include response factor sequences");
  compute->add_option("--out", out_path, "Output file (default: standard output)");

  WallSource validate_src;
  auto* validate = app.add_subcommand("validate", "Frequency-domain quality control");
  validate_src.add_to(validate, false);
  add_solver_flags(validate, solver);
  grid.add_to(validate);
  add_format(validate);
  validate->add_option("--eps-u", eps_u, "Tolerance on relative U-ratio deviation")->capture_default_str();
  validate->add_option("--eps-l2", eps_l2, "Tolerance on the L2 error")->capture_default_str();
  validate->add_option("--out", out_path, "Report file (default: standard output)");

  WallSource bode_src;
  std::string bode_dir = ".";
  auto* bode = app.add_subcommand("bode", "Exact and z-domain frequency response, one CSV per flow");
  bode_src.add_to(bode, false);
  add_solver_flags(bode, solver);
  grid.add_to(bode);
  bode->add_option("--out", bode_dir, "Output directory")->capture_default_str();

  WallSource oracle_src;
  auto* oracle = app.add_subcommand("oracle", "Finite-difference check of cross response factors");
  oracle_src.add_to(oracle, false);
  add_solver_flags(oracle, solver);
  add_format(oracle);
  oracle->add_option("--nodes", fd.nodes_per_layer, "Cells per massive layer")->capture_default_str();
  oracle->add_option("--fd-dt", fd.fd_timestep, "Finite-difference time step, s")->capture_default_str();
  oracle->add_option("--horizon", fd.horizon, "Simulated time, s")->capture_default_str();
  oracle->add_option("--tol", fd.tolerance, "Relative tolerance on factors 2..24")->capture_default_str();
  oracle->add_option("--out", out_path, "Output file (default: standard output)");

  auto* cat = app.add_subcommand("catalog", "Embedded walls");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List embedded wall ids");
  std::string show_id;
  auto* cat_show = cat->add_subcommand("show", "Print an embedded wall as a wall file");
  cat_show->add_option("id", show_id, "Wall id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*compute) {
      ctf::validate_options(solver);
      const auto walls = compute_src.resolve();
      std::vector<std::future<ctf::Solution>> jobs;
      for (const auto& [name, c] : walls)
        jobs.push_back(std::async(std::launch::async, [&c = c, &solver] { return ctf::solve(c, solver); }));
      std::vector<ctf::Solution> solutions;
      for (auto& j : jobs) solutions.push_back(j.get());
      std::vector<ctf::NamedSolution> named;
      for (std::size_t i = 0; i < walls.size(); ++i) {
        print_warnings(walls[i].first, solutions[i].warnings);
        named.push_back({walls[i].first, &solutions[i]});
      }
      emit(format == "csv" ? ctf::solutions_csv(named, include_factors) : ctf::solutions_json(named, include_factors),
           out_path);
      return kExitPass;
    }
    if (*validate) {
      const auto [name, c] = validate_src.resolve().front();
      const ctf::FrequencyGrid g = grid.grid();
      const ctf::Solution s = ctf::solve(c, solver);
      ctf::ValidationReport r = ctf::quality_control(c, s.ctf, g, eps_u, eps_l2);
      if (validate->get_option("--rf-count")->count() > 0) ctf::attach_truncation_errors(r, s.rf, solver.rf_count, g);
      print_warnings(name, r.warnings);
      emit(format == "csv" ? ctf::report_csv(name, r) : ctf::report_json(name, r), out_path);
      std::cerr << name << ": " << (r.pass ? "PASS" : "FAIL") << '\n';
      return r.pass ? kExitPass : kExitFail;
    }
    if (*bode) {
      const auto [name, c] = bode_src.resolve().front();
      const ctf::FrequencyGrid g = grid.grid();
      const ctf::Solution s = ctf::solve(c, solver);
      const ctf::Characteristics exact = ctf::exact_characteristics(c, g);
      const ctf::Characteristics approx = ctf::ztf_characteristics(s.ctf, g);
      std::filesystem::create_directories(bode_dir);
      for (int f = 0; f < 3; ++f) {
        const auto path = std::filesystem::path(bode_dir) / (name + "_bode_" + ctf::kFlowNames[f] + ".csv");
        emit(ctf::bode_csv(ctf::bode_samples(g.omegas(), exact.flow[f], approx.flow[f])), path.string());
        std::cout << path.string() << '\n';
      }
      return kExitPass;
    }
    if (*oracle) {
      const auto [name, c] = oracle_src.resolve().front();
      ctf::validate_config(fd, solver.dt);
      ctf::SolverOptions o = solver;
      o.rf_count = static_cast<int>(fd.horizon / solver.dt) + 1;
      const ctf::Solution s = ctf::solve(c, o);
      const ctf::ResponseFactorSeq emp = ctf::simulate_pulse_response(c, solver.dt, fd);
      const ctf::OracleComparison cmp = ctf::compare_with_analytic(emp, s.rf, fd);
      emit(format == "json" ? ctf::oracle_json(name, cmp) : ctf::oracle_csv(cmp), out_path);
      std::cerr << name << ": max relative deviation " << ctf::format_number(cmp.max_dev) << " over k = "
                << cmp.k_min << ".." << cmp.k_max << ": " << (cmp.pass ? "PASS" : "FAIL") << '\n';
      return cmp.pass ? kExitPass : kExitFail;
    }
    if (*cat_list) {
      for (const auto& e : ctf::catalog()) std::cout << e.id << '\t' << e.description << '\n';
      return kExitPass;
    }
    if (*cat_show) {
      std::cout << ctf::serialize_construction(ctf::catalog_entry(show_id).construction) << '\n';
      return kExitPass;
    }
  } catch (const ctf::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ctf::NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitInput;
}
