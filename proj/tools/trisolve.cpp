// trisolve: fixed-point solver for the nonlinear triharmonic Dirichlet problem
// on the unit square, with convergence-table studies.

#include "trisolve/problems.hpp"
#include "trisolve/study.hpp"
#include "trisolve/triharmonic.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiverged = 2;
constexpr int kExitInvalid = 3;

struct CommonArgs {
  int example = 1;
  double tau = 150.0;
  std::optional<std::string> stop;
  double tol = 1e-6;
  int max_iter = 10000;
  std::string dump_solution;
  int precision = 6;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--example", a.example, "Built-in problem (1-4)")->required()->check(CLI::Range(1, 4));
  cmd->add_option("--tau", a.tau, "Boundary relaxation parameter")->check(CLI::PositiveNumber);
  cmd->add_option("--stop", a.stop,
                  "Stopping rule: exact (|u*-U_k| <= h1^4+h2^4) or successive (|U_k-U_{k-1}| <= tol); "
                  "defaults to exact when the example has a known solution")
      ->check(CLI::IsMember({"exact", "successive"}));
  cmd->add_option("--tol", a.tol, "Tolerance for successive stopping")->check(CLI::PositiveNumber);
  cmd->add_option("--max-iter", a.max_iter, "Iteration cap")->check(CLI::PositiveNumber);
  cmd->add_option("--dump-solution", a.dump_solution, "Write x1,x2,U for the (finest) solution");
  cmd->add_option("--precision", a.precision, "Significant digits for printed reals")->check(CLI::Range(1, 17));
}

trisolve::SolverConfig make_config(const CommonArgs& a, const trisolve::ProblemSpec& problem) {
  trisolve::SolverConfig c;
  c.tau = a.tau;
  c.tol = a.tol;
  c.max_iter = a.max_iter;
  const std::string stop = a.stop.value_or(problem.has_exact_solution() ? "exact" : "successive");
  c.stop = stop == "exact" ? trisolve::StopCriterion::ExactError : trisolve::StopCriterion::SuccessiveDiff;
  if (c.stop == trisolve::StopCriterion::ExactError && !problem.has_exact_solution())
    throw std::invalid_argument("example " + std::to_string(a.example) +
                                " has no exact solution; use --stop successive");
  return c;
}

void dump(const std::string& path, const trisolve::GridFunction<double>& U) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  trisolve::write_solution_csv(out, U);
}

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    const int value = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad N list entry '" + item + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonlinear triharmonic Dirichlet solver"};
  app.require_subcommand(1);

  CommonArgs solve_args;
  int n = 32;
  auto* solve_cmd = app.add_subcommand("solve", "Single solve, prints K and the final error metric");
  add_common(solve_cmd, solve_args);
  solve_cmd->add_option("--n", n, "Intervals per side")->required();

  CommonArgs study_args;
  std::string n_list_text = "8,16,32,64";
  std::string out_path;
  bool parallel = false;
  auto* study_cmd = app.add_subcommand("study", "Convergence table over doubling N");
  add_common(study_cmd, study_args);
  study_cmd->add_option("--n-list", n_list_text, "Comma-separated doubling N values");
  study_cmd->add_option("--out", out_path, "CSV output path (stdout if omitted)");
  study_cmd->add_flag("--parallel", parallel, "Solve the different N concurrently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*solve_cmd) {
      const auto problem = trisolve::example(solve_args.example);
      const auto config = make_config(solve_args, problem);
      const auto result = trisolve::solve(problem, trisolve::unit_square(n), config);
      const auto& rep = result.report;
      std::cout << "N=" << n << " K=" << rep.iterations << " "
                << (config.stop == trisolve::StopCriterion::ExactError ? "E" : "e") << "="
                << std::scientific << std::setprecision(solve_args.precision - 1) << rep.final_error
                << " termination=" << trisolve::to_string(rep.termination) << '\n';
      if (!solve_args.dump_solution.empty()) dump(solve_args.dump_solution, result.U);
      return rep.termination == trisolve::Termination::Diverged ? kExitDiverged : kExitOk;
    }

    const auto problem = trisolve::example(study_args.example);
    trisolve::StudyOptions options;
    options.n_list = parse_n_list(n_list_text);
    options.config = make_config(study_args, problem);
    options.parallel = parallel;
    const auto result = trisolve::run_convergence_study(problem, options);

    if (out_path.empty()) {
      trisolve::write_study_csv(std::cout, result.rows, study_args.precision);
    } else {
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot open " + out_path);
      trisolve::write_study_csv(out, result.rows, study_args.precision);
    }
    for (const auto& row : result.rows)
      if (row.termination == trisolve::Termination::MaxIterations)
        std::cerr << "warning: N=" << row.N << " hit the iteration cap\n";
    if (!study_args.dump_solution.empty() && result.finest_solution)
      dump(study_args.dump_solution, *result.finest_solution);
    if (result.diverged) {
      std::cerr << "error: solve diverged at N=" << result.rows.back().N << '\n';
      return kExitDiverged;
    }
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
