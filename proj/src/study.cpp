#include "trisolve/study.hpp"

#include <cmath>
#include <future>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace trisolve {

std::vector<double> compute_order_exact(const std::vector<double>& errors) {
  if (errors.size() < 2) throw std::invalid_argument("compute_order_exact: need at least two errors");
  for (double e : errors)
    if (!(e > 0.0)) throw std::invalid_argument("compute_order_exact: errors must be positive");
  std::vector<double> orders;
  orders.reserve(errors.size() - 1);
  for (size_t i = 0; i + 1 < errors.size(); ++i) orders.push_back(std::log2(errors[i] / errors[i + 1]));
  return orders;
}

std::optional<double> compute_order_successive(const GridFunction<double>& coarse,
                                               const GridFunction<double>& mid,
                                               const GridFunction<double>& fine) {
  const double num = diff_norm(coarse, restrict_to_coarse(mid, coarse.grid()));
  const double den = diff_norm(mid, restrict_to_coarse(fine, mid.grid()));
  if (!(num > 0.0) || !(den > 0.0)) return std::nullopt;
  return std::log2(num / den);
}

namespace {

void check_n_list(const std::vector<int>& n_list) {
  if (n_list.empty()) throw std::invalid_argument("study: empty N list");
  for (size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < Grid::kMinIntervals)
      throw std::invalid_argument("study: N = " + std::to_string(n_list[i]) + " is below the minimum");
    if (i > 0 && n_list[i] != 2 * n_list[i - 1])
      throw std::invalid_argument("study: N list must double at each step");
  }
}

}  // namespace

StudyResult run_convergence_study(const ProblemSpec& problem, const StudyOptions& options) {
  check_n_list(options.n_list);
  options.config.validate();

  std::vector<SolveResult> solves;
  if (options.parallel) {
    std::vector<std::future<SolveResult>> pending;
    for (int N : options.n_list)
      pending.push_back(std::async(std::launch::async, [&problem, &options, N] {
        return solve(problem, unit_square(N), options.config);
      }));
    for (auto& f : pending) solves.push_back(f.get());
  } else {
    for (int N : options.n_list) {
      solves.push_back(solve(problem, unit_square(N), options.config));
      if (solves.back().report.termination == Termination::Diverged) break;
    }
  }

  StudyResult result;
  for (size_t i = 0; i < solves.size(); ++i) {
    const IterationReport& rep = solves[i].report;
    result.rows.push_back({options.n_list[i], rep.iterations, rep.final_error, std::nullopt, rep.termination});
    if (rep.termination == Termination::Diverged) {
      result.diverged = true;
      break;
    }
  }
  const size_t count = result.rows.size();
  solves.erase(solves.begin() + static_cast<std::ptrdiff_t>(count), solves.end());

  if (options.config.stop == StopCriterion::ExactError) {
    for (size_t i = 0; i + 1 < count; ++i) {
      const double a = result.rows[i].error, b = result.rows[i + 1].error;
      if (a > 0.0 && b > 0.0) result.rows[i].order = compute_order_exact({a, b}).front();
    }
  } else {
    for (size_t i = 0; i + 2 < count; ++i)
      result.rows[i].order = compute_order_successive(solves[i].U, solves[i + 1].U, solves[i + 2].U);
  }
  if (count > 0) result.finest_solution = std::move(solves.back().U);
  return result;
}

void write_study_csv(std::ostream& os, const std::vector<StudyRow>& rows, int precision) {
  if (precision < 1) throw std::invalid_argument("write_study_csv: precision must be at least 1");
  os << "N,K,error,order\n";
  std::ostringstream line;
  line << std::scientific << std::setprecision(precision - 1);
  for (const StudyRow& r : rows) {
    line.str("");
    line << r.N << ',' << r.K << ',' << r.error << ',';
    if (r.order) line << *r.order;
    os << line.str() << '\n';
  }
}

std::vector<StudyRow> read_study_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "N,K,error,order")
    throw std::runtime_error("read_study_csv: missing or unexpected header");
  std::vector<StudyRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() == 3 && line.back() == ',') fields.emplace_back();
    if (fields.size() != 4) throw std::runtime_error("read_study_csv: malformed row '" + line + "'");
    StudyRow r;
    try {
      r.N = std::stoi(fields[0]);
      r.K = std::stoi(fields[1]);
      r.error = std::stod(fields[2]);
      if (!fields[3].empty()) r.order = std::stod(fields[3]);
    } catch (const std::logic_error&) {
      throw std::runtime_error("read_study_csv: malformed row '" + line + "'");
    }
    rows.push_back(r);
  }
  return rows;
}

void write_solution_csv(std::ostream& os, const GridFunction<double>& U, int precision) {
  const Grid& g = U.grid();
  os << "x1,x2,U\n" << std::setprecision(precision);
  for (int j = 0; j <= g.n(); ++j)
    for (int i = 0; i <= g.m(); ++i) os << g.x1(i) << ',' << g.x2(j) << ',' << U(i, j) << '\n';
}

}  // namespace trisolve
