#pragma once

#include "trisolve/grid.hpp"
#include "trisolve/triharmonic.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trisolve {

/// One line of a convergence table.
struct StudyRow {
  int N = 0;
  int K = 0;
  double error = 0.0;  // E^h(K) or e^h(K), depending on the stop criterion
  std::optional<double> order;
  Termination termination = Termination::Converged;
};

/// order_i = log2(errors_i / errors_{i+1}); throws on non-positive entries.
std::vector<double> compute_order_exact(const std::vector<double>& errors);

/// log2(|U^h - U^{h/2}|_h / |U^{h/2} - U^{h/4}|_{h/2}), differences taken on
/// the coarser grid's nodes. Empty if either difference vanishes.
std::optional<double> compute_order_successive(const GridFunction<double>& coarse,
                                               const GridFunction<double>& mid,
                                               const GridFunction<double>& fine);

struct StudyOptions {
  std::vector<int> n_list;
  SolverConfig config;
  bool parallel = false;
};

struct StudyResult {
  std::vector<StudyRow> rows;
  /// Solution on the finest grid that was solved.
  std::optional<GridFunction<double>> finest_solution;
  bool diverged = false;
};

/// Solves on the unit square for every N in options.n_list (strictly doubling)
/// and assembles the table. Orders use compute_order_exact under ExactError
/// and compute_order_successive over solution triples under SuccessiveDiff.
/// A diverged solve stops the study; rows up to and including it are kept.
StudyResult run_convergence_study(const ProblemSpec& problem, const StudyOptions& options);

/// CSV with header `N,K,error,order`; floats in scientific notation with
/// `precision` significant digits, empty order field when absent.
void write_study_csv(std::ostream& os, const std::vector<StudyRow>& rows, int precision = 6);
std::vector<StudyRow> read_study_csv(std::istream& is);

/// `x1,x2,U` triples for every node, one per line.
void write_solution_csv(std::ostream& os, const GridFunction<double>& U, int precision = 17);

}  // namespace trisolve
