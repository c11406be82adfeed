#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kirchhoff/fibering.hpp"
#include "kirchhoff/function_data.hpp"
#include "kirchhoff/ground_state.hpp"
#include "kirchhoff/params.hpp"

namespace kirchhoff {

/// Root K of K = b + a K^{(N-2)/2} G.
struct BranchRoot {
  double K = 0.0;
  int multiplicity = 1;
};

/// a G K^{(N-2)/2} - K + b.
double branch_psi(int N, double a, double b, double G, double K);

/// All roots, ascending. Empty means no radial solution.
std::vector<BranchRoot> solve_branch(const ProblemParams& params, double G);

/// The solution w(x / sqrt(K)) of the autonomous Kirchhoff equation.
struct BranchSolution {
  double K = 0.0;
  int multiplicity = 1;
  FunctionData data;
  double energy = 0.0;
  double h_pp = 0.0;
  NehariClass nehari_class = NehariClass::Minus;
  double norm_h1 = 0.0;
  double branch_residual = 0.0;
  double nehari_residual = 0.0;
};

BranchSolution materialize(const BranchRoot& root, const GroundState& gs,
                           const ProblemParams& params);

std::vector<BranchSolution> solve_and_materialize(const GroundState& gs,
                                                  const ProblemParams& params);

/// Bisects on a for the change in root count between a_lo and a_hi.
double locate_count_change(const ProblemParams& params, double G, double a_lo,
                           double a_hi, double rel_tol = 1e-12);

struct BranchRecord {
  double a = 0.0;
  std::vector<BranchSolution> solutions;
};

struct BranchDiagram {
  std::vector<BranchRecord> rows;
  std::optional<double> fold_a;       ///< empirical, from the grid plus bisection
  std::optional<double> fold_K;
  std::optional<double> a_crit;       ///< closed form, N >= 5
};

BranchDiagram branch_diagram(const ProblemParams& params, const GroundState& gs,
                             const std::vector<double>& a_grid);

void write_branch_csv(std::ostream& os, const BranchDiagram& diagram);

struct T1Report {
  double lambda = 0.0;
  double norm_scale = 0.0;     ///< (2 S_p^p/(f_inf(4-p)))^{1/(p-2)}
  double energy_floor = 0.0;   ///< ((p-2)/(2p)) (S_p^p/f_inf)^{2/(p-2)}
  std::vector<BranchSolution> solutions;
  std::map<std::string, bool> checks;
  bool all_pass = false;
};

/// Root count and norm/energy orderings of the branch solutions at a < lambda.
T1Report theorem_t1_checks(const ProblemParams& params, const GroundState& gs);

}  // namespace kirchhoff
