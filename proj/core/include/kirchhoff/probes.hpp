#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kirchhoff/branches.hpp"
#include "kirchhoff/function_data.hpp"
#include "kirchhoff/ground_state.hpp"
#include "kirchhoff/params.hpp"

namespace kirchhoff {

enum class Verdict {
  UnboundedBelow,
  BoundedBelow,
  BoundedNegInf,
  BoundedPositive,
  NoSolution,
  OneSolution,
  TwoSolutions,
  Confirmed,
  Inconclusive,
  NotApplicable,
};

/// UNBOUNDED_BELOW style names.
const char* to_string(Verdict v);

/// Certification level for "unbounded below".
inline constexpr double kUnboundedLevel = -1e6;
/// Geometric growth of the scaling parameter stops here.
inline constexpr double kScaleCap = 1e12;

struct Residual {
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

Residual make_residual(double value, double tolerance);

struct TrajectoryPoint {
  double t = 0.0;
  double energy = 0.0;
};

struct ProbeReport {
  std::string probe;
  Verdict verdict = Verdict::Inconclusive;
  std::map<std::string, double> witness;
  std::map<std::string, Residual> residuals;
  std::map<std::string, bool> signs;
  std::vector<TrajectoryPoint> trajectory;
  std::optional<double> fitted_exponent;
  std::optional<double> expected_exponent;
  std::vector<std::string> notes;
  bool falsified = false;
};

/// J along v_t = t^k u(x/t) from the exact scaling of the ground-state
/// integrals, with f_min in the p-term. N <= 3.
ProbeReport scaling_probe_low_dim(const ProblemParams& params, const GroundState& gs,
                                  std::optional<double> k = std::nullopt);

/// Upper end (4-N)/(4-p) of the admissible k interval.
double scaling_k_limit(int N, double p);

/// Exponents of t in the Dirichlet, mass and p-terms and in the quartic term.
struct ScalingExponents {
  double dir = 0.0;
  double mass = 0.0;
  double quartic = 0.0;
  double pterm = 0.0;
};

ScalingExponents scaling_exponents(int N, double p, double k);

/// Two-stage N = 4 family: u0 = s0 w0, then u0(x/t).
ProbeReport n4_small_a_probe(const ProblemParams& params, const GroundState& gs);

/// min over t > 0 of J(t u)/t^2 and its minimizer.
struct QuotientMin {
  double value = 0.0;
  double t = 0.0;
};

QuotientMin fiber_quotient_min(const FunctionData& d, const ProblemParams& params);

/// Data of w0(x/lambda) with coefficient f_coef.
FunctionData dilated_data(const GroundState& gs, double f_coef, double lambda, double b);

/// The 21 dilation scales 10^{(k-10)/5}.
std::vector<double> dilation_scales();

/// J(t w0(x/lambda)) > 0 for all t > 0 on every dilation scale.
ProbeReport positive_infimum_probe(const ProblemParams& params, const GroundState& gs);

/// N >= 5: a finite lower bound on J plus a function with negative energy.
ProbeReport negative_infimum_probe(const ProblemParams& params, const GroundState& gs);

/// Picks the boundedness probe matching the coupling regime.
ProbeReport boundedness_probe(const ProblemParams& params, const GroundState& gs);

struct PohozaevTerms {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  ///< |lhs - rhs| / |rhs|
};

/// ((N-2)/2)(b + a dir) dir + (N/2) mass = (N/p) fp + virial/p.
PohozaevTerms pohozaev_general(const FunctionData& d, int N, double p, double a,
                               double b, double virial = 0.0);

/// The dimension-specific display forms, N in 1..4.
PohozaevTerms pohozaev_display(const FunctionData& d, int N, double p, double a,
                               double b, double virial = 0.0);

/// Ratio between display and general (lhs - rhs).
double pohozaev_display_factor(int N, double p);

/// |display - factor * general| relative to the size of the display terms.
double pohozaev_display_gap(const FunctionData& d, int N, double p, double a, double b,
                            double virial = 0.0);

ProbeReport pohozaev_check(const BranchSolution& sol, const ProblemParams& params,
                           double tolerance = 1e-5);

ProbeReport t5_sign_checks(const ProblemParams& params, const GroundState& gs,
                           std::vector<double> a_samples = {});

/// Default N = 3 samples: 10 log-spaced couplings in [1e-3, 1e3].
std::vector<double> t5_default_samples_n3();

ProbeReport nonexistence_check(const ProblemParams& params, const GroundState& gs,
                               double a, std::optional<double> control_a = std::nullopt);

struct TableCell {
  std::string table;
  int N = 0;
  std::string row;
  std::string column;
  std::string expected;
  std::string computed;
  bool match = false;
  std::optional<double> a;
  std::string witness;
  std::optional<double> witness_value;
  Verdict verdict = Verdict::NotApplicable;
};

struct SweepRow {
  int N = 0;
  double a = 0.0;
  std::size_t solutions = 0;
  Verdict boundedness = Verdict::Inconclusive;
};

struct LandscapeTable {
  std::vector<TableCell> cells;
  std::vector<SweepRow> sweep;
  bool sweep_monotone = true;
  bool all_match = false;
};

/// Row label used by both summary tables.
std::string table_row_label(int N);

/// Both summary tables for the given dimensions, each cell with its witness.
LandscapeTable landscape_table(const std::vector<ProblemParams>& rows,
                               const std::vector<double>& a_grid = {});

}  // namespace kirchhoff
