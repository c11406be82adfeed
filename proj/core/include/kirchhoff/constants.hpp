#pragma once

#include <map>
#include <optional>
#include <string>

#include "kirchhoff/function_data.hpp"
#include "kirchhoff/ground_state.hpp"
#include "kirchhoff/params.hpp"

namespace kirchhoff {

/// Piecewise constant ((4-p)/2)^{1/(p-2)} on (2,3], 1/2 beyond.
double d_of_p(double p, int N = 1);

/// Small-coupling scale built from S_p^p and the spread of f.
/// Throws PreconditionError when f_max >= f_inf / D(p)^{(p-2)/2}.
double lambda0(const ProblemParams& params, double sp_pow);

/// The coefficient (p-2)/(2(4-p)) ((4-p)/p)^{2/(p-2)} multiplying lambda0.
double lambda0_coefficient(double p);

/// Existence threshold. For N >= 4 the supremum it refers to is replaced by
/// the supplied lower bracket end.
double lambda(const ProblemParams& params, double sp_pow,
              std::optional<double> a_star_lower = std::nullopt);

/// C_p^p of the Gagliardo-Nirenberg inequality
///   int |u|^p <= C_p^p |grad u|_2^{N(p-2)/2} |u|_2^{p-N(p-2)/2},
/// evaluated on the ground state (which is an extremal).
double gn_sharp_constant_pow(const GroundState& gs);

/// fp^{2/(p-2)} / (dir^2 h1^{(4-p)/(p-2)}), with h1 = h1b_sq.
double a_bar_f(const FunctionData& data, double p);

/// (2(p-2)/(4-p)) ((4-p)/p)^{2/(p-2)}.
double a_star_prefactor(double p);

/// p^{2/(p-2)} / 2^{p/(p-2)} (> 1).
double nonexistence_factor(double p);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

struct AStarBracket {
  double lower = 0.0;        ///< dilation-family lower bound
  double upper = 0.0;        ///< Gagliardo-Nirenberg/Young upper bound
  double log_lambda_at_max = 0.0;  ///< maximizing log dilation (inf for N = 4)
  std::optional<double> under;     ///< f_min variant, N = 4 only
};

/// Bracket for the supremum coupling; N >= 4.
AStarBracket a_star_bracket(const ProblemParams& params, const GroundState& gs);

/// log of a_bar_f on u_lambda = w(x/lambda), as a function of s = log lambda.
double log_a_bar_f_dilation(const GroundState& gs, double f_coef, double s);

Interval nonexistence_threshold(const AStarBracket& bracket, double p);

struct InflectionPair {
  double t_u = 0.0;
  double a_u = 0.0;
};

/// The (t, a) at which h'(t) = h''(t) = 0 along the ray through u.
InflectionPair inflection_pair(const FunctionData& data, const ProblemParams& params);

struct T5Constants {
  double A0 = 0.0;
  double A0_bar = 0.0;
  double A0_star = 0.0;
};

T5Constants theorem_t5_constants(const ProblemParams& params, double sp_pow,
                                 double cp_pow);

struct LowerBoundRadii {
  double r_hat = 0.0;
  double R_a = 0.0;
  double R_hat_a = 0.0;
  double beta = 0.0;
  double alpha = 0.0;
  double young_constant = 0.0;  ///< coefficient of |grad u|_2^{2*} after Young
  double energy_floor = 0.0;    ///< J_a >= energy_floor on H^1
};

/// Radii for the N >= 5 lower bound on J_a.
LowerBoundRadii lower_bound_radii(const ProblemParams& params, double sp_pow,
                                  double cp_pow,
                                  std::optional<double> beta = std::nullopt);

/// Largest a with a radial solution when N >= 5.
double a_crit_high_dim(int N, double b, double G);

struct ThresholdSet {
  int N = 0;
  double p = 0.0;
  double d_p = 0.0;
  double lambda0 = 0.0;
  double lambda = 0.0;
  std::optional<double> a_star_lower, a_star_upper, a_star_under;
  std::optional<double> nonexist_lower, nonexist_upper;
  double A0 = 0.0, A0_bar = 0.0, A0_star = 0.0;
  std::optional<double> a_crit;
  std::optional<double> r_hat, R_a, R_hat_a;
  double S_p = 0.0, S_p_pow = 0.0;
  double C_p = 0.0, C_p_pow = 0.0;
  std::map<std::string, std::string> provenance;
};

/// Every named constant for the given parameters. Radii need a > 0 and N >= 5.
ThresholdSet compute_thresholds(const ProblemParams& params, const GroundState& gs);

}  // namespace kirchhoff
