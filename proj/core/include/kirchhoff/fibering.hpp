#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kirchhoff/function_data.hpp"
#include "kirchhoff/params.hpp"

namespace kirchhoff {

/// Sign class of h''(1) on the Nehari set.
enum class NehariClass { Minus, Zero, Plus };

const char* to_string(NehariClass c);

/// Relative size of |h''(1)| below which a point is treated as degenerate.
inline constexpr double kDegenerateTol = 1e-12;
/// Scale-free Nehari membership tolerance.
inline constexpr double kNehariTol = 1e-9;
/// Roots closer than this in log t are merged.
inline constexpr double kTangentLogTol = 1e-10;

/// J_a(t u).
double fiber_value(double t, const FunctionData& d, const ProblemParams& params);

struct FiberDerivatives {
  double d1 = 0.0;
  double d2 = 0.0;
};

FiberDerivatives fiber_derivatives(double t, const FunctionData& d,
                                   const ProblemParams& params);

/// Scale at which the semilinear fibering map is critical: (h1/fp)^{1/(p-2)}.
double T_f(const FunctionData& d, double p);

/// h'(1) / max(h1b, fp).
double nehari_residual(const FunctionData& d, const ProblemParams& params);

/// Three equivalent expressions of h''(1) valid on the Nehari set.
struct NehariHpp {
  double direct = 0.0;        ///< h1b + 3a dir^2 - (p-1) fp
  double quartic_form = 0.0;  ///< -(p-2) h1b + a(4-p) dir^2
  double fp_form = 0.0;       ///< -2 h1b + (4-p) fp
};

NehariHpp nehari_hpp(const FunctionData& d, const ProblemParams& params);

NehariClass classify(double hpp, double scale);

struct FiberingReport {
  double T_f = 0.0;
  std::optional<double> t_minus;
  std::optional<double> t_plus;
  bool tangent = false;
  std::optional<double> t_hat_0;  ///< larger zero of J(t u)
  std::optional<double> t_hat_1;  ///< smaller zero of J(t u)
  std::optional<double> t0_u;     ///< tangency scale, a > 0
  double a0_u = 0.0;              ///< tangency coupling
  double g_minimizer = 0.0;       ///< (p/(4-p))^{1/(p-2)} T_f
  double m_minimizer = 0.0;       ///< (2/(4-p))^{1/(p-2)} T_f
  bool hypothesis_ok = false;
  std::map<std::string, bool> ordering;
  bool ordering_ok = false;
  std::map<std::string, double> energies;
};

/// Critical points of t -> J_a(t u) and the associated scales.
FiberingReport critical_points(const FunctionData& d, const ProblemParams& params);

struct M3Roots {
  std::optional<double> t1;
  std::optional<double> t2;
  bool ordering_ok = false;
  bool signs_ok = false;
};

/// Same root kernel as critical_points, with nonautonomous fp in the data.
M3Roots lemma_m3_roots(const FunctionData& d, const ProblemParams& params);

enum class Filtration { M1, M2, Outside };

const char* to_string(Filtration f);

struct FiltrationReport {
  double c = 0.0;
  double D1 = 0.0;
  double D2 = 0.0;
  double norm = 0.0;
  double energy = 0.0;
  Filtration membership = Filtration::Outside;
  bool lower_sandwich = false;  ///< sqrt(D) X < D1
  bool upper_sandwich = false;  ///< sqrt(2) X < D2
  bool gap_bound = false;       ///< D1 < (2 S_p^p/(f_max(4-p)))^{1/(p-2)}
};

/// Splits the low-energy Nehari set into a small-norm and a large-norm part.
FiltrationReport filtration_split(const FunctionData& d, const ProblemParams& params,
                                  double sp_pow);

/// CSV rows t,h,h_prime,h_second on the given t values.
void write_fiber_sweep_csv(std::ostream& os, const FunctionData& d,
                           const ProblemParams& params, const std::vector<double>& ts);

}  // namespace kirchhoff
