#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kirchhoff/function_data.hpp"
#include "kirchhoff/params.hpp"

namespace kirchhoff {

/// f(x) = f_inf (1 + eps * bump(x / sigma)).
struct CoefficientSpec {
  enum class Kind { Constant, Gaussian, Spline };

  Kind kind = Kind::Constant;
  double f_inf = 1.0;
  double eps = 0.0;
  double sigma = 1.0;

  static CoefficientSpec constant(double f_inf);
  static CoefficientSpec gaussian(double f_inf, double eps, double sigma = 1.0);
  /// Cubic B-spline bump supported on |x| < 2 sigma.
  static CoefficientSpec spline(double f_inf, double eps, double sigma = 1.0);

  double operator()(double x) const;
  double derivative(double x) const;
  double f_min() const;
  double f_max() const;
  /// Problem parameters with f_min, f_max, f_inf taken from this coefficient.
  ProblemParams params(double p, double a, double b = 1.0) const;
  void validate() const;
  const char* name() const;
};

/// Interior nodes x_i = -L + (i+1) h, i = 0..n-1; u vanishes at +-L.
struct Grid {
  double L = 30.0;
  double h = 0.02;
  std::size_t n = 0;

  static Grid make(double L, double h);
  double x(std::size_t i) const { return -L + (static_cast<double>(i) + 1.0) * h; }
  std::vector<double> nodes() const;
};

struct Assembly {
  double energy = 0.0;
  std::vector<double> gradient;
  FunctionData data;
  double virial = 0.0;  ///< int x f'(x) |u|^p
};

/// Discrete energy, its exact gradient, and the scalar integrals.
Assembly assemble(const std::vector<double>& u, const Grid& grid,
                  const ProblemParams& params, const CoefficientSpec& f,
                  bool with_gradient = true);

/// max_i |gradient_i| / h.
double kkt_residual(const std::vector<double>& gradient, const Grid& grid);

enum class Branch { Minus, Plus };

/// Scale t such that t u lies on the discrete Nehari set on the requested branch.
double nehari_project(const std::vector<double>& u, const Grid& grid,
                      const ProblemParams& params, const CoefficientSpec& f,
                      Branch branch);

struct MinimizeOptions {
  double L = 30.0;
  double h = 0.01;
  double tol = 1e-8;
  int max_iter = 50000;
  double armijo = 1e-4;
  int shift_cells = 0;                     ///< shifts the default initial guess
  std::optional<std::vector<double>> init; ///< values on the interior nodes
  bool record_history = true;
};

struct HistoryRow {
  int iter = 0;
  double energy = 0.0;
  double kkt = 0.0;
};

struct DiscreteSolution {
  Grid grid;
  std::vector<double> u;
  FunctionData data;
  double energy = 0.0;
  double virial = 0.0;
  double kkt_residual = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<HistoryRow> history;
  double norm_bound = 0.0;    ///< (2 S_p^p/(f_max(4-p)))^{1/(p-2)}
  double energy_bound = 0.0;  ///< (p-2)/(4p) (S_p^p/f_max)^{2/(p-2)}
  double reference_energy = 0.0;  ///< J at the scaled autonomous solution t1 v
  std::map<std::string, bool> checks;
};

/// Minimizes the energy over the small-norm part of the discrete Nehari set.
DiscreteSolution minimize_m1(const ProblemParams& params, const CoefficientSpec& f,
                             const MinimizeOptions& opt = {});

/// Grid samples of the autonomous small-K branch solution for f = f_inf.
std::vector<double> autonomous_profile(const ProblemParams& params, const Grid& grid,
                                       int shift_cells = 0);

struct ConditionReport {
  double d5_integral = 0.0;     ///< int (f - f_inf) v^p
  bool d5 = false;
  double t4_min = 0.0;          ///< min over the grid of (p-1)(p-2) f + 2 x f'
  bool t4 = false;
};

ConditionReport condition_checkers(const CoefficientSpec& f, const ProblemParams& params,
                                   const Grid& grid, const std::vector<double>& v);

/// int (f - f_inf) v^p over R^N for a radial v(r) = w(r / sqrt(K)) and radial f.
double radial_condition_integral(const std::vector<double>& r,
                                 const std::vector<double>& w, int N, double p,
                                 double K, const CoefficientSpec& f);

void write_solution_csv(std::ostream& os, const DiscreteSolution& s,
                        const CoefficientSpec& f);
void write_history_csv(std::ostream& os, const DiscreteSolution& s);

}  // namespace kirchhoff
