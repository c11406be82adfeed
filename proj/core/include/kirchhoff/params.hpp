#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace kirchhoff {

/// Invalid input: exponent or dimension out of range, nonpositive coefficients.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A stated precondition of a theorem-level routine does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure did not reach its tolerance.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// @brief Problem data shared by every routine.
///
/// The equation is  -(a |grad u|_2^2 + b) Lap u + u = f(x) |u|^{p-2} u  in R^N,
/// with f bounded between f_min and f_max and tending to f_inf at infinity.
struct ProblemParams {
  int N = 3;
  double p = 3.0;
  double a = 0.0;
  double b = 1.0;
  double f_inf = 1.0;
  double f_min = 1.0;
  double f_max = 1.0;

  /// Constant coefficient f == f_inf.
  static ProblemParams autonomous(int N, double p, double a, double b = 1.0,
                                  double f_inf = 1.0);

  /// Throws DomainError on any violated invariant.
  void validate() const;

  bool is_autonomous() const { return f_min == f_inf && f_max == f_inf; }

  ProblemParams with_a(double new_a) const {
    ProblemParams q = *this;
    q.a = new_a;
    return q;
  }
};

/// Critical Sobolev exponent 2N/(N-2); infinity for N <= 2.
double critical_exponent(int N);

/// Upper end of the admissible exponent range, min(4, 2*).
double exponent_ceiling(int N);

/// Throws DomainError unless 2 < p < min(4, 2*).
void check_exponent(int N, double p);

}  // namespace kirchhoff
