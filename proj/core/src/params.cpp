#include "kirchhoff/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kirchhoff {

ProblemParams ProblemParams::autonomous(int N, double p, double a, double b,
                                        double f_inf) {
  ProblemParams q;
  q.N = N;
  q.p = p;
  q.a = a;
  q.b = b;
  q.f_inf = f_inf;
  q.f_min = f_inf;
  q.f_max = f_inf;
  return q;
}

double critical_exponent(int N) {
  if (N <= 2) return std::numeric_limits<double>::infinity();
  return 2.0 * N / (N - 2.0);
}

double exponent_ceiling(int N) { return std::min(4.0, critical_exponent(N)); }

void check_exponent(int N, double p) {
  if (N < 1) throw DomainError("dimension N must be a positive integer");
  if (!std::isfinite(p) || !(p > 2.0) || !(p < exponent_ceiling(N))) {
    std::ostringstream os;
    os << "exponent p=" << p << " outside (2, " << exponent_ceiling(N)
       << ") for N=" << N;
    throw DomainError(os.str());
  }
}

void ProblemParams::validate() const {
  check_exponent(N, p);
  if (!std::isfinite(a) || a < 0.0) throw DomainError("coupling a must be >= 0");
  if (!std::isfinite(b) || !(b > 0.0)) throw DomainError("coefficient b must be > 0");
  if (!std::isfinite(f_inf) || !(f_inf > 0.0))
    throw DomainError("f_inf must be > 0");
  if (!(f_min > 0.0) || !(f_min <= f_inf) || !(f_inf <= f_max) ||
      !std::isfinite(f_max))
    throw DomainError("need 0 < f_min <= f_inf <= f_max");
}

}  // namespace kirchhoff
