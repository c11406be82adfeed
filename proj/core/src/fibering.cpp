#include "kirchhoff/fibering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <boost/math/tools/roots.hpp>

#include "kirchhoff/constants.hpp"

namespace kirchhoff {

namespace {

template <class F>
double bisect(F&& f, double lo, double hi) {
  boost::math::tools::eps_tolerance<double> tol(std::numeric_limits<double>::digits - 2);
  std::uintmax_t iters = 400;
  const auto r = boost::math::tools::bisect(f, lo, hi, tol, iters);
  return 0.5 * (r.first + r.second);
}

void check_data(const FunctionData& d) {
  if (!(d.fp > 0.0)) throw DomainError("degenerate data: fp must be positive");
  if (!(d.h1b_sq > 0.0)) throw DomainError("degenerate data: h1b_sq must be positive");
  if (d.dir_sq < 0.0 || d.mass < 0.0) throw DomainError("negative integrals");
}

// m(t) + a dir^2 in s = log t.
struct NehariEquation {
  double h1, fp, p, q;
  double operator()(double s) const {
    return std::exp(-2.0 * s) * h1 - std::exp((p - 4.0) * s) * fp + q;
  }
};

// g(t) + (a/4) dir^2 in s = log t.
struct ZeroEquation {
  double h1, fp, p, q;
  double operator()(double s) const {
    return 0.5 * std::exp(-2.0 * s) * h1 - std::exp((p - 4.0) * s) * fp / p + q;
  }
};

struct Roots {
  std::optional<double> lo, hi;
  bool tangent = false;
};

// Roots of a function of s that is +q at +inf, +inf at -inf, with one minimum at s_m.
template <class F>
Roots convex_roots(const F& f, double s_m, double s_left, double scale) {
  Roots r;
  const double fm = f(s_m);
  if (std::abs(fm) <= 16.0 * std::numeric_limits<double>::epsilon() * scale) {
    r.lo = r.hi = std::exp(s_m);
    r.tangent = true;
    return r;
  }
  if (fm > 0.0) return r;
  double a = s_left;
  while (f(a) <= 0.0) a -= 1.0;
  double b = s_m + 1.0;
  for (int k = 0; f(b) <= 0.0; ++k) {
    b = s_m + std::ldexp(1.0, k + 1);
    if (k > 60) {
      // q = 0: no right root
      r.lo = std::exp(bisect(f, a, s_m));
      return r;
    }
  }
  const double s1 = bisect(f, a, s_m);
  const double s2 = bisect(f, s_m, b);
  if (s2 - s1 < kTangentLogTol) {
    r.lo = r.hi = std::exp(0.5 * (s1 + s2));
    r.tangent = true;
  } else {
    r.lo = std::exp(s1);
    r.hi = std::exp(s2);
  }
  return r;
}

}  // namespace

const char* to_string(NehariClass c) {
  switch (c) {
    case NehariClass::Minus: return "MINUS";
    case NehariClass::Zero: return "ZERO";
    case NehariClass::Plus: return "PLUS";
  }
  return "?";
}

const char* to_string(Filtration f) {
  switch (f) {
    case Filtration::M1: return "M1";
    case Filtration::M2: return "M2";
    case Filtration::Outside: return "OUTSIDE";
  }
  return "?";
}

double fiber_value(double t, const FunctionData& d, const ProblemParams& params) {
  const double p = params.p;
  const double t2 = t * t;
  return 0.5 * t2 * d.h1b_sq + 0.25 * params.a * t2 * t2 * d.dir_sq * d.dir_sq -
         std::pow(t, p) * d.fp / p;
}

FiberDerivatives fiber_derivatives(double t, const FunctionData& d,
                                   const ProblemParams& params) {
  const double p = params.p;
  const double q = params.a * d.dir_sq * d.dir_sq;
  const double tp2 = std::pow(t, p - 2.0);
  return {t * d.h1b_sq + q * t * t * t - tp2 * t * d.fp,
          d.h1b_sq + 3.0 * q * t * t - (p - 1.0) * tp2 * d.fp};
}

double T_f(const FunctionData& d, double p) {
  check_data(d);
  return std::pow(d.h1b_sq / d.fp, 1.0 / (p - 2.0));
}

double nehari_residual(const FunctionData& d, const ProblemParams& params) {
  const double h = fiber_derivatives(1.0, d, params).d1;
  return std::abs(h) / std::max(d.h1b_sq, d.fp);
}

NehariHpp nehari_hpp(const FunctionData& d, const ProblemParams& params) {
  const double p = params.p;
  const double q = params.a * d.dir_sq * d.dir_sq;
  return {d.h1b_sq + 3.0 * q - (p - 1.0) * d.fp,
          -(p - 2.0) * d.h1b_sq + (4.0 - p) * q,
          -2.0 * d.h1b_sq + (4.0 - p) * d.fp};
}

NehariClass classify(double hpp, double scale) {
  if (std::abs(hpp) <= kDegenerateTol * scale) return NehariClass::Zero;
  return hpp < 0.0 ? NehariClass::Minus : NehariClass::Plus;
}

FiberingReport critical_points(const FunctionData& d, const ProblemParams& params) {
  check_data(d);
  check_exponent(params.N, params.p);
  const double p = params.p;
  const double a = params.a;
  const double q = a * d.dir_sq * d.dir_sq;
  FiberingReport rep;
  rep.T_f = T_f(d, p);
  const double c_m = std::pow(2.0 / (4.0 - p), 1.0 / (p - 2.0));
  rep.m_minimizer = c_m * rep.T_f;
  rep.g_minimizer = std::pow(p / (4.0 - p), 1.0 / (p - 2.0)) * rep.T_f;
  const double s_T = std::log(rep.T_f);

  if (a == 0.0) {
    rep.t_minus = rep.T_f;
  } else {
    NehariEquation eq{d.h1b_sq, d.fp, p, q};
    const double s_m = std::log(rep.m_minimizer);
    const Roots r = convex_roots(eq, s_m, s_T, std::exp(-2.0 * s_m) * d.h1b_sq + q);
    rep.t_minus = r.lo;
    rep.t_plus = r.hi;
    rep.tangent = r.tangent;
  }

  {
    ZeroEquation eq{d.h1b_sq, d.fp, p, 0.25 * q};
    const double s_g = std::log(rep.g_minimizer);
    const double s_left = std::log(std::pow(0.5 * p, 1.0 / (p - 2.0)) * rep.T_f);
    if (a == 0.0) {
      rep.t_hat_1 = std::exp(s_left);
    } else {
      const Roots r =
          convex_roots(eq, s_g, s_left, 0.5 * std::exp(-2.0 * s_g) * d.h1b_sq + 0.25 * q);
      rep.t_hat_1 = r.lo;
      rep.t_hat_0 = r.hi;
    }
  }

  if (d.dir_sq > 0.0) {
    rep.a0_u = 2.0 * (p - 2.0) * std::pow(4.0 - p, (4.0 - p) / (p - 2.0)) /
               std::pow(p, 2.0 / (p - 2.0)) * a_bar_f(d, p);
    if (a > 0.0)
      rep.t0_u = std::pow(2.0 * (p - 2.0) * d.fp / (a * p * d.dir_sq * d.dir_sq),
                          1.0 / (4.0 - p));
  }

  const double rhs = p / (4.0 - p) *
                     std::pow(2.0 * a * (4.0 - p) / (p - 2.0), 0.5 * (p - 2.0)) *
                     std::pow(d.h1b_sq, 0.5 * p);
  rep.hypothesis_ok = a > 0.0 && d.fp > rhs && d.dir_sq <= d.h1b_sq;

  const double mid = std::sqrt(d_of_p(p, params.N)) * rep.m_minimizer;
  const bool both = rep.t_minus && rep.t_plus && !rep.tangent;
  rep.ordering["T_f<t_minus"] = rep.t_minus && rep.T_f < *rep.t_minus;
  rep.ordering["t_minus<sqrtD_scale"] = rep.t_minus && *rep.t_minus < mid;
  rep.ordering["sqrtD_scale<m_minimizer"] = mid < rep.m_minimizer;
  rep.ordering["m_minimizer<t_plus"] = both && rep.m_minimizer < *rep.t_plus;
  rep.ordering["J(t_plus)<0"] = both && fiber_value(*rep.t_plus, d, params) < 0.0;
  rep.ordering_ok = true;
  for (const auto& kv : rep.ordering) rep.ordering_ok = rep.ordering_ok && kv.second;

  rep.energies["T_f"] = fiber_value(rep.T_f, d, params);
  if (rep.t_minus) rep.energies["t_minus"] = fiber_value(*rep.t_minus, d, params);
  if (rep.t_plus) rep.energies["t_plus"] = fiber_value(*rep.t_plus, d, params);
  rep.energies["g_minimizer"] = fiber_value(rep.g_minimizer, d, params);
  rep.energies["m_minimizer"] = fiber_value(rep.m_minimizer, d, params);
  if (rep.t0_u) rep.energies["t0_u"] = fiber_value(*rep.t0_u, d, params);
  return rep;
}

M3Roots lemma_m3_roots(const FunctionData& d, const ProblemParams& params) {
  const FiberingReport rep = critical_points(d, params);
  M3Roots out;
  out.t1 = rep.t_minus;
  out.t2 = rep.t_plus;
  if (out.t1 && out.t2 && !rep.tangent) {
    out.ordering_ok =
        rep.T_f < *out.t1 && *out.t1 < rep.m_minimizer && rep.m_minimizer < *out.t2;
    out.signs_ok = fiber_derivatives(*out.t1, d, params).d2 < 0.0 &&
                   fiber_derivatives(*out.t2, d, params).d2 > 0.0;
  }
  return out;
}

FiltrationReport filtration_split(const FunctionData& d, const ProblemParams& params,
                                  double sp_pow) {
  params.validate();
  check_data(d);
  if (nehari_residual(d, params) >= kNehariTol)
    throw PreconditionError("data is not on the Nehari set");
  const double p = params.p;
  const double a = params.a;
  const double bound = lambda0_coefficient(p) * lambda0(params, sp_pow);
  if (!(a < bound))
    throw PreconditionError("coupling too large for the filtration split");
  const double dp = d_of_p(p, params.N);
  const double X = std::pow(2.0 * sp_pow / (params.f_inf * (4.0 - p)), 1.0 / (p - 2.0));
  FiltrationReport r;
  r.c = dp * (p - 2.0) / (2.0 * p) * X * X;
  const double lin = (p - 2.0) / (2.0 * p);
  const double quad = a * (4.0 - p) / (4.0 * p);
  if (quad == 0.0) {
    r.D1 = std::sqrt(r.c / lin);
    r.D2 = std::numeric_limits<double>::infinity();
  } else {
    const double disc = lin * lin - 4.0 * quad * r.c;
    if (!(disc > 0.0))
      throw PreconditionError("quartic has no two positive roots");
    const double sq = std::sqrt(disc);
    // stable small root
    const double y1 = 2.0 * r.c / (lin + sq);
    const double y2 = (lin + sq) / (2.0 * quad);
    r.D1 = std::sqrt(y1);
    r.D2 = std::sqrt(y2);
  }
  r.norm = std::sqrt(d.h1b_sq);
  r.energy = fiber_value(1.0, d, params);
  if (r.energy < r.c) {
    if (r.norm < r.D1)
      r.membership = Filtration::M1;
    else if (r.norm > r.D2)
      r.membership = Filtration::M2;
  }
  const double X_max =
      std::pow(2.0 * sp_pow / (params.f_max * (4.0 - p)), 1.0 / (p - 2.0));
  r.lower_sandwich = std::sqrt(dp) * X < r.D1;
  r.upper_sandwich = std::sqrt(2.0) * X < r.D2;
  r.gap_bound = r.D1 < X_max;
  return r;
}

void write_fiber_sweep_csv(std::ostream& os, const FunctionData& d,
                           const ProblemParams& params, const std::vector<double>& ts) {
  const auto old = os.precision(17);
  os << "t,h,h_prime,h_second\n";
  for (double t : ts) {
    const FiberDerivatives fd = fiber_derivatives(t, d, params);
    os << t << ',' << fiber_value(t, d, params) << ',' << fd.d1 << ',' << fd.d2 << '\n';
  }
  os.precision(old);
}

}  // namespace kirchhoff
