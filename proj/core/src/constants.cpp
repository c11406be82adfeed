#include "kirchhoff/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/tools/minima.hpp>

namespace kirchhoff {

double d_of_p(double p, int N) {
  check_exponent(N, p);
  if (p <= 3.0) return std::pow((4.0 - p) / 2.0, 1.0 / (p - 2.0));
  return 0.5;
}

double lambda0(const ProblemParams& params, double sp_pow) {
  params.validate();
  if (!(sp_pow > 0.0)) throw DomainError("S_p^p must be positive");
  const double p = params.p;
  const double e = 2.0 / (p - 2.0);
  const double bracket =
      1.0 - d_of_p(p, params.N) * std::pow(params.f_max / params.f_inf, e);
  if (!(bracket > 0.0)) {
    std::ostringstream os;
    os << "condition (D4) violated: need f_max < f_inf / D(p)^{(p-2)/2} = "
       << params.f_inf / std::pow(d_of_p(p, params.N), 0.5 * (p - 2.0))
       << ", got f_max = " << params.f_max;
    throw PreconditionError(os.str());
  }
  return bracket * std::pow(params.f_inf / sp_pow, e);
}

double lambda0_coefficient(double p) {
  return (p - 2.0) / (2.0 * (4.0 - p)) * std::pow((4.0 - p) / p, 2.0 / (p - 2.0));
}

double lambda(const ProblemParams& params, double sp_pow,
              std::optional<double> a_star_lower) {
  params.validate();
  const double p = params.p;
  if (params.N <= 3) {
    return 0.5 * (4.0 - p) *
           std::pow(params.f_inf * (4.0 - p) / (2.0 * p * sp_pow), 2.0 / (p - 2.0));
  }
  const double term = lambda0_coefficient(p) * lambda0(params, sp_pow);
  if (!a_star_lower)
    throw PreconditionError("N >= 4 needs a finite lower bound for the supremum coupling");
  return std::min(term, *a_star_lower);
}

double gn_sharp_constant_pow(const GroundState& gs) {
  if (!(gs.G > 0.0) || !(gs.M > 0.0) || !(gs.P > 0.0))
    throw DomainError("ground-state integrals must be positive");
  const int N = gs.N;
  const double p = gs.p;
  return gs.P / (std::pow(gs.G, N * (p - 2.0) / 4.0) *
                 std::pow(gs.M, (2.0 * p - N * (p - 2.0)) / 4.0));
}

double a_bar_f(const FunctionData& d, double p) {
  if (!(d.dir_sq > 0.0)) throw DomainError("degenerate data: dir_sq = 0");
  if (!(d.fp > 0.0)) throw DomainError("degenerate data: fp = 0");
  return std::exp(2.0 / (p - 2.0) * std::log(d.fp) - 2.0 * std::log(d.dir_sq) -
                  (4.0 - p) / (p - 2.0) * std::log(d.h1b_sq));
}

double a_star_prefactor(double p) {
  return 2.0 * (p - 2.0) / (4.0 - p) * std::pow((4.0 - p) / p, 2.0 / (p - 2.0));
}

double nonexistence_factor(double p) {
  return std::exp((2.0 * std::log(p) - p * std::log(2.0)) / (p - 2.0));
}

double log_a_bar_f_dilation(const GroundState& gs, double f_coef, double s) {
  const int N = gs.N;
  const double p = gs.p;
  const double log_fp = std::log(f_coef) + N * s + std::log(gs.P);
  const double log_dir = (N - 2) * s + std::log(gs.G);
  const double log_h1 = (N - 2) * s + std::log(gs.G + gs.M * std::exp(2.0 * s));
  return 2.0 / (p - 2.0) * log_fp - 2.0 * log_dir - (4.0 - p) / (p - 2.0) * log_h1;
}

AStarBracket a_star_bracket(const ProblemParams& params, const GroundState& gs) {
  params.validate();
  if (params.N < 4) throw DomainError("supremum coupling is defined for N >= 4");
  if (gs.N != params.N || gs.p != params.p || gs.f_inf != params.f_inf)
    throw DomainError("ground state does not match (N, p, f_inf)");
  const int N = params.N;
  const double p = params.p;
  const double e = (4.0 - p) / (p - 2.0);
  const double pref = a_star_prefactor(p);
  const double cp_pow = gn_sharp_constant_pow(gs);

  AStarBracket out;
  const double ratio =
      std::max((N - 4.0) * (p - 2.0), 2.0 * p - N * (p - 2.0)) / (2.0 * (4.0 - p));
  out.upper = pref * std::pow(params.f_max * cp_pow, 2.0 / (p - 2.0)) *
              std::pow(ratio, e);

  // Limit of the dilation family as lambda -> infinity, with coefficient c.
  auto spread_limit = [&](double c) {
    return std::exp(2.0 / (p - 2.0) * std::log(c * gs.P) - 2.0 * std::log(gs.G) -
                    e * std::log(gs.M));
  };
  if (N == 4) {
    // Increasing in lambda; the supremum is the limit.
    out.lower = pref * spread_limit(params.f_inf);
    out.log_lambda_at_max = std::numeric_limits<double>::infinity();
    out.under = pref * spread_limit(params.f_min);
  } else {
    auto neg = [&](double s) { return -log_a_bar_f_dilation(gs, params.f_inf, s); };
    const auto best = boost::math::tools::brent_find_minima(
        neg, -30.0, 30.0, std::numeric_limits<double>::digits / 2);
    out.log_lambda_at_max = best.first;
    out.lower = pref * std::exp(-best.second);
  }
  return out;
}

Interval nonexistence_threshold(const AStarBracket& bracket, double p) {
  const double k = nonexistence_factor(p);
  return {k * bracket.lower, k * bracket.upper};
}

InflectionPair inflection_pair(const FunctionData& data, const ProblemParams& params) {
  check_exponent(params.N, params.p);
  const double p = params.p;
  if (!(data.fp > 0.0)) throw DomainError("degenerate data: fp = 0");
  InflectionPair out;
  out.t_u = std::pow(2.0 * data.h1b_sq / ((4.0 - p) * data.fp), 1.0 / (p - 2.0));
  out.a_u = (p - 2.0) / (4.0 - p) * std::pow((4.0 - p) / 2.0, 2.0 / (p - 2.0)) *
            a_bar_f(data, p);
  return out;
}

T5Constants theorem_t5_constants(const ProblemParams& params, double sp_pow,
                                 double cp_pow) {
  params.validate();
  if (!(sp_pow > 0.0) || !(cp_pow > 0.0))
    throw DomainError("S_p^p and C_p^p must be positive");
  const double p = params.p;
  const double e = 2.0 / (p - 2.0);
  const double ratio = sp_pow / params.f_inf;
  T5Constants c;
  c.A0 = 3.0 * (p - 1.0) * (-p * p + 2.0 * p + 12.0) / (p * p * (p - 2.0)) *
         std::pow(ratio, e);
  c.A0_bar = p * p / 16.0 * std::pow(1.0 / ratio, e);
  c.A0_star = 0.5 * (p - 2.0) * std::pow((4.0 - p) / p, (4.0 - p) / (p - 2.0)) *
              std::pow(params.f_inf * cp_pow, e);
  return c;
}

LowerBoundRadii lower_bound_radii(const ProblemParams& params, double sp_pow,
                                  double cp_pow, std::optional<double> beta) {
  params.validate();
  if (params.N < 5) throw DomainError("lower-bound radii need N >= 5");
  if (!(params.a > 0.0)) throw DomainError("lower-bound radii need a > 0");
  const double p = params.p;
  const double a = params.a;
  const double crit = critical_exponent(params.N);
  const double beta_max = p * (crit - p) / (crit - 2.0);
  LowerBoundRadii r;
  r.beta = beta.value_or(0.5 * beta_max);
  if (!(r.beta > 0.0) || !(r.beta < beta_max))
    throw DomainError("beta outside (0, p(2*-p)/(2*-2))");
  r.alpha = crit * (p - 2.0) / (p * (crit - 2.0));
  const double one_m_alpha = 1.0 - r.alpha;
  r.r_hat = std::pow(p * sp_pow / (2.0 * params.f_max), 1.0 / (p - 2.0));
  r.young_constant =
      crit / (r.alpha * p * p) *
      std::pow(params.f_max * cp_pow * std::pow(r.beta, -0.5 * one_m_alpha * p),
               crit / (r.alpha * p));
  r.R_a = std::pow(4.0 * r.young_constant / a, 1.0 / (4.0 - crit));
  const double mass_weight = 0.5 - r.beta / (one_m_alpha * p * p);
  if (!(mass_weight > 0.0))
    throw PreconditionError("beta leaves no positive mass term");
  const double mass_threshold = r.young_constant * std::pow(r.R_a, crit) / mass_weight;
  r.R_hat_a = std::sqrt(r.R_a * r.R_a + mass_threshold);
  const double x = std::pow(crit * r.young_constant / a, 1.0 / (4.0 - crit));
  r.energy_floor = 0.25 * a * std::pow(x, 4.0) - r.young_constant * std::pow(x, crit);
  return r;
}

double a_crit_high_dim(int N, double b, double G) {
  if (N < 5) throw DomainError("fold threshold exists for N >= 5 only");
  if (!(b > 0.0) || !(G > 0.0)) throw DomainError("need b > 0 and G > 0");
  return std::pow((N - 4.0) / (N - 2.0), 0.5 * (N - 2.0)) * 2.0 /
         ((N - 4.0) * std::pow(b, 0.5 * (N - 4.0)) * G);
}

ThresholdSet compute_thresholds(const ProblemParams& params, const GroundState& gs) {
  params.validate();
  if (gs.N != params.N || gs.p != params.p || gs.f_inf != params.f_inf)
    throw DomainError("ground state does not match (N, p, f_inf)");
  ThresholdSet t;
  t.N = params.N;
  t.p = params.p;
  t.S_p_pow = gs.S_p_pow;
  t.S_p = gs.S_p;
  t.C_p_pow = gn_sharp_constant_pow(gs);
  t.C_p = std::pow(t.C_p_pow, 1.0 / params.p);
  t.d_p = d_of_p(params.p, params.N);
  t.lambda0 = lambda0(params, t.S_p_pow);
  auto& prov = t.provenance;
  for (const char* k : {"d_p", "lambda0", "A0", "A0_bar", "A0_star", "S_p", "C_p"})
    prov[k] = "closed-form";
  prov["lambda"] = "closed-form";
  if (params.N >= 4) {
    const AStarBracket br = a_star_bracket(params, gs);
    const Interval ne = nonexistence_threshold(br, params.p);
    t.a_star_lower = br.lower;
    t.a_star_upper = br.upper;
    t.a_star_under = br.under;
    t.nonexist_lower = ne.lower;
    t.nonexist_upper = ne.upper;
    prov["a_star_lower"] = "dilation-family lower bound";
    prov["a_star_upper"] = "bracket";
    prov["nonexist_lower"] = "dilation-family lower bound";
    prov["nonexist_upper"] = "bracket";
    if (br.under) prov["a_star_under"] = "dilation-family lower bound";
    const double term = lambda0_coefficient(params.p) * t.lambda0;
    if (br.lower < term) prov["lambda"] = "dilation-family lower bound";
  }
  t.lambda = lambda(params, t.S_p_pow, t.a_star_lower);
  const T5Constants c = theorem_t5_constants(params, t.S_p_pow, t.C_p_pow);
  t.A0 = c.A0;
  t.A0_bar = c.A0_bar;
  t.A0_star = c.A0_star;
  if (params.N >= 5) {
    t.a_crit = a_crit_high_dim(params.N, params.b, gs.G);
    prov["a_crit"] = "closed-form";
    if (params.a > 0.0) {
      const LowerBoundRadii r = lower_bound_radii(params, t.S_p_pow, t.C_p_pow);
      t.r_hat = r.r_hat;
      t.R_a = r.R_a;
      t.R_hat_a = r.R_hat_a;
      prov["r_hat"] = prov["R_a"] = prov["R_hat_a"] = "closed-form";
    }
  }
  return t;
}

}  // namespace kirchhoff
