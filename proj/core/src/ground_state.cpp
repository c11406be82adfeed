#include "kirchhoff/ground_state.hpp"

#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <tuple>

#include <boost/numeric/odeint.hpp>

namespace kirchhoff {

namespace {

namespace odeint = boost::numeric::odeint;
using State = std::array<double, 2>;

struct RadialSystem {
  int N;
  double p;
  double f;
  void operator()(const State& x, State& dxdt, double r) const {
    const double w = x[0];
    const double nonlin = f * std::pow(std::abs(w), p - 2.0) * w;
    dxdt[0] = x[1];
    dxdt[1] = w - nonlin - (N > 1 ? (N - 1) / r * x[1] : 0.0);
  }
};

// Regular-singular expansion at the origin.
State series_start(const RadialSystem& sys, double w0, double r) {
  const double c = w0 - sys.f * std::pow(w0, sys.p - 1.0);
  return {w0 + c * r * r / (2.0 * sys.N), c * r / sys.N};
}

struct Sampled {
  std::vector<double> r, w, dw;
  ShotOutcome outcome = ShotOutcome::Decays;
};

class Integrator {
 public:
  Integrator(const RadialSystem& sys, double w0, const ShootingOptions& opt)
      : sys_(sys),
        stepper_(odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(
            opt.atol, opt.rtol)),
        r_(opt.r_start),
        x_(series_start(sys, w0, opt.r_start)),
        dt_(std::min(1e-3, opt.r_start)) {}

  // Advances by one accepted step, never past r_stop.
  void step(double r_stop) {
    for (int tries = 0; tries < 10000; ++tries) {
      double dt = std::min(dt_, r_stop - r_);
      if (dt < 1e-14 * std::max(1.0, r_)) {
        std::ostringstream os;
        os << "integrator step-size underflow at r=" << r_ << " w=" << x_[0]
           << " w'=" << x_[1];
        throw SolverError(os.str());
      }
      const bool clipped = dt < dt_;
      if (stepper_.try_step(sys_, x_, r_, dt) == odeint::success) {
        if (!clipped) dt_ = dt;
        ++steps_;
        return;
      }
      dt_ = dt;
    }
    throw SolverError("integrator failed to accept a step");
  }

  double r() const { return r_; }
  const State& x() const { return x_; }
  std::size_t steps() const { return steps_; }

 private:
  RadialSystem sys_;
  decltype(odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(0.0, 0.0))
      stepper_;
  double r_;
  State x_;
  double dt_;
  std::size_t steps_ = 0;
};

bool classify(const State& x, ShotOutcome& out) {
  if (x[0] <= 0.0) {
    out = ShotOutcome::CrossesZero;
    return true;
  }
  if (x[1] > 0.0) {
    out = ShotOutcome::TurnsBack;
    return true;
  }
  return false;
}

// Trajectory sampled on r_i = i*dr, stopping at the first event.
Sampled sample(const RadialSystem& sys, double w0, double dr, double r_end,
               const ShootingOptions& opt) {
  Sampled s;
  s.r.push_back(0.0);
  s.w.push_back(w0);
  s.dw.push_back(0.0);
  Integrator integ(sys, w0, opt);
  const std::size_t n = static_cast<std::size_t>(std::floor(r_end / dr + 0.5));
  for (std::size_t i = 1; i <= n; ++i) {
    const double target = i * dr;
    while (integ.r() < target * (1.0 - 1e-15)) {
      integ.step(target);
      ShotOutcome o;
      if (classify(integ.x(), o)) {
        s.outcome = o;
        return s;
      }
    }
    s.r.push_back(target);
    s.w.push_back(integ.x()[0]);
    s.dw.push_back(integ.x()[1]);
  }
  return s;
}

double simpson(const std::vector<double>& y, double h, std::size_t n,
               std::size_t stride) {
  // n intervals of width h*stride over y[0], y[stride], ...; n even.
  double acc = y[0] + y[n * stride];
  for (std::size_t k = 1; k < n; ++k) acc += (k % 2 ? 4.0 : 2.0) * y[k * stride];
  return acc * h * stride / 3.0;
}

double fit_tail_constant(int N, double r, double w) {
  return w * std::pow(r, 0.5 * (N - 1)) * std::exp(r);
}

}  // namespace

const char* to_string(ShotOutcome o) {
  switch (o) {
    case ShotOutcome::CrossesZero: return "CROSSES_ZERO";
    case ShotOutcome::TurnsBack: return "TURNS_BACK";
    case ShotOutcome::Decays: return "DECAYS";
  }
  return "?";
}

ShotResult shoot(const ProblemParams& params, double w0_init,
                 const ShootingOptions& opt) {
  check_exponent(params.N, params.p);
  if (!(w0_init > 0.0)) throw DomainError("w0_init must be positive");
  RadialSystem sys{params.N, params.p, params.f_inf};
  Integrator integ(sys, w0_init, opt);
  ShotResult res;
  while (integ.r() < opt.r_max) {
    integ.step(opt.r_max);
    ShotOutcome o;
    if (classify(integ.x(), o)) {
      res.outcome = o;
      break;
    }
  }
  res.r_event = integ.r();
  res.w = integ.x()[0];
  res.dw = integ.x()[1];
  res.steps = integ.steps();
  return res;
}

double sphere_area(int N) {
  return 2.0 * std::pow(M_PI, 0.5 * N) / std::tgamma(0.5 * N);
}

RadialIntegrals integrals(const RadialProfile& prof, int N, double p) {
  RadialIntegrals out;
  if (prof.r.size() < 5) return out;
  const double h = prof.r[1] - prof.r[0];
  std::size_t n = prof.r.size() - 1;
  n -= n % 4;
  std::vector<double> g(n + 1), m(n + 1), q(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double wt = N == 1 ? 1.0 : std::pow(prof.r[i], N - 1);
    g[i] = wt * prof.dw[i] * prof.dw[i];
    m[i] = wt * prof.w[i] * prof.w[i];
    q[i] = wt * std::pow(std::abs(prof.w[i]), p);
  }
  const double omega = sphere_area(N);
  const double rc = prof.r[n];
  const double C = prof.tail_constant;
  const double m_tail = C * C * std::exp(-2.0 * rc) / 2.0;
  const double p_tail = std::pow(C, p) * std::pow(rc, (N - 1) * (1.0 - 0.5 * p)) *
                        std::exp(-p * rc) / p;
  auto both = [&](const std::vector<double>& y, double tail, double& fine) {
    fine = omega * (simpson(y, h, n, 1) + tail);
    const double coarse = omega * (simpson(y, h, n / 2, 2) + tail);
    return std::abs(fine - coarse) / 15.0;
  };
  const double eg = both(g, m_tail, out.G);
  const double em = both(m, m_tail, out.M);
  const double ep = both(q, p_tail, out.P);
  if (!std::isfinite(out.G) || !std::isfinite(out.M) || !std::isfinite(out.P))
    throw SolverError("nonfinite radial integral");
  auto rel = [](double e, double v) { return v > 0.0 ? e / v : 0.0; };
  out.rel_error = std::max({rel(eg, out.G), rel(em, out.M), rel(ep, out.P)});
  return out;
}

namespace {

void fill_derived(GroundState& gs) {
  gs.h1_sq = gs.G + gs.M;
  gs.S_p_pow = std::pow(gs.h1_sq, 0.5 * gs.p) / gs.P;
  gs.S_p = std::pow(gs.S_p_pow, 1.0 / gs.p);
  gs.energy0 = (gs.p - 2.0) / (2.0 * gs.p) * gs.h1_sq;
}

}  // namespace

double GroundState::direct_energy() const { return 0.5 * h1_sq - fp() / p; }

double GroundState::nehari_residual() const {
  return std::abs(h1_sq - fp()) / h1_sq;
}

double GroundState::sobolev_residual() const {
  return std::abs(h1_sq - std::pow(S_p_pow / f_inf, 2.0 / (p - 2.0))) / h1_sq;
}

double GroundState::pohozaev_residual() const {
  const double rhs = N / p * fp();
  return std::abs(0.5 * (N - 2) * G + 0.5 * N * M - rhs) / rhs;
}

GroundState compute_unit_ground_state(int N, double p,
                                      const GroundStateOptions& opt) {
  check_exponent(N, p);
  const ProblemParams params = ProblemParams::autonomous(N, p, 0.0);
  ShootingOptions sopt;
  sopt.r_max = opt.r_max;
  sopt.rtol = opt.rtol;

  double lo = 1.0 + 1e-3;  // rest level is 1 for f = 1
  if (shoot(params, lo, sopt).outcome != ShotOutcome::TurnsBack)
    throw SolverError("lower shooting bracket does not turn back");
  double hi = 2.0;
  while (shoot(params, hi, sopt).outcome != ShotOutcome::CrossesZero) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e8) throw SolverError("upper shooting bracket not found");
  }
  int it = 0;
  while (hi - lo > opt.tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (++it > opt.max_bisections)
      throw SolverError("shooting bisection did not reach tolerance");
    const ShotOutcome o = shoot(params, mid, sopt).outcome;
    if (o == ShotOutcome::CrossesZero)
      hi = mid;
    else
      lo = mid;
  }

  RadialSystem sys{N, p, 1.0};
  const Sampled a = sample(sys, lo, opt.dr, opt.r_max, sopt);
  const Sampled b = sample(sys, hi, opt.dr, opt.r_max, sopt);

  // Keep nodes where the two bracketing trajectories still agree.
  const std::size_t common = std::min(a.r.size(), b.r.size());
  std::size_t last = 0;
  for (std::size_t i = 0; i < common; ++i) {
    const double mid = 0.5 * (a.w[i] + b.w[i]);
    if (!(mid > 0.0) || std::abs(a.w[i] - b.w[i]) > 1e-4 * mid) break;
    last = i;
  }
  if (last < 200) throw SolverError("ground-state profile too short to integrate");

  GroundState gs;
  gs.N = N;
  gs.p = p;
  gs.f_inf = 1.0;
  RadialProfile& prof = gs.profile;
  for (std::size_t i = 0; i <= last; ++i) {
    prof.r.push_back(a.r[i]);
    prof.w.push_back(0.5 * (a.w[i] + b.w[i]));
    prof.dw.push_back(0.5 * (a.dw[i] + b.dw[i]));
  }
  prof.r_max = prof.r.back();
  prof.integrator_tolerance = opt.rtol;
  prof.tail_constant = fit_tail_constant(N, prof.r_max, prof.w.back());
  const std::size_t back = static_cast<std::size_t>(1.0 / opt.dr + 0.5);
  const std::size_t j = last > back ? last - back : 0;
  const double c_prev = fit_tail_constant(N, prof.r[j], prof.w[j]);
  prof.tail_residual = std::abs(c_prev - prof.tail_constant) / prof.tail_constant;

  const RadialIntegrals in = integrals(prof, N, p);
  gs.w0 = 0.5 * (lo + hi);
  gs.G = in.G;
  gs.M = in.M;
  gs.P = in.P;
  gs.quadrature_error = in.rel_error;
  gs.shooting_tol = opt.tol;
  gs.integrator_tol = opt.rtol;
  fill_derived(gs);
  return gs;
}

GroundState rescale(const GroundState& unit, double f_inf) {
  if (!(f_inf > 0.0)) throw DomainError("f_inf must be positive");
  GroundState gs = unit;
  const double s = std::pow(f_inf / unit.f_inf, -1.0 / (unit.p - 2.0));
  for (double& v : gs.profile.w) v *= s;
  for (double& v : gs.profile.dw) v *= s;
  gs.profile.tail_constant *= s;
  gs.f_inf = f_inf;
  gs.w0 = unit.w0 * s;
  gs.G = unit.G * s * s;
  gs.M = unit.M * s * s;
  gs.P = unit.P * std::pow(s, unit.p);
  fill_derived(gs);
  return gs;
}

GroundState find_ground_state(const ProblemParams& params,
                              const GroundStateOptions& opt) {
  check_exponent(params.N, params.p);
  if (!(params.f_inf > 0.0)) throw DomainError("f_inf must be positive");
  using Key = std::tuple<int, double, double, double, double, double>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const GroundState>> cache;
  const Key key{params.N, params.p, opt.tol, opt.rtol, opt.r_max, opt.dr};
  std::shared_ptr<const GroundState> unit;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) unit = it->second;
  }
  if (!unit) {
    auto fresh = std::make_shared<const GroundState>(
        compute_unit_ground_state(params.N, params.p, opt));
    std::lock_guard<std::mutex> lock(mu);
    unit = cache.emplace(key, fresh).first->second;
  }
  return params.f_inf == 1.0 ? *unit : rescale(*unit, params.f_inf);
}

GroundState closed_form_1d(double p, double f_inf, double dr, double r_max) {
  check_exponent(1, p);
  if (!(f_inf > 0.0)) throw DomainError("f_inf must be positive");
  const double q = 2.0 / (p - 2.0);
  const double c = 0.5 * (p - 2.0);
  const double amp = std::pow(p / (2.0 * f_inf), 1.0 / (p - 2.0));
  GroundState gs;
  gs.N = 1;
  gs.p = p;
  gs.f_inf = f_inf;
  RadialProfile& prof = gs.profile;
  const std::size_t n = static_cast<std::size_t>(std::floor(r_max / dr + 0.5));
  for (std::size_t i = 0; i <= n; ++i) {
    const double r = i * dr;
    const double sech = 1.0 / std::cosh(c * r);
    const double w = amp * std::pow(sech, q);
    prof.r.push_back(r);
    prof.w.push_back(w);
    prof.dw.push_back(-q * c * w * std::tanh(c * r));
  }
  prof.r_max = prof.r.back();
  prof.tail_constant = amp * std::pow(2.0, q);
  const RadialIntegrals in = integrals(prof, 1, p);
  gs.w0 = amp;
  gs.G = in.G;
  gs.M = in.M;
  gs.P = in.P;
  gs.quadrature_error = in.rel_error;
  fill_derived(gs);
  return gs;
}

void write_profile_csv(std::ostream& os, const RadialProfile& profile) {
  const auto old = os.precision(17);
  os << "r,w,w_prime\n";
  for (std::size_t i = 0; i < profile.r.size(); ++i)
    os << profile.r[i] << ',' << profile.w[i] << ',' << profile.dw[i] << '\n';
  os.precision(old);
}

}  // namespace kirchhoff
