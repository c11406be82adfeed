#include "kirchhoff/nonauto1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "kirchhoff/branches.hpp"
#include "kirchhoff/constants.hpp"
#include "kirchhoff/fibering.hpp"
#include "kirchhoff/ground_state.hpp"

namespace kirchhoff {

namespace {

// Cubic B-spline scaled to bump(0) = 1.
double spline_bump(double s) {
  const double a = std::abs(s);
  if (a < 1.0) return 1.5 * (2.0 / 3.0 - a * a + 0.5 * a * a * a);
  if (a < 2.0) return 0.25 * (2.0 - a) * (2.0 - a) * (2.0 - a);
  return 0.0;
}

double spline_bump_derivative(double s) {
  const double a = std::abs(s);
  const double sg = s < 0.0 ? -1.0 : 1.0;
  if (a < 1.0) return sg * 1.5 * (-2.0 * a + 1.5 * a * a);
  if (a < 2.0) return -sg * 0.75 * (2.0 - a) * (2.0 - a);
  return 0.0;
}

double bump(const CoefficientSpec& f, double s) {
  switch (f.kind) {
    case CoefficientSpec::Kind::Constant: return 0.0;
    case CoefficientSpec::Kind::Gaussian: return std::exp(-s * s);
    case CoefficientSpec::Kind::Spline: return spline_bump(s);
  }
  return 0.0;
}

double bump_derivative(const CoefficientSpec& f, double s) {
  switch (f.kind) {
    case CoefficientSpec::Kind::Constant: return 0.0;
    case CoefficientSpec::Kind::Gaussian: return -2.0 * s * std::exp(-s * s);
    case CoefficientSpec::Kind::Spline: return spline_bump_derivative(s);
  }
  return 0.0;
}

// Solves (c T + h I) x = rhs with T = tridiag(-1, 2, -1), in place.
void solve_preconditioner(double c, double h, std::vector<double>& rhs,
                          std::vector<double>& work) {
  const std::size_t n = rhs.size();
  work.resize(n);
  const double diag = 2.0 * c + h;
  const double off = -c;
  double denom = diag;
  rhs[0] /= denom;
  for (std::size_t i = 1; i < n; ++i) {
    work[i] = off / denom;
    denom = diag - off * work[i];
    rhs[i] = (rhs[i] - off * rhs[i - 1]) / denom;
  }
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= work[i + 1] * rhs[i + 1];
}

double sobolev_power(int N, double p) {
  (void)N;
  return closed_form_1d(p, 1.0).S_p_pow;
}

}  // namespace

CoefficientSpec CoefficientSpec::constant(double f_inf) {
  return {Kind::Constant, f_inf, 0.0, 1.0};
}

CoefficientSpec CoefficientSpec::gaussian(double f_inf, double eps, double sigma) {
  return {Kind::Gaussian, f_inf, eps, sigma};
}

CoefficientSpec CoefficientSpec::spline(double f_inf, double eps, double sigma) {
  return {Kind::Spline, f_inf, eps, sigma};
}

double CoefficientSpec::operator()(double x) const {
  return f_inf * (1.0 + eps * bump(*this, x / sigma));
}

double CoefficientSpec::derivative(double x) const {
  return f_inf * eps * bump_derivative(*this, x / sigma) / sigma;
}

double CoefficientSpec::f_min() const {
  return kind == Kind::Constant ? f_inf : f_inf * std::min(1.0, 1.0 + eps);
}

double CoefficientSpec::f_max() const {
  return kind == Kind::Constant ? f_inf : f_inf * std::max(1.0, 1.0 + eps);
}

ProblemParams CoefficientSpec::params(double p, double a, double b) const {
  ProblemParams q = ProblemParams::autonomous(1, p, a, b, f_inf);
  q.f_min = f_min();
  q.f_max = f_max();
  return q;
}

void CoefficientSpec::validate() const {
  if (!(f_inf > 0.0)) throw DomainError("f_inf must be positive");
  if (!(sigma > 0.0)) throw DomainError("bump width must be positive");
  if (!(f_min() > 0.0)) throw DomainError("coefficient must stay positive");
}

const char* CoefficientSpec::name() const {
  switch (kind) {
    case Kind::Constant: return "constant";
    case Kind::Gaussian: return "gaussian";
    case Kind::Spline: return "spline";
  }
  return "?";
}

Grid Grid::make(double L, double h) {
  if (!(L > 0.0) || !(h > 0.0) || h >= L) throw DomainError("invalid grid");
  Grid g;
  g.L = L;
  g.h = h;
  const double cells = 2.0 * L / h;
  g.n = static_cast<std::size_t>(std::llround(cells)) - 1;
  g.h = 2.0 * L / static_cast<double>(g.n + 1);
  return g;
}

std::vector<double> Grid::nodes() const {
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = x(i);
  return xs;
}

Assembly assemble(const std::vector<double>& u, const Grid& grid,
                  const ProblemParams& params, const CoefficientSpec& f,
                  bool with_gradient) {
  const std::size_t n = grid.n;
  if (u.size() != n) throw DomainError("grid function has wrong length");
  const double h = grid.h;
  const double p = params.p;
  double dir = 0.0, mass = 0.0, fp = 0.0, vir = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ui = u[i];
    if (!std::isfinite(ui)) throw SolverError("nonfinite grid value");
    const double du = ui - prev;
    dir += du * du;
    prev = ui;
    mass += ui * ui;
    const double x = grid.x(i);
    const double up = std::pow(std::abs(ui), p);
    fp += f(x) * up;
    vir += x * f.derivative(x) * up;
  }
  dir += prev * prev;
  dir /= h;
  mass *= h;
  fp *= h;
  vir *= h;
  Assembly out;
  out.data = FunctionData::from(dir, mass, fp, params.b);
  out.virial = vir;
  out.energy = 0.5 * out.data.h1b_sq + 0.25 * params.a * dir * dir - fp / p;
  if (with_gradient) {
    out.gradient.resize(n);
    const double coef = (params.b + params.a * dir) / h;
    for (std::size_t i = 0; i < n; ++i) {
      const double left = i > 0 ? u[i - 1] : 0.0;
      const double right = i + 1 < n ? u[i + 1] : 0.0;
      const double ui = u[i];
      out.gradient[i] = coef * (2.0 * ui - left - right) + h * ui -
                        h * f(grid.x(i)) * std::pow(std::abs(ui), p - 2.0) * ui;
    }
  }
  return out;
}

double kkt_residual(const std::vector<double>& gradient, const Grid& grid) {
  double m = 0.0;
  for (double g : gradient) m = std::max(m, std::abs(g));
  return m / grid.h;
}

double nehari_project(const std::vector<double>& u, const Grid& grid,
                      const ProblemParams& params, const CoefficientSpec& f,
                      Branch branch) {
  const Assembly as = assemble(u, grid, params, f, false);
  const FiberingReport rep = critical_points(as.data, params);
  const auto& root = branch == Branch::Minus ? rep.t_minus : rep.t_plus;
  if (!root || rep.tangent)
    throw SolverError("no Nehari root on the requested branch");
  return *root;
}

std::vector<double> autonomous_profile(const ProblemParams& params, const Grid& grid,
                                       int shift_cells) {
  const ProblemParams q = ProblemParams::autonomous(1, params.p, params.a, params.b,
                                                    params.f_inf);
  const GroundState gs = closed_form_1d(q.p, q.f_inf);
  const auto roots = solve_branch(q, gs.G);
  const double K = roots.front().K;
  const double p = params.p;
  const double amp = std::pow(p / (2.0 * q.f_inf), 1.0 / (p - 2.0));
  const double c = 0.5 * (p - 2.0) / std::sqrt(K);
  std::vector<double> v(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double x = grid.x(i) - shift_cells * grid.h;
    v[i] = amp * std::pow(1.0 / std::cosh(c * x), 2.0 / (p - 2.0));
  }
  return v;
}

DiscreteSolution minimize_m1(const ProblemParams& params, const CoefficientSpec& f,
                             const MinimizeOptions& opt) {
  params.validate();
  f.validate();
  if (params.N != 1) throw DomainError("grid minimization is one-dimensional");
  const double p = params.p;
  const double sp_pow = sobolev_power(1, p);
  const double lam = lambda(params, sp_pow);
  lambda0(params, sp_pow);  // (D4)
  if (!(params.a < lam)) throw PreconditionError("coupling must satisfy a < lambda");

  DiscreteSolution sol;
  sol.grid = Grid::make(opt.L, opt.h);
  const Grid& grid = sol.grid;
  const std::size_t n = grid.n;
  const double h = grid.h;

  std::vector<double> u = opt.init ? *opt.init : autonomous_profile(params, grid, opt.shift_cells);
  if (u.size() != n) throw DomainError("initial guess has wrong length");
  for (double& v : u) v = std::max(v, 0.0);
  {
    const double t = nehari_project(u, grid, params, f, Branch::Minus);
    for (double& v : u) v *= t;
  }

  Assembly cur = assemble(u, grid, params, f);
  std::vector<double> d(n), trial(n), work;
  double tau = 1.0;
  int it = 0;
  for (;; ++it) {
    sol.kkt_residual = kkt_residual(cur.gradient, grid);
    if (opt.record_history) sol.history.push_back({it, cur.energy, sol.kkt_residual});
    if (sol.kkt_residual < opt.tol) {
      sol.converged = true;
      break;
    }
    if (it >= opt.max_iter) break;
    for (std::size_t i = 0; i < n; ++i) d[i] = -cur.gradient[i];
    solve_preconditioner((params.b + params.a * cur.data.dir_sq) / h, h, d, work);
    double slope = 0.0;
    for (std::size_t i = 0; i < n; ++i) slope += cur.gradient[i] * d[i];
    if (!(slope < 0.0)) break;

    tau = std::min(2.0 * tau, 4.0);
    bool accepted = false;
    for (int k = 0; k < 60; ++k, tau *= 0.5) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = std::max(u[i] + tau * d[i], 0.0);
      double t = 0.0;
      try {
        t = nehari_project(trial, grid, params, f, Branch::Minus);
      } catch (const SolverError&) {
        continue;
      }
      for (double& v : trial) v *= t;
      Assembly next = assemble(trial, grid, params, f);
      if (next.energy <= cur.energy + opt.armijo * tau * slope ||
          (tau * std::abs(slope) < 1e-15 * std::abs(cur.energy) &&
           next.energy <= cur.energy)) {
        u.swap(trial);
        cur = std::move(next);
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  sol.iterations = it;
  sol.u = std::move(u);
  sol.data = cur.data;
  sol.energy = cur.energy;
  sol.virial = cur.virial;

  sol.norm_bound = std::pow(2.0 * sp_pow / (params.f_max * (4.0 - p)), 1.0 / (p - 2.0));
  sol.energy_bound =
      (p - 2.0) / (4.0 * p) * std::pow(sp_pow / params.f_max, 2.0 / (p - 2.0));
  const double norm = std::sqrt(sol.data.dir_sq + sol.data.mass);
  sol.checks["converged"] = sol.converged;
  sol.checks["norm<bound"] = norm < sol.norm_bound;
  sol.checks["energy>bound"] = sol.energy > sol.energy_bound;
  sol.checks["class_minus"] =
      classify(nehari_hpp(sol.data, params).fp_form,
               std::max(sol.data.h1b_sq, sol.data.fp)) == NehariClass::Minus;

  // Autonomous solution scaled onto the nonautonomous Nehari set.
  const std::vector<double> v = autonomous_profile(params, grid);
  const Assembly av = assemble(v, grid, params, f, false);
  const M3Roots m3 = lemma_m3_roots(av.data, params);
  if (m3.t1) {
    std::vector<double> tv(v);
    for (double& x : tv) x *= *m3.t1;
    sol.reference_energy = assemble(tv, grid, params, f, false).energy;
    sol.checks["energy<=reference"] = sol.energy <= sol.reference_energy + 1e-12;
  }
  return sol;
}

ConditionReport condition_checkers(const CoefficientSpec& f, const ProblemParams& params,
                                   const Grid& grid, const std::vector<double>& v) {
  if (v.size() != grid.n) throw DomainError("grid function has wrong length");
  const double p = params.p;
  ConditionReport r;
  r.t4_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    r.d5_integral += (f(x) - f.f_inf) * std::pow(std::abs(v[i]), p);
    r.t4_min = std::min(r.t4_min, (p - 1.0) * (p - 2.0) * f(x) + 2.0 * x * f.derivative(x));
  }
  r.d5_integral *= grid.h;
  r.d5 = r.d5_integral > 0.0;
  r.t4 = r.t4_min >= 0.0;
  return r;
}

double radial_condition_integral(const std::vector<double>& r,
                                 const std::vector<double>& w, int N, double p,
                                 double K, const CoefficientSpec& f) {
  if (r.size() != w.size() || r.size() < 3) throw DomainError("bad radial profile");
  const double s = std::sqrt(K);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    auto term = [&](std::size_t j) {
      const double rr = s * r[j];
      return (f(rr) - f.f_inf) * std::pow(std::abs(w[j]), p) * std::pow(rr, N - 1);
    };
    acc += 0.5 * (term(i) + term(i + 1)) * s * (r[i + 1] - r[i]);
  }
  return acc * sphere_area(N);
}

void write_solution_csv(std::ostream& os, const DiscreteSolution& s,
                        const CoefficientSpec& f) {
  const auto old = os.precision(17);
  os << "x,u,f\n";
  for (std::size_t i = 0; i < s.grid.n; ++i) {
    const double x = s.grid.x(i);
    os << x << ',' << s.u[i] << ',' << f(x) << '\n';
  }
  os.precision(old);
}

void write_history_csv(std::ostream& os, const DiscreteSolution& s) {
  const auto old = os.precision(17);
  os << "iter,energy,kkt_residual\n";
  for (const HistoryRow& h : s.history)
    os << h.iter << ',' << h.energy << ',' << h.kkt << '\n';
  os.precision(old);
}

}  // namespace kirchhoff
