#include "kirchhoff/branches.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <boost/math/tools/roots.hpp>

#include "kirchhoff/constants.hpp"

namespace kirchhoff {

namespace {

double power(double K, double e) { return K > 0.0 ? std::exp(e * std::log(K)) : 0.0; }

template <class F>
double bisect(F&& f, double lo, double hi) {
  boost::math::tools::eps_tolerance<double> tol(std::numeric_limits<double>::digits - 2);
  std::uintmax_t iters = 400;
  const auto r = boost::math::tools::bisect(f, lo, hi, tol, iters);
  return 0.5 * (r.first + r.second);
}

std::size_t root_count(const ProblemParams& params, double G) {
  return solve_branch(params, G).size();
}

}  // namespace

double branch_psi(int N, double a, double b, double G, double K) {
  return a * G * power(K, 0.5 * (N - 2)) - K + b;
}

std::vector<BranchRoot> solve_branch(const ProblemParams& params, double G) {
  const int N = params.N;
  const double a = params.a;
  const double b = params.b;
  if (!(a >= 0.0) || !(b > 0.0) || !(G > 0.0))
    throw DomainError("need a >= 0, b > 0, G > 0");
  if (a == 0.0) return {{b, 1}};
  switch (N) {
    case 1: {
      auto phi = [&](double K) { return K - b - a * G / std::sqrt(K); };
      return {{bisect(phi, b, b + a * G / std::sqrt(b)), 1}};
    }
    case 2:
      return {{b + a * G, 1}};
    case 3: {
      const double s = 0.5 * (a * G + std::sqrt(a * a * G * G + 4.0 * b));
      return {{s * s, 1}};
    }
    case 4:
      if (a * G < 1.0) return {{b / (1.0 - a * G), 1}};
      return {};
    default:
      break;
  }
  const double m = 0.5 * (N - 2);
  auto psi = [&](double K) { return branch_psi(N, a, b, G, K); };
  const double K_min = std::exp(-std::log(a * m * G) / (m - 1.0));
  const double psi_min = psi(K_min);
  if (std::abs(psi_min) < 1e-12 * std::max(b, K_min)) return {{K_min, 2}};
  if (psi_min > 0.0) return {};
  double K_up = 2.0 * K_min;
  while (psi(K_up) <= 0.0) K_up *= 2.0;
  return {{bisect(psi, b, K_min), 1}, {bisect(psi, K_min, K_up), 1}};
}

BranchSolution materialize(const BranchRoot& root, const GroundState& gs,
                           const ProblemParams& params) {
  if (gs.N != params.N || gs.p != params.p || gs.f_inf != params.f_inf)
    throw DomainError("ground state does not match (N, p, f_inf)");
  const int N = params.N;
  const double p = params.p;
  const double a = params.a;
  const double K = root.K;
  BranchSolution s;
  s.K = K;
  s.multiplicity = root.multiplicity;
  const double kn = power(K, 0.5 * N);
  s.data = FunctionData::from(power(K, 0.5 * (N - 2)) * gs.G, kn * gs.M,
                              kn * gs.f_inf * gs.P, params.b);
  const FunctionData& d = s.data;
  s.energy = fiber_value(1.0, d, params);
  s.h_pp = -2.0 * d.h1b_sq + (4.0 - p) * d.fp;
  const double scale = std::max(d.h1b_sq, d.fp);
  s.nehari_class = classify(s.h_pp, scale);
  s.norm_h1 = std::sqrt(d.dir_sq + d.mass);
  s.branch_residual = std::abs(branch_psi(N, a, params.b, gs.G, K)) / K;
  s.nehari_residual =
      std::abs(d.h1b_sq + a * d.dir_sq * d.dir_sq - d.fp) / scale;
  return s;
}

std::vector<BranchSolution> solve_and_materialize(const GroundState& gs,
                                                  const ProblemParams& params) {
  std::vector<BranchSolution> out;
  for (const BranchRoot& r : solve_branch(params, gs.G))
    out.push_back(materialize(r, gs, params));
  return out;
}

double locate_count_change(const ProblemParams& params, double G, double a_lo,
                           double a_hi, double rel_tol) {
  const std::size_t n_lo = root_count(params.with_a(a_lo), G);
  const std::size_t n_hi = root_count(params.with_a(a_hi), G);
  if (n_lo == n_hi) throw PreconditionError("root count does not change on the interval");
  for (int it = 0; it < 200 && a_hi - a_lo > rel_tol * a_hi; ++it) {
    const double mid = 0.5 * (a_lo + a_hi);
    if (root_count(params.with_a(mid), G) == n_lo)
      a_lo = mid;
    else
      a_hi = mid;
  }
  return 0.5 * (a_lo + a_hi);
}

BranchDiagram branch_diagram(const ProblemParams& params, const GroundState& gs,
                             const std::vector<double>& a_grid) {
  if (!std::is_sorted(a_grid.begin(), a_grid.end()))
    throw DomainError("a_grid must be increasing");
  BranchDiagram diag;
  for (double a : a_grid) {
    BranchRecord rec;
    rec.a = a;
    rec.solutions = solve_and_materialize(gs, params.with_a(a));
    diag.rows.push_back(std::move(rec));
  }
  if (params.N >= 5) diag.a_crit = a_crit_high_dim(params.N, params.b, gs.G);
  for (std::size_t i = 1; i < diag.rows.size(); ++i) {
    if (!diag.rows[i - 1].solutions.empty() && diag.rows[i].solutions.empty()) {
      const double a = locate_count_change(params, gs.G, diag.rows[i - 1].a,
                                           diag.rows[i].a);
      diag.fold_a = a;
      if (params.N >= 5) {
        const double m = 0.5 * (params.N - 2);
        diag.fold_K = std::exp(-std::log(a * m * gs.G) / (m - 1.0));
      }
      break;
    }
  }
  return diag;
}

void write_branch_csv(std::ostream& os, const BranchDiagram& diagram) {
  const auto old = os.precision(17);
  os << "a,K_1,K_2,class_1,class_2,J_1,J_2,norm_1,norm_2\n";
  for (const BranchRecord& rec : diagram.rows) {
    const auto& s = rec.solutions;
    auto field = [&](std::size_t i, auto get) {
      if (i < s.size()) os << get(s[i]);
    };
    os << rec.a;
    for (std::size_t i = 0; i < 2; ++i) {
      os << ',';
      field(i, [](const BranchSolution& b) { return b.K; });
    }
    for (std::size_t i = 0; i < 2; ++i) {
      os << ',';
      field(i, [](const BranchSolution& b) { return to_string(b.nehari_class); });
    }
    for (std::size_t i = 0; i < 2; ++i) {
      os << ',';
      field(i, [](const BranchSolution& b) { return b.energy; });
    }
    for (std::size_t i = 0; i < 2; ++i) {
      os << ',';
      field(i, [](const BranchSolution& b) { return b.norm_h1; });
    }
    os << '\n';
  }
  os.precision(old);
}

T1Report theorem_t1_checks(const ProblemParams& params, const GroundState& gs) {
  params.validate();
  const ThresholdSet th = compute_thresholds(params.with_a(0.0), gs);
  const double p = params.p;
  T1Report rep;
  rep.lambda = th.lambda;
  rep.norm_scale =
      std::pow(2.0 * th.S_p_pow / (params.f_inf * (4.0 - p)), 1.0 / (p - 2.0));
  rep.energy_floor =
      (p - 2.0) / (2.0 * p) * std::pow(th.S_p_pow / params.f_inf, 2.0 / (p - 2.0));
  rep.solutions = solve_and_materialize(gs, params);
  auto& c = rep.checks;
  c["a<lambda"] = params.a < rep.lambda;
  const auto& sol = rep.solutions;
  if (params.N <= 4) {
    c["one_solution"] = sol.size() == 1;
  } else {
    c["two_solutions"] = sol.size() == 2;
  }
  if (!sol.empty()) {
    const BranchSolution& lo = sol.front();
    c["norm_minus<scale"] = lo.norm_h1 < rep.norm_scale;
    c["energy_minus>floor"] = lo.energy > rep.energy_floor;
    c["class_minus"] = lo.nehari_class == NehariClass::Minus;
    if (params.N >= 5) {
      c["energy_minus>0"] = lo.energy > 0.0;
      if (sol.size() == 2) {
        const BranchSolution& hi = sol.back();
        c["sqrt2_scale<norm_plus"] = std::sqrt(2.0) * rep.norm_scale < hi.norm_h1;
        c["energy_plus<0"] = hi.energy < 0.0;
        c["class_plus"] = hi.nehari_class == NehariClass::Plus;
      }
    }
  }
  rep.all_pass = true;
  for (const auto& kv : c) rep.all_pass = rep.all_pass && kv.second;
  return rep;
}

}  // namespace kirchhoff
