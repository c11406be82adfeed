#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "kirchhoff/params.hpp"

namespace kirchhoff {

/// Outcome of a single radial shot from w(0) = w0_init, w'(0) = 0.
enum class ShotOutcome {
  CrossesZero,  ///< w reaches 0 at finite r (initial value too large)
  TurnsBack,    ///< w' becomes positive while w > 0 (initial value too small)
  Decays        ///< reaches r_max still positive and decreasing
};

const char* to_string(ShotOutcome o);

struct ShootingOptions {
  double r_max = 40.0;
  double rtol = 1e-10;
  double atol = 1e-14;
  double r_start = 1e-4;  // series start radius
};

struct ShotResult {
  ShotOutcome outcome = ShotOutcome::Decays;
  double r_event = 0.0;
  double w = 0.0;
  double dw = 0.0;
  std::size_t steps = 0;
};

/// Integrates w'' + (N-1)/r w' - w + f_inf |w|^{p-2} w = 0 outward and classifies it.
ShotResult shoot(const ProblemParams& params, double w0_init,
                 const ShootingOptions& opt = {});

/// Sampled radial profile on a uniform grid r_i = i*dr.
struct RadialProfile {
  std::vector<double> r;
  std::vector<double> w;
  std::vector<double> dw;
  double r_max = 0.0;               ///< truncation radius (last node)
  double integrator_tolerance = 0.0;
  double tail_constant = 0.0;       ///< C in w ~ C r^{-(N-1)/2} e^{-r}
  double tail_residual = 0.0;       ///< relative spread of C fitted at r_max and r_max-1
};

struct RadialIntegrals {
  double G = 0.0;  ///< int |grad w|^2
  double M = 0.0;  ///< int w^2
  double P = 0.0;  ///< int |w|^p
  double rel_error = 0.0;
};

/// Surface area of the unit sphere in R^N (2 for N = 1).
double sphere_area(int N);

/// Radial Simpson quadrature plus the asymptotic tail beyond r_max.
RadialIntegrals integrals(const RadialProfile& profile, int N, double p);

struct GroundStateOptions {
  double tol = 1e-12;       ///< bisection width on w(0), absolute
  double rtol = 1e-10;      ///< integrator relative tolerance
  double r_max = 40.0;
  double dr = 5e-3;         ///< sampling step of the stored profile
  int max_bisections = 200;
};

/// Positive radial solution of -Lap w + w = f_inf w^{p-1} and its integrals.
struct GroundState {
  RadialProfile profile;
  int N = 0;
  double p = 0.0;
  double f_inf = 1.0;
  double w0 = 0.0;
  double G = 0.0;
  double M = 0.0;
  double P = 0.0;
  double h1_sq = 0.0;
  double S_p = 0.0;      ///< best constant of H^1 -> L^p
  double S_p_pow = 0.0;  ///< S_p^p
  double energy0 = 0.0;  ///< ((p-2)/(2p)) h1_sq
  double quadrature_error = 0.0;
  double shooting_tol = 0.0;
  double integrator_tol = 0.0;

  double fp() const { return f_inf * P; }
  /// J_0(w) evaluated from the integrals, without using the Nehari identity.
  double direct_energy() const;
  double nehari_residual() const;
  double sobolev_residual() const;
  double pohozaev_residual() const;
};

/// Shooting plus bisection; results for f_inf = 1 are cached per (N, p, options).
GroundState find_ground_state(const ProblemParams& params,
                              const GroundStateOptions& opt = {});

/// Uncached computation for f_inf = 1.
GroundState compute_unit_ground_state(int N, double p,
                                      const GroundStateOptions& opt = {});

/// Multiplies the profile by f_inf^{-1/(p-2)} and updates every integral.
GroundState rescale(const GroundState& unit, double f_inf);

/// Exact N = 1 soliton (p/(2f))^{1/(p-2)} sech^{2/(p-2)}((p-2)x/2).
GroundState closed_form_1d(double p, double f_inf, double dr = 5e-3,
                           double r_max = 40.0);

void write_profile_csv(std::ostream& os, const RadialProfile& profile);

}  // namespace kirchhoff
