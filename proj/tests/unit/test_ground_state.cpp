#include <doctest.h>

#include <array>
#include <chrono>
#include <cmath>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "kirchhoff/ground_state.hpp"

using namespace kirchhoff;
using mp = boost::multiprecision::cpp_bin_float_50;

namespace {

struct Case {
  int N;
  double p;
};

const std::array<Case, 18> kCases{{{1, 2.5}, {1, 3.0}, {1, 3.5}, {2, 2.5}, {2, 3.0},
                                   {2, 3.5}, {3, 2.5}, {3, 3.0}, {3, 3.5}, {4, 2.5},
                                   {4, 3.0}, {4, 3.5}, {5, 2.3}, {5, 2.6}, {5, 3.0},
                                   {6, 2.2}, {6, 2.5}, {6, 2.8}}};

// int_R sech^s(x) dx.
mp sech_integral(const mp& s) {
  using boost::math::tgamma;
  return boost::multiprecision::sqrt(boost::math::constants::pi<mp>()) * tgamma(s / 2) /
         tgamma((s + 1) / 2);
}

struct Exact1d {
  double G, M, P;
};

// Integrals of A sech^alpha(c x) from Gamma functions.
Exact1d exact_1d(double p_d, double f_d) {
  const mp p = p_d, f = f_d;
  const mp alpha = 2 / (p - 2);
  const mp c = (p - 2) / 2;
  const mp A = boost::multiprecision::pow(p / (2 * f), 1 / (p - 2));
  const mp M = A * A * sech_integral(2 * alpha) / c;
  const mp P = boost::multiprecision::pow(A, p) * sech_integral(p * alpha) / c;
  const mp G = A * A * alpha * alpha * c * (sech_integral(2 * alpha) - sech_integral(2 * alpha + 2));
  return {static_cast<double>(G), static_cast<double>(M), static_cast<double>(P)};
}

// Fixed-step RK4 shooting; +1 crosses zero, -1 turns back.
int rk4_classify(double w0, int N, double p) {
  const double h = 1e-3;
  double r = 1e-3;
  const double c = (w0 - std::pow(w0, p - 1.0)) / N;
  double w = w0 + 0.5 * c * r * r;
  double v = c * r;
  auto rhs = [&](double rr, double ww, double vv, double& dw, double& dv) {
    dw = vv;
    dv = -(N - 1) / rr * vv + ww - std::pow(std::abs(ww), p - 2.0) * ww;
  };
  while (r < 25.0) {
    double k1w, k1v, k2w, k2v, k3w, k3v, k4w, k4v;
    rhs(r, w, v, k1w, k1v);
    rhs(r + h / 2, w + h / 2 * k1w, v + h / 2 * k1v, k2w, k2v);
    rhs(r + h / 2, w + h / 2 * k2w, v + h / 2 * k2v, k3w, k3v);
    rhs(r + h, w + h * k3w, v + h * k3v, k4w, k4v);
    w += h / 6 * (k1w + 2 * k2w + 2 * k3w + k4w);
    v += h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
    r += h;
    if (w < 0.0) return 1;
    if (v > 0.0) return -1;
  }
  return 0;
}

double rk4_amplitude(int N, double p, double lo, double hi) {
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (rk4_classify(mid, N, p) > 0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("one-dimensional amplitude and norm match the sech^2 soliton") {
  const auto t0 = std::chrono::steady_clock::now();
  const GroundState gs = compute_unit_ground_state(1, 3.0);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(std::abs(gs.w0 - 1.5) < 1e-8);
  CHECK(std::abs(gs.h1_sq - 7.2) / 7.2 < 1e-5);
  CHECK(std::abs(gs.P - 7.2) / 7.2 < 1e-5);
  CHECK(secs < 1.0);
}

TEST_CASE("closed-form profile integrals") {
  const GroundState gs = closed_form_1d(3.0, 1.0);
  CHECK(gs.w0 == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(gs.P == doctest::Approx(7.2).epsilon(1e-10));
  CHECK(gs.G == doctest::Approx(1.2).epsilon(1e-10));
  CHECK(gs.M == doctest::Approx(6.0).epsilon(1e-10));
}

TEST_CASE("shooting integrals agree with the multiprecision Gamma-function oracle") {
  for (double p : {2.5, 3.0, 3.5}) {
    for (double f : {1.0, 3.0}) {
      CAPTURE(p);
      CAPTURE(f);
      const Exact1d ex = exact_1d(p, f);
      const GroundState gs = find_ground_state(ProblemParams::autonomous(1, p, 0.0, 1.0, f));
      CHECK(std::abs(gs.G - ex.G) / ex.G < 1e-7);
      CHECK(std::abs(gs.M - ex.M) / ex.M < 1e-7);
      CHECK(std::abs(gs.P - ex.P) / ex.P < 1e-7);
    }
  }
}

TEST_CASE("three-dimensional amplitude agrees with a fixed-step RK4 oracle") {
  for (double p : {2.5, 3.0, 3.5}) {
    CAPTURE(p);
    const GroundState gs = find_ground_state(ProblemParams::autonomous(3, p, 0.0));
    const double oracle = rk4_amplitude(3, p, 1.001, 2.0 * gs.w0);
    CHECK(std::abs(gs.w0 - oracle) / oracle < 1e-6);
  }
}

TEST_CASE("ground-state identity suite over dimensions one to six") {
  const auto t0 = std::chrono::steady_clock::now();
  for (const Case& c : kCases) {
    CAPTURE(c.N);
    CAPTURE(c.p);
    const GroundState gs = find_ground_state(ProblemParams::autonomous(c.N, c.p, 0.0));
    CHECK(std::abs(gs.h1_sq - gs.f_inf * gs.P) / gs.h1_sq < 1e-5);
    const double back = std::pow(gs.S_p_pow / gs.f_inf, 2.0 / (c.p - 2.0));
    CHECK(std::abs(gs.h1_sq - back) / gs.h1_sq < 1e-5);
    CHECK(gs.pohozaev_residual() < 1e-6);
    CHECK(gs.energy0 == doctest::Approx((c.p - 2.0) / (2.0 * c.p) * gs.h1_sq));
    CHECK(std::abs(gs.direct_energy() - gs.energy0) / gs.energy0 < 1e-5);
  }
  CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 60.0);
}

TEST_CASE("shot classification") {
  const ProblemParams q = ProblemParams::autonomous(1, 3.0, 0.0);
  CHECK(shoot(q, 2.0).outcome == ShotOutcome::CrossesZero);
  CHECK(shoot(q, 1.2).outcome == ShotOutcome::TurnsBack);
  CHECK(shoot(q, 0.5).outcome == ShotOutcome::TurnsBack);
  CHECK(std::string(to_string(ShotOutcome::CrossesZero)) == "CROSSES_ZERO");
}

TEST_CASE("coefficient rescaling law") {
  for (int N : {1, 3, 5}) {
    const double p = N == 5 ? 2.6 : 3.0;
    const GroundState one = find_ground_state(ProblemParams::autonomous(N, p, 0.0));
    const GroundState four = find_ground_state(ProblemParams::autonomous(N, p, 0.0, 1.0, 4.0));
    const double s = std::pow(4.0, -1.0 / (p - 2.0));
    CHECK(four.w0 == doctest::Approx(one.w0 * s).epsilon(1e-12));
    CHECK(four.h1_sq == doctest::Approx(one.h1_sq * s * s).epsilon(1e-12));
    CHECK(four.S_p_pow == doctest::Approx(one.S_p_pow).epsilon(1e-12));
  }
}

TEST_CASE("repeat computations are bit-identical") {
  const GroundState a = compute_unit_ground_state(3, 3.0);
  const GroundState b = compute_unit_ground_state(3, 3.0);
  CHECK(a.w0 == b.w0);
  CHECK(a.G == b.G);
  CHECK(a.profile.w == b.profile.w);
}

TEST_CASE("profile invariants") {
  const GroundState gs = find_ground_state(ProblemParams::autonomous(2, 3.0, 0.0));
  const RadialProfile& pr = gs.profile;
  REQUIRE(pr.r.size() == pr.w.size());
  CHECK(pr.r.front() == 0.0);
  for (std::size_t i = 1; i < pr.w.size(); ++i) {
    CHECK(pr.w[i] > 0.0);
    CHECK(pr.w[i] < pr.w[i - 1]);
  }
  CHECK(pr.r_max > 10.0);
  std::ostringstream os;
  write_profile_csv(os, pr);
  CHECK(os.str().rfind("r,w,w_prime\n", 0) == 0);
}

TEST_CASE("out-of-domain exponents are rejected") {
  CHECK_THROWS_AS(find_ground_state(ProblemParams::autonomous(4, 5.0, 0.0)), DomainError);
  CHECK_THROWS_AS(find_ground_state(ProblemParams::autonomous(3, 2.0, 0.0)), DomainError);
}
