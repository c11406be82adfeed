#include <doctest.h>

#include <cmath>
#include <random>

#include "kirchhoff/constants.hpp"
#include "kirchhoff/probes.hpp"

using namespace kirchhoff;

namespace {

double rescaled_energy(const GroundState& gs, double a, double b, double k, double t) {
  const int N = gs.N;
  const double p = gs.p;
  const double dir = std::pow(t, 2.0 * k + N - 2.0) * gs.G;
  const double mass = std::pow(t, 2.0 * k + N) * gs.M;
  const double fp = std::pow(t, p * k + N) * gs.f_inf * gs.P;
  return 0.5 * (b * dir + mass) + 0.25 * a * dir * dir - fp / p;
}

}  // namespace

TEST_CASE("scaling exponents bookkeeping") {
  const ScalingExponents e = scaling_exponents(3, 3.0, 0.5);
  CHECK(e.dir == doctest::Approx(2.0));
  CHECK(e.mass == doctest::Approx(4.0));
  CHECK(e.quartic == doctest::Approx(4.0));
  CHECK(e.pterm == doctest::Approx(4.5));
  CHECK(scaling_k_limit(1, 3.0) == doctest::Approx(3.0));
  CHECK(scaling_k_limit(3, 2.5) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("low-dimension scaling family is unbounded below for every coupling") {
  for (auto [N, p] : {std::pair{1, 3.0}, {1, 2.5}, {2, 3.0}, {3, 3.0}, {3, 3.5}}) {
    const ProblemParams base = ProblemParams::autonomous(N, p, 0.0);
    const GroundState gs = find_ground_state(base);
    for (int e = -2; e <= 2; ++e) {
      const double a = std::pow(10.0, e);
      CAPTURE(N);
      CAPTURE(p);
      CAPTURE(a);
      const ProbeReport r = scaling_probe_low_dim(base.with_a(a), gs);
      CHECK(r.verdict == Verdict::UnboundedBelow);
      const double k = r.witness.at("k");
      const double t = r.witness.at("t");
      CHECK(r.witness.at("energy") < kUnboundedLevel);
      CHECK(rescaled_energy(gs, a, 1.0, k, t) ==
            doctest::Approx(r.witness.at("energy")).epsilon(1e-10));
      REQUIRE(r.fitted_exponent.has_value());
      CHECK(std::abs(*r.fitted_exponent / (p * k + N) - 1.0) < 0.05);
      CHECK(r.residuals.at("exponent").pass);
      CHECK(r.signs.at("pterm>quartic"));
    }
  }
}

TEST_CASE("scaling family rejects k outside its interval and N > 3") {
  const ProblemParams q = ProblemParams::autonomous(3, 3.0, 1.0);
  const GroundState gs = find_ground_state(q.with_a(0.0));
  CHECK_THROWS_AS(scaling_probe_low_dim(q, gs, 1.5), PreconditionError);
  CHECK_THROWS_AS(scaling_probe_low_dim(q, gs, 0.0), PreconditionError);
  const ProblemParams q4 = ProblemParams::autonomous(4, 3.0, 1.0);
  CHECK_THROWS_AS(scaling_probe_low_dim(q4, find_ground_state(q4.with_a(0.0))),
                  PreconditionError);
}

TEST_CASE("N = 4 small coupling family diverges with exponent 4") {
  const ProblemParams q = ProblemParams::autonomous(4, 3.0, 0.0);
  const GroundState gs = find_ground_state(q);
  const double under = *compute_thresholds(q, gs).a_star_under;
  const ProbeReport r = n4_small_a_probe(q.with_a(0.5 * under), gs);
  CHECK(r.verdict == Verdict::UnboundedBelow);
  CHECK(r.signs.at("I(s0 u)<0"));
  CHECK(r.witness.at("energy") < kUnboundedLevel);
  REQUIRE(r.fitted_exponent.has_value());
  CHECK(*r.fitted_exponent == doctest::Approx(4.0).epsilon(0.05));

  const ProbeReport above = n4_small_a_probe(q.with_a(1.05 * under), gs);
  CHECK(above.verdict == Verdict::Inconclusive);
  CHECK_FALSE(above.signs.at("I(s0 u)<0"));
}

TEST_CASE("quotient minimum against a dense scan") {
  const ProblemParams q = ProblemParams::autonomous(5, 2.5, 0.3);
  const FunctionData d = FunctionData::from(1.2, 0.7, 3.0, 1.0);
  const QuotientMin m = fiber_quotient_min(d, q);
  double best = 1e300;
  for (int i = 0; i <= 40000; ++i) {
    const double t = std::pow(10.0, -4.0 + 8.0 * i / 40000.0);
    best = std::min(best, fiber_value(t, d, q) / (t * t));
  }
  CHECK(m.value == doctest::Approx(best).epsilon(1e-6));
  CHECK(dilation_scales().size() == 21);
  CHECK(dilation_scales().front() == doctest::Approx(0.01));
  CHECK(dilation_scales().back() == doctest::Approx(100.0));
}

TEST_CASE("boundedness regimes for N >= 4") {
  for (auto [N, p] : {std::pair{4, 3.0}, {5, 2.5}, {6, 2.5}}) {
    CAPTURE(N);
    const ProblemParams q = ProblemParams::autonomous(N, p, 0.0);
    const GroundState gs = find_ground_state(q);
    const ThresholdSet th = compute_thresholds(q, gs);
    const ProbeReport hi = boundedness_probe(q.with_a(1.2 * *th.a_star_upper), gs);
    CHECK(hi.verdict == Verdict::BoundedPositive);
    CHECK_FALSE(hi.falsified);
    CHECK(hi.witness.at("min J(tu)/(t^2 |u|^2)") > 0.0);
    if (N >= 5) {
      const ProbeReport lo = boundedness_probe(q.with_a(0.5 * *th.a_star_lower), gs);
      CHECK(lo.verdict == Verdict::BoundedNegInf);
      CHECK(lo.witness.at("energy") < 0.0);
      CHECK(lo.witness.at("energy") >= lo.witness.at("energy_floor"));
    }
  }
}

TEST_CASE("Pohozaev residuals of every branch solution") {
  for (auto [N, p] : {std::pair{1, 3.0}, {2, 2.5}, {3, 3.0}, {4, 3.0}, {5, 2.5}, {6, 2.5}}) {
    CAPTURE(N);
    const ProblemParams q = ProblemParams::autonomous(N, p, 0.0);
    const GroundState gs = find_ground_state(q);
    const double a = N >= 5 ? 0.5 * a_crit_high_dim(N, 1.0, gs.G) : 0.3 / gs.G;
    for (const BranchSolution& s : solve_and_materialize(gs, q.with_a(a))) {
      const ProbeReport r = pohozaev_check(s, q.with_a(a));
      CHECK(r.residuals.at("general").value < 1e-5);
      if (N <= 4) CHECK(r.residuals.at("display").value < 1e-5);
      CHECK(r.verdict == Verdict::Confirmed);
    }
  }
}

TEST_CASE("display forms are fixed multiples of the general identity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int N = 1; N <= 4; ++N) {
    for (int i = 0; i < 20; ++i) {
      const double p = 2.0 + 0.9 * (exponent_ceiling(N) - 2.0) * u(rng) / 3.0;
      const FunctionData d = FunctionData::from(u(rng), u(rng), u(rng), 1.0);
      CHECK(pohozaev_display_gap(d, N, p, u(rng), 1.0, u(rng) - 1.5) < 1e-12);
    }
  }
  CHECK(pohozaev_display_factor(2, 3.0) == doctest::Approx(1.5));
  CHECK(pohozaev_display_factor(3, 3.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(pohozaev_display_factor(5, 2.5), DomainError);
}

TEST_CASE("sign criteria under the A0 conditions") {
  const ProblemParams q3 = ProblemParams::autonomous(3, 3.0, 0.0, 1.0, 25.0);
  const ProbeReport r3 = t5_sign_checks(q3, find_ground_state(q3));
  CHECK(r3.signs.at("A0<=inf_condition"));
  CHECK(r3.witness.at("asserted") == 10);
  CHECK(r3.witness.at("violations") == 0);
  CHECK(r3.verdict == Verdict::Confirmed);

  const ProblemParams q4 = ProblemParams::autonomous(4, 3.0, 0.0);
  const GroundState gs4 = find_ground_state(q4);
  const ProbeReport r4 = t5_sign_checks(q4, gs4);
  CHECK(r4.witness.at("violations") == 0);
  CHECK(r4.witness.at("asserted") >= 5);
  int plus = 0;
  for (const auto& kv : r4.signs)
    if (kv.first.find(":PLUS") != std::string::npos) ++plus;
  CHECK(plus == (r4.witness.at("A0_star") < r4.witness.at("1/G") ? 5 : 0));
  CHECK(r4.verdict == Verdict::Confirmed);
  CHECK_THROWS_AS(t5_sign_checks(ProblemParams::autonomous(5, 2.5, 0.0),
                                 find_ground_state(ProblemParams::autonomous(5, 2.5, 0.0))),
                  PreconditionError);
}

TEST_CASE("nonexistence above the upper threshold with a working control") {
  for (auto [N, p] : {std::pair{4, 3.0}, {5, 2.5}}) {
    CAPTURE(N);
    const ProblemParams q = ProblemParams::autonomous(N, p, 0.0);
    const GroundState gs = find_ground_state(q);
    const double upper = *compute_thresholds(q, gs).nonexist_upper;
    const ProbeReport r = nonexistence_check(q, gs, 1.2 * upper);
    CHECK(r.verdict == Verdict::NoSolution);
    CHECK(r.signs.at("branch_empty"));
    CHECK(r.signs.at("h'>0"));
    CHECK(r.signs.at("control_roots_found"));
    CHECK_FALSE(r.falsified);
    CHECK_THROWS_AS(nonexistence_check(q, gs, 0.9 * upper), PreconditionError);
  }
}

TEST_CASE("both summary tables are reproduced cell for cell") {
  std::vector<ProblemParams> rows;
  for (int N = 1; N <= 6; ++N)
    rows.push_back(ProblemParams::autonomous(N, N <= 4 ? 3.0 : 2.5, 0.0));
  const LandscapeTable t = landscape_table(rows);
  CHECK(t.all_match);
  CHECK(t.sweep_monotone);
  for (const TableCell& c : t.cells) {
    CAPTURE(c.table);
    CAPTURE(c.N);
    CAPTURE(c.column);
    CHECK(c.match);
    CHECK(c.computed == c.expected);
    if (c.expected != "-") CHECK_FALSE(c.witness.empty());
  }
  CHECK(table_row_label(2) == "N=1,2,3");
  CHECK(table_row_label(4) == "N=4");
  CHECK(table_row_label(6) == "N>=5");
}
