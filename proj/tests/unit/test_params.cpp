#include <doctest.h>

#include <cmath>

#include "kirchhoff/params.hpp"

using namespace kirchhoff;

TEST_CASE("exponent ceiling follows min(4, 2*)") {
  CHECK(std::isinf(critical_exponent(1)));
  CHECK(std::isinf(critical_exponent(2)));
  CHECK(critical_exponent(3) == doctest::Approx(6.0));
  CHECK(critical_exponent(6) == doctest::Approx(3.0));
  CHECK(exponent_ceiling(3) == 4.0);
  CHECK(exponent_ceiling(4) == 4.0);
  CHECK(exponent_ceiling(5) == doctest::Approx(10.0 / 3.0));
}

TEST_CASE("exponent domain is open on both ends") {
  CHECK_NOTHROW(check_exponent(3, 3.0));
  CHECK_THROWS_AS(check_exponent(3, 2.0), DomainError);
  CHECK_THROWS_AS(check_exponent(4, 4.0), DomainError);
  CHECK_THROWS_AS(check_exponent(4, 5.0), DomainError);
  CHECK_THROWS_AS(check_exponent(6, 3.0), DomainError);
  CHECK_THROWS_AS(check_exponent(0, 3.0), DomainError);
  CHECK_THROWS_AS(check_exponent(3, std::nan("")), DomainError);
}

TEST_CASE("parameter validation") {
  ProblemParams q = ProblemParams::autonomous(3, 3.0, 0.5, 1.0, 2.0);
  CHECK(q.is_autonomous());
  CHECK_NOTHROW(q.validate());
  CHECK(q.with_a(0.25).a == 0.25);

  SUBCASE("negative coupling") {
    q.a = -1e-3;
    CHECK_THROWS_AS(q.validate(), DomainError);
  }
  SUBCASE("zero diffusion") {
    q.b = 0.0;
    CHECK_THROWS_AS(q.validate(), DomainError);
  }
  SUBCASE("f bounds out of order") {
    q.f_min = 3.0;
    CHECK_THROWS_AS(q.validate(), DomainError);
  }
  SUBCASE("nonautonomous bounds") {
    q.f_max = 2.5;
    CHECK_NOTHROW(q.validate());
    CHECK_FALSE(q.is_autonomous());
  }
}
