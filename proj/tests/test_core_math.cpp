#include "catch2/catch_amalgamated.hpp"

#include <cmath>
#include <stdexcept>

#include "tempo/core_math.hpp"
#include "tempo/rng.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("gexp matches pinned values") {
  REQUIRE_THAT(tempo::gexp(-1e-12, -0.5), WithinAbs(0.6065306597126334, 1e-12));
  REQUIRE_THAT(tempo::gexp(-1.0, -1.0), WithinAbs(0.5, 1e-15));
  REQUIRE_THAT(tempo::gexp(-3.0, -0.21), WithinAbs(0.8497101353101589, 1e-12));
}

TEST_CASE("gexp rejects arguments outside the real domain") {
  REQUIRE_THROWS_AS(tempo::gexp(1.0, -1.0), std::domain_error);
  REQUIRE_THROWS_AS(tempo::gexp(-1.0, 1.5), std::domain_error);
  REQUIRE_THROWS_AS(tempo::gexp(-2.0, 0.5), std::domain_error);
}

TEST_CASE("gexp limit branch stays close to the exponential") {
  for (double a = -3.0; a <= 3.0; a += 0.125) {
    REQUIRE_THAT(tempo::gexp(1e-9, a), WithinAbs(std::exp(a), 1e-6));
    REQUIRE_THAT(tempo::gexp(-1e-9, a), WithinAbs(std::exp(a), 1e-6));
    REQUIRE_THAT(tempo::gexp(1.0000001e-8, a), WithinAbs(std::exp(a), 1e-6));
    REQUIRE_THAT(tempo::gexp(-1.0000001e-8, a), WithinAbs(std::exp(a), 1e-6));
  }
}

TEST_CASE("glog matches pinned values") {
  REQUIRE_THAT(tempo::glog(1.0, 3.0), WithinAbs(2.0, 1e-15));
  REQUIRE_THAT(tempo::glog(0.5, 4.0), WithinAbs(2.0, 1e-12));
  REQUIRE_THAT(tempo::glog(1e-12, std::exp(1.0)), WithinAbs(1.0, 1e-12));
}

TEST_CASE("glog rejects nonpositive arguments") {
  REQUIRE_THROWS_AS(tempo::glog(0.5, 0.0), std::domain_error);
  REQUIRE_THROWS_AS(tempo::glog(0.5, -1.0), std::domain_error);
}

TEST_CASE("glog inverts gexp across the shape grid") {
  for (double h = -5.0; h <= 1.0; h += 0.25) {
    if (h == 0.0) continue;
    for (double a = -2.0; a <= 2.0; a += 0.1) {
      if (!(1.0 + h * a > 0.0)) continue;
      REQUIRE_THAT(tempo::glog(h, tempo::gexp(h, a)), WithinAbs(a, 1e-10));
    }
  }
}

TEST_CASE("meiotic_change matches pinned values and boundaries") {
  REQUIRE_THAT(tempo::meiotic_change(1.0, 0.5), WithinAbs(std::sqrt(2.0) - 1.0, 1e-15));
  REQUIRE(tempo::meiotic_change(0.7, 1.0) == 0.7);
  REQUIRE(tempo::meiotic_change(0.3, 0.0) == 0.0);
  REQUIRE(tempo::meiotic_change(-1.0, 0.5) == -1.0);
  REQUIRE_THROWS_AS(tempo::meiotic_change(-1.5, 0.5), std::domain_error);
  REQUIRE_THROWS_AS(tempo::meiotic_change(1.0, 1.5), std::domain_error);
  REQUIRE_THROWS_AS(tempo::meiotic_change(1.0, -0.1), std::domain_error);
}

TEST_CASE("hyperbolic_change matches pinned values and boundaries") {
  REQUIRE_THAT(tempo::hyperbolic_change(0.1, 0.5), WithinAbs(0.21, 1e-12));
  REQUIRE_THAT(tempo::hyperbolic_change(-0.19, 0.5), WithinAbs(-0.3439, 1e-12));
  REQUIRE(tempo::hyperbolic_change(0.42, 1.0) == 0.42);
  REQUIRE_THROWS_AS(tempo::hyperbolic_change(0.1, 0.0), std::domain_error);
  REQUIRE_THROWS_AS(tempo::hyperbolic_change(0.1, 1.5), std::domain_error);
  REQUIRE_THROWS_AS(tempo::hyperbolic_change(-1.5, 0.5), std::domain_error);
}

TEST_CASE("hyperbolic_change inverts meiotic_change") {
  tempo::SplitMix64 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const double X = -0.99 + rng.next_unit() * 10.99;
    const double s = 0.01 + rng.next_unit() * 0.99;
    const double round_trip = tempo::hyperbolic_change(tempo::meiotic_change(X, s), s);
    REQUIRE_THAT(round_trip, WithinAbs(X, 1e-10));
  }
}

TEST_CASE("meiotic_change sits below the tangent line for gains") {
  tempo::SplitMix64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const double X = rng.next_unit() * 20.0;
    const double s = rng.next_unit();
    REQUIRE(tempo::meiotic_change(X, s) <= s * X + 1e-15);
  }
}

TEST_CASE("change factors compose multiplicatively") {
  const tempo::ChangeFactor a(0.5);
  const tempo::ChangeFactor b(-0.2);
  REQUIRE_THAT((a * b).factor(), WithinAbs(1.5 * 0.8, 1e-15));
  REQUIRE_THAT((a * b).change(), WithinAbs(0.2, 1e-15));

  const tempo::ChangeFactor ruin(-1.0);
  REQUIRE((ruin * a).factor() == 0.0);
  REQUIRE(tempo::ChangeFactor::from_factor(2.0).change() == 1.0);
  REQUIRE(tempo::ChangeFactor(0.25) == tempo::ChangeFactor::from_factor(1.25));
}

TEST_CASE("change factors reject invalid changes") {
  REQUIRE_THROWS_AS(tempo::ChangeFactor(-1.0000001), std::domain_error);
  REQUIRE_THROWS_AS(tempo::ChangeFactor(std::nan("")), std::domain_error);
}
