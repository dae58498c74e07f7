#include "catch2/catch_amalgamated.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "tempo/discounting.hpp"
#include "tempo/rng.hpp"

using Catch::Matchers::WithinAbs;
using tempo::DiscountParams;
using tempo::DiscountPoint;

TEST_CASE("discount matches pinned values") {
  REQUIRE_THAT(tempo::discount(DiscountParams(-1e-12, 0.005), 100.0),
               WithinAbs(0.6065306597126334, 1e-12));
  REQUIRE_THAT(tempo::discount(DiscountParams(-3.0, 0.0175), 12.0),
               WithinAbs(0.8497101353101589, 1e-12));
  REQUIRE_THAT(tempo::discount(DiscountParams(-3.0, 0.7), 1.0),
               WithinAbs(0.6858241418122343, 1e-12));
  REQUIRE_THAT(tempo::discount(DiscountParams(-5.0, 0.05), 12.0),
               WithinAbs(0.7578582832551990, 1e-12));
  REQUIRE(tempo::discount(DiscountParams(-2.0, 0.4), 0.0) == 1.0);
}

TEST_CASE("discount parameters are validated") {
  REQUIRE_THROWS_AS(DiscountParams(0.5, 0.1), std::domain_error);
  REQUIRE_THROWS_AS(DiscountParams(-1.0, 0.0), std::domain_error);
  REQUIRE_THROWS_AS(DiscountParams(-1.0, -0.1), std::domain_error);
  REQUIRE_NOTHROW(DiscountParams(0.0, 0.1));
  REQUIRE_THROWS_AS(tempo::discount(DiscountParams(-1.0, 0.1), -1.0), std::domain_error);
}

TEST_CASE("discount decreases strictly in the delay") {
  const DiscountParams params(-2.5, 0.3);
  double prev = 1.0;
  for (int n = 1; n <= 60; ++n) {
    const double d = tempo::discount(params, n);
    REQUIRE(d < prev);
    REQUIRE(d > 0.0);
    prev = d;
  }
}

TEST_CASE("arbitrage-derived parameters match the closed forms") {
  const auto unit = tempo::params_from_arbitrage(1.0, 1.0, 1.0, 100.0, 1000.0);
  REQUIRE(unit.h() == -1.0);
  REQUIRE_THAT(unit.rho(), WithinAbs(0.1, 1e-15));

  const auto mixed = tempo::params_from_arbitrage(0.5, 0.75, 6.0, 300.0, 10000.0);
  REQUIRE_THAT(mixed.h(), WithinAbs(-0.25, 1e-15));
  REQUIRE_THAT(mixed.rho(), WithinAbs(0.015, 1e-15));

  const auto long_horizon = tempo::params_from_arbitrage(0.5, 0.75, 1e9, 300.0, 10000.0);
  REQUIRE(long_horizon.h() < 0.0);
  REQUIRE(std::abs(long_horizon.h()) < 1e-8);

  REQUIRE_THROWS_AS(tempo::params_from_arbitrage(0.0, 1.0, 1.0, 100.0, 1000.0),
                    std::domain_error);
  REQUIRE_THROWS_AS(tempo::params_from_arbitrage(1.0, 1.0, 0.5, 100.0, 1000.0),
                    std::domain_error);
  REQUIRE_THROWS_AS(tempo::params_from_arbitrage(1.0, 1.0, 1.0, 100.0, 0.0), std::domain_error);
}

TEST_CASE("annualized rates reproduce the canonical magnitude set") {
  REQUIRE_THAT(tempo::annualized_rate(15.0, 30.0, 0.25), WithinAbs(2.7725887222397812, 1e-12));
  REQUIRE_THAT(tempo::annualized_rate(250.0, 300.0, 1.0 / 12.0),
               WithinAbs(2.1878586815274555, 1e-12));
  REQUIRE_THAT(tempo::annualized_rate(250.0, 300.0, 0.25), WithinAbs(0.7292862271758185, 1e-12));
  REQUIRE_THAT(tempo::annualized_rate(3000.0, 3500.0, 0.25), WithinAbs(0.6166027193090332, 1e-12));

  REQUIRE_THROWS_AS(tempo::annualized_rate(30.0, 15.0, 0.25), std::domain_error);
  REQUIRE_THROWS_AS(tempo::annualized_rate(0.0, 15.0, 0.25), std::domain_error);
  REQUIRE_THROWS_AS(tempo::annualized_rate(15.0, 30.0, 0.0), std::domain_error);
}

TEST_CASE("dividing a delay discounts more than the undivided delay") {
  const DiscountParams params(-1.0, 1.0);
  const auto split = tempo::subadditive_combine(params, 1.0, 1.0);
  REQUIRE_THAT(split.divided, WithinAbs(0.25, 1e-15));
  REQUIRE_THAT(split.undivided, WithinAbs(1.0 / 3.0, 1e-15));

  const auto empty = tempo::subadditive_combine(params, 0.0, 5.0);
  REQUIRE(empty.divided == empty.undivided);

  const auto exponential = tempo::subadditive_combine(DiscountParams(-1e-12, 0.2), 3.0, 4.0);
  REQUIRE_THAT(exponential.divided, WithinAbs(exponential.undivided, 1e-9));
}

TEST_CASE("subadditivity and the product identity hold on random draws") {
  tempo::SplitMix64 rng(61);
  for (int i = 0; i < 10000; ++i) {
    const double h = -5.0 + rng.next_unit() * 4.99;
    const double rho = 1e-6 + rng.next_unit();
    const double a = 1e-6 + rng.next_unit() * 20.0;
    const double b = 1e-6 + rng.next_unit() * 20.0;
    const DiscountParams params(h, rho);
    const auto split = tempo::subadditive_combine(params, a, b);
    REQUIRE(split.divided < split.undivided);

    const double x = rho * a;
    const double y = rho * b;
    const double combined = tempo::gexp(h, -x - y + h * x * y);
    REQUIRE_THAT(split.divided, WithinAbs(combined, 1e-10));
  }
}

TEST_CASE("per-period average rates fall with the horizon") {
  for (const double h : {-0.1, -0.5, -1.0, -3.0}) {
    const DiscountParams params(h, 0.05);
    double prev = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= 120; ++n) {
      const double avg = -std::log(tempo::discount(params, n)) / n;
      REQUIRE(avg < prev);
      prev = avg;
    }
  }
  const DiscountParams nearly_exponential(-1e-12, 0.05);
  double prev = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= 120; ++n) {
    const double avg = -std::log(tempo::discount(nearly_exponential, n)) / n;
    REQUIRE(avg <= prev + 1e-12);
    prev = avg;
  }
}

TEST_CASE("scaling the rate scales the one-period rate sublinearly") {
  const double rho0 = 0.08;
  for (const double h : {-0.2, -1.0, -4.0}) {
    const double base = -std::log(tempo::discount(DiscountParams(h, rho0), 1.0));
    for (double r = 1.0; r <= 50.0; r *= 1.5) {
      const double scaled = -std::log(tempo::discount(DiscountParams(h, r * rho0), 1.0)) / r;
      REQUIRE(base >= scaled - 1e-12);
    }
  }
}

TEST_CASE("fit recovers the generating parameters from exact data") {
  const DiscountParams truth(-3.0, 0.0175);
  std::vector<DiscountPoint> points;
  for (int n = 1; n <= 24; ++n) {
    points.push_back({static_cast<double>(n), tempo::discount(truth, n)});
  }
  const auto fit = tempo::fit_discount(points);
  REQUIRE_THAT(fit.h, WithinAbs(-3.0, 0.05));
  REQUIRE_THAT(fit.rho, WithinAbs(0.0175, 0.0005));
  REQUIRE(fit.residual < 1e-10);
  REQUIRE(fit.converged);
  REQUIRE_NOTHROW(fit.params());
}

TEST_CASE("fit flattens to the exponential on exponential data") {
  std::vector<DiscountPoint> points;
  for (const double n : {5.0, 10.0}) {
    points.push_back({n, std::exp(-0.1 * n)});
  }
  const auto fit = tempo::fit_discount(points);
  REQUIRE(std::abs(fit.h) < 0.01);
  REQUIRE(fit.residual < 1e-12);
}

TEST_CASE("fit validates its input") {
  REQUIRE_THROWS_AS(tempo::fit_discount(std::vector<DiscountPoint>{{1.0, 0.9}}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(
      tempo::fit_discount(std::vector<DiscountPoint>{{1.0, 0.9}, {1.0, 0.8}}),
      std::invalid_argument);
  REQUIRE_THROWS_AS(
      tempo::fit_discount(std::vector<DiscountPoint>{{1.0, 0.9}, {2.0, 1.2}}),
      std::domain_error);
  REQUIRE_THROWS_AS(
      tempo::fit_discount(std::vector<DiscountPoint>{{-1.0, 0.9}, {2.0, 0.8}}),
      std::domain_error);
}

TEST_CASE("unconstrained diagnostic mode can leave the negative half-line") {
  std::vector<DiscountPoint> points;
  for (int n = 1; n <= 10; ++n) {
    const double bracket = 1.0 - 0.5 * 0.05 * n;
    points.push_back({static_cast<double>(n), std::pow(bracket, 2.0)});
  }
  const auto diagnostic = tempo::fit_discount(points, true);
  REQUIRE_THAT(diagnostic.h, WithinAbs(0.5, 0.05));
  REQUIRE(diagnostic.residual < 1e-10);
  REQUIRE_THROWS_AS(diagnostic.params(), std::domain_error);

  const auto constrained = tempo::fit_discount(points);
  REQUIRE(constrained.h <= 0.0);
  REQUIRE(constrained.residual > diagnostic.residual);
}

TEST_CASE("indifference csv parses and rejects malformed input") {
  std::istringstream good("delay_periods,discount_factor\r\n1,0.9\n2,0.85\n\n3,0.8\n");
  const auto points = tempo::read_discount_csv(good);
  REQUIRE(points.size() == 3);
  REQUIRE(points[1].delay == 2.0);
  REQUIRE(points[1].discount == 0.85);

  std::istringstream bad_header("delay,discount\n1,0.9\n");
  REQUIRE_THROWS_AS(tempo::read_discount_csv(bad_header), std::invalid_argument);

  std::istringstream bad_number("delay_periods,discount_factor\n1,zebra\n");
  REQUIRE_THROWS_AS(tempo::read_discount_csv(bad_number), std::invalid_argument);

  std::istringstream extra_field("delay_periods,discount_factor\n1,0.9,7\n");
  REQUIRE_THROWS_AS(tempo::read_discount_csv(extra_field), std::invalid_argument);

  std::istringstream empty("");
  REQUIRE_THROWS_AS(tempo::read_discount_csv(empty), std::invalid_argument);
}
