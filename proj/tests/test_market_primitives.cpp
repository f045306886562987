#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "monoreg/environment.hpp"

using namespace monoreg;

namespace {

DemandCurve tabulated_from_linear(int knots = 257) {
  std::vector<double> q(knots), p(knots);
  for (int i = 0; i < knots; ++i) {
    q[i] = static_cast<double>(i) / (knots - 1);
    p[i] = 1.0 - q[i];
  }
  return DemandCurve::tabulated(q, p);
}

}  // namespace

TEST_CASE("linear price evaluation") {
  const auto d = DemandCurve::linear(1.0, 1.0);
  CHECK(d.price(0.5) == doctest::Approx(0.5));
  CHECK(d.price(0.0) == doctest::Approx(1.0));
  CHECK(d.v_bar() == doctest::Approx(1.0));
  CHECK(d.q_max() == doctest::Approx(1.0));
  CHECK_THROWS_AS(d.price(-0.1), std::domain_error);
  CHECK_THROWS_AS(d.price(1.5), std::domain_error);
}

TEST_CASE("logarithmic price at q = 1 is mu") {
  const auto d = DemandCurve::logarithmic(0.5, 0.25);
  CHECK(d.price(1.0) == doctest::Approx(0.5));
}

TEST_CASE("quantity inverts price") {
  const auto d = DemandCurve::linear(1.0, 1.0);
  CHECK(d.quantity(0.3) == doctest::Approx(0.7));
  CHECK(d.quantity(d.v_bar()) == doctest::Approx(0.0));
  CHECK_THROWS_AS(d.quantity(-0.2), std::domain_error);
  CHECK_THROWS_AS(d.quantity(1.2), std::domain_error);

  const auto ce = DemandCurve::constant_elastic(0.1, 2.0, 1e-6, 3.0);
  CHECK(ce.quantity(ce.v_bar()) == doctest::Approx(0.0));
  const auto lg = DemandCurve::logarithmic(0.5, 0.25);
  CHECK(lg.quantity(lg.v_bar()) == doctest::Approx(0.0));
}

TEST_CASE("tabulated quantity solves the interpolated curve") {
  const auto d = tabulated_from_linear();
  for (double p : {0.123, 0.5, 0.87}) {
    const double q = d.quantity(p);
    CHECK(std::abs(d.price(q) - p) <= 1e-10);
  }
}

TEST_CASE("quantity(price(q)) round-trips on every family") {
  std::mt19937 rng(11);
  const DemandCurve curves[] = {
      DemandCurve::linear(1.0, 1.0),
      DemandCurve::linear(0.8, 0.5),
      DemandCurve::constant_elastic(0.1, 2.0, 1e-6, 3.0),
      DemandCurve::logarithmic(0.5, 0.25),
      tabulated_from_linear(),
  };
  for (const auto& d : curves) {
    std::uniform_real_distribution<double> u(1e-6, 1.0 - 1e-6);
    for (int i = 0; i < 1000; ++i) {
      const double q = u(rng) * d.q_max();
      const double p = d.price(q);
      if (p <= 0.0 || p >= d.v_bar()) continue;  // capped piece of a truncated family
      CHECK(std::abs(d.quantity(p) - q) <= 1e-9 * std::max(1.0, d.q_max()));
    }
  }
}

TEST_CASE("consumer value closed forms and boundaries") {
  const auto d = DemandCurve::linear(1.0, 1.0);
  CHECK(d.consumer_value(1.0) == doctest::Approx(0.5));
  CHECK(d.consumer_value(0.5) == doctest::Approx(0.375));
  CHECK(d.consumer_value(0.0) == doctest::Approx(0.0));
}

TEST_CASE("tabulated consumer value matches the generating closed form") {
  const auto tab = tabulated_from_linear(513);
  const auto lin = DemandCurve::linear(1.0, 1.0);
  for (double q : {0.1, 0.25, 0.5, 0.9, 1.0})
    CHECK(std::abs(tab.consumer_value(q) - lin.consumer_value(q)) <= 1e-8);
}

TEST_CASE("revenue second differences are negative for linear and logarithmic") {
  for (const auto& d : {DemandCurve::linear(1.0, 1.0), DemandCurve::logarithmic(0.5, 0.25)}) {
    const int n = 513;
    const double h = d.q_max() / (n + 1);
    for (int i = 1; i + 1 <= n; ++i) {
      const double q = i * h;
      const double dd = (q + h) * d.price(q + h) - 2.0 * q * d.price(q) + (q - h) * d.price(q - h);
      CHECK(dd < 0.0);
    }
  }
}

TEST_CASE("assumption report: linear + uniform passes everything") {
  const MarketEnvironment env{DemandCurve::linear(1.0, 1.0), CostDistribution::uniform(), 0.5, 0.0};
  const auto rep = check_assumptions(env);
  CHECK(rep.core_pass());
  CHECK(rep.sufficiency_pass());
  CHECK(rep.get("revenue_concavity").pass);
  CHECK(rep.get("inverse_demand_log_concave").pass);
}

TEST_CASE("assumption report: increasing normal density fails monotonicity") {
  const MarketEnvironment env{DemandCurve::linear(1.0, 1.0),
                              CostDistribution::truncated_normal(0.5, 0.01), 0.5, 0.0};
  const auto rep = check_assumptions(env);
  CHECK_FALSE(rep.get("density_nonincreasing").pass);
  CHECK(rep.get("density_nonincreasing").margin > 0.0);
}

TEST_CASE("assumption report: oversized fixed cost fails the revenue check") {
  const MarketEnvironment env{DemandCurve::linear(1.0, 1.0), CostDistribution::uniform(), 0.5, 0.3};
  // max of q(1-q) is 0.25 < 0.3
  const auto rep = check_assumptions(env);
  CHECK_FALSE(rep.get("max_revenue_covers_k").pass);
  CHECK(rep.get("max_revenue_covers_k").margin < 0.0);
}

TEST_CASE("check_assumptions validates the grid size") {
  const MarketEnvironment env{DemandCurve::linear(1.0, 1.0), CostDistribution::uniform(), 0.5, 0.0};
  CHECK_THROWS_AS(check_assumptions(env, 8), std::invalid_argument);
}

TEST_CASE("cost distributions normalize correctly") {
  for (const auto& cd : {CostDistribution::uniform(), CostDistribution::truncated_normal(0.5, 0.01),
                         CostDistribution::truncated_exponential(2.0)}) {
    CHECK(cd.cdf(0.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cd.cdf(1.0) == doctest::Approx(1.0).epsilon(1e-12));
    // density integrates to one
    double mass = 0.0;
    const int n = 4096;
    for (int i = 0; i < n; ++i) mass += cd.pdf((i + 0.5) / n) / n;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-5));
  }
}

TEST_CASE("environment fingerprints distinguish parameter changes") {
  const MarketEnvironment a{DemandCurve::linear(1.0, 1.0), CostDistribution::uniform(), 0.5, 0.0};
  const MarketEnvironment b{DemandCurve::linear(1.0, 1.0), CostDistribution::uniform(), 0.6, 0.0};
  const MarketEnvironment c{DemandCurve::linear(1.0, 2.0), CostDistribution::uniform(), 0.5, 0.0};
  CHECK(a.fingerprint() == MarketEnvironment{a.demand, a.cost, 0.5, 0.0}.fingerprint());
  CHECK(a.fingerprint() != b.fingerprint());
  CHECK(a.fingerprint() != c.fingerprint());
}
