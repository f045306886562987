#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "monoreg/interpolation.hpp"
#include "monoreg/numerics.hpp"

using namespace monoreg;

TEST_CASE("find_root solves a transcendental equation") {
  const double r = find_root([](double x) { return std::cos(x) - x; }, 0.0, 1.0, 1e-14);
  CHECK(std::abs(std::cos(r) - r) < 1e-13);
}

TEST_CASE("find_root accepts a root at an endpoint") {
  CHECK(find_root([](double x) { return x - 2.0; }, 2.0, 5.0) == 2.0);
  CHECK(find_root([](double x) { return x - 5.0; }, 2.0, 5.0) == 5.0);
}

TEST_CASE("find_root rejects a non-bracketing interval") {
  CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("golden_max finds the maximum of a concave function") {
  const double x = golden_max([](double t) { return -(t - 0.3) * (t - 0.3); }, 0.0, 1.0, 1e-12);
  CHECK(x == doctest::Approx(0.3).epsilon(1e-9));
}

TEST_CASE("integrate reproduces closed forms") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0, 1e-12) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::exp(x); }, 0.0, 2.0, 1e-12) ==
        doctest::Approx(std::exp(2.0) - 1.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-11) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-8));
}

TEST_CASE("project_nonincreasing is idempotent and order-preserving") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> y(40);
    for (auto& v : y) v = u(rng);
    auto z = y;
    project_nonincreasing(z);
    for (std::size_t i = 1; i < z.size(); ++i) CHECK(z[i] <= z[i - 1] + 1e-15);
    auto z2 = z;
    project_nonincreasing(z2);
    for (std::size_t i = 0; i < z.size(); ++i) CHECK(z2[i] == doctest::Approx(z[i]).epsilon(1e-14));
    // projection preserves the mean (uniform weights)
    double my = 0.0, mz = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) { my += y[i]; mz += z[i]; }
    CHECK(my == doctest::Approx(mz).epsilon(1e-12));
  }
}

TEST_CASE("monotone cubic interpolates and preserves monotonicity") {
  std::vector<double> x, y;
  for (int i = 0; i <= 20; ++i) {
    x.push_back(i / 20.0);
    y.push_back(1.0 / (1.0 + std::exp(-6.0 * (x.back() - 0.5))));
  }
  MonotoneCubic m(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(m(x[i]) == doctest::Approx(y[i]));
  double prev = m(0.0);
  for (int i = 1; i <= 400; ++i) {
    const double v = m(i / 400.0);
    CHECK(v >= prev - 1e-14);
    prev = v;
  }
}

TEST_CASE("monotone cubic inverse round-trips") {
  std::vector<double> x, y;
  for (int i = 0; i <= 15; ++i) {
    x.push_back(i / 15.0);
    y.push_back(x.back() * x.back() + 0.2 * x.back());
  }
  MonotoneCubic m(x, y);
  for (int i = 0; i <= 100; ++i) {
    const double t = i / 100.0;
    const double v = m(t);
    CHECK(m.inverse(v) == doctest::Approx(t).epsilon(1e-10));
  }
}
