#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "submax/detail/util.hpp"
#include "submax/thresholds.hpp"

using namespace submax;

TEST_CASE("grid of powers of two in [1, 4]") {
  ThresholdGrid grid = grid_make(1.0, 4, 1.0);
  CHECK(grid.ascending() == std::vector<double>{1.0, 2.0, 4.0});
  CHECK(grid.size() == 3);
  CHECK_FALSE(grid.degenerate());
}

TEST_CASE("degenerate K=1 ranges") {
  ThresholdGrid grid = grid_make(1.0, 1, 0.37);
  CHECK(grid.size() == 1);
  CHECK(grid.ascending() == std::vector<double>{1.0});

  // 0.3466 is not a power of 1.37, so the range rounds empty and the single
  // threshold m is used
  ThresholdGrid fallback = grid_make(0.3466, 1, 0.37);
  CHECK(fallback.size() == 1);
  CHECK(fallback.degenerate());
  CHECK(fallback.ascending() == std::vector<double>{0.3466});
}

TEST_CASE("fine grid matches an independent long-double enumeration") {
  const double m = 0.3466;
  const std::uint64_t k = 50;
  const double eps = 0.001;
  ThresholdGrid grid = grid_make(m, k, eps);

  const long double base = 1.001L;
  auto power = [&](std::int64_t i) { return powl(base, (long double)i); };
  std::int64_t lo = (std::int64_t)ceill(logl((long double)m) / logl(base));
  while (power(lo - 1) >= (long double)m) --lo;
  while (power(lo) < (long double)m) ++lo;
  std::int64_t hi =
      (std::int64_t)floorl(logl((long double)k * m) / logl(base));
  while (power(hi + 1) <= (long double)k * m) ++hi;
  while (power(hi) > (long double)k * m) --hi;

  CHECK(grid.size() == static_cast<std::uint64_t>(hi - lo + 1));
  for (double v : grid.ascending()) {
    CHECK(v >= m);
    CHECK(v <= k * m);
  }
  const double bound =
      std::ceil(std::log((double)k) / std::log1p(eps)) + 1.0;
  CHECK(static_cast<double>(grid.size()) <= bound);
}

TEST_CASE("descending cursor yields max-first and then exhausts") {
  ThresholdGrid grid = grid_make(1.0, 4, 1.0);
  auto cursor = grid.descending();
  CHECK(cursor.next() == doctest::Approx(4.0));
  CHECK(cursor.next() == doctest::Approx(2.0));
  CHECK(cursor.next() == doctest::Approx(1.0));
  CHECK_FALSE(cursor.next().has_value());

  ThresholdGrid single = grid_make(1.0, 1, 0.5);
  auto cursor1 = single.descending();
  CHECK(cursor1.next() == doctest::Approx(1.0));
  CHECK_FALSE(cursor1.next().has_value());
}

TEST_CASE("exhausted cursor stays exhausted over a million calls") {
  ThresholdGrid grid = grid_make(1.0, 4, 1.0);
  auto cursor = grid.descending();
  while (cursor.next().has_value()) {
  }
  for (int i = 0; i < 1000000; ++i) {
    REQUIRE_FALSE(cursor.next().has_value());
  }
}

TEST_CASE("random grids stay in range with exact geometric steps") {
  std::mt19937_64 rng(2024);
  auto uniform = [&]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  for (int rep = 0; rep < 1000; ++rep) {
    const double m = 1e-3 + 10.0 * uniform();
    const std::uint64_t k = 1 + detail::uniform_below(rng, 100);
    const double eps = 1e-3 + uniform() * 0.5;
    ThresholdGrid grid = grid_make(m, k, eps);
    const std::vector<double> values = grid.ascending();
    REQUIRE(!values.empty());
    for (std::size_t i = 0; i < values.size(); ++i) {
      CHECK(values[i] >= m * (1.0 - 1e-12));
      CHECK(values[i] <= static_cast<double>(k) * m * (1.0 + 1e-12));
      if (i > 0 && !grid.degenerate()) {
        CHECK(values[i] / values[i - 1] ==
              doctest::Approx(1.0 + eps).epsilon(1e-12));
      }
    }

    if (grid.degenerate()) continue;
    // approximation cover: every x in [m, K*m] has a threshold within
    // (1-eps)x <= v <= x, except in the sliver below the first power where
    // the smallest threshold covers from above by at most (1+eps)
    for (int probe = 0; probe < 20; ++probe) {
      const double x =
          m + (static_cast<double>(k) * m - m) * uniform();
      double cover = -1.0;
      for (double v : values) {
        if (v <= x * (1.0 + 1e-12)) cover = v;
      }
      if (cover > 0.0) {
        CHECK(cover >= (1.0 - eps) * x * (1.0 - 1e-12));
      } else {
        CHECK(values.front() <= x * (1.0 + eps) * (1.0 + 1e-12));
      }
    }
  }
}

TEST_CASE("rule of three reproduces the worked example") {
  // T = 1000 rejections at 95% confidence bound the acceptance probability
  // below 0.003
  CHECK(-std::log(0.05) / 1000.0 <= 0.003);
  CHECK(-std::log(0.05) / 1000.0 == doctest::Approx(3.0 / 1000.0).epsilon(0.01));

  const std::uint64_t t = rule_of_three_T(0.05, 0.003);
  CHECK(-std::log(0.05) / static_cast<double>(t) <= 0.003 * (1 + 1e-12));
  CHECK(t == 999);

  CHECK(rule_of_three_T(std::exp(-1.0), 0.001) == 1000);
  CHECK(rule_of_three_T(0.05, 0.001) == 2996);

  CHECK_THROWS_AS(rule_of_three_T(0.0, 0.5), ConfigError);
  CHECK_THROWS_AS(rule_of_three_T(1.0, 0.5), ConfigError);
  CHECK_THROWS_AS(rule_of_three_T(0.5, 0.0), ConfigError);
  CHECK_THROWS_AS(rule_of_three_T(0.5, 1.0), ConfigError);
}

TEST_CASE("rule of three T is monotone in alpha and tau") {
  std::mt19937_64 rng(7);
  auto uniform = [&]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  for (int rep = 0; rep < 500; ++rep) {
    const double alpha = 0.01 + 0.98 * uniform();
    const double tau = 0.0001 + 0.5 * uniform();
    const double alpha_bigger = alpha + (1.0 - alpha) * 0.5 * uniform();
    const double tau_bigger = tau + (1.0 - tau) * 0.5 * uniform();
    const std::uint64_t t = rule_of_three_T(alpha, tau);
    CHECK(rule_of_three_T(alpha_bigger, tau) <= t);
    CHECK(rule_of_three_T(alpha, tau_bigger) <= t);
  }
}

TEST_CASE("rule of three config keeps the supplied parametrization") {
  RuleOfThreeConfig direct = RuleOfThreeConfig::direct(5000);
  CHECK(direct.resolve() == 5000);
  CHECK_FALSE(direct.alpha.has_value());

  RuleOfThreeConfig derived = RuleOfThreeConfig::from_confidence(0.05, 0.001);
  CHECK(derived.resolve() == 2996);
  CHECK(derived.alpha == 0.05);
  CHECK(derived.tau == 0.001);
}

TEST_CASE("m estimator resets only on strictly larger singletons") {
  const MEstimate first = m_estimator_update(0.0, 0.3466);
  CHECK(first.reset_required);
  CHECK(first.m == doctest::Approx(0.3466));

  const MEstimate second = m_estimator_update(first.m, 0.2);
  CHECK_FALSE(second.reset_required);
  CHECK(second.m == doctest::Approx(0.3466));

  // constant singletons: never a reset after the first
  double m = 0.0;
  int resets = 0;
  for (int i = 0; i < 100; ++i) {
    const MEstimate update = m_estimator_update(m, 0.3466);
    m = update.m;
    resets += update.reset_required ? 1 : 0;
  }
  CHECK(resets == 1);
}
