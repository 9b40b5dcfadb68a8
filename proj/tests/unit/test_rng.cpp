#include <cmath>
#include <vector>

#include <doctest.h>

#include "specshare/rng.hpp"

using specshare::Rng;

TEST_CASE("inverse-CDF exponential closed form") {
  // u = 0.5, rate = 1 -> -ln(0.5)
  CHECK(Rng::exponential_from_uniform(0.5, 1.0) == doctest::Approx(0.6931471805599453).epsilon(1e-12));
  CHECK(Rng::exponential_from_uniform(0.5, 2.0) == doctest::Approx(0.5 * 0.6931471805599453));
  CHECK(Rng::exponential_from_uniform(0.0, 1.0) == 0.0);
}

TEST_CASE("exponential sample mean matches 1/rate within 3 standard errors") {
  const double rate = 2.0;
  const int n = 100000;
  Rng rng(123, 0, 0);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += rng.exponential(rate);
  const double mean = sum / n;
  const double se = (1.0 / rate) / std::sqrt(static_cast<double>(n));
  CHECK(std::abs(mean - 1.0 / rate) < 3.0 * se);
}

TEST_CASE("larger rates shrink inter-arrivals") {
  const int n = 20000;
  double mean_slow = 0.0;
  double mean_fast = 0.0;
  Rng slow(9, 0, 0), fast(9, 0, 1);
  for (int i = 0; i < n; ++i) {
    mean_slow += slow.exponential(1.0);
    mean_fast += fast.exponential(10.0);
  }
  CHECK(mean_fast / n < mean_slow / n);
}

TEST_CASE("draws are always positive") {
  Rng rng(77, 3, 4);
  for (int i = 0; i < 10000; ++i) {
    CHECK(rng.exponential(5.0) > 0.0);
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double v = rng.uniform_open();
    CHECK(v > 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("streams are deterministic and independent by key") {
  Rng a(42, 1, 7), b(42, 1, 7), c(42, 1, 8);
  bool all_equal = true;
  bool any_diff = false;
  for (int i = 0; i < 16; ++i) {
    const uint64_t x = a.next_u64();
    all_equal = all_equal && (x == b.next_u64());
    any_diff = any_diff || (x != c.next_u64());
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("normal draws have the right first two moments") {
  Rng rng(5, 0, 0);
  const int n = 100000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    sq += z * z;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(std::abs(mean) < 3.0 / std::sqrt(static_cast<double>(n)));
  CHECK(var == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("uniform_int stays in range and hits all values") {
  Rng rng(2024, 0, 0);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const int v = rng.uniform_int(7);
    REQUIRE(v >= 0);
    REQUIRE(v < 7);
    ++hits[v];
  }
  for (int h : hits) CHECK(h > 0);
}
