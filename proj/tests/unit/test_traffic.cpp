#include <cmath>
#include <vector>

#include <doctest.h>

#include "specshare/errors.hpp"
#include "specshare/traffic.hpp"

using namespace specshare;

namespace {

TrafficModel equicorrelated(int n, double mean, double std_dev, double rho) {
  TrafficModel m;
  m.mean_rates.assign(n, mean);
  m.rate_std.assign(n, std_dev);
  m.correlation = rho;
  return m;
}

}  // namespace

TEST_CASE("degenerate Gaussian: zero std returns the means exactly") {
  Rng rng(1, 0, 0);
  TrafficModel m = equicorrelated(4, 0.25, 0.0, 0.0);
  const auto rates = sample_rates(m, rng);
  for (double r : rates) CHECK(r == 0.25);
}

TEST_CASE("perfect correlation with equal moments gives identical draws") {
  Rng rng(2, 0, 0);
  TrafficModel m = equicorrelated(5, 1.0, 0.3, 1.0);
  for (int i = 0; i < 50; ++i) {
    const auto rates = sample_rates(m, rng);
    for (double r : rates) CHECK(r == doctest::Approx(rates[0]).epsilon(1e-12));
  }
}

TEST_CASE("sample correlation tracks the target within 0.05") {
  // Means far from zero so the floor clamp never engages.
  TrafficModel m = equicorrelated(3, 10.0, 1.0, 0.9);
  RateSampler sampler(m);
  Rng rng(3, 0, 0);
  const int n = 10000;
  std::vector<std::vector<double>> draws(3, std::vector<double>());
  for (int i = 0; i < n; ++i) {
    const auto r = sampler.sample(rng);
    for (int j = 0; j < 3; ++j) draws[j].push_back(r[j]);
  }
  auto pearson = [&](int a, int b) {
    double ma = 0, mb = 0;
    for (int i = 0; i < n; ++i) {
      ma += draws[a][i];
      mb += draws[b][i];
    }
    ma /= n;
    mb /= n;
    double sab = 0, saa = 0, sbb = 0;
    for (int i = 0; i < n; ++i) {
      sab += (draws[a][i] - ma) * (draws[b][i] - mb);
      saa += (draws[a][i] - ma) * (draws[a][i] - ma);
      sbb += (draws[b][i] - mb) * (draws[b][i] - mb);
    }
    return sab / std::sqrt(saa * sbb);
  };
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      CHECK(std::abs(pearson(a, b) - 0.9) < 0.05);
    }
  }
}

TEST_CASE("non-PSD covariance is a configuration error") {
  // Equicorrelation below -1/(n-1) is not a valid covariance.
  TrafficModel m = equicorrelated(5, 1.0, 1.0, -0.9);
  CHECK_THROWS_AS(RateSampler{m}, ConfigError);
  TrafficModel asym = equicorrelated(2, 1.0, 1.0, 0.0);
  asym.covariance = {1.0, 0.5, -0.5, 1.0};
  CHECK_THROWS_AS(RateSampler{asym}, ConfigError);
}

TEST_CASE("clamping never produces a nonpositive rate") {
  TrafficModel m = equicorrelated(2, 0.0, 5.0, 0.0);
  m.rate_floor = 1e-6;
  RateSampler sampler(m);
  Rng rng(4, 0, 0);
  for (int i = 0; i < 2000; ++i) {
    for (double r : sampler.sample(rng)) CHECK(r >= 1e-6);
  }
}

TEST_CASE("semidefinite Cholesky reproduces the covariance") {
  // Sigma = A * A^T is PSD by construction.
  const int n = 4;
  Rng rng(5, 0, 0);
  std::vector<double> a(n * n);
  for (double& v : a) v = rng.normal();
  std::vector<double> cov(n * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) cov[i * n + j] += a[i * n + k] * a[j * n + k];
    }
  }
  const auto chol = cholesky_psd(cov, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double dot = 0.0;
      for (int k = 0; k < n; ++k) dot += chol[i * n + k] * chol[j * n + k];
      CHECK(dot == doctest::Approx(cov[i * n + j]).epsilon(1e-9));
    }
  }
}

TEST_CASE("next_arrival is strictly increasing") {
  Rng rng(6, 0, 0);
  double t = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double next = next_arrival(3.0, t, rng);
    CHECK(next > t);
    t = next;
  }
}

TEST_CASE("holding times are positive with the right mean") {
  Rng rng(7, 0, 0);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double h = draw_holding(180.0, rng);
    REQUIRE(h > 0.0);
    sum += h;
  }
  const double se = 180.0 / std::sqrt(static_cast<double>(n));
  CHECK(std::abs(sum / n - 180.0) < 3.0 * se);
}
