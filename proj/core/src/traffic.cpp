#include "specshare/traffic.hpp"

#include <algorithm>
#include <cmath>

#include "specshare/errors.hpp"

namespace specshare {

std::vector<double> cholesky_psd(const std::vector<double>& cov, int n) {
  require(static_cast<int>(cov.size()) == n * n, "covariance: wrong matrix size");
  double max_diag = 0.0;
  for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, std::abs(cov[i * n + i]));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      require(std::abs(cov[i * n + j] - cov[j * n + i]) <= 1e-9 * std::max(1.0, max_diag),
              "covariance: matrix not symmetric");
    }
  }
  const double tol = 1e-12 * std::max(1.0, max_diag);
  std::vector<double> chol(static_cast<size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    double d = cov[j * n + j];
    for (int k = 0; k < j; ++k) d -= chol[j * n + k] * chol[j * n + k];
    require(d >= -tol, "covariance: matrix not positive semi-definite");
    if (d <= tol) {
      // Semidefinite pivot: column stays zero.
      chol[j * n + j] = 0.0;
      continue;
    }
    chol[j * n + j] = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double s = cov[i * n + j];
      for (int k = 0; k < j; ++k) s -= chol[i * n + k] * chol[j * n + k];
      chol[i * n + j] = s / chol[j * n + j];
    }
  }
  return chol;
}

RateSampler::RateSampler(const TrafficModel& model) {
  const int n = static_cast<int>(model.mean_rates.size());
  require(n >= 1, "traffic: mean_rates must not be empty");
  for (double r : model.mean_rates) require(r >= 0.0, "traffic: negative mean rate");
  require(model.rate_floor > 0.0, "traffic: rate_floor must be > 0");
  means_ = model.mean_rates;
  floor_ = model.rate_floor;

  std::vector<double> cov = model.covariance;
  if (cov.empty()) {
    std::vector<double> std_dev = model.rate_std;
    if (std_dev.empty()) std_dev.assign(n, 0.0);
    require(static_cast<int>(std_dev.size()) == n, "traffic: rate_std size mismatch");
    for (double s : std_dev) require(s >= 0.0, "traffic: negative rate std");
    require(model.correlation >= -1.0 && model.correlation <= 1.0,
            "traffic: correlation outside [-1, 1]");
    cov.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        cov[i * n + j] = (i == j ? 1.0 : model.correlation) * std_dev[i] * std_dev[j];
      }
    }
  }
  chol_ = cholesky_psd(cov, n);
}

std::vector<double> RateSampler::sample(Rng& rng) const {
  const int n = n_providers();
  std::vector<double> z(n);
  for (double& v : z) v = rng.normal();
  std::vector<double> rates(n);
  for (int i = 0; i < n; ++i) {
    double v = means_[i];
    for (int k = 0; k <= i; ++k) v += chol_[i * n + k] * z[k];
    rates[i] = std::max(v, floor_);
  }
  return rates;
}

std::vector<double> sample_rates(const TrafficModel& model, Rng& rng) {
  return RateSampler(model).sample(rng);
}

double next_arrival(double rate, double now, Rng& rng) {
  ensure(rate > 0.0, "next_arrival: rate must be positive");
  return now + rng.exponential(rate);
}

double draw_holding(double mean_holding_s, Rng& rng) {
  ensure(mean_holding_s > 0.0, "draw_holding: mean must be positive");
  return rng.exponential(1.0 / mean_holding_s);
}

}  // namespace specshare
