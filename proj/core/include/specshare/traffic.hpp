#pragma once

#include <vector>

#include "specshare/rng.hpp"

namespace specshare {

struct TrafficModel {
  std::vector<double> mean_rates;  // calls/second per provider
  std::vector<double> rate_std;    // per provider; empty -> all zero
  double correlation = 0.0;        // pairwise rho; ignored when covariance given
  std::vector<double> covariance;  // optional full matrix, row-major n*n
  double mean_holding_s = 180.0;
  double epoch_length_s = 600.0;   // <= 0: rates fixed for the whole run
  double rate_floor = 1e-6;        // calls/second, clamp after sampling
};

struct Call {
  long id = 0;
  int provider = 0;
  int cell = 0;
  double arrival_time = 0.0;
  double holding_time = 0.0;
};

// Lower-triangular factor L with L*L^T == cov, accepting semidefinite input
// (zero-variance providers, rho == 1). ConfigError when cov is not PSD.
std::vector<double> cholesky_psd(const std::vector<double>& cov, int n);

// Draws mu + L*z per provider and clamps at rate_floor. The factorization is
// done once at construction so per-epoch draws are cheap and validation
// errors surface before the run starts.
class RateSampler {
 public:
  explicit RateSampler(const TrafficModel& model);
  std::vector<double> sample(Rng& rng) const;
  int n_providers() const { return static_cast<int>(means_.size()); }

 private:
  std::vector<double> means_;
  std::vector<double> chol_;  // row-major lower triangular
  double floor_;
};

std::vector<double> sample_rates(const TrafficModel& model, Rng& rng);

// now + Exp(rate); strictly increasing for rate > 0.
double next_arrival(double rate, double now, Rng& rng);

double draw_holding(double mean_holding_s, Rng& rng);

}  // namespace specshare
