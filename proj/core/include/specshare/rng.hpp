#pragma once

#include <cstdint>

namespace specshare {

// Deterministic, platform-independent xoshiro256++ generator. Streams are
// derived from a master seed plus a two-part stream key, so draws on one
// stream never perturb any other stream no matter how event processing is
// ordered.
class Rng {
 public:
  Rng() : Rng(0, 0, 0) {}
  Rng(uint64_t seed, uint64_t key_a, uint64_t key_b);

  // splitmix64 finalizer, also used to derive per-run seeds.
  static uint64_t mix(uint64_t z);

  uint64_t next_u64();

  double uniform01();     // [0, 1)
  double uniform_open();  // (0, 1)
  int uniform_int(int n); // [0, n)

  // Inverse-CDF exponential draw; mean 1/rate.
  double exponential(double rate);
  static double exponential_from_uniform(double u, double rate);

  // Standard normal via Box-Muller; spare value cached.
  double normal();

 private:
  uint64_t state_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace specshare
