#include "specshare/rng.hpp"

#include <cmath>

#include "specshare/errors.hpp"

namespace specshare {

namespace {

inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

uint64_t Rng::mix(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng::Rng(uint64_t seed, uint64_t key_a, uint64_t key_b) {
  uint64_t s = seed;
  s = mix(s ^ mix(key_a));
  s = mix(s ^ mix(key_b));
  for (auto& w : state_) {
    s += 0x9e3779b97f4a7c15ULL;
    w = mix(s);
  }
}

uint64_t Rng::next_u64() {
  const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform_open() {
  // Offset by half an ulp so both endpoints are excluded; keeps exponential
  // and Box-Muller draws finite and positive.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

int Rng::uniform_int(int n) {
  ensure(n > 0, "uniform_int: n must be positive");
  return static_cast<int>((static_cast<unsigned __int128>(next_u64()) *
                           static_cast<unsigned __int128>(n)) >>
                          64);
}

double Rng::exponential_from_uniform(double u, double rate) {
  ensure(rate > 0.0, "exponential: rate must be positive");
  return -std::log1p(-u) / rate;
}

double Rng::exponential(double rate) { return exponential_from_uniform(uniform_open(), rate); }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform_open();
  const double u2 = uniform01();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * M_PI * u2;
  spare_ = mag * std::sin(ang);
  has_spare_ = true;
  return mag * std::cos(ang);
}

}  // namespace specshare
