#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "specshare/errors.hpp"
#include "specshare/rng.hpp"
#include "specshare/sbac.hpp"

using namespace specshare;

namespace {

// Test-side oracle: plain linear scan, ties to the lowest id.
std::optional<int> argmax_scan(const std::vector<ScoredCandidate>& list) {
  std::optional<int> best;
  double best_u = -1e300;
  for (const auto& c : list) {
    if (!best || c.utility > best_u || (c.utility == best_u && c.channel_id < *best)) {
      best = c.channel_id;
      best_u = c.utility;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("availability ratio") {
  CHECK(availability_prob(5, 10) == 0.5);
  CHECK(availability_prob(0, 10) == 0.0);
  CHECK(availability_prob(10, 10) == 1.0);
  CHECK_THROWS_AS(availability_prob(0, 0), ConfigError);
}

TEST_CASE("frequency spread is max minus min, clamped at the floor") {
  const std::vector<double> freqs = {900.0e6, 900.4e6, 900.2e6};
  CHECK(freq_spread(freqs, 200e3) == doctest::Approx(400e3));
  const std::vector<double> one = {900.0e6};
  CHECK(freq_spread(one, 200e3) == 200e3);

  Rng rng(11, 0, 0);
  std::vector<double> list;
  for (int i = 0; i < 12; ++i) list.push_back(900e6 + rng.uniform01() * 5e6);
  const double reference = freq_spread(list, 200e3);
  for (int perm = 0; perm < 20; ++perm) {
    for (size_t i = list.size(); i > 1; --i) {
      std::swap(list[i - 1], list[rng.uniform_int(static_cast<int>(i))]);
    }
    CHECK(freq_spread(list, 200e3) == reference);
  }
}

TEST_CASE("channel cost is minutes * 60 * price") {
  CHECK(channel_cost({3.0, 0.01}) == doctest::Approx(1.8));
  CHECK(channel_cost({1.0, 1.0}) == doctest::Approx(60.0));
  // bilinear in both arguments
  const double base = channel_cost({2.0, 0.05});
  CHECK(channel_cost({4.0, 0.05}) == doctest::Approx(2.0 * base));
  CHECK(channel_cost({2.0, 0.15}) == doctest::Approx(3.0 * base));
}

TEST_CASE("utility terms isolate correctly") {
  SbacWeights w;
  w.spread_unit_hz = 200e3;

  w = {1.0, 0.0, 0.0, 200e3, 200e3};
  CHECK(channel_utility(0.5, 200e3, 1.8, w) == doctest::Approx(5.0));

  w = {0.0, 0.0, 1.0, 200e3, 200e3};
  CHECK(channel_utility(0.5, 200e3, 1.8, w) == doctest::Approx(1.0 / 1.8));

  w = {0.0, 1.0, 0.0, 200e3, 200e3};
  CHECK(channel_utility(0.5, 200e3, 1.8, w) == doctest::Approx(0.0));  // ln(1) = 0
}

TEST_CASE("combined utility matches the hand-computed value") {
  // prob 0.5, normalized spread 2, cost 1.8, all weights 1:
  // 10*0.5 + ln(1/2) + 1/1.8
  SbacWeights w{1.0, 1.0, 1.0, 200e3, 200e3};
  const double expected = 5.0 - std::log(2.0) + 1.0 / 1.8;
  const double got = channel_utility(0.5, 400e3, 1.8, w);
  CHECK(got == doctest::Approx(expected).epsilon(1e-12));
  CHECK(got == doctest::Approx(4.8624).epsilon(1e-4));
}

TEST_CASE("select_best: empty list and tie-break") {
  CHECK(!select_best(std::vector<ScoredCandidate>{}).has_value());
  const std::vector<ScoredCandidate> tie = {{7, 4.8}, {2, 4.8}};
  CHECK(select_best(tie) == 2);
}

TEST_CASE("select_best equals exhaustive argmax on random lists") {
  Rng rng(13, 0, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int size = rng.uniform_int(21);
    std::vector<ScoredCandidate> list;
    for (int i = 0; i < size; ++i) {
      double utility = rng.uniform01() * 10.0;
      if (!list.empty() && rng.uniform01() < 0.2) utility = list.back().utility;  // ties
      list.push_back({rng.uniform_int(100), utility});
    }
    CHECK(select_best(list) == argmax_scan(list));
  }
}

TEST_CASE("select_best is permutation invariant") {
  Rng rng(17, 0, 0);
  std::vector<ScoredCandidate> list;
  for (int i = 0; i < 15; ++i) list.push_back({i, rng.uniform01()});
  list[3].utility = list[9].utility;  // engineered tie
  const auto reference = select_best(list);
  for (int perm = 0; perm < 30; ++perm) {
    for (size_t i = list.size(); i > 1; --i) {
      std::swap(list[i - 1], list[rng.uniform_int(static_cast<int>(i))]);
    }
    CHECK(select_best(list) == reference);
  }
}

TEST_CASE("monotonicity of the utility in each term") {
  SbacWeights w{1.0, 1.0, 1.0, 200e3, 200e3};
  // higher prob never scores lower (beta1 > 0)
  CHECK(channel_utility(0.8, 400e3, 1.8, w) > channel_utility(0.5, 400e3, 1.8, w));
  // higher cost never scores higher (beta3 > 0)
  CHECK(channel_utility(0.5, 400e3, 2.5, w) < channel_utility(0.5, 400e3, 1.8, w));
  // wider spread lowers every score (beta2 > 0)
  CHECK(channel_utility(0.5, 800e3, 1.8, w) < channel_utility(0.5, 400e3, 1.8, w));
}

TEST_CASE("scaling all weights leaves the argmax unchanged") {
  Rng rng(19, 0, 0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ChannelCandidate> cands;
    const int size = 1 + rng.uniform_int(12);
    for (int i = 0; i < size; ++i) {
      cands.push_back({i, 900e6 + rng.uniform_int(50) * 200e3, true,
                       rng.uniform01(), 0.5 + rng.uniform01() * 3.0});
    }
    SbacWeights w{0.5 + rng.uniform01(), 0.5 + rng.uniform01(), 0.5 + rng.uniform01(),
                  200e3, 200e3};
    SbacWeights scaled = w;
    const double factor = 7.5;
    scaled.beta1 *= factor;
    scaled.beta2 *= factor;
    scaled.beta3 *= factor;
    const auto pick = select_best(score_candidates(cands, w, true, size));
    const auto pick_scaled = select_best(score_candidates(cands, scaled, true, size));
    CHECK(pick == pick_scaled);
  }
}

TEST_CASE("literal mode scores every candidate with the shared ratio") {
  std::vector<ChannelCandidate> cands = {
      {3, 900.0e6, true, 0.2, 1.8},
      {5, 900.4e6, true, 0.9, 1.8},
  };
  SbacWeights w{1.0, 1.0, 1.0, 200e3, 200e3};
  const auto scored = score_candidates(cands, w, false, 10);
  REQUIRE(scored.size() == 2);
  CHECK(scored[0].utility == scored[1].utility);  // identical scores, tie-break decides
  CHECK(select_best(scored) == 3);
  // per-channel mode uses each candidate's own probability
  const auto per_channel = score_candidates(cands, w, true, 10);
  CHECK(per_channel[0].utility < per_channel[1].utility);
  CHECK(select_best(per_channel) == 5);
}
