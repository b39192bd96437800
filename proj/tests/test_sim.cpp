#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "cyclemix/oracle.hpp"
#include "cyclemix/sim.hpp"

using namespace cyclemix;
using namespace cyclemix::sim;

namespace {

SimConfig config_for(const WalkSpec& spec, std::uint64_t trials, std::vector<int> js,
                     Schedule schedule, double c, std::uint64_t seed = 2024) {
  SimConfig cfg;
  cfg.spec = spec;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.tracked_js = std::move(js);
  cfg.schedule = schedule;
  cfg.c = c;
  return cfg;
}

}  // namespace

TEST(CountCycles, Examples) {
  std::vector<int> id(6);
  std::iota(id.begin(), id.end(), 0);
  EXPECT_EQ(count_j_cycles(id, 1), 6);
  EXPECT_EQ(count_j_cycles({1, 2, 0, 3}, 3), 1);
  // (1 2)(3 4 5) in S_6, 0-based.
  const std::vector<int> p{1, 0, 3, 4, 2, 5};
  EXPECT_EQ(count_j_cycles(p, 1), 1);
  EXPECT_EQ(count_j_cycles(p, 2), 1);
  std::vector<int> hist;
  std::vector<char> seen;
  cycle_type(p, hist, seen);
  EXPECT_EQ(hist[1], 1);
  EXPECT_EQ(hist[2], 1);
  EXPECT_EQ(hist[3], 1);
}

TEST(TrackedPermutation, MatchesComposition) {
  Engine rng(7);
  const int n = 7;
  TrackedPermutation state(n);
  oracle::Permutation reference(n);
  std::iota(reference.begin(), reference.end(), 0);
  for (int step = 0; step < 200; ++step) {
    std::vector<int> symbols(n);
    std::iota(symbols.begin(), symbols.end(), 0);
    std::shuffle(symbols.begin(), symbols.end(), rng);
    const int m = 2 + step % 4;
    oracle::Permutation cycle(n);
    std::iota(cycle.begin(), cycle.end(), 0);
    for (int k = 0; k < m; ++k) cycle[symbols[k]] = symbols[(k + 1) % m];
    if (m == 2 && step % 2)
      state.left_multiply_transposition(symbols[0], symbols[1]);
    else
      state.left_multiply_cycle(symbols.data(), m);
    reference = oracle::compose(cycle, reference);
    ASSERT_EQ(state.images(), reference) << "step " << step;
  }
}

TEST(Rng, UniformBelowStaysInRange) {
  Engine rng = trial_engine(1, 2);
  std::vector<int> counts(5, 0);
  for (int x = 0; x < 50000; ++x) {
    const auto v = uniform_below(rng, 5);
    ASSERT_LT(v, 5u);
    ++counts[v];
  }
  for (int c : counts) EXPECT_NEAR(c, 10000, 4 * std::sqrt(50000 * 0.2 * 0.8));
  EXPECT_NE(trial_engine(1, 2)(), trial_engine(1, 3)());
  EXPECT_EQ(trial_engine(9, 4)(), trial_engine(9, 4)());
}

TEST(SampleStep, StarMovesFirstSymbol) {
  Engine rng = trial_engine(3, 0);
  for (int t = 0; t < 100; ++t) {
    TrackedPermutation state(6);
    sample_step(state, WalkSpec::star(6, 1), rng);
    const auto& p = state.images();
    EXPECT_NE(p[0], 0);
    EXPECT_EQ(p[p[0]], 0);
    EXPECT_EQ(count_j_cycles(p, 1), 4);
  }
}

TEST(SampleStep, ICycleHasCycleType) {
  Engine rng = trial_engine(3, 1);
  StepScratch scratch;
  for (int i = 2; i <= 6; ++i)
    for (int t = 0; t < 50; ++t) {
      TrackedPermutation state(6);
      sample_step(state, WalkSpec::icycle(i, 6, 1), rng, scratch);
      EXPECT_EQ(count_j_cycles(state.images(), i), 1);
      EXPECT_EQ(count_j_cycles(state.images(), 1), 6 - i);
    }
}

TEST(SampleStep, StarStepIsUniformOnS4) {
  Engine rng = trial_engine(11, 0);
  const int draws = 100000;
  std::map<std::vector<int>, int> counts;
  for (int t = 0; t < draws; ++t) {
    TrackedPermutation state(4);
    sample_step(state, WalkSpec::star(4, 1), rng);
    ++counts[state.images()];
  }
  ASSERT_EQ(counts.size(), 3u);
  const double sigma = std::sqrt(draws * (1.0 / 3) * (2.0 / 3));
  for (const auto& [p, c] : counts) EXPECT_NEAR(c, draws / 3.0, 3 * sigma);
}

TEST(SampleStep, ICycleStepIsUniformOnThreeCycles) {
  Engine rng = trial_engine(12, 0);
  const int draws = 80000;
  std::map<std::vector<int>, int> counts;
  StepScratch scratch;
  for (int t = 0; t < draws; ++t) {
    TrackedPermutation state(4);
    sample_step(state, WalkSpec::icycle(3, 4, 1), rng, scratch);
    ++counts[state.images()];
  }
  ASSERT_EQ(counts.size(), 8u);
  const double sigma = std::sqrt(draws * (1.0 / 8) * (7.0 / 8));
  for (const auto& [p, c] : counts) EXPECT_NEAR(c, draws / 8.0, 4 * sigma);
}

TEST(Run, ZeroStepsIsPointMass) {
  const auto summary =
      run(config_for(WalkSpec::star(9, 0), 50, {1, 2}, Schedule::kFixed, 0), 2);
  ASSERT_EQ(summary.statistics.size(), 2u);
  EXPECT_EQ(summary.statistics[0].histogram.back(), 50u);
  EXPECT_EQ(summary.statistics[0].histogram.size(), 10u);
  EXPECT_EQ(summary.statistics[0].mean, 9);
  EXPECT_EQ(summary.statistics[1].histogram, (std::vector<std::uint64_t>{50}));
  EXPECT_FALSE(summary.statistics[0].reference_rate);
}

TEST(Run, ValidatesConfig) {
  EXPECT_THROW(run(config_for(WalkSpec::star(5, 1), 0, {1}, Schedule::kFixed, 0)),
               std::invalid_argument);
  EXPECT_THROW(run(config_for(WalkSpec::star(5, 1), 10, {}, Schedule::kFixed, 0)),
               std::invalid_argument);
  EXPECT_THROW(run(config_for(WalkSpec::star(5, 1), 10, {6}, Schedule::kFixed, 0)),
               std::invalid_argument);
}

TEST(Run, DeterministicAcrossThreadCounts) {
  SimConfig cfg = config_for(WalkSpec::icycle(3, 40, 13), 3001, {1, 2, 3}, Schedule::kLinearPerCycle, 1);
  cfg.record_trials = true;
  const auto one = run(cfg, 1);
  for (unsigned threads : {2u, 3u, 7u}) {
    const auto many = run(cfg, threads);
    EXPECT_TRUE(one.same_results(many)) << threads;
    EXPECT_EQ(one.trial_counts, many.trial_counts) << threads;
  }
  ASSERT_EQ(one.trial_counts.size(), 3001u * 3);
  std::uint64_t with_one = 0;
  for (std::size_t t = 0; t < 3001; ++t)
    if (one.trial_counts[t * 3] == 1) ++with_one;
  EXPECT_EQ(with_one, one.statistics[0].histogram[1]);
  cfg.seed += 1;
  EXPECT_FALSE(one.same_results(run(cfg, 1)));
}

TEST(Run, MatchesExactLawOnSmallGroup) {
  // Fixed points after 3 star steps on S_5, against the exact distribution.
  const WalkSpec spec = WalkSpec::star(5, 3);
  const auto exact = oracle::walk_distribution(spec);
  const auto all = oracle::all_permutations(5);
  std::vector<double> law(6, 0);
  for (std::size_t r = 0; r < all.size(); ++r)
    law[oracle::count_cycles_of_length(all[r], 1)] += exact.probabilities[r].get_d();
  const std::uint64_t trials = 100000;
  const auto summary = run(config_for(spec, trials, {1}, Schedule::kFixed, 0), 1);
  const auto& hist = summary.statistics[0].histogram;
  for (std::size_t k = 0; k < law.size(); ++k) {
    const double observed = k < hist.size() ? static_cast<double>(hist[k]) : 0;
    const double sigma = std::sqrt(trials * law[k] * (1 - law[k]));
    EXPECT_NEAR(observed, trials * law[k], 4 * sigma + 1e-9) << "fixed points " << k;
  }
}

TEST(Summary, TotalVariation) {
  std::vector<std::uint64_t> point{10};
  EXPECT_NEAR(tv_to_poisson(point, 10, 1.0), 1 - std::exp(-1.0), 1e-12);
  std::vector<std::uint64_t> exact;
  const std::uint64_t scale = 1000000000ULL;
  for (int k = 0; k < 30; ++k) exact.push_back(static_cast<std::uint64_t>(std::llround(poisson_pmf(2.0, k) * scale)));
  EXPECT_LT(tv_to_poisson(exact, scale, 2.0), 1e-6);
  EXPECT_DOUBLE_EQ(poisson_pmf(0, 0), 1);
  EXPECT_DOUBLE_EQ(poisson_pmf(0, 3), 0);
}

TEST(Summary, Moments) {
  const CycleStatistics s = summarize(2, {1, 2, 1}, 4, 1.0);
  EXPECT_DOUBLE_EQ(s.moments[0], 1.0);
  EXPECT_DOUBLE_EQ(s.moments[1], 1.5);
  EXPECT_DOUBLE_EQ(s.moments[2], 2.5);
  EXPECT_DOUBLE_EQ(s.standard_error, std::sqrt(0.5 / 4));
  ASSERT_TRUE(s.z_score);
  EXPECT_DOUBLE_EQ(*s.z_score, 0);
}

TEST(Run, UniformSanity) {
  // Far past the n ln n cutoff the fixed-point law is Poisson(1) to within noise.
  const int n = 100;
  const auto k = static_cast<std::int64_t>(std::ceil(3 * n * std::log(static_cast<double>(n))));
  auto cfg = config_for(WalkSpec::star(n, k), 100000, {1}, Schedule::kFixed, 0, 77);
  const auto summary = run(cfg);
  const auto& st = summary.statistics[0];
  EXPECT_LE(tv_to_poisson(st.histogram, cfg.trials, 1.0), 0.02);
  EXPECT_NEAR(st.mean, 1.0, 3 * st.standard_error);
}

TEST(Run, ShortCyclesMixBeforeFixedPoints) {
  // After n star steps 2-cycles already follow their Poisson limit while
  // about n/e symbols are still untouched.
  const int n = 200;
  auto cfg = config_for(WalkSpec::star(n, n), 20000, {1, 2}, Schedule::kLinear, 1.0, 5);
  const auto summary = run(cfg);
  const auto& fixed = summary.statistics[0];
  const auto& two = summary.statistics[1];
  ASSERT_TRUE(two.reference_rate);
  EXPECT_NEAR(*two.reference_rate, (1 - std::exp(-2.0)) / 2, 1e-15);
  EXPECT_LT(std::abs(*two.z_score), 3.0);
  EXPECT_LE(*two.tv_distance, 0.05);
  EXPECT_GT(fixed.mean, 0.3 * n);
}
