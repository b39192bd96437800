#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cyclemix/walk.hpp"

namespace cyclemix::sim {

// A permutation of {0..n-1} kept together with its inverse so that
// left-multiplication by a short cycle costs O(cycle length).
class TrackedPermutation {
 public:
  explicit TrackedPermutation(int n) : image_(n), inverse_(n) { reset(); }

  void reset() {
    std::iota(image_.begin(), image_.end(), 0);
    std::iota(inverse_.begin(), inverse_.end(), 0);
  }

  int size() const noexcept { return static_cast<int>(image_.size()); }
  const std::vector<int>& images() const noexcept { return image_; }

  // pi <- c pi for the cycle c = (a_0 a_1 ... a_{m-1}), a_k -> a_{k+1}.
  void left_multiply_cycle(const int* symbols, int m) {
    preimages_.resize(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) preimages_[k] = inverse_[symbols[k]];
    for (int k = 0; k < m; ++k) {
      const int next = symbols[(k + 1) % m];
      image_[preimages_[k]] = next;
      inverse_[next] = preimages_[k];
    }
  }

  void left_multiply_transposition(int a, int b) {
    const int pa = inverse_[a], pb = inverse_[b];
    image_[pa] = b;
    image_[pb] = a;
    inverse_[a] = pb;
    inverse_[b] = pa;
  }

 private:
  std::vector<int> image_;
  std::vector<int> inverse_;
  std::vector<int> preimages_;
};

// Number of cycles of length exactly j. `seen` is scratch space of size n.
inline int count_j_cycles(const std::vector<int>& perm, int j, std::vector<char>& seen) {
  seen.assign(perm.size(), 0);
  int count = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
      seen[x] = 1;
      ++len;
    }
    if (len == j) ++count;
  }
  return count;
}

inline int count_j_cycles(const std::vector<int>& perm, int j) {
  std::vector<char> seen;
  return count_j_cycles(perm, j, seen);
}

// Counts cycles of every length at once; histogram[len] = number of len-cycles.
inline void cycle_type(const std::vector<int>& perm, std::vector<int>& histogram,
                       std::vector<char>& seen) {
  seen.assign(perm.size(), 0);
  histogram.assign(perm.size() + 1, 0);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
      seen[x] = 1;
      ++len;
    }
    ++histogram[len];
  }
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using Engine = std::mt19937_64;

inline Engine trial_engine(std::uint64_t seed, std::uint64_t trial) {
  return Engine(splitmix64(seed ^ trial));
}

// Uniform integer in [0, bound) by rejection; independent of the standard
// library's distribution implementation.
inline std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
  const std::uint64_t limit = Engine::max() - (Engine::max() - bound + 1) % bound;
  std::uint64_t x;
  do x = rng();
  while (x > limit);
  return x % bound;
}

// Scratch space for i-cycle sampling: a deck used for partial Fisher-Yates.
struct StepScratch {
  std::vector<int> deck;
  std::vector<int> chosen;
  std::vector<int> picks;
};

// One step of the walk: state <- (random generator) * state.
inline void sample_step(TrackedPermutation& state, const WalkSpec& spec, Engine& rng,
                        StepScratch& scratch) {
  const int n = state.size();
  if (spec.kind == WalkKind::kStar) {
    const int u = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - 1)));
    state.left_multiply_transposition(0, u);
    return;
  }
  // An ordered draw of i distinct symbols read as a cycle; each i-cycle
  // arises from exactly i draws, so the cycle is uniform.
  const int i = spec.cycle_length;
  if (static_cast<int>(scratch.deck.size()) != n) {
    scratch.deck.resize(n);
    std::iota(scratch.deck.begin(), scratch.deck.end(), 0);
  }
  scratch.chosen.resize(i);
  scratch.picks.resize(i);
  std::vector<int>& deck = scratch.deck;
  for (int k = 0; k < i; ++k) {
    const int pick = k + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - k)));
    std::swap(deck[k], deck[pick]);
    scratch.picks[k] = pick;
    scratch.chosen[k] = deck[k];
  }
  // Undo the partial shuffle so the deck is the identity arrangement again.
  for (int k = i - 1; k >= 0; --k) std::swap(deck[k], deck[scratch.picks[k]]);
  state.left_multiply_cycle(scratch.chosen.data(), i);
}

inline void sample_step(TrackedPermutation& state, const WalkSpec& spec, Engine& rng) {
  StepScratch scratch;
  sample_step(state, spec, rng, scratch);
}

struct SimConfig {
  WalkSpec spec;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::vector<int> tracked_js{1};
  Schedule schedule = Schedule::kFixed;  // only used to pick reference rates
  double c = 0;
  bool record_trials = false;  // keep every trial's counts for a CSV dump

  void validate() const {
    spec.validate();
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (tracked_js.empty()) throw std::invalid_argument("track at least one cycle length");
    for (int j : tracked_js)
      if (j < 1 || j > spec.n) throw std::invalid_argument("tracked cycle length out of range");
  }
};

inline double poisson_pmf(double rate, int k) {
  if (rate == 0) return k == 0 ? 1.0 : 0.0;
  return std::exp(k * std::log(rate) - rate - std::lgamma(k + 1.0));
}

// Total variation distance between an empirical histogram and Poisson(rate),
// truncating the pmf at (largest observed count + 10) with the tail lumped
// into the last bin.
inline double tv_to_poisson(const std::vector<std::uint64_t>& histogram, std::uint64_t trials,
                            double rate) {
  int top = 0;
  for (std::size_t k = 0; k < histogram.size(); ++k)
    if (histogram[k]) top = static_cast<int>(k);
  const int cutoff = top + 10;
  double tv = 0;
  double pmf_mass = 0;
  for (int k = 0; k < cutoff; ++k) {
    const double p = poisson_pmf(rate, k);
    pmf_mass += p;
    const double e = k < static_cast<int>(histogram.size())
                         ? static_cast<double>(histogram[k]) / static_cast<double>(trials)
                         : 0.0;
    tv += std::abs(e - p);
  }
  tv += std::abs(0.0 - std::max(0.0, 1.0 - pmf_mass));
  return tv / 2;
}

struct CycleStatistics {
  int j = 1;
  std::vector<std::uint64_t> histogram;  // histogram[c] = trials with c j-cycles
  double moments[4] = {0, 0, 0, 0};      // E[a_j^r], r = 1..4
  double mean = 0;
  double standard_error = 0;
  std::optional<double> reference_rate;
  std::optional<double> z_score;
  std::optional<double> tv_distance;

  friend bool operator==(const CycleStatistics& a, const CycleStatistics& b) {
    return a.j == b.j && a.histogram == b.histogram &&
           std::equal(std::begin(a.moments), std::end(a.moments), std::begin(b.moments)) &&
           a.mean == b.mean && a.standard_error == b.standard_error &&
           a.reference_rate == b.reference_rate && a.z_score == b.z_score &&
           a.tv_distance == b.tv_distance;
  }
};

struct EmpiricalSummary {
  SimConfig config;
  std::vector<CycleStatistics> statistics;  // one per tracked j, same order
  // With record_trials: trial_counts[trial * tracked + t], trial order.
  std::vector<int> trial_counts;

  bool same_results(const EmpiricalSummary& other) const { return statistics == other.statistics; }
};

// Worker count from CYCLE_MIXER_THREADS, else hardware concurrency.
inline unsigned default_threads() {
  if (const char* env = std::getenv("CYCLE_MIXER_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

namespace detail {

inline void run_range(const SimConfig& config, std::uint64_t begin, std::uint64_t end,
                      std::vector<std::vector<std::uint64_t>>& histograms,
                      std::vector<int>& trial_counts) {
  const int n = config.spec.n;
  TrackedPermutation state(n);
  StepScratch scratch;
  std::vector<int> type;
  std::vector<char> seen;
  for (std::uint64_t trial = begin; trial < end; ++trial) {
    Engine rng = trial_engine(config.seed, trial);
    state.reset();
    for (std::int64_t s = 0; s < config.spec.steps; ++s) sample_step(state, config.spec, rng, scratch);
    cycle_type(state.images(), type, seen);
    for (std::size_t t = 0; t < config.tracked_js.size(); ++t) {
      const auto count = static_cast<std::size_t>(type[config.tracked_js[t]]);
      auto& h = histograms[t];
      if (h.size() <= count) h.resize(count + 1, 0);
      ++h[count];
      if (config.record_trials)
        trial_counts[trial * config.tracked_js.size() + t] = static_cast<int>(count);
    }
  }
}

}  // namespace detail

inline CycleStatistics summarize(int j, std::vector<std::uint64_t> histogram, std::uint64_t trials,
                                 std::optional<double> rate) {
  CycleStatistics s;
  s.j = j;
  s.histogram = std::move(histogram);
  const double total = static_cast<double>(trials);
  for (std::size_t c = 0; c < s.histogram.size(); ++c) {
    const double w = static_cast<double>(s.histogram[c]) / total;
    double p = 1;
    for (int r = 0; r < 4; ++r) {
      p *= static_cast<double>(c);
      s.moments[r] += w * p;
    }
  }
  s.mean = s.moments[0];
  const double var = std::max(0.0, s.moments[1] - s.mean * s.mean);
  s.standard_error = std::sqrt(var / total);
  s.reference_rate = rate;
  if (rate) {
    if (s.standard_error > 0) s.z_score = (s.mean - *rate) / s.standard_error;
    s.tv_distance = tv_to_poisson(s.histogram, trials, *rate);
  }
  return s;
}

// Runs config.trials independent walks from the identity. Results depend on
// the seed only, never on the thread count: every trial owns its generator
// and histograms are merged as integer counts.
inline EmpiricalSummary run(const SimConfig& config, unsigned threads = default_threads()) {
  config.validate();
  threads = std::max(1u, threads);
  if (threads > config.trials) threads = static_cast<unsigned>(config.trials);
  const std::size_t tracked = config.tracked_js.size();
  std::vector<std::vector<std::vector<std::uint64_t>>> partial(
      threads, std::vector<std::vector<std::uint64_t>>(tracked));
  std::vector<int> trial_counts;
  if (config.record_trials) trial_counts.assign(config.trials * tracked, 0);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = config.trials / threads;
  const std::uint64_t extra = config.trials % threads;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
    workers.emplace_back(detail::run_range, std::cref(config), begin, end, std::ref(partial[w]),
                         std::ref(trial_counts));
    begin = end;
  }
  for (auto& t : workers) t.join();

  EmpiricalSummary out;
  out.config = config;
  out.trial_counts = std::move(trial_counts);
  for (std::size_t t = 0; t < tracked; ++t) {
    std::vector<std::uint64_t> merged;
    for (const auto& p : partial) {
      if (merged.size() < p[t].size()) merged.resize(p[t].size(), 0);
      for (std::size_t c = 0; c < p[t].size(); ++c) merged[c] += p[t][c];
    }
    const int j = config.tracked_js[t];
    const auto rate = reference_rate(config.spec.kind, config.spec.cycle_length, config.schedule,
                                     j, config.c);
    out.statistics.push_back(summarize(j, std::move(merged), config.trials, rate));
  }
  return out;
}

}  // namespace cyclemix::sim
