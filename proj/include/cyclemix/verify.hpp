#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclemix/mn_bratteli.hpp"
#include "cyclemix/oracle.hpp"
#include "cyclemix/walk.hpp"

// Cross-checks of the structural machinery against exhaustive enumeration.
namespace cyclemix::verify {

struct CheckResult {
  std::string name;
  int comparisons = 0;
  std::optional<std::string> counterexample;  // first mismatch, if any

  bool ok() const noexcept { return !counterexample; }
};

// tensor_power(n, j, r) against the character-sum oracle on every lambda |- n.
inline CheckResult path_count_vs_oracle(int max_n) {
  CheckResult out{"path count vs brute-force multiplicity", 0, std::nullopt};
  for (int n = 2; n <= max_n; ++n)
    for (int j = 1; j < n; ++j)
      for (int r = 0; r <= 3; ++r) {
        const VirtualDecomposition paths = tensor_power(n, j, r);
        for (const Partition& lambda : partitions_of(n)) {
          ++out.comparisons;
          const mpq_class brute = oracle::brute_multiplicity(n, j, r, lambda);
          if (brute != mpq_class(paths.at(lambda))) {
            std::ostringstream os;
            os << "n=" << n << " j=" << j << " r=" << r << " lambda=" << lambda.str()
               << ": paths " << paths.at(lambda).get_str() << ", brute " << brute.get_str();
            out.counterexample = os.str();
            return out;
          }
        }
      }
  return out;
}

// closed_form_multiplicity against tensor_power across the stable range.
inline CheckResult closed_form_vs_path_count() {
  CheckResult out{"closed form vs path count", 0, std::nullopt};
  for (int j = 1; j <= 3; ++j)
    for (int r = 0; r <= 3; ++r)
      for (int n = std::max(j + 1, 2 * r * j); n <= 2 * r * j + 2; ++n) {
        const VirtualDecomposition paths = tensor_power(n, j, r);
        for (const Partition& lambda : partitions_of(n)) {
          ++out.comparisons;
          const mpz_class closed = closed_form_multiplicity(lambda, r, j, n);
          if (closed != paths.at(lambda)) {
            std::ostringstream os;
            os << "n=" << n << " j=" << j << " r=" << r << " lambda=" << lambda.str()
               << ": closed " << closed.get_str() << ", paths " << paths.at(lambda).get_str();
            out.counterexample = os.str();
            return out;
          }
        }
      }
  return out;
}

// exact_moment against brute-force convolution of the step measure.
inline CheckResult spectral_vs_convolution(int n, int max_steps) {
  CheckResult out{"spectral moments vs convolution, n = " + std::to_string(n), 0, std::nullopt};
  std::vector<WalkSpec> walks{WalkSpec::star(n, 0)};
  for (int i = 2; i <= std::min(3, n); ++i) walks.push_back(WalkSpec::icycle(i, n, 0));
  const std::vector<std::pair<int, int>> stats{{1, 1}, {1, 2}, {2, 1}};
  for (WalkSpec spec : walks) {
    const oracle::GroupDistribution step = oracle::step_measure(spec);
    oracle::GroupDistribution d = oracle::identity_mass(n);
    for (int k = 0; k <= max_steps; ++k) {
      spec.steps = k;
      for (const auto& [j, r] : stats) {
        ++out.comparisons;
        const mpq_class spectral = exact_moment(moment_decomposition(n, j, r), spec);
        const mpq_class brute = oracle::brute_moment(d, j, r);
        if (spectral != brute) {
          std::ostringstream os;
          os << spec.name() << " n=" << n << " k=" << k << " j=" << j << " r=" << r
             << ": spectral " << spectral.get_str() << ", brute " << brute.get_str();
          out.counterexample = os.str();
          return out;
        }
      }
      d = oracle::convolve(step, d);
    }
  }
  return out;
}

inline std::vector<CheckResult> run_all(int max_n) {
  std::vector<CheckResult> results;
  results.push_back(path_count_vs_oracle(max_n));
  results.push_back(closed_form_vs_path_count());
  for (int n = 4; n <= max_n; ++n) results.push_back(spectral_vs_convolution(n, 6));
  return results;
}

}  // namespace cyclemix::verify
