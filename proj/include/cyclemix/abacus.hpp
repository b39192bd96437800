#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "cyclemix/partition.hpp"

namespace cyclemix {

// A j-runner abacus. Position p sits on runner p mod j, row p / j; rows grow
// downward, so position order is the row-major reading order.
struct AbacusConfiguration {
  int runners = 1;
  std::vector<int> beads;  // distinct positions, ascending

  int bead_count() const noexcept { return static_cast<int>(beads.size()); }
  static int runner_of(int position, int j) noexcept { return position % j; }
  static int row_of(int position, int j) noexcept { return position / j; }

  Partition decode() const { return detail::from_beta_numbers(beads); }

  friend bool operator==(const AbacusConfiguration&, const AbacusConfiguration&) = default;
};

// Smallest multiple of j that leaves at least one full leading row of beads.
inline int default_bead_count(const Partition& lambda, int j) {
  const int needed = lambda.length() + j;
  return (needed + j - 1) / j * j;
}

inline AbacusConfiguration to_abacus(const Partition& lambda, int j, int bead_count) {
  if (j < 1) throw std::invalid_argument("abacus needs at least one runner");
  if (bead_count < lambda.length())
    throw std::invalid_argument("bead count " + std::to_string(bead_count) +
                                " is smaller than the number of parts of " + lambda.str());
  AbacusConfiguration out{j, detail::beta_numbers(lambda, bead_count)};
  std::sort(out.beads.begin(), out.beads.end());
  return out;
}

inline AbacusConfiguration to_abacus(const Partition& lambda, int j) {
  return to_abacus(lambda, j, default_bead_count(lambda, j));
}

struct QuotientCore {
  Partition core;
  std::vector<Partition> quotient;  // component i read from runner i
  friend bool operator==(const QuotientCore&, const QuotientCore&) = default;
};

namespace detail {

// Rows occupied on each runner, ascending.
inline std::vector<std::vector<int>> runner_rows(const AbacusConfiguration& abacus) {
  std::vector<std::vector<int>> rows(abacus.runners);
  for (int p : abacus.beads)
    rows[AbacusConfiguration::runner_of(p, abacus.runners)].push_back(
        AbacusConfiguration::row_of(p, abacus.runners));
  return rows;
}

// Pushes every bead as high as its runner allows, keeping within-runner order.
inline AbacusConfiguration compress(const AbacusConfiguration& abacus) {
  const int j = abacus.runners;
  AbacusConfiguration out{j, {}};
  const auto rows = runner_rows(abacus);
  for (int r = 0; r < j; ++r)
    for (int k = 0; k < static_cast<int>(rows[r].size()); ++k) out.beads.push_back(k * j + r);
  std::sort(out.beads.begin(), out.beads.end());
  return out;
}

}  // namespace detail

// The bead count is any multiple of j; adding full rows leaves the core and
// the runner-indexed quotient unchanged.
inline QuotientCore core_and_quotient(const Partition& lambda, int j) {
  if (j < 1) throw std::invalid_argument("j must be at least 1");
  const AbacusConfiguration abacus = to_abacus(lambda, j);
  QuotientCore out;
  out.core = detail::compress(abacus).decode();
  for (const auto& rows : detail::runner_rows(abacus))
    out.quotient.push_back(detail::from_beta_numbers(rows));
  return out;
}

// Rebuilds lambda from its j-core and j-quotient.
inline Partition from_core_and_quotient(const QuotientCore& qc, int j) {
  if (static_cast<int>(qc.quotient.size()) != j)
    throw std::invalid_argument("quotient must have exactly j components");
  int longest = 0;
  for (const Partition& q : qc.quotient) longest = std::max(longest, q.length());
  const int beads = default_bead_count(qc.core, j) + j * longest;
  const auto core_rows = detail::runner_rows(to_abacus(qc.core, j, beads));
  std::vector<int> positions;
  for (int r = 0; r < j; ++r) {
    const int count = static_cast<int>(core_rows[r].size());
    if (count < qc.quotient[r].length())
      throw std::invalid_argument("quotient component does not fit its runner");
    for (int row : detail::beta_numbers(qc.quotient[r], count)) positions.push_back(row * j + r);
  }
  return detail::from_beta_numbers(std::move(positions));
}

// Number of standard rim-j-hook tableaux of shape lambda:
// multinomial(m; m_0..m_{j-1}) prod d_{lambda^(i)} with m_i = |lambda^(i)|,
// and 0 when the j-core is nonempty.
inline mpz_class rim_tableau_count(const Partition& lambda, int j) {
  const QuotientCore qc = core_and_quotient(lambda, j);
  if (!qc.core.empty()) return 0;
  mpz_class count = 1;
  int placed = 0;
  for (const Partition& q : qc.quotient) {
    placed += q.size();
    count *= binomial(placed, q.size()) * dimension(q);
  }
  return count;
}

struct AbacusSign {
  int sign = 1;
  std::vector<int> sigma;   // one-line notation, 1-based
  bool core_empty = true;   // the sign is only meaningful when true
  int bead_count = 0;
};

inline int permutation_sign(const std::vector<int>& one_line) {
  const int n = static_cast<int>(one_line.size());
  std::vector<char> seen(n, 0);
  int transpositions = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (int x = s; !seen[x]; x = one_line[x] - 1) {
      seen[x] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 ? -1 : 1;
}

// Numbers the beads in reading order, compresses each runner, and reads the
// labels back in the reading order of the compressed configuration.
inline AbacusSign abacus_sign(const Partition& lambda, int j, int bead_count) {
  const AbacusConfiguration abacus = to_abacus(lambda, j, bead_count);
  const int b = abacus.bead_count();
  // Label k + 1 goes to the k-th bead in reading order (ascending position).
  // Compression keeps each runner's beads in order and moves the k-th bead of
  // runner r to row k.
  std::vector<int> runner_seen(j, 0);
  std::vector<std::pair<int, int>> moved;  // (new position, label)
  moved.reserve(b);
  for (int k = 0; k < b; ++k) {
    const int r = AbacusConfiguration::runner_of(abacus.beads[k], j);
    moved.emplace_back(runner_seen[r]++ * j + r, k + 1);
  }
  std::sort(moved.begin(), moved.end());
  AbacusSign out;
  out.bead_count = b;
  for (const auto& [pos, label] : moved) out.sigma.push_back(label);
  out.sign = permutation_sign(out.sigma);
  std::vector<int> compressed;
  for (const auto& [pos, label] : moved) compressed.push_back(pos);
  out.core_empty = detail::from_beta_numbers(compressed).empty();
  return out;
}

inline AbacusSign abacus_sign(const Partition& lambda, int j) {
  return abacus_sign(lambda, j, default_bead_count(lambda, j));
}

// Signed count of rim-j-hook tableaux of shape lambda-bar: the within-cluster
// multiplicity of (n - tj, lambda-bar).
inline mpz_class inner_multiplicity(const Partition& lambda_bar, int j) {
  mpz_class count = rim_tableau_count(lambda_bar, j);
  if (count == 0) return 0;
  return abacus_sign(lambda_bar, j).sign * count;
}

}  // namespace cyclemix
