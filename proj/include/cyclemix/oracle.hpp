#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclemix/characters.hpp"
#include "cyclemix/partition.hpp"
#include "cyclemix/walk.hpp"

// Small-n ground truth by exhaustive enumeration of S_n. Nothing here reads
// the Bratteli or abacus machinery.
namespace cyclemix::oracle {

inline constexpr int kDefaultMaxN = 7;
inline constexpr int kLargeMaxN = 8;

// One-line form, 0-based images: perm[x] = pi(x).
using Permutation = std::vector<int>;

inline std::int64_t lehmer_rank(const Permutation& perm) {
  const int n = static_cast<int>(perm.size());
  std::int64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int k = i + 1; k < n; ++k)
      if (perm[k] < perm[i]) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

// All n! permutations in lexicographic order; index == lehmer_rank.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// (a b)(x) = a(b(x)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

inline std::vector<int> cycle_lengths(const Permutation& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::vector<int> lengths;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
      seen[x] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

inline int count_cycles_of_length(const Permutation& perm, int j) {
  const auto lengths = cycle_lengths(perm);
  return static_cast<int>(std::count(lengths.begin(), lengths.end(), j));
}

// A probability measure on S_n stored densely by Lehmer rank.
struct GroupDistribution {
  int n = 0;
  std::vector<mpq_class> probabilities;

  mpq_class total() const {
    mpq_class s = 0;
    for (const auto& p : probabilities) s += p;
    return s;
  }
  const mpq_class& at(const Permutation& perm) const {
    return probabilities[static_cast<std::size_t>(lehmer_rank(perm))];
  }
};

inline void require_desk_scale(int n, bool allow_large) {
  const int limit = allow_large ? kLargeMaxN : kDefaultMaxN;
  if (n < 1 || n > limit)
    throw std::domain_error("oracle is desk-scale only (n = " + std::to_string(n) +
                            ", limit " + std::to_string(limit) + ")");
}

inline GroupDistribution point_mass(int n, const Permutation& at, bool allow_large = false) {
  require_desk_scale(n, allow_large);
  GroupDistribution d{n, std::vector<mpq_class>(static_cast<std::size_t>(factorial(n).get_ui()), 0)};
  d.probabilities[static_cast<std::size_t>(lehmer_rank(at))] = 1;
  return d;
}

inline GroupDistribution identity_mass(int n, bool allow_large = false) {
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0);
  return point_mass(n, id, allow_large);
}

inline GroupDistribution uniform(int n, bool allow_large = false) {
  require_desk_scale(n, allow_large);
  const auto size = factorial(n).get_ui();
  return {n, std::vector<mpq_class>(size, mpq_class(1, size))};
}

// Uniform on the transpositions (1 u), 2 <= u <= n.
inline GroupDistribution star_measure(int n, bool allow_large = false) {
  GroupDistribution d = identity_mass(n, allow_large);
  std::fill(d.probabilities.begin(), d.probabilities.end(), mpq_class(0));
  for (int u = 1; u < n; ++u) {
    Permutation t(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[u]);
    d.probabilities[static_cast<std::size_t>(lehmer_rank(t))] = mpq_class(1, n - 1);
  }
  return d;
}

// (n - i)! i / n! on every i-cycle.
inline GroupDistribution icycle_measure(int n, int i, bool allow_large = false) {
  require_desk_scale(n, allow_large);
  if (i < 2 || i > n) throw std::invalid_argument("i-cycle length must satisfy 2 <= i <= n");
  const auto perms = all_permutations(n);
  mpq_class mass(factorial(n - i) * i, factorial(n));
  mass.canonicalize();
  GroupDistribution d{n, std::vector<mpq_class>(perms.size(), 0)};
  for (std::size_t r = 0; r < perms.size(); ++r) {
    const auto lengths = cycle_lengths(perms[r]);
    if (std::count(lengths.begin(), lengths.end(), i) == 1 &&
        std::count(lengths.begin(), lengths.end(), 1) == n - i)
      d.probabilities[r] = mass;
  }
  return d;
}

// (d1 * d2)(g) = sum_h d1(h) d2(h^{-1} g): first draw from d2, then
// left-multiply by a draw from d1.
inline GroupDistribution convolve(const GroupDistribution& d1, const GroupDistribution& d2,
                                  bool allow_large = false) {
  if (d1.n != d2.n) throw std::invalid_argument("convolve: distributions on different groups");
  require_desk_scale(d1.n, allow_large);
  const auto perms = all_permutations(d1.n);
  GroupDistribution out{d1.n, std::vector<mpq_class>(perms.size(), 0)};
  for (std::size_t h = 0; h < perms.size(); ++h) {
    if (d1.probabilities[h] == 0) continue;
    for (std::size_t x = 0; x < perms.size(); ++x) {
      if (d2.probabilities[x] == 0) continue;
      out.probabilities[static_cast<std::size_t>(lehmer_rank(compose(perms[h], perms[x])))] +=
          d1.probabilities[h] * d2.probabilities[x];
    }
  }
  return out;
}

inline GroupDistribution step_measure(const WalkSpec& spec, bool allow_large = false) {
  spec.validate();
  return spec.kind == WalkKind::kStar ? star_measure(spec.n, allow_large)
                                      : icycle_measure(spec.n, spec.cycle_length, allow_large);
}

// Law of the walk after spec.steps steps from the identity.
inline GroupDistribution walk_distribution(const WalkSpec& spec, bool allow_large = false) {
  const GroupDistribution step = step_measure(spec, allow_large);
  GroupDistribution d = identity_mass(spec.n, allow_large);
  for (std::int64_t s = 0; s < spec.steps; ++s) d = convolve(step, d, allow_large);
  return d;
}

// E[(# j-cycles)^r] under d.
inline mpq_class brute_moment(const GroupDistribution& d, int j, int r) {
  const auto perms = all_permutations(d.n);
  mpq_class total = 0;
  for (std::size_t x = 0; x < perms.size(); ++x) {
    if (d.probabilities[x] == 0) continue;
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(count_cycles_of_length(perms[x], j)),
                  static_cast<unsigned long>(r));
    total += d.probabilities[x] * mpq_class(v);
  }
  return total;
}

// <(j a_j)^r, chi^lambda> = (1/n!) sum_mu |C_mu| (j a_j(mu))^r chi^lambda(mu).
inline mpq_class brute_multiplicity(int n, int j, int r, const Partition& lambda) {
  if (n > kLargeMaxN) throw std::domain_error("brute_multiplicity is limited to n <= 8");
  if (lambda.size() != n) throw std::invalid_argument(lambda.str() + " does not partition n");
  mpq_class total = 0;
  for (const Partition& shape : partitions_of(n)) {
    const CycleType mu(shape);
    mpz_class psi;
    mpz_ui_pow_ui(psi.get_mpz_t(), static_cast<unsigned long>(j * mu.multiplicity(j)),
                  static_cast<unsigned long>(r));
    total += mpq_class(class_size(mu) * psi * character_value(lambda, mu));
  }
  total /= mpq_class(factorial(n));
  return total;
}

}  // namespace cyclemix::oracle
