#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cyclemix {

// A weakly decreasing sequence of positive integers. Trailing zeros are
// stripped on construction, so the empty partition is the unique partition
// of 0 and equal partitions always compare equal.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  // Parses "6,2" or "6,2,2"; the empty string is the empty partition.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::string token;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, token, ',')) {
      if (token.empty()) continue;
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad partition part '" + token + "'");
      }
      if (used != token.size())
        throw std::invalid_argument("bad partition part '" + token + "'");
      parts.push_back(value);
    }
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  // Part i (0-based); zero beyond the last part.
  int operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  int first_row() const noexcept { return (*this)[0]; }

  // The partition lying below the first row.
  Partition below_first_row() const {
    if (parts_.empty()) return {};
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
  }

  // (first, tail...). Throws if the result is not a partition.
  static Partition with_first_row(int first, const Partition& tail) {
    std::vector<int> parts;
    parts.reserve(tail.parts_.size() + 1);
    parts.push_back(first);
    parts.insert(parts.end(), tail.parts_.begin(), tail.parts_.end());
    return Partition(std::move(parts));
  }

  Partition conjugate() const {
    std::vector<int> cols(first_row(), 0);
    for (int row : parts_)
      for (int c = 0; c < row; ++c) ++cols[c];
    return Partition(std::move(cols));
  }

  // Number of parts equal to i.
  int multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
  }

  bool contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (std::size_t i = 0; i < inner.parts_.size(); ++i)
      if (inner.parts_[i] > parts_[i]) return false;
    return true;
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

  // Comma-separated parts, the CLI spelling.
  std::string csv() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

  // Display order: by size, then reverse lexicographic, so (8) < (6,2) <
  // (6,1,1) < (4,4). Ordered maps keyed on partitions print in this order.
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return std::lexicographical_compare_three_way(
        b.parts_.begin(), b.parts_.end(), a.parts_.begin(), a.parts_.end());
  }

  friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.str();
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : p.parts())
      h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// All partitions of n in display order.
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) return {};
  std::vector<Partition> out;
  std::vector<int> cur;
  // Generate reverse-lexicographically: largest first part first.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline mpz_class factorial(int n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

inline mpz_class binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

// Hook length of the cell in row r, column c (both 0-based).
inline int hook_length(const Partition& lambda, const Partition& conj, int r,
                       int c) {
  return lambda[r] - c + conj[c] - r - 1;
}

// Number of standard Young tableaux of shape lambda, by the hook-length
// formula. Exact.
inline mpz_class dimension(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  mpz_class hooks = 1;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r]; ++c) hooks *= hook_length(lambda, conj, r, c);
  mpz_class out = factorial(lambda.size());
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), hooks.get_mpz_t());
  return out;
}

struct CornerRemoval {
  int row;  // 1-based row index of the removed cell
  Partition result;
  friend bool operator==(const CornerRemoval&, const CornerRemoval&) = default;
};

// One entry per removable cell, rows ascending.
inline std::vector<CornerRemoval> inner_corner_removals(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("no removable cells");
  std::vector<CornerRemoval> out;
  for (int i = 0; i < lambda.length(); ++i) {
    if (lambda[i] > lambda[i + 1]) {
      std::vector<int> parts = lambda.parts();
      --parts[i];
      out.push_back({i + 1, Partition(std::move(parts))});
    }
  }
  return out;
}

// A rim hook outer/inner of `length` cells spanning leg_length + 1 rows.
// head_row is the 1-based row holding the hook's rightmost cell.
struct RimHook {
  Partition outer;
  Partition inner;
  int length = 0;
  int leg_length = 0;
  int head_row = 0;
  friend bool operator==(const RimHook&, const RimHook&) = default;
};

namespace detail {

// Beta-numbers lambda_i + (beads - i), i = 1..beads, in decreasing order.
inline std::vector<int> beta_numbers(const Partition& lambda, int beads) {
  std::vector<int> beta(beads);
  for (int i = 0; i < beads; ++i) beta[i] = lambda[i] + (beads - 1 - i);
  return beta;
}

// Inverse of beta_numbers for any set of distinct nonnegative positions.
inline Partition from_beta_numbers(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int b = static_cast<int>(beta.size());
  std::vector<int> parts(b);
  for (int i = 0; i < b; ++i) parts[i] = beta[i] - (b - 1 - i);
  return Partition(std::move(parts));
}

inline int count_between(const std::vector<int>& beta, int lo, int hi) {
  int n = 0;
  for (int p : beta)
    if (p > lo && p < hi) ++n;
  return n;
}

}  // namespace detail

// All rim hooks of length j removable from lambda, ordered by head row.
// Removing a rim j-hook is the same as sliding one beta-number down by j onto
// an empty position; the leg length is the number of beta-numbers jumped.
inline std::vector<RimHook> removable_rim_hooks(const Partition& lambda, int j) {
  if (j < 1) throw std::invalid_argument("rim hook length must be positive");
  const int b = lambda.length();
  const std::vector<int> beta = detail::beta_numbers(lambda, b);
  std::vector<RimHook> out;
  for (int i = 0; i < b; ++i) {
    const int from = beta[i];
    const int to = from - j;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end())
      continue;
    std::vector<int> moved = beta;
    moved[i] = to;
    out.push_back({lambda, detail::from_beta_numbers(std::move(moved)), j,
                   detail::count_between(beta, to, from), i + 1});
  }
  return out;
}

// All lambda of size |mu| + j with lambda/mu a rim j-hook, ordered by the
// head row of the added hook.
inline std::vector<RimHook> addable_rim_hooks(const Partition& mu, int j,
                                              int target_size) {
  if (j < 1) throw std::invalid_argument("rim hook length must be positive");
  if (target_size != mu.size() + j)
    throw std::invalid_argument("target size must equal |mu| + j");
  const int b = mu.length() + j;
  const std::vector<int> beta = detail::beta_numbers(mu, b);
  std::vector<RimHook> out;
  for (int i = 0; i < b; ++i) {
    const int from = beta[i];
    const int to = from + j;
    if (std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    std::vector<int> moved = beta;
    moved[i] = to;
    // The moved bead's rank among the new positions is its row.
    int head_row = 1;
    for (int p : moved)
      if (p > to) ++head_row;
    out.push_back({detail::from_beta_numbers(std::move(moved)), mu, j,
                   detail::count_between(beta, from, to), head_row});
  }
  std::stable_sort(out.begin(), out.end(), [](const RimHook& a, const RimHook& b) {
    return a.head_row < b.head_row;
  });
  return out;
}

}  // namespace cyclemix
