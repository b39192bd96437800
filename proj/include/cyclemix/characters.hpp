#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "cyclemix/partition.hpp"

namespace cyclemix {

// The cycle type of a conjugacy class of S_n.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(Partition shape) : shape_(std::move(shape)) {}

  // The class (i, 1^{n-i}): one i-cycle and n - i fixed points.
  static CycleType single_cycle(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("cycle length out of range");
    std::vector<int> parts{i};
    parts.insert(parts.end(), n - i, 1);
    return CycleType(Partition(std::move(parts)));
  }

  static CycleType identity(int n) { return CycleType(Partition(std::vector<int>(n, 1))); }

  const Partition& shape() const noexcept { return shape_; }
  int n() const noexcept { return shape_.size(); }
  int multiplicity(int i) const { return shape_.multiplicity(i); }

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  Partition shape_;
};

// z_mu = prod_i i^{m_i} m_i!
inline mpz_class z_of(const Partition& mu) {
  mpz_class z = 1;
  const auto& parts = mu.parts();
  for (std::size_t a = 0; a < parts.size();) {
    std::size_t b = a;
    while (b < parts.size() && parts[b] == parts[a]) ++b;
    const int m = static_cast<int>(b - a);
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[a]),
                  static_cast<unsigned long>(m));
    z *= power * factorial(m);
    a = b;
  }
  return z;
}

inline mpz_class z_of(const CycleType& mu) { return z_of(mu.shape()); }

inline mpz_class class_size(const CycleType& mu) {
  mpz_class out = factorial(mu.n());
  const mpz_class z = z_of(mu);
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), z.get_mpz_t());
  return out;
}

namespace detail {

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Process-wide memo for character values. Values are deterministic, so a
// racing double insert stores the same number twice.
class CharacterCache {
 public:
  static CharacterCache& instance() {
    static CharacterCache cache;
    return cache;
  }

  bool lookup(const std::vector<int>& key, mpz_class& out) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }

  void store(std::vector<int> key, const mpz_class& value) {
    std::unique_lock lock(mutex_);
    table_.insert_or_assign(std::move(key), value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::vector<int>, mpz_class, VectorHash> table_;
};

// mu_parts is weakly decreasing; mu_parts[start..] is the part of the cycle
// type still to be stripped.
inline mpz_class mn_recurse(const Partition& lambda, const std::vector<int>& mu_parts,
                            std::size_t start) {
  if (lambda.empty()) return 1;
  // Only fixed points left: the value is the dimension.
  if (mu_parts[start] == 1) return dimension(lambda);

  std::vector<int> key = lambda.parts();
  key.push_back(-1);
  key.insert(key.end(), mu_parts.begin() + static_cast<std::ptrdiff_t>(start), mu_parts.end());
  auto& cache = CharacterCache::instance();
  mpz_class value;
  if (cache.lookup(key, value)) return value;

  value = 0;
  for (const RimHook& hook : removable_rim_hooks(lambda, mu_parts[start])) {
    mpz_class term = mn_recurse(hook.inner, mu_parts, start + 1);
    if (hook.leg_length % 2) value -= term;
    else value += term;
  }
  cache.store(std::move(key), value);
  return value;
}

}  // namespace detail

// chi^lambda(mu) by the Murnaghan-Nakayama rule, stripping the largest
// remaining part of mu first.
inline mpz_class character_value(const Partition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.n())
    throw std::invalid_argument("character_value: |lambda| = " + std::to_string(lambda.size()) +
                                " but |mu| = " + std::to_string(mu.n()));
  if (lambda.empty()) return 1;
  return detail::mn_recurse(lambda, mu.shape().parts(), 0);
}

// A class function of S_n written as sum_lambda c_lambda chi^lambda.
struct ClassFunctionDecomposition {
  int n = 0;
  std::map<Partition, mpq_class> coefficients;

  // Adds c to the coefficient of lambda, dropping it if it cancels to zero.
  void add(const Partition& lambda, const mpq_class& c) {
    if (lambda.size() != n)
      throw std::invalid_argument("decomposition term " + lambda.str() +
                                  " does not partition " + std::to_string(n));
    if (c == 0) return;
    auto [it, inserted] = coefficients.try_emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coefficients.erase(it);
    }
  }

  mpq_class at(const Partition& lambda) const {
    auto it = coefficients.find(lambda);
    return it == coefficients.end() ? mpq_class(0) : it->second;
  }

  friend bool operator==(const ClassFunctionDecomposition&,
                         const ClassFunctionDecomposition&) = default;
};

// a_j = (1/j)(chi^(n) + sum_{i<j} (-1)^i chi^(n-j, j-i, 1^i)), valid for
// 1 <= j <= n/2.
inline ClassFunctionDecomposition aj_decomposition(int n, int j) {
  if (j < 1) throw std::invalid_argument("j must be at least 1");
  if (2 * j > n) throw std::domain_error("formula requires n >= 2j");
  ClassFunctionDecomposition out{n, {}};
  const mpq_class inv_j(1, j);
  out.add(Partition{n}, inv_j);
  for (int i = 0; i < j; ++i) {
    std::vector<int> parts{n - j, j - i};
    parts.insert(parts.end(), i, 1);
    out.add(Partition(std::move(parts)), i % 2 ? mpq_class(-inv_j) : inv_j);
  }
  return out;
}

inline mpq_class evaluate(const ClassFunctionDecomposition& decomp, const CycleType& mu) {
  if (decomp.n != mu.n()) throw std::invalid_argument("evaluate: size mismatch");
  mpq_class total = 0;
  for (const auto& [lambda, c] : decomp.coefficients)
    total += c * mpq_class(character_value(lambda, mu));
  return total;
}

// Decomposes an arbitrary class function f (given on cycle types) by
// orthogonality: c_lambda = sum_mu f(mu) chi^lambda(mu) / z_mu. Cost grows
// with p(n)^2, so this is for small n.
inline ClassFunctionDecomposition decompose_class_function(
    int n, const std::function<mpq_class(const CycleType&)>& f) {
  ClassFunctionDecomposition out{n, {}};
  const std::vector<Partition> shapes = partitions_of(n);
  std::vector<mpq_class> weighted;
  weighted.reserve(shapes.size());
  for (const Partition& mu : shapes) {
    mpq_class w = f(CycleType(mu));
    w /= mpq_class(z_of(mu));
    weighted.push_back(w);
  }
  for (const Partition& lambda : shapes) {
    mpq_class c = 0;
    for (std::size_t m = 0; m < shapes.size(); ++m)
      if (weighted[m] != 0) c += weighted[m] * mpq_class(character_value(lambda, CycleType(shapes[m])));
    out.add(lambda, c);
  }
  return out;
}

}  // namespace cyclemix
