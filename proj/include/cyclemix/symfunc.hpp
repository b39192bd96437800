#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclemix/characters.hpp"
#include "cyclemix/partition.hpp"

namespace cyclemix {

// A homogeneous symmetric function in the power-sum basis.
struct PowerSumVector {
  int degree = 0;
  std::map<Partition, mpq_class> coefficients;

  static PowerSumVector basis(const Partition& mu) {
    PowerSumVector v{mu.size(), {}};
    v.add(mu, 1);
    return v;
  }

  void add(const Partition& mu, const mpq_class& c) {
    if (mu.size() != degree)
      throw std::invalid_argument("p" + mu.str() + " does not have degree " +
                                  std::to_string(degree));
    if (c == 0) return;
    auto [it, inserted] = coefficients.try_emplace(mu, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coefficients.erase(it);
    }
  }

  mpq_class at(const Partition& mu) const {
    auto it = coefficients.find(mu);
    return it == coefficients.end() ? mpq_class(0) : it->second;
  }

  bool is_zero() const noexcept { return coefficients.empty(); }

  friend PowerSumVector operator-(const PowerSumVector& a, const PowerSumVector& b) {
    if (a.degree != b.degree) throw std::invalid_argument("degree mismatch");
    PowerSumVector out = a;
    for (const auto& [mu, c] : b.coefficients) out.add(mu, -c);
    return out;
  }

  friend bool operator==(const PowerSumVector&, const PowerSumVector&) = default;
};

// Concatenation of parts as multisets: (4,2,1) u (3,3,1) = (4,3,3,2,1,1).
inline Partition concat(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

// p_mu * p_nu = delta_{mu,nu} z_mu p_mu, extended bilinearly.
inline PowerSumVector kronecker(const PowerSumVector& f, const PowerSumVector& g) {
  if (f.degree != g.degree)
    throw std::invalid_argument("kronecker: degrees " + std::to_string(f.degree) + " and " +
                                std::to_string(g.degree) + " differ");
  PowerSumVector out{f.degree, {}};
  for (const auto& [mu, c] : f.coefficients) {
    auto it = g.coefficients.find(mu);
    if (it != g.coefficients.end()) out.add(mu, c * it->second * mpq_class(z_of(mu)));
  }
  return out;
}

inline PowerSumVector mul_pj(const PowerSumVector& f, int j) {
  if (j < 1) throw std::invalid_argument("j must be at least 1");
  PowerSumVector out{f.degree + j, {}};
  for (const auto& [mu, c] : f.coefficients) out.add(concat(Partition{j}, mu), c);
  return out;
}

// Adjoint of mul_pj under the Hall inner product:
// p_j^perp p_alpha = (z_alpha / z_gamma) p_gamma when alpha = j u gamma.
inline PowerSumVector perp_pj(const PowerSumVector& f, int j) {
  if (j < 1) throw std::invalid_argument("j must be at least 1");
  if (f.degree < j) return PowerSumVector{0, {}};
  PowerSumVector out{f.degree - j, {}};
  for (const auto& [alpha, c] : f.coefficients) {
    std::vector<int> parts = alpha.parts();
    auto pos = std::find(parts.begin(), parts.end(), j);
    if (pos == parts.end()) continue;
    parts.erase(pos);
    const Partition gamma(std::move(parts));
    mpq_class ratio(z_of(alpha), z_of(gamma));
    ratio.canonicalize();
    out.add(gamma, c * ratio);
  }
  return out;
}

// <f, g> with <p_mu, p_nu> = delta_{mu,nu} z_mu.
inline mpq_class hall_inner(const PowerSumVector& f, const PowerSumVector& g) {
  if (f.degree != g.degree) return 0;
  mpq_class total = 0;
  for (const auto& [mu, c] : f.coefficients) total += c * g.at(mu) * mpq_class(z_of(mu));
  return total;
}

// p_j (p_j^perp f * g) - f * (p_j g); the zero vector whenever the tensor
// identity holds.
inline PowerSumVector tensor_identity_residual(const PowerSumVector& f, const PowerSumVector& g,
                                               int j) {
  if (f.degree != g.degree + j)
    throw std::invalid_argument("tensor identity needs deg f = deg g + j");
  return mul_pj(kronecker(perp_pj(f, j), g), j) - kronecker(f, mul_pj(g, j));
}

}  // namespace cyclemix
