#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclemix/abacus.hpp"
#include "cyclemix/characters.hpp"
#include "cyclemix/partition.hpp"

namespace cyclemix {

// A virtual S_n-module: a signed integer combination of Specht modules.
// Zero coefficients are never stored.
struct VirtualDecomposition {
  int level_size = 0;
  std::map<Partition, mpz_class> coefficients;

  static VirtualDecomposition trivial(int n) {
    VirtualDecomposition d{n, {}};
    d.add(Partition{n}, 1);
    return d;
  }

  void add(const Partition& lambda, const mpz_class& c) {
    if (lambda.size() != level_size)
      throw std::invalid_argument("term " + lambda.str() + " does not partition " +
                                  std::to_string(level_size));
    if (c == 0) return;
    auto [it, inserted] = coefficients.try_emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coefficients.erase(it);
    }
  }

  mpz_class at(const Partition& lambda) const {
    auto it = coefficients.find(lambda);
    return it == coefficients.end() ? mpz_class(0) : it->second;
  }

  friend bool operator==(const VirtualDecomposition&, const VirtualDecomposition&) = default;
};

// Level index is counted in half steps: half_index 2r is integer level r.
struct BratteliLevel {
  int half_index = 0;
  VirtualDecomposition decomposition;
  double level() const noexcept { return half_index / 2.0; }
  bool is_integer_level() const noexcept { return half_index % 2 == 0; }
};

// Stirling numbers of the second kind; 0 outside 0 <= a <= r.
inline mpz_class stirling2(int r, int a) {
  if (r < 0 || a < 0 || a > r) return 0;
  std::vector<mpz_class> row(r + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= r; ++m) {
    for (int k = std::min(m, r); k >= 1; --k) row[k] = k * row[k] + row[k - 1];
    row[0] = 0;
  }
  return row[a];
}

inline VirtualDecomposition mn_restrict(const VirtualDecomposition& d, int j) {
  if (d.level_size < j)
    throw std::invalid_argument("mn_restrict: level size " + std::to_string(d.level_size) +
                                " is smaller than j = " + std::to_string(j));
  VirtualDecomposition out{d.level_size - j, {}};
  for (const auto& [lambda, c] : d.coefficients)
    for (const RimHook& hook : removable_rim_hooks(lambda, j))
      out.add(hook.inner, hook.leg_length % 2 ? mpz_class(-c) : c);
  return out;
}

inline VirtualDecomposition mn_induce(const VirtualDecomposition& d, int j) {
  VirtualDecomposition out{d.level_size + j, {}};
  for (const auto& [mu, c] : d.coefficients)
    for (const RimHook& hook : addable_rim_hooks(mu, j, d.level_size + j))
      out.add(hook.outer, hook.leg_length % 2 ? mpz_class(-c) : c);
  return out;
}

// Levels 0, 1/2, ..., r of the MN_j restriction-induction diagram for
// (S_n, S_{n-j}) rooted at the trivial module.
inline std::vector<BratteliLevel> bratteli_levels(int n, int j, int r) {
  if (j < 1) throw std::invalid_argument("j must be at least 1");
  if (n <= j) throw std::domain_error("MN_j diagram requires n > j");
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  std::vector<BratteliLevel> levels;
  levels.push_back({0, VirtualDecomposition::trivial(n)});
  for (int step = 0; step < r; ++step) {
    levels.push_back({2 * step + 1, mn_restrict(levels.back().decomposition, j)});
    levels.push_back({2 * step + 2, mn_induce(levels.back().decomposition, j)});
  }
  return levels;
}

// rho_{psi_j}^{(x) r}: every multiplicity m^j_{lambda,r} as a signed path count.
inline VirtualDecomposition tensor_power(int n, int j, int r) {
  return bratteli_levels(n, j, r).back().decomposition;
}

// c^j_{t,r} = sum_{a=t}^r S(r,a) binom(a,t) j^{r-a}; 0 outside 0 <= t <= r.
inline mpz_class cluster_coeff(int t, int r, int j) {
  if (t < 0 || r < 0 || t > r) return 0;
  mpz_class total = 0;
  for (int a = t; a <= r; ++a) {
    mpz_class jpow;
    mpz_ui_pow_ui(jpow.get_mpz_t(), static_cast<unsigned long>(j),
                  static_cast<unsigned long>(r - a));
    total += stirling2(r, a) * binomial(a, t) * jpow;
  }
  return total;
}

inline void require_stable_range(int n, int j, int r) {
  if (n < 2 * r * j)
    throw std::domain_error("closed form only asserted for n >= 2rj (n = " + std::to_string(n) +
                            ", r = " + std::to_string(r) + ", j = " + std::to_string(j) + ")");
}

// m^j_{lambda,r} = R_j(lambda-bar) sgn(sigma) c^j_{t,r} for lambda = (n - tj,
// lambda-bar); 0 when the first row is not n - tj for some 0 <= t <= r.
inline mpz_class closed_form_multiplicity(const Partition& lambda, int r, int j, int n) {
  if (j < 1) throw std::invalid_argument("j must be at least 1");
  require_stable_range(n, j, r);
  if (lambda.size() != n)
    throw std::invalid_argument(lambda.str() + " is not a partition of " + std::to_string(n));
  const int deficit = n - lambda.first_row();
  if (deficit % j != 0) return 0;
  const int t = deficit / j;
  if (t > r) return 0;
  return inner_multiplicity(lambda.below_first_row(), j) * cluster_coeff(t, r, j);
}

// (a_j)^r = j^{-r} sum_lambda m^j_{lambda,r} chi^lambda.
inline ClassFunctionDecomposition ajr_decomposition(int n, int j, int r) {
  if (j < 1) throw std::invalid_argument("j must be at least 1");
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  require_stable_range(n, j, r);
  ClassFunctionDecomposition out{n, {}};
  if (r == 0) {
    out.add(Partition{n}, 1);
    return out;
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(r));
  for (const auto& [lambda, m] : tensor_power(n, j, r).coefficients) {
    mpq_class c(m, scale);
    c.canonicalize();
    out.add(lambda, c);
  }
  return out;
}

// K^j_r evaluated at the identity: sum_{lambda-bar |- rj} m^j_{lambda-bar}
// d_{(n - rj, lambda-bar)}.
inline mpz_class cluster_identity_check(int j, int r, int n) {
  if (j < 2) throw std::invalid_argument("cluster identity needs j >= 2");
  require_stable_range(n, j, r);
  mpz_class total = 0;
  for (const Partition& bar : partitions_of(r * j)) {
    const mpz_class m = inner_multiplicity(bar, j);
    if (m != 0) total += m * dimension(Partition::with_first_row(n - r * j, bar));
  }
  return total;
}

struct DiagramEdge {
  int upper_half_index;  // the level closer to the root
  Partition upper;
  Partition lower;
  int leg_length;
  bool odd() const noexcept { return leg_length % 2 != 0; }
};

// Edges between nonzero vertices of consecutive levels.
inline std::vector<DiagramEdge> diagram_edges(const std::vector<BratteliLevel>& levels, int j) {
  std::vector<DiagramEdge> edges;
  for (std::size_t h = 0; h + 1 < levels.size(); ++h) {
    const auto& upper = levels[h].decomposition;
    const auto& lower = levels[h + 1].decomposition;
    if (levels[h].is_integer_level()) {
      // Restriction step: integer level above, half level below.
      for (const auto& [lambda, c] : upper.coefficients)
        for (const RimHook& hook : removable_rim_hooks(lambda, j))
          if (lower.coefficients.count(hook.inner))
            edges.push_back({levels[h].half_index, lambda, hook.inner, hook.leg_length});
    } else {
      for (const auto& [mu, c] : upper.coefficients)
        for (const RimHook& hook : addable_rim_hooks(mu, j, mu.size() + j))
          if (lower.coefficients.count(hook.outer))
            edges.push_back({levels[h].half_index, mu, hook.outer, hook.leg_length});
    }
  }
  return edges;
}

inline std::string dot_node_id(int half_index, const Partition& p) {
  std::string id = "L" + std::to_string(half_index) + "_";
  for (int x : p.parts()) id += std::to_string(x) + "_";
  if (p.empty()) id += "empty";
  return id;
}

// Graphviz rendering; odd-leg edges are red.
inline std::string to_dot(const std::vector<BratteliLevel>& levels, int j) {
  std::ostringstream os;
  const int n = levels.empty() ? 0 : levels.front().decomposition.level_size;
  os << "digraph mn_bratteli {\n";
  os << "  label=\"MN_" << j << " restriction-induction diagram, n = " << n << "\";\n";
  os << "  node [shape=box];\n";
  for (const auto& level : levels) {
    os << "  subgraph level_" << level.half_index << " {\n    rank=same;\n";
    for (const auto& [p, c] : level.decomposition.coefficients)
      os << "    " << dot_node_id(level.half_index, p) << " [label=\"" << p.str() << "\\n"
         << c.get_str() << "\"];\n";
    os << "  }\n";
  }
  for (const DiagramEdge& e : diagram_edges(levels, j)) {
    os << "  " << dot_node_id(e.upper_half_index, e.upper) << " -> "
       << dot_node_id(e.upper_half_index + 1, e.lower) << " [dir=none, color="
       << (e.odd() ? "red" : "black") << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cyclemix
