#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclemix/characters.hpp"
#include "cyclemix/mn_bratteli.hpp"
#include "cyclemix/partition.hpp"

namespace cyclemix {

enum class WalkKind { kStar, kICycle };

// Star: multiply by a uniform transposition (1 u), 2 <= u <= n (the identity
// step is excluded). ICycle: multiply by a uniform i-cycle.
struct WalkSpec {
  WalkKind kind = WalkKind::kStar;
  int cycle_length = 2;  // i; only read for kICycle
  int n = 2;
  std::int64_t steps = 0;

  static WalkSpec star(int n, std::int64_t steps) {
    WalkSpec s{WalkKind::kStar, 2, n, steps};
    s.validate();
    return s;
  }
  static WalkSpec icycle(int i, int n, std::int64_t steps) {
    WalkSpec s{WalkKind::kICycle, i, n, steps};
    s.validate();
    return s;
  }

  void validate() const {
    if (steps < 0) throw std::invalid_argument("step count must be nonnegative");
    if (kind == WalkKind::kStar && n < 2)
      throw std::invalid_argument("star walk requires n >= 2");
    if (kind == WalkKind::kICycle && (cycle_length < 2 || cycle_length > n))
      throw std::invalid_argument("i-cycle walk requires 2 <= i <= n");
  }

  std::string name() const {
    return kind == WalkKind::kStar ? std::string("star")
                                   : "icycle" + std::to_string(cycle_length);
  }
};

inline mpq_class pow_exact(const mpq_class& base, std::int64_t k) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(k));
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

// Tr(Q-hat(S^lambda)^k) = sum over corners d_{lambda^i} ((lambda_i - i)/(n-1))^k.
inline mpq_class star_trace(const Partition& lambda, std::int64_t k) {
  const int n = lambda.size();
  if (n < 2) throw std::invalid_argument("star walk requires n >= 2");
  mpq_class total = 0;
  for (const CornerRemoval& corner : inner_corner_removals(lambda)) {
    mpq_class ratio(lambda[corner.row - 1] - corner.row, n - 1);
    ratio.canonicalize();
    total += mpq_class(dimension(corner.result)) * pow_exact(ratio, k);
  }
  return total;
}

// chi^lambda(i, 1^{n-i}) / d_lambda.
inline mpq_class icycle_ratio(const Partition& lambda, int i) {
  const int n = lambda.size();
  if (i < 2 || i > n) throw std::invalid_argument("i-cycle length must satisfy 2 <= i <= n");
  mpq_class ratio(character_value(lambda, CycleType::single_cycle(n, i)), dimension(lambda));
  ratio.canonicalize();
  return ratio;
}

// Tr(P_i-hat(S^lambda)^k) = d_lambda (chi^lambda(i,1^{n-i}) / d_lambda)^k.
inline mpq_class icycle_trace(const Partition& lambda, int i, std::int64_t k) {
  return mpq_class(dimension(lambda)) * pow_exact(icycle_ratio(lambda, i), k);
}

inline mpq_class walk_trace(const Partition& lambda, const WalkSpec& spec) {
  return spec.kind == WalkKind::kStar ? star_trace(lambda, spec.steps)
                                      : icycle_trace(lambda, spec.cycle_length, spec.steps);
}

// E_{P^{*k}}[upsilon] = sum_lambda c_lambda Tr(P-hat(S^lambda)^k), starting
// from the identity.
inline mpq_class exact_moment(const ClassFunctionDecomposition& decomp, const WalkSpec& spec) {
  spec.validate();
  if (decomp.n != spec.n)
    throw std::invalid_argument("decomposition is for S_" + std::to_string(decomp.n) +
                                " but the walk is on S_" + std::to_string(spec.n));
  mpq_class total = 0;
  for (const auto& [lambda, c] : decomp.coefficients) total += c * walk_trace(lambda, spec);
  return total;
}

// Largest n for which the orthogonality fallback in moment_decomposition runs.
inline constexpr int kMaxOrthogonalityN = 20;

// Decomposition of (a_j)^r: the closed-form route when n >= 2rj, otherwise
// character orthogonality for small n.
inline ClassFunctionDecomposition moment_decomposition(int n, int j, int r) {
  if (j < 1 || j > n) throw std::invalid_argument("cycle length j must satisfy 1 <= j <= n");
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  if (n >= 2 * r * j) return ajr_decomposition(n, j, r);
  if (r == 1 && n >= 2 * j) return aj_decomposition(n, j);
  if (n > kMaxOrthogonalityN)
    throw std::domain_error("no decomposition route for n < 2rj beyond n = " +
                            std::to_string(kMaxOrthogonalityN));
  return decompose_class_function(n, [j, r](const CycleType& mu) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(mu.multiplicity(j)),
                  static_cast<unsigned long>(r));
    return mpq_class(v);
  });
}

// r-th moment of Poisson(rate): sum_a S(r,a) rate^a.
inline double poisson_moment(double rate, int r) {
  if (rate < 0) throw std::invalid_argument("Poisson rate must be nonnegative");
  double total = 0;
  for (int a = 0; a <= r; ++a) total += stirling2(r, a).get_d() * std::pow(rate, a);
  return total;
}

// j^{-r} sum_t (-1)^t e^{-tjc} c^j_{t,r}: the limiting r-th moment of a_j
// after cn star steps (or cn/i random i-cycles). c may be +infinity.
inline double limiting_jcycle_moment(int j, int r, double c) {
  if (j < 2) throw std::invalid_argument("limiting j-cycle moment needs j >= 2");
  if (!(c >= 0)) throw std::invalid_argument("c must be nonnegative");
  double total = 0;
  for (int t = 0; t <= r; ++t) {
    const double decay = t == 0 ? 1.0 : std::exp(-static_cast<double>(t) * j * c);
    total += (t % 2 ? -1.0 : 1.0) * decay * cluster_coeff(t, r, j).get_d();
  }
  return total / std::pow(static_cast<double>(j), r);
}

// sum_a S(r,a) (1 + e^{-c})^a: the limiting r-th moment of fixed points after
// n ln n + cn star steps.
inline double limiting_fixedpoint_moment(int r, double c) {
  const double base = 1.0 + std::exp(-c);
  double total = 0;
  for (int a = 0; a <= r; ++a) total += stirling2(r, a).get_d() * std::pow(base, a);
  return total;
}

// How a step count is derived from n and a real parameter c.
enum class Schedule {
  kFixed,           // k given directly
  kLinear,          // k = floor(c n)
  kLinearPerCycle,  // k = floor(c n / i), i-cycle walk only
  kNLogN,           // star: floor(n ln n + c n); i-cycle: floor(n ln n / i + c n)
};

inline std::int64_t steps_for(Schedule schedule, WalkKind kind, int i, int n, double c) {
  const double nd = n;
  switch (schedule) {
    case Schedule::kLinear:
      return static_cast<std::int64_t>(std::floor(c * nd));
    case Schedule::kLinearPerCycle:
      if (kind != WalkKind::kICycle)
        throw std::invalid_argument("the per-cycle schedule applies to the i-cycle walk only");
      return static_cast<std::int64_t>(std::floor(c * nd / i));
    case Schedule::kNLogN: {
      const double base = kind == WalkKind::kStar ? nd * std::log(nd) : nd * std::log(nd) / i;
      return static_cast<std::int64_t>(std::floor(base + c * nd));
    }
    case Schedule::kFixed:
      break;
  }
  throw std::invalid_argument("fixed schedule has no derived step count");
}

// Poisson rate of the limiting law of a_j for a walk run on `schedule`, or
// nullopt when no Poisson limit applies.
inline std::optional<double> reference_rate(WalkKind kind, int i, Schedule schedule, int j,
                                            double c) {
  if (j == 1) {
    if (schedule != Schedule::kNLogN) return std::nullopt;
    return kind == WalkKind::kStar ? 1.0 + std::exp(-c) : 1.0 + std::exp(-i * c);
  }
  switch (schedule) {
    case Schedule::kLinear:
      return kind == WalkKind::kStar ? (1.0 - std::exp(-j * c)) / j
                                     : (1.0 - std::exp(-static_cast<double>(i) * j * c)) / j;
    case Schedule::kLinearPerCycle:
      if (kind != WalkKind::kICycle) return std::nullopt;
      return (1.0 - std::exp(-j * c)) / j;
    case Schedule::kNLogN:
      return 1.0 / j;
    case Schedule::kFixed:
      break;
  }
  return std::nullopt;
}

// The stated limiting r-th moment for the same setting as reference_rate.
inline std::optional<double> limit_moment(WalkKind kind, int i, Schedule schedule, int j, int r,
                                          double c) {
  if (j == 1) {
    if (schedule != Schedule::kNLogN) return std::nullopt;
    return limiting_fixedpoint_moment(r, kind == WalkKind::kStar ? c : i * c);
  }
  switch (schedule) {
    case Schedule::kLinear:
      return limiting_jcycle_moment(j, r, kind == WalkKind::kStar ? c : i * c);
    case Schedule::kLinearPerCycle:
      if (kind != WalkKind::kICycle) return std::nullopt;
      return limiting_jcycle_moment(j, r, c);
    case Schedule::kNLogN:
      return limiting_jcycle_moment(j, r, std::numeric_limits<double>::infinity());
    case Schedule::kFixed:
      break;
  }
  return std::nullopt;
}

struct MomentReport {
  WalkSpec spec;
  int j = 1;
  int r = 1;
  mpq_class exact_moment;
  double limit_moment = std::numeric_limits<double>::quiet_NaN();
  double poisson_reference = std::numeric_limits<double>::quiet_NaN();

  static std::string csv_header() {
    return "n,j,r,k,exact_moment,limit_moment,poisson_reference";
  }

  std::string csv_row() const {
    std::ostringstream os;
    os.precision(17);
    os << spec.n << ',' << j << ',' << r << ',' << spec.steps << ',' << exact_moment.get_str()
       << ',' << limit_moment << ',' << poisson_reference;
    return os.str();
  }
};

inline MomentReport moment_report(const WalkSpec& spec, int j, int r, Schedule schedule = Schedule::kFixed,
                                  double c = 0) {
  MomentReport out;
  out.spec = spec;
  out.j = j;
  out.r = r;
  out.exact_moment = exact_moment(moment_decomposition(spec.n, j, r), spec);
  if (auto m = limit_moment(spec.kind, spec.cycle_length, schedule, j, r, c)) out.limit_moment = *m;
  if (auto rate = reference_rate(spec.kind, spec.cycle_length, schedule, j, c))
    out.poisson_reference = poisson_moment(*rate, r);
  return out;
}

// One grid point of an asymptotic comparison.
struct ConvergenceRow {
  int n = 0;
  double finite = 0;
  double limit = 0;
  double error() const { return std::abs(finite - limit); }
};

namespace asymptotics {

inline Partition ambient(int n, const Partition& lambda_bar) {
  return Partition::with_first_row(n - lambda_bar.size(), lambda_bar);
}

inline double to_double(const mpq_class& q) { return q.get_d(); }

// d_{lambda^1} / n^t against d_{lambda-bar} / t!, lambda = (n - t, lambda-bar).
inline std::vector<ConvergenceRow> first_row_dimension(const Partition& lambda_bar,
                                                       const std::vector<int>& n_grid) {
  const int t = lambda_bar.size();
  const double limit = dimension(lambda_bar).get_d() / factorial(t).get_d();
  std::vector<ConvergenceRow> rows;
  for (int n : n_grid) {
    const Partition lambda1 = ambient(n - 1, lambda_bar);
    mpz_class nt;
    mpz_ui_pow_ui(nt.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(t));
    rows.push_back({n, dimension(lambda1).get_d() / nt.get_d(), limit});
  }
  return rows;
}

// Star trace after floor(n ln n + cn) steps against e^{-tc} d_{lambda-bar}/t!.
inline std::vector<ConvergenceRow> star_trace_nlogn(const Partition& lambda_bar, double c,
                                                    const std::vector<int>& n_grid) {
  const int t = lambda_bar.size();
  const double limit =
      std::exp(-t * c) * dimension(lambda_bar).get_d() / factorial(t).get_d();
  std::vector<ConvergenceRow> rows;
  for (int n : n_grid) {
    const auto k = steps_for(Schedule::kNLogN, WalkKind::kStar, 2, n, c);
    rows.push_back({n, to_double(star_trace(ambient(n, lambda_bar), k)), limit});
  }
  return rows;
}

// Star trace after floor(cn) steps, normalized by d_{lambda^1}, against e^{-tc}.
inline std::vector<ConvergenceRow> star_trace_linear(const Partition& lambda_bar, double c,
                                                     const std::vector<int>& n_grid) {
  const int t = lambda_bar.size();
  std::vector<ConvergenceRow> rows;
  for (int n : n_grid) {
    const auto k = steps_for(Schedule::kLinear, WalkKind::kStar, 2, n, c);
    const mpq_class trace = star_trace(ambient(n, lambda_bar), k);
    rows.push_back({n, to_double(trace / mpq_class(dimension(ambient(n - 1, lambda_bar)))),
                    std::exp(-t * c)});
  }
  return rows;
}

// Character ratio on (i, 1^{n-i}) against its first-order expansion 1 - it/n.
inline std::vector<ConvergenceRow> icycle_character_ratio(const Partition& lambda_bar, int i,
                                                          const std::vector<int>& n_grid) {
  const int t = lambda_bar.size();
  std::vector<ConvergenceRow> rows;
  for (int n : n_grid)
    rows.push_back({n, to_double(icycle_ratio(ambient(n, lambda_bar), i)),
                    1.0 - static_cast<double>(i) * t / n});
  return rows;
}

// (chi/d)^{floor(cn/i)} against e^{-tc}.
inline std::vector<ConvergenceRow> icycle_ratio_power(const Partition& lambda_bar, int i, double c,
                                                      const std::vector<int>& n_grid) {
  const int t = lambda_bar.size();
  std::vector<ConvergenceRow> rows;
  for (int n : n_grid) {
    const auto k = steps_for(Schedule::kLinearPerCycle, WalkKind::kICycle, i, n, c);
    rows.push_back({n, to_double(pow_exact(icycle_ratio(ambient(n, lambda_bar), i), k)),
                    std::exp(-t * c)});
  }
  return rows;
}

}  // namespace asymptotics

}  // namespace cyclemix
