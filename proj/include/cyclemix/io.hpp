#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

#include "cyclemix/abacus.hpp"
#include "cyclemix/characters.hpp"
#include "cyclemix/mn_bratteli.hpp"
#include "cyclemix/sim.hpp"
#include "cyclemix/walk.hpp"

namespace cyclemix::io {

using json = nlohmann::json;

inline json to_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j) {
  return Partition(j.get<std::vector<int>>());
}

// Rationals as "p/q", integers as "p".
inline std::string rational_string(const mpq_class& q) { return q.get_str(); }

inline mpq_class parse_rational(const std::string& text) {
  mpq_class q(text, 10);
  q.canonicalize();
  return q;
}

inline json to_json(const ClassFunctionDecomposition& d) {
  json terms = json::array();
  for (const auto& [lambda, c] : d.coefficients)
    terms.push_back({{"partition", to_json(lambda)}, {"coeff", rational_string(c)}});
  return {{"n", d.n}, {"terms", terms}};
}

inline ClassFunctionDecomposition class_function_from_json(const json& j) {
  ClassFunctionDecomposition d{j.at("n").get<int>(), {}};
  for (const auto& term : j.at("terms"))
    d.add(partition_from_json(term.at("partition")),
          parse_rational(term.at("coeff").get<std::string>()));
  return d;
}

inline json to_json(const VirtualDecomposition& d) {
  json terms = json::array();
  for (const auto& [lambda, c] : d.coefficients)
    terms.push_back({{"partition", to_json(lambda)}, {"coeff", c.get_str()}});
  return {{"n", d.level_size}, {"terms", terms}};
}

inline json abacus_report(const Partition& lambda, int j) {
  const QuotientCore qc = core_and_quotient(lambda, j);
  const AbacusSign sign = abacus_sign(lambda, j);
  json quotient = json::array();
  for (const auto& q : qc.quotient) quotient.push_back(to_json(q));
  return {{"partition", to_json(lambda)},
          {"j", j},
          {"core", to_json(qc.core)},
          {"quotient", quotient},
          {"R", rim_tableau_count(lambda, j).get_str()},
          {"sign", sign.sign},
          {"sigma", sign.sigma},
          {"bead_count", sign.bead_count},
          {"core_empty", sign.core_empty}};
}

inline std::string schedule_name(Schedule s) {
  switch (s) {
    case Schedule::kFixed: return "fixed";
    case Schedule::kLinear: return "linear";
    case Schedule::kLinearPerCycle: return "linear-per-cycle";
    case Schedule::kNLogN: return "nlogn";
  }
  return "fixed";
}

inline json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

inline json to_json(const sim::EmpiricalSummary& s) {
  const auto& cfg = s.config;
  json stats = json::array();
  for (const auto& st : s.statistics) {
    stats.push_back({{"j", st.j},
                     {"histogram", st.histogram},
                     {"moments", std::vector<double>(std::begin(st.moments), std::end(st.moments))},
                     {"mean", st.mean},
                     {"standard_error", st.standard_error},
                     {"reference_rate", optional_number(st.reference_rate)},
                     {"z_score", optional_number(st.z_score)},
                     {"tv_distance", optional_number(st.tv_distance)}});
  }
  return {{"config",
           {{"walk", cfg.spec.name()},
            {"n", cfg.spec.n},
            {"steps", cfg.spec.steps},
            {"schedule", schedule_name(cfg.schedule)},
            {"c", cfg.c},
            {"trials", cfg.trials},
            {"seed", cfg.seed},
            {"tracked_js", cfg.tracked_js}}},
          {"statistics", stats}};
}

}  // namespace cyclemix::io
