#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cyclemix/cyclemix.hpp"
#include "cyclemix/io.hpp"

using namespace cyclemix;
using json = nlohmann::json;

namespace {

struct Options {
  std::string format = "text";
  int n = 0;
  int j = 1;
  int r = 1;
  int i = 2;
  std::int64_t k = -1;
  double c = 0;
  std::string lambda;
  std::optional<int> ambient_n;
  std::optional<int> beads;
  std::string walk = "star";
  std::string schedule = "fixed";
  std::vector<int> js{1};
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string dump_trials;
  int levels = 2;
  int max_n = 7;
};

void add_format(CLI::App* cmd, Options& o, std::vector<std::string> allowed) {
  o.format = allowed.front();
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember(allowed))
      ->capture_default_str();
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t x = 0; x < v.size(); ++x) out += (x ? sep : "") + std::to_string(v[x]);
  return out;
}

Schedule parse_schedule(const std::string& name) {
  if (name == "fixed") return Schedule::kFixed;
  if (name == "linear") return Schedule::kLinear;
  if (name == "linear-per-cycle") return Schedule::kLinearPerCycle;
  if (name == "nlogn") return Schedule::kNLogN;
  throw std::invalid_argument("unknown schedule '" + name + "'");
}

WalkSpec walk_from(const Options& o) {
  WalkSpec spec;
  if (o.walk == "star") {
    spec = WalkSpec{WalkKind::kStar, 2, o.n, 0};
  } else if (o.walk == "icycle") {
    spec = WalkSpec{WalkKind::kICycle, o.i, o.n, 0};
  } else {
    throw std::invalid_argument("unknown walk '" + o.walk + "'");
  }
  const Schedule schedule = parse_schedule(o.schedule);
  if (schedule == Schedule::kFixed) {
    if (o.k < 0) throw std::invalid_argument("fixed schedule needs --k");
    spec.steps = o.k;
  } else {
    spec.steps = steps_for(schedule, spec.kind, spec.cycle_length, spec.n, o.c);
  }
  spec.validate();
  return spec;
}

std::string number_text(double v) {
  if (std::isnan(v)) return "n/a";
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

json number_json(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

int cmd_decompose(const Options& o) {
  const ClassFunctionDecomposition d = ajr_decomposition(o.n, o.j, o.r);
  if (o.format == "json") {
    json out = io::to_json(d);
    out["j"] = o.j;
    out["r"] = o.r;
    std::cout << out.dump() << '\n';
    return 0;
  }
  std::cout << "(a_" << o.j << ")^" << o.r << " on S_" << o.n << ":\n";
  for (const auto& [lambda, coeff] : d.coefficients)
    std::cout << "  " << coeff.get_str() << "  chi^" << lambda.str() << '\n';
  return 0;
}

int cmd_multiplicity(const Options& o) {
  Partition lambda = Partition::parse(o.lambda);
  if (o.ambient_n) {
    if (*o.ambient_n != o.n) throw std::invalid_argument("--ambient-n must equal --n");
    if (lambda.size() > o.n) throw std::invalid_argument("lambda-bar is larger than n");
    lambda = Partition::with_first_row(o.n - lambda.size(), lambda);
  }
  if (lambda.size() != o.n)
    throw std::invalid_argument(lambda.str() + " is not a partition of " + std::to_string(o.n));
  const mpz_class paths = tensor_power(o.n, o.j, o.r).at(lambda);
  std::optional<mpz_class> closed;
  std::string closed_error;
  try {
    closed = closed_form_multiplicity(lambda, o.r, o.j, o.n);
  } catch (const std::domain_error& e) {
    closed_error = e.what();
  }
  if (o.format == "json") {
    json out{{"n", o.n},
             {"j", o.j},
             {"r", o.r},
             {"partition", io::to_json(lambda)},
             {"path_count", paths.get_str()},
             {"closed_form", closed ? json(closed->get_str()) : json(nullptr)},
             {"agree", closed ? json(*closed == paths) : json(nullptr)}};
    if (!closed) out["closed_form_error"] = closed_error;
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "m^" << o.j << "_{" << lambda.str() << "," << o.r << "} on S_" << o.n << '\n'
              << "  path count:  " << paths.get_str() << '\n'
              << "  closed form: " << (closed ? closed->get_str() : "n/a (" + closed_error + ")")
              << '\n';
  }
  return closed && *closed != paths ? 1 : 0;
}

int cmd_sign(const Options& o) {
  const Partition lambda = Partition::parse(o.lambda);
  const AbacusSign s = o.beads ? abacus_sign(lambda, o.j, *o.beads) : abacus_sign(lambda, o.j);
  if (o.format == "json") {
    json out = io::abacus_report(lambda, o.j);
    out["sign"] = s.sign;
    out["sigma"] = s.sigma;
    out["bead_count"] = s.bead_count;
    std::cout << out.dump() << '\n';
    return 0;
  }
  std::cout << "sign:  " << s.sign << '\n' << "sigma: " << join(s.sigma, " ") << '\n'
            << "beads: " << s.bead_count << '\n';
  if (!s.core_empty) std::cout << "note:  the " << o.j << "-core is nonempty\n";
  return 0;
}

int cmd_rimcount(const Options& o) {
  const Partition lambda = Partition::parse(o.lambda);
  if (o.format == "json") {
    std::cout << io::abacus_report(lambda, o.j).dump() << '\n';
    return 0;
  }
  const QuotientCore qc = core_and_quotient(lambda, o.j);
  std::cout << "R_" << o.j << lambda.str() << " = " << rim_tableau_count(lambda, o.j).get_str()
            << '\n'
            << "core:     " << qc.core.str() << '\n'
            << "quotient:";
  for (const auto& q : qc.quotient) std::cout << ' ' << q.str();
  std::cout << '\n';
  return 0;
}

int cmd_moments(const Options& o) {
  const WalkSpec spec = walk_from(o);
  const MomentReport rep = moment_report(spec, o.j, o.r, parse_schedule(o.schedule), o.c);
  if (o.format == "json") {
    std::cout << json{{"walk", spec.name()},
                      {"n", spec.n},
                      {"j", o.j},
                      {"r", o.r},
                      {"k", spec.steps},
                      {"exact_moment", rep.exact_moment.get_str()},
                      {"exact_moment_float", rep.exact_moment.get_d()},
                      {"limit_moment", number_json(rep.limit_moment)},
                      {"poisson_reference", number_json(rep.poisson_reference)}}
                     .dump()
              << '\n';
    return 0;
  }
  std::cout << MomentReport::csv_header() << '\n' << rep.csv_row() << '\n';
  return 0;
}

int cmd_limits(const Options& o) {
  if (o.j < 1) throw std::invalid_argument("j must be at least 1");
  if (o.r < 0) throw std::invalid_argument("r must be nonnegative");
  if (o.c < 0) throw std::invalid_argument("c must be nonnegative");
  const double limit =
      o.j == 1 ? limiting_fixedpoint_moment(o.r, o.c) : limiting_jcycle_moment(o.j, o.r, o.c);
  const double rate = o.j == 1 ? 1.0 + std::exp(-o.c) : (1.0 - std::exp(-o.j * o.c)) / o.j;
  const double poisson = poisson_moment(rate, o.r);
  if (o.format == "json") {
    std::cout << json{{"j", o.j}, {"r", o.r}, {"c", o.c}, {"limit_moment", limit},
                      {"poisson_rate", rate}, {"poisson_moment", poisson}}
                     .dump()
              << '\n';
    return 0;
  }
  std::cout << "limit moment:   " << number_text(limit) << '\n'
            << "poisson rate:   " << number_text(rate) << '\n'
            << "poisson moment: " << number_text(poisson) << '\n';
  return 0;
}

int cmd_simulate(const Options& o) {
  sim::SimConfig config;
  config.spec = walk_from(o);
  config.trials = o.trials;
  config.seed = o.seed;
  config.tracked_js = o.js;
  config.schedule = parse_schedule(o.schedule);
  config.c = o.c;
  config.record_trials = !o.dump_trials.empty();
  const sim::EmpiricalSummary summary =
      sim::run(config, o.threads ? o.threads : sim::default_threads());
  if (config.record_trials) {
    std::ofstream csv(o.dump_trials);
    if (!csv) throw std::runtime_error("cannot write " + o.dump_trials);
    csv << "trial";
    for (int j : config.tracked_js) csv << ",a_" << j;
    csv << '\n';
    const std::size_t tracked = config.tracked_js.size();
    for (std::uint64_t t = 0; t < config.trials; ++t) {
      csv << t;
      for (std::size_t x = 0; x < tracked; ++x) csv << ',' << summary.trial_counts[t * tracked + x];
      csv << '\n';
    }
  }
  if (o.format == "json") {
    std::cout << io::to_json(summary).dump() << '\n';
    return 0;
  }
  std::cout << config.spec.name() << " walk, n = " << config.spec.n
            << ", k = " << config.spec.steps << ", " << config.trials << " trials\n";
  for (const auto& st : summary.statistics) {
    std::cout << "  j = " << st.j << ": mean " << number_text(st.mean) << " (se "
              << number_text(st.standard_error) << ")";
    if (st.reference_rate)
      std::cout << ", poisson rate " << number_text(*st.reference_rate) << ", z "
                << (st.z_score ? number_text(*st.z_score) : "n/a") << ", tv "
                << number_text(*st.tv_distance);
    std::cout << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o) {
  if (o.max_n < 2 || o.max_n > oracle::kDefaultMaxN)
    throw std::invalid_argument("--max-n must lie in 2..7");
  const auto results = verify::run_all(o.max_n);
  bool ok = true;
  json out = json::array();
  for (const auto& res : results) {
    if (o.format == "json") {
      out.push_back({{"check", res.name},
                     {"comparisons", res.comparisons},
                     {"ok", res.ok()},
                     {"counterexample", res.counterexample ? json(*res.counterexample)
                                                           : json(nullptr)}});
    } else {
      std::cout << (res.ok() ? "PASS " : "FAIL ") << res.name << " (" << res.comparisons
                << " comparisons)\n";
      if (!res.ok()) std::cout << "  first counterexample: " << *res.counterexample << '\n';
    }
    ok = ok && res.ok();
  }
  if (o.format == "json") std::cout << json{{"ok", ok}, {"checks", out}}.dump() << '\n';
  return ok ? 0 : 1;
}

int cmd_diagram(const Options& o) {
  const auto levels = bratteli_levels(o.n, o.j, o.levels);
  if (o.format == "dot") {
    std::cout << to_dot(levels, o.j);
    return 0;
  }
  if (o.format == "json") {
    json lv = json::array();
    for (const auto& level : levels) {
      json d = io::to_json(level.decomposition);
      d["half_index"] = level.half_index;
      lv.push_back(d);
    }
    json edges = json::array();
    for (const auto& e : diagram_edges(levels, o.j))
      edges.push_back({{"upper_half_index", e.upper_half_index},
                       {"upper", io::to_json(e.upper)},
                       {"lower", io::to_json(e.lower)},
                       {"leg_length", e.leg_length}});
    std::cout << json{{"n", o.n}, {"j", o.j}, {"levels", lv}, {"edges", edges}}.dump() << '\n';
    return 0;
  }
  for (const auto& level : levels) {
    std::cout << "level " << level.half_index / 2 << (level.half_index % 2 ? ".5" : "") << ':';
    for (const auto& [p, c] : level.decomposition.coefficients)
      std::cout << ' ' << p.str() << ':' << c.get_str();
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and simulated cycle statistics of random walks on S_n"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::string> text_json{"text", "json"};

  auto* decompose = app.add_subcommand("decompose", "Character expansion of (a_j)^r");
  decompose->add_option("--n", o.n)->required();
  decompose->add_option("--j", o.j)->required();
  decompose->add_option("--r", o.r)->required();
  add_format(decompose, o, text_json);

  auto* multiplicity =
      app.add_subcommand("multiplicity", "m^j_{lambda,r} by closed form and path count");
  multiplicity->add_option("--n", o.n)->required();
  multiplicity->add_option("--j", o.j)->required();
  multiplicity->add_option("--r", o.r)->required();
  multiplicity->add_option("--lambda", o.lambda, "Comma-separated parts")->required();
  multiplicity->add_option("--ambient-n", o.ambient_n,
                           "Read --lambda as lambda-bar inside S_n with this n");
  add_format(multiplicity, o, text_json);

  auto* sign = app.add_subcommand("sign", "Abacus sign and sigma in one-line notation");
  sign->add_option("--lambda", o.lambda)->required();
  sign->add_option("--j", o.j)->required();
  sign->add_option("--beads", o.beads, "Bead count (default: smallest multiple of j >= len + j)");
  add_format(sign, o, text_json);

  auto* rimcount = app.add_subcommand("rimcount", "Number of rim-j-hook tableaux");
  rimcount->add_option("--lambda", o.lambda)->required();
  rimcount->add_option("--j", o.j)->required();
  add_format(rimcount, o, text_json);

  auto* moments = app.add_subcommand("moments", "Exact E[a_j^r] after k walk steps");
  moments->add_option("--walk", o.walk)->check(CLI::IsMember({"star", "icycle"}));
  moments->add_option("--i", o.i, "Cycle length of the i-cycle walk");
  moments->add_option("--n", o.n)->required();
  moments->add_option("--k", o.k, "Step count (fixed schedule)");
  moments->add_option("--c", o.c, "Schedule parameter");
  moments->add_option("--schedule", o.schedule)
      ->check(CLI::IsMember({"fixed", "linear", "linear-per-cycle", "nlogn"}));
  moments->add_option("--j", o.j)->required();
  moments->add_option("--r", o.r)->required();
  add_format(moments, o, {"csv", "json"});

  auto* limits = app.add_subcommand("limits", "Limiting moments of a_j");
  limits->add_option("--j", o.j)->required();
  limits->add_option("--r", o.r)->required();
  limits->add_option("--c", o.c)->required();
  add_format(limits, o, text_json);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo cycle counts");
  simulate->add_option("--walk", o.walk)->check(CLI::IsMember({"star", "icycle"}));
  simulate->add_option("--i", o.i);
  simulate->add_option("--n", o.n)->required();
  simulate->add_option("--k", o.k);
  simulate->add_option("--c", o.c);
  simulate->add_option("--schedule", o.schedule)
      ->check(CLI::IsMember({"fixed", "linear", "linear-per-cycle", "nlogn"}));
  simulate->add_option("--j", o.js, "Tracked cycle lengths")->delimiter(',');
  simulate->add_option("--trials", o.trials)->capture_default_str();
  simulate->add_option("--seed", o.seed)->capture_default_str();
  simulate->add_option("--threads", o.threads, "Worker count (default: CYCLE_MIXER_THREADS)");
  simulate->add_option("--dump-trials", o.dump_trials, "Write per-trial counts to this CSV");
  add_format(simulate, o, text_json);

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check against exhaustive enumeration");
  verify_cmd->add_option("--max-n", o.max_n)->capture_default_str();
  add_format(verify_cmd, o, text_json);

  auto* diagram = app.add_subcommand("diagram", "MN_j restriction-induction diagram");
  diagram->add_option("--n", o.n)->required();
  diagram->add_option("--j", o.j)->required();
  diagram->add_option("--levels", o.levels)->capture_default_str();
  add_format(diagram, o, {"dot", "json", "text"});

  CLI11_PARSE(app, argc, argv);

  try {
    if (*decompose) return cmd_decompose(o);
    if (*multiplicity) return cmd_multiplicity(o);
    if (*sign) return cmd_sign(o);
    if (*rimcount) return cmd_rimcount(o);
    if (*moments) return cmd_moments(o);
    if (*limits) return cmd_limits(o);
    if (*simulate) return cmd_simulate(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*diagram) return cmd_diagram(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
