#include <fstream>
#include <string>

#include "boolkern/errors.hpp"
#include "boolkern/harness.hpp"
#include "boolkern/lazy_winnow.hpp"
#include "boolkern/monotone.hpp"
#include "boolkern/perceptron.hpp"
#include "boolkern/rng.hpp"

namespace boolkern::harness {

namespace {

ExperimentPreset make(std::string name, std::string target,
                      std::map<std::string, std::string> params, std::uint64_t seed = 1) {
  ExperimentPreset p;
  p.name = name;
  p.target = std::move(target);
  p.params = std::move(params);
  p.seed = seed;
  p.output_dir = std::move(name);
  return p;
}

std::size_t to_size(const ExperimentPreset& p, const std::string& key) {
  const std::string v = p.param(key);
  try {
    std::size_t used = 0;
    const unsigned long long out = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return static_cast<std::size_t>(out);
  } catch (const std::logic_error&) {
    throw ConfigError("preset " + p.name + ": parameter '" + key + "' is not a natural number");
  }
}

ExactRat to_rat(const ExperimentPreset& p, const std::string& key) {
  try {
    return parse_rat(p.param(key));
  } catch (const InvalidArgument&) {
    throw ConfigError("preset " + p.name + ": parameter '" + key + "' is not a rational");
  }
}

adversarial::HardSetParams hard_set_params(const ExperimentPreset& p, std::uint64_t seed) {
  adversarial::HardSetParams hp;
  hp.n = to_size(p, "n");
  hp.weight = to_size(p, "weight");
  hp.intersection_cap = to_size(p, "cap");
  hp.count = to_size(p, "t");
  hp.seed = seed;
  return hp;
}

std::vector<TraceRecord> perceptron_records(const perceptron::PerceptronConfig& config,
                                            const std::vector<LabeledExample>& stream,
                                            perceptron::DualPerceptronState& state) {
  std::vector<TraceRecord> out;
  out.reserve(stream.size());
  state = perceptron::DualPerceptronState(config);
  for (std::size_t i = 0; i < stream.size(); ++i) {
    const auto outcome = state.observe(stream[i]);
    out.push_back({i + 1, stream[i].x.to_string(), stream[i].label, outcome.prediction,
                   outcome.mistake, outcome.score, std::nullopt});
  }
  return out;
}

std::size_t count_mistakes(const std::vector<TraceRecord>& trace) {
  std::size_t n = 0;
  for (const auto& r : trace) n += r.mistake ? 1 : 0;
  return n;
}

void write_file(RunResult& result, const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << body;
  result.files.push_back(path);
}

struct Artifacts {
  std::vector<TraceRecord> trace;
  std::map<std::string, std::string> totals;
  std::optional<std::string> report;
};

Artifacts run_thm6(const ExperimentPreset& p, std::uint64_t seed) {
  const auto hp = hard_set_params(p, seed);
  const ExactInt margin = adversarial::mistake_forcing_margin(hp.weight, hp.intersection_cap, hp.count);
  if (margin <= 0) {
    throw AssertionFailure("mistake-forcing margin " + to_string(margin) + " is not positive");
  }
  const auto hs = adversarial::gen_hard_set(hp);
  const auto stream = adversarial::build_mistake_sequence(hs);
  perceptron::DualPerceptronState state;
  Artifacts a;
  a.trace = perceptron_records(perceptron::PerceptronConfig{}, stream, state);
  a.totals["mistakes"] = std::to_string(count_mistakes(a.trace));
  a.totals["steps"] = std::to_string(a.trace.size());
  a.totals["margin"] = to_string(margin);
  a.report = hard_set_to_json(hs);
  return a;
}

Artifacts run_thm8(const ExperimentPreset& p, std::uint64_t seed) {
  const auto hs = adversarial::gen_hard_set(hard_set_params(p, seed));
  const adversarial::PacDistribution d(hs);
  const std::size_t samples = to_size(p, "samples");
  const bool prefix = p.param("force_prefix") == "true";
  const auto result = adversarial::pac_experiment(d, samples, seed, prefix);

  std::vector<LabeledExample> stream;
  if (prefix) {
    stream.push_back({d.atom(0), d.label(0)});
    stream.push_back({d.atom(1), d.label(1)});
  }
  for (std::size_t a : d.sample_atoms(samples, seed)) stream.push_back({d.atom(a), d.label(a)});
  perceptron::DualPerceptronState state;
  Artifacts a;
  a.trace = perceptron_records(perceptron::PerceptronConfig{}, stream, state);
  a.totals["mistakes"] = std::to_string(count_mistakes(a.trace));
  a.totals["error"] = to_string(result.error);
  a.totals["distinct_seen"] = std::to_string(result.distinct_seen);
  a.totals["unseen_all_misclassified"] = result.unseen_all_misclassified ? "true" : "false";
  return a;
}

Artifacts run_remark7(const ExperimentPreset& p, std::uint64_t seed) {
  const ExactRat theta = to_rat(p, "theta");
  const std::size_t n = to_size(p, "n");
  adversarial::HardSet hs;
  hs.params.n = n;
  if (sgn(theta) < 0 || adversarial::within_standard_regime(theta, n)) {
    hs = adversarial::gen_hard_set(hard_set_params(p, seed));
  }
  const auto tc = adversarial::threshold_case_sequence(theta, n, hs);
  perceptron::PerceptronConfig config;
  config.threshold = theta;
  perceptron::DualPerceptronState state;
  Artifacts a;
  a.trace = perceptron_records(config, tc.sequence, state);
  a.totals["mistakes"] = std::to_string(count_mistakes(a.trace));
  a.totals["steps"] = std::to_string(a.trace.size());
  a.totals["repetitions"] = std::to_string(tc.repetitions);
  a.totals["target"] = tc.target;
  return a;
}

Artifacts run_winnow(const ExperimentPreset& p, std::uint64_t seed,
                     const std::optional<std::size_t>& guard) {
  const std::size_t m = to_size(p, "m");
  const std::size_t steps = to_size(p, "steps");
  const std::size_t target = to_size(p, "target_size");
  if (target < 1 || target > m) throw ConfigError("preset " + p.name + ": target_size out of range");
  const winnow::WinnowConfig config{to_rat(p, "alpha"), to_rat(p, "theta")};
  config.validate();
  winnow::SparseMonomialWeights state(config, m, guard.value_or(winnow::kDefaultSupportGuard));
  Rng rng(seed, streams::kInstanceSampler);
  Artifacts a;
  for (std::size_t s = 1; s <= steps; ++s) {
    BitVec x(m);
    for (std::size_t i = 1; i <= m; ++i) {
      if (rng.bernoulli(1, 2)) x.set(i);
    }
    bool positive = true;
    for (std::size_t i = 1; i <= target; ++i) positive = positive && x.get(i);
    const LabeledExample e{x, positive ? Label::Positive : Label::Negative};
    const auto outcome = state.observe(e);
    a.trace.push_back({s, x.to_string(), e.label, outcome.prediction, outcome.mistake,
                       outcome.score, std::nullopt});
  }
  a.totals["mistakes"] = std::to_string(count_mistakes(a.trace));
  a.totals["steps"] = std::to_string(steps);
  a.totals["bound"] = to_string(winnow::winnow_bound(
      config.alpha, config.theta, ipow(ExactInt(2), m) - 1, target));
  return a;
}

Artifacts run_reduction(const ExperimentPreset& p, const std::optional<std::size_t>& guard) {
  reduction::M2SatInstance f;
  f.n = to_size(p, "n");
  f.clauses = parse_clauses(p.param("clauses"));
  f.K = parse_int(p.param("K"));
  const ExactRat alpha = to_rat(p, "alpha");
  const std::string theta_exp = p.param("theta_exp");
  std::int64_t e = 0;
  if (theta_exp == "m-6") {
    e = reduction::reduction_width(f.n, alpha) - 6;
  } else {
    e = static_cast<std::int64_t>(to_size(p, "theta_exp"));
  }
  const ExactRat theta = ipow(ExactRat(2), e);

  const auto built = reduction::build_kwp(f, alpha, theta);
  const auto& inst = built.instance;
  const auto consistency = reduction::check_monotone_consistent(inst.sequence);
  if (!consistency.consistent) throw ConsistencyViolation("built sequence is not monotone consistent");
  const auto ineq = reduction::verify_inequalities(built.params, f, f.K);
  if (const auto* bad = ineq.first_failure()) {
    throw ParameterViolation("inequality " + bad->name + " fails");
  }
  const auto report = reduction::verify_trace(inst, f, f.K);

  winnow::SparseMonomialWeights state(winnow::WinnowConfig{alpha, theta}, inst.m,
                                      guard.value_or(winnow::kDefaultSupportGuard));
  Artifacts a;
  a.trace.reserve(inst.sequence.size());
  for (std::size_t i = 0; i < inst.sequence.size(); ++i) {
    const auto& ex = inst.sequence[i];
    const auto outcome = state.observe(ex);
    a.trace.push_back({i + 1, ex.x.to_string(), ex.label, outcome.prediction, outcome.mistake,
                       outcome.score, inst.annotations[i]});
  }
  a.totals["mistakes"] = std::to_string(count_mistakes(a.trace));
  a.totals["steps"] = std::to_string(a.trace.size());
  a.totals["m"] = std::to_string(inst.m);
  a.totals["p"] = to_string(built.p);
  a.totals["models"] = to_string(report.models);
  a.totals["decision"] = report.decision ? "true" : "false";
  a.totals["inequalities"] = ineq.all_pass() ? "all-pass" : "fail";
  a.totals["claims_checked"] = std::to_string(report.claims_checked);
  a.report = "{\"inequalities\":\n" + inequality_report_to_json(ineq) + ",\"trace\":\n" +
             trace_report_to_json(report) + "}\n";
  return a;
}

}  // namespace

const std::vector<ExperimentPreset>& builtin_presets() {
  static const std::vector<ExperimentPreset> presets = {
      make("thm6-desk", "adversarial-thm6",
           {{"n", "320"}, {"weight", "16"}, {"cap", "4"}, {"t", "25"}}),
      make("thm8-desk", "adversarial-thm8",
           {{"n", "320"}, {"weight", "16"}, {"cap", "4"}, {"t", "25"}, {"samples", "100"},
            {"force_prefix", "true"}}),
      make("remark7-negative", "remark7",
           {{"n", "320"}, {"weight", "16"}, {"cap", "4"}, {"t", "25"}, {"theta", "-2"}}),
      make("remark7-large", "remark7", {{"n", "4"}, {"theta", "8"}}),
      make("winnow", "winnow",
           {{"m", "10"}, {"steps", "200"}, {"target_size", "2"}, {"alpha", "2"}, {"theta", "4"}}),
      make("thm9-n2", "reduction",
           {{"n", "2"}, {"clauses", "1,2"}, {"K", "1"}, {"alpha", "2"}, {"theta_exp", "425"}}),
      make("thm9-n3", "reduction",
           {{"n", "3"}, {"clauses", "1,2;2,3"}, {"K", "3"}, {"alpha", "2"}, {"theta_exp", "m-6"}}),
  };
  return presets;
}

ExperimentPreset find_preset(const std::string& name) {
  for (const auto& p : builtin_presets()) {
    if (p.name == name) return p;
  }
  throw ConfigError("unknown preset '" + name + "'");
}

RunResult run_preset(const ExperimentPreset& preset, const RunOptions& options) {
  RunResult result;
  try {
    const std::uint64_t seed = options.seed.value_or(preset.seed);
    Artifacts a;
    if (preset.target == "adversarial-thm6") {
      a = run_thm6(preset, seed);
    } else if (preset.target == "adversarial-thm8") {
      a = run_thm8(preset, seed);
    } else if (preset.target == "remark7") {
      a = run_remark7(preset, seed);
    } else if (preset.target == "winnow") {
      a = run_winnow(preset, seed, options.guard_override);
    } else if (preset.target == "reduction") {
      a = run_reduction(preset, options.guard_override);
    } else {
      throw ConfigError("preset " + preset.name + ": unknown target '" + preset.target + "'");
    }

    const auto dir = options.out_dir / (preset.output_dir.empty() ? preset.name : preset.output_dir);
    std::filesystem::create_directories(dir);
    ExperimentPreset effective = preset;
    effective.seed = seed;
    write_file(result, dir / "preset.json", preset_to_json(effective));
    write_file(result, dir / "trace.json", trace_to_json(a.trace));
    write_file(result, dir / "summary.csv", summary_csv(a.trace));
    write_file(result, dir / "plot.csv", emit_plotdata(a.trace));
    std::string totals = "key,value\n";
    for (const auto& [k, v] : a.totals) totals += k + "," + v + "\n";
    write_file(result, dir / "totals.csv", totals);
    if (a.report) write_file(result, dir / "report.json", *a.report);
    result.totals = std::move(a.totals);
  } catch (const std::exception& e) {
    result.code = exit_code_for(e);
    result.message = e.what();
  }
  return result;
}

}  // namespace boolkern::harness
