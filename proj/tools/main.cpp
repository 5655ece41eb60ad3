#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "boolkern/adversarial.hpp"
#include "boolkern/errors.hpp"
#include "boolkern/harness.hpp"
#include "boolkern/kernels.hpp"
#include "boolkern/kwp.hpp"
#include "boolkern/lazy_winnow.hpp"
#include "boolkern/monotone.hpp"
#include "boolkern/perceptron.hpp"
#include "boolkern/reduction.hpp"

namespace bk = boolkern;
namespace h = boolkern::harness;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  bool seed_set = false;
  unsigned jobs = 1;
  std::string out_dir = "out";
  std::size_t guard_override = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bk::ConfigError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bk::ConfigError("cannot write " + path.string());
  out << body;
}

std::size_t guard_or_default(const Globals& g) {
  return g.guard_override ? g.guard_override : bk::winnow::kDefaultSupportGuard;
}

void write_run(const Globals& g, const std::string& name, const std::vector<h::TraceRecord>& trace) {
  const std::filesystem::path dir = std::filesystem::path(g.out_dir) / name;
  write_file(dir / "trace.json", h::trace_to_json(trace));
  write_file(dir / "summary.csv", h::summary_csv(trace));
  write_file(dir / "plot.csv", h::emit_plotdata(trace));
}

std::size_t mistakes_in(const std::vector<h::TraceRecord>& trace) {
  std::size_t n = 0;
  for (const auto& r : trace) n += r.mistake ? 1 : 0;
  return n;
}

int print_preset_result(const std::string& name, const h::RunResult& r) {
  if (r.code != h::ExitCode::Ok) {
    std::cerr << name << ": " << r.message << "\n";
    return static_cast<int>(r.code);
  }
  std::cout << name;
  for (const auto& [k, v] : r.totals) std::cout << " " << k << "=" << v;
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean-kernel online learning lab"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "root seed for every derived random stream")
      ->each([&](const std::string&) { g.seed_set = true; });
  app.add_option("--jobs", g.jobs, "presets to run in parallel")->check(CLI::PositiveNumber);
  app.add_option("--out-dir", g.out_dir, "directory for trace and summary artifacts");
  app.add_option("--guard-override", g.guard_override, "support guard for lazy Winnow (max 62)");

  // kernel-eval
  auto* kernel_eval = app.add_subcommand("kernel-eval", "evaluate a Boolean kernel");
  std::string kind_name = "monotone";
  std::size_t k = 0;
  std::string xs, ys;
  kernel_eval->add_option("--kind", kind_name, "all|monotone|bounded|bounded-monotone");
  kernel_eval->add_option("--k", k, "size bound for bounded kinds");
  kernel_eval->add_option("--x", xs)->required();
  kernel_eval->add_option("--y", ys)->required();

  // perceptron-run
  auto* perceptron_run = app.add_subcommand("perceptron-run", "dual kernel Perceptron over a stream");
  std::string theta_text = "0", rate_text = "1", stream_path;
  bool use_bias = false;
  perceptron_run->add_option("--kind", kind_name);
  perceptron_run->add_option("--k", k);
  perceptron_run->add_option("--theta", theta_text);
  perceptron_run->add_option("--rate", rate_text);
  perceptron_run->add_flag("--bias", use_bias);
  perceptron_run->add_option("--stream", stream_path)->required();

  // winnow-run
  auto* winnow_run = app.add_subcommand("winnow-run", "kernel Winnow over monotone monomials");
  std::string alpha_text = "2";
  std::string winnow_mode = "lazy";
  winnow_run->add_option("--alpha", alpha_text);
  winnow_run->add_option("--theta", theta_text);
  winnow_run->add_option("--mode", winnow_mode, "lazy simulator or explicit monomial weights")
      ->check(CLI::IsMember({"lazy", "explicit"}));
  winnow_run->add_option("--stream", stream_path)->required();

  // kwp-decide
  auto* kwp = app.add_subcommand("kwp-decide", "decide a kernel Winnow prediction instance");
  std::string instance_path;
  bool force = false;
  kwp->add_option("--instance", instance_path)->required();
  kwp->add_flag("--force", force, "proceed when S is not monotone consistent");

  // gen-hard-set
  auto* gen = app.add_subcommand("gen-hard-set", "generate a verified hard set");
  bk::adversarial::HardSetParams hp;
  gen->add_option("--n", hp.n);
  gen->add_option("--weight", hp.weight);
  gen->add_option("--cap", hp.intersection_cap);
  gen->add_option("--t", hp.count);

  // adversarial-run
  auto* adv = app.add_subcommand("adversarial-run", "mistake-forcing experiments");
  std::string adv_preset;
  std::string adv_theta;
  adv->add_option("--preset", adv_preset, "thm6|thm8|remark7")->required();
  adv->add_option("--theta", adv_theta, "threshold for remark7");

  // build-reduction
  auto* build = app.add_subcommand("build-reduction", "build a KWP instance from M2SAT");
  std::size_t red_n = 2;
  std::string clauses_text, K_text = "1";
  std::string theta_exp = "m-6";
  std::string output_path;
  build->add_option("--n", red_n)->required();
  build->add_option("--clauses", clauses_text, "e.g. \"1,2;1,3\"")->required();
  build->add_option("--K", K_text)->required();
  build->add_option("--alpha", alpha_text);
  build->add_option("--theta-exp", theta_exp, "theta = 2^E; m-6 by default");
  build->add_option("--output", output_path, "write the instance here instead of stdout");

  // verify-reduction
  auto* verify = app.add_subcommand("verify-reduction", "check every stage claim of an instance");
  verify->add_option("--instance", instance_path)->required();

  // count-sat
  auto* count = app.add_subcommand("count-sat", "count models of a monotone CNF");
  std::string cnf_path;
  count->add_option("--cnf", cnf_path)->required();

  // run-preset / list-presets
  auto* run = app.add_subcommand("run-preset", "run built-in or configured presets");
  std::vector<std::string> preset_names;
  std::vector<std::string> config_paths;
  bool run_all = false;
  run->add_option("names", preset_names, "preset names");
  run->add_option("--config", config_paths, "preset JSON documents");
  run->add_flag("--all", run_all);
  auto* list = app.add_subcommand("list-presets", "list built-in presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(h::ExitCode::Usage);
  }

  try {
    if (g.guard_override > 62) throw bk::ConfigError("--guard-override must be at most 62");

    if (*kernel_eval) {
      const auto kind = bk::kernels::KernelKind::parse(kind_name, k);
      std::cout << bk::to_string(bk::kernels::kernel(kind, bk::BitVec::parse(xs), bk::BitVec::parse(ys)))
                << "\n";
    } else if (*perceptron_run) {
      bk::perceptron::PerceptronConfig config;
      config.kind = bk::kernels::KernelKind::parse(kind_name, k);
      config.threshold = bk::parse_rat(theta_text);
      config.learning_rate = bk::parse_rat(rate_text);
      config.use_bias = use_bias;
      const auto stream = h::parse_stream_jsonl(read_file(stream_path));
      const auto t = bk::perceptron::run(config, stream);
      std::vector<h::TraceRecord> trace;
      for (std::size_t i = 0; i < t.steps.size(); ++i) {
        trace.push_back({i + 1, stream[i].x.to_string(), t.steps[i].label, t.steps[i].prediction,
                         t.steps[i].mistake, t.steps[i].score, std::nullopt});
      }
      write_run(g, "perceptron-run", trace);
      std::cout << "mistakes=" << t.mistake_count
                << " mistake_list_size=" << t.final_state.mistakes().size() << "\n";
    } else if (*winnow_run) {
      const bk::winnow::WinnowConfig config{bk::parse_rat(alpha_text), bk::parse_rat(theta_text)};
      config.validate();
      const auto stream = h::parse_stream_jsonl(read_file(stream_path));
      if (stream.empty()) throw bk::InvalidArgument("winnow-run: empty stream");
      const std::size_t m = stream.front().x.size();
      std::vector<h::TraceRecord> trace;
      std::string footprint;
      if (winnow_mode == "lazy") {
        bk::winnow::SparseMonomialWeights state(config, m, guard_or_default(g));
        for (std::size_t i = 0; i < stream.size(); ++i) {
          const auto o = state.observe(stream[i]);
          trace.push_back({i + 1, stream[i].x.to_string(), stream[i].label, o.prediction, o.mistake,
                           o.score, std::nullopt});
        }
        footprint = " stored_monomials=" + std::to_string(state.exponent_map().size());
      } else {
        const auto order = bk::winnow::nonempty_monomial_order(m);
        bk::winnow::ExplicitWinnowState state(config, order.size());
        for (std::size_t i = 0; i < stream.size(); ++i) {
          if (stream[i].x.size() != m) throw bk::LengthMismatch("winnow-run: stream lengths differ");
          const auto o = state.observe({bk::winnow::nonempty_monomial_features(stream[i].x), stream[i].label});
          trace.push_back({i + 1, stream[i].x.to_string(), stream[i].label, o.prediction, o.mistake,
                           o.score, std::nullopt});
        }
        footprint = " features=" + std::to_string(order.size());
      }
      write_run(g, "winnow-run", trace);
      std::cout << "mistakes=" << mistakes_in(trace) << footprint << "\n";
    } else if (*kwp) {
      const auto inst = h::kwp_instance_from_json(read_file(instance_path));
      bk::winnow::KwpOptions options;
      options.force = force;
      options.support_guard = guard_or_default(g);
      const auto out = bk::winnow::kwp_decide(inst.query(), options);
      if (!out.consistent) {
        std::cerr << "warning: S is not monotone consistent (examples " << out.violation->first
                  << " and " << out.violation->second << ")\n";
      }
      std::cout << "decision=" << (out.decision ? "true" : "false")
                << " score=" << bk::to_string(out.score) << " mistakes=" << out.mistakes << "\n";
    } else if (*gen) {
      hp.seed = g.seed;
      std::cout << h::hard_set_to_json(bk::adversarial::gen_hard_set(hp));
    } else if (*adv) {
      std::string name;
      if (adv_preset == "thm6") {
        name = "thm6-desk";
      } else if (adv_preset == "thm8") {
        name = "thm8-desk";
      } else if (adv_preset == "remark7") {
        name = "remark7-negative";
      } else {
        throw bk::ConfigError("unknown adversarial preset '" + adv_preset + "'");
      }
      auto preset = h::find_preset(name);
      if (!adv_theta.empty()) {
        if (adv_preset != "remark7") throw bk::ConfigError("--theta applies to remark7 only");
        preset.params["theta"] = adv_theta;
        if (!bk::adversarial::within_standard_regime(bk::parse_rat(adv_theta), 320) &&
            bk::parse_rat(adv_theta) >= 0) {
          preset.params["n"] = "4";
        }
        preset.name = preset.output_dir = "remark7";
      }
      h::RunOptions options{g.out_dir, std::nullopt, std::nullopt};
      if (g.seed_set) options.seed = g.seed;
      return print_preset_result(preset.name, h::run_preset(preset, options));
    } else if (*build) {
      bk::reduction::M2SatInstance f;
      f.n = red_n;
      f.clauses = h::parse_clauses(clauses_text);
      f.K = bk::parse_int(K_text);
      const bk::ExactRat alpha = bk::parse_rat(alpha_text);
      const std::int64_t e = theta_exp == "m-6" ? bk::reduction::reduction_width(red_n, alpha) - 6
                                                : bk::to_int64(bk::parse_int(theta_exp));
      const auto built = bk::reduction::build_kwp(f, alpha, bk::ipow(bk::ExactRat(2), e));
      const std::string body = h::kwp_instance_to_json(built.instance);
      if (output_path.empty()) {
        std::cout << body;
      } else {
        write_file(output_path, body);
        std::cout << "m=" << built.instance.m << " examples=" << built.instance.sequence.size()
                  << " p=" << bk::to_string(built.p) << "\n";
      }
    } else if (*verify) {
      const auto inst = h::kwp_instance_from_json(read_file(instance_path));
      const auto& f = inst.source;
      if (f.n == 0) throw bk::InvalidArgument("verify-reduction: instance has no source formula");
      const auto params = bk::reduction::compute_params(f.n, inst.alpha, inst.theta);
      const auto ineq = bk::reduction::verify_inequalities(params, f, f.K);
      const auto consistency = bk::reduction::check_monotone_consistent(inst.sequence);
      std::cout << "{\"consistent\": " << (consistency.consistent ? "true" : "false")
                << ",\n\"inequalities\":\n" << h::inequality_report_to_json(ineq);
      std::cout.flush();
      const auto report = bk::reduction::verify_trace(inst, f, f.K);
      std::cout << ",\"trace\":\n" << h::trace_report_to_json(report) << "}\n";
      if (!consistency.consistent) return static_cast<int>(h::ExitCode::ConsistencyViolation);
      if (!ineq.all_pass()) return static_cast<int>(h::ExitCode::ParameterViolation);
    } else if (*count) {
      std::cout << bk::to_string(bk::reduction::count_sat(h::cnf_from_json(read_file(cnf_path))))
                << "\n";
    } else if (*list) {
      for (const auto& p : h::builtin_presets()) {
        std::cout << p.name << "\t" << p.target;
        for (const auto& [key, value] : p.params) std::cout << " " << key << "=" << value;
        std::cout << "\n";
      }
    } else if (*run) {
      std::vector<h::ExperimentPreset> presets;
      if (run_all) presets = h::builtin_presets();
      for (const auto& name : preset_names) presets.push_back(h::find_preset(name));
      for (const auto& path : config_paths) presets.push_back(h::preset_from_json(read_file(path)));
      if (presets.empty()) throw bk::ConfigError("run-preset: no presets named");

      h::RunOptions options{g.out_dir, std::nullopt, std::nullopt};
      if (g.seed_set) options.seed = g.seed;
      if (g.guard_override) options.guard_override = g.guard_override;

      std::vector<h::RunResult> results(presets.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i = next++; i < presets.size(); i = next++) {
          results[i] = h::run_preset(presets[i], options);
        }
      };
      std::vector<std::thread> pool;
      const unsigned threads = std::min<std::size_t>(g.jobs, presets.size());
      for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
      worker();
      for (auto& t : pool) t.join();

      int rc = 0;
      for (std::size_t i = 0; i < presets.size(); ++i) {
        const int code = print_preset_result(presets[i].name, results[i]);
        if (rc == 0) rc = code;
      }
      return rc;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(h::exit_code_for(e));
  }
  return 0;
}
