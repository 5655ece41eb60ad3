#pragma once

// Serialization and experiment presets.
//
// Every document written here is deterministic: object keys are emitted in
// sorted order, rationals as "P/Q" strings, bit vectors as '0'/'1' strings
// with x_1 leftmost. Re-running a preset with the same seed reproduces its
// artifacts byte for byte.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boolkern/adversarial.hpp"
#include "boolkern/bitvec.hpp"
#include "boolkern/exact.hpp"
#include "boolkern/reduction.hpp"

namespace boolkern::harness {

enum class ExitCode : int {
  Ok = 0,
  Internal = 1,
  Usage = 2,               // bad command line, unknown preset, bad config
  GuardExceeded = 3,
  AssertionFailure = 4,
  ParameterViolation = 5,
  GenerationFailed = 6,
  InvalidInput = 7,        // malformed value or length mismatch
  ConsistencyViolation = 8,
};

ExitCode exit_code_for(const std::exception& e);

struct TraceRecord {
  std::size_t step = 0;  // 1-based
  std::string example;
  Label label = Label::Negative;
  Label prediction = Label::Negative;
  bool mistake = false;
  ExactRat score;
  std::optional<reduction::Annotation> annotation;

  bool operator==(const TraceRecord&) const = default;
};

std::string trace_to_json(const std::vector<TraceRecord>& trace);
std::vector<TraceRecord> trace_from_json(const std::string& text);

// step,prediction,label,mistake,score_num,score_den
std::string summary_csv(const std::vector<TraceRecord>& trace);
// step,cumulative_mistakes
std::string emit_plotdata(const std::vector<TraceRecord>& trace);

// One {"x": "0101", "label": 1} object per line; blank lines are skipped.
std::vector<LabeledExample> parse_stream_jsonl(const std::string& text);
std::string stream_to_jsonl(const std::vector<LabeledExample>& stream);

std::string hard_set_to_json(const adversarial::HardSet& hs);
adversarial::HardSet hard_set_from_json(const std::string& text);

// "1,2;1,3" -> {(1,2), (1,3)}
std::vector<std::pair<std::size_t, std::size_t>> parse_clauses(const std::string& text);
// {"vars": 3, "clauses": [[1,2],[1,3]]}
reduction::MonotoneCnf cnf_from_json(const std::string& text);
std::string cnf_to_json(const reduction::MonotoneCnf& cnf);

std::string kwp_instance_to_json(const reduction::KwpInstance& inst);
reduction::KwpInstance kwp_instance_from_json(const std::string& text);

std::string inequality_report_to_json(const reduction::InequalityReport& report);
std::string trace_report_to_json(const reduction::TraceReport& report);

struct ExperimentPreset {
  std::string name;
  std::string target;  // adversarial-thm6, adversarial-thm8, remark7, winnow, reduction
  std::map<std::string, std::string> params;
  std::uint64_t seed = 1;
  std::string output_dir;  // relative to the run's out-dir; defaults to the name

  std::string param(const std::string& key) const;  // throws ConfigError when missing
  bool operator==(const ExperimentPreset&) const = default;
};

std::string preset_to_json(const ExperimentPreset& preset);
ExperimentPreset preset_from_json(const std::string& text);

const std::vector<ExperimentPreset>& builtin_presets();
// Throws ConfigError for an unknown name.
ExperimentPreset find_preset(const std::string& name);

struct RunOptions {
  std::filesystem::path out_dir = "out";
  std::optional<std::uint64_t> seed;           // overrides the preset's seed
  std::optional<std::size_t> guard_override;   // support guard for lazy Winnow
};

struct RunResult {
  ExitCode code = ExitCode::Ok;
  std::string message;
  std::vector<std::filesystem::path> files;
  std::map<std::string, std::string> totals;
};

// Writes preset.json, trace.json, summary.csv, plot.csv and totals.csv (plus
// report.json for reductions) under out_dir/<output_dir>. Library errors are
// caught and mapped to their exit code.
RunResult run_preset(const ExperimentPreset& preset, const RunOptions& options = {});

}  // namespace boolkern::harness
