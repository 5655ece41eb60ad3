#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "boolkern/errors.hpp"
#include "boolkern/harness.hpp"
#include "oracles.hpp"

namespace bk = boolkern;
namespace h = boolkern::harness;
namespace fs = std::filesystem;
using bk::BitVec;
using bk::ExactRat;
using bk::Label;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("boolkern_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(ExitCodes, DistinctPerErrorClass) {
  EXPECT_EQ(h::exit_code_for(bk::GuardExceeded("x")), h::ExitCode::GuardExceeded);
  EXPECT_EQ(h::exit_code_for(bk::AssertionFailure("x")), h::ExitCode::AssertionFailure);
  EXPECT_EQ(h::exit_code_for(bk::ParameterViolation("x")), h::ExitCode::ParameterViolation);
  EXPECT_EQ(h::exit_code_for(bk::GenerationFailed("x")), h::ExitCode::GenerationFailed);
  EXPECT_EQ(h::exit_code_for(bk::InvalidArgument("x")), h::ExitCode::InvalidInput);
  EXPECT_EQ(h::exit_code_for(bk::LengthMismatch("x")), h::ExitCode::InvalidInput);
  EXPECT_EQ(h::exit_code_for(bk::ConsistencyViolation("x")), h::ExitCode::ConsistencyViolation);
  EXPECT_EQ(h::exit_code_for(bk::ConfigError("x")), h::ExitCode::Usage);
  EXPECT_EQ(h::exit_code_for(std::runtime_error("x")), h::ExitCode::Internal);
}

TEST(Trace, JsonRoundTrip) {
  std::vector<h::TraceRecord> t{
      {1, "0101", Label::Negative, Label::Positive, true, bk::make_rat(-7, 3), std::nullopt},
      {2, "1111", Label::Positive, Label::Positive, false, ExactRat(5),
       bk::reduction::Annotation{3, bk::reduction::Purpose::SlackPromotion, 4, 2}},
  };
  const auto text = h::trace_to_json(t);
  EXPECT_NE(text.find("\"-7/3\""), std::string::npos);
  EXPECT_EQ(text.find('.'), std::string::npos);
  EXPECT_EQ(h::trace_from_json(text), t);
  EXPECT_EQ(h::trace_to_json(h::trace_from_json(text)), text);
}

TEST(Trace, SummaryCsv) {
  std::vector<h::TraceRecord> t{{1, "01", Label::Negative, Label::Positive, true, bk::make_rat(1, 2), std::nullopt}};
  const auto rows = lines(h::summary_csv(t));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], "step,prediction,label,mistake,score_num,score_den");
  EXPECT_EQ(rows[1], "1,1,-1,1,1,2");
}

TEST(PlotData, EmptyTraceIsHeaderOnly) {
  const auto rows = lines(h::emit_plotdata({}));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0], "step,cumulative_mistakes");
}

TEST(PlotData, PrefixSums) {
  bk::Rng rng(51, 100);
  std::vector<h::TraceRecord> t;
  for (std::size_t i = 1; i <= 100; ++i) {
    t.push_back({i, "1", Label::Positive, Label::Positive, rng.below(3) == 0, ExactRat(0), std::nullopt});
  }
  const auto rows = lines(h::emit_plotdata(t));
  ASSERT_EQ(rows.size(), t.size() + 1);
  std::size_t sum = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    sum += t[i].mistake;
    EXPECT_EQ(rows[i + 1], std::to_string(i + 1) + "," + std::to_string(sum));
  }
}

TEST(Stream, JsonLines) {
  const auto s = h::parse_stream_jsonl("{\"x\": \"0101\", \"label\": 1}\n\n{\"x\": \"1100\", \"label\": -1}\n");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], (bk::LabeledExample{BitVec::parse("0101"), Label::Positive}));
  EXPECT_EQ(h::parse_stream_jsonl(h::stream_to_jsonl(s)), s);
  EXPECT_THROW(h::parse_stream_jsonl("{\"x\": \"01\"}"), bk::InvalidArgument);
  EXPECT_THROW(h::parse_stream_jsonl("not json"), bk::InvalidArgument);
  EXPECT_THROW(h::parse_stream_jsonl("{\"x\": \"01\", \"label\": 0}"), bk::InvalidArgument);
}

TEST(Clauses, Parse) {
  EXPECT_EQ(h::parse_clauses("1,2;1,3"), (std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {1, 3}}));
  EXPECT_EQ(h::parse_clauses("2,2"), (std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}}));
  EXPECT_THROW(h::parse_clauses("1"), bk::InvalidArgument);
  EXPECT_THROW(h::parse_clauses("1,2,3"), bk::InvalidArgument);
  EXPECT_THROW(h::parse_clauses("a,b"), bk::InvalidArgument);
}

TEST(Cnf, JsonRoundTrip) {
  const bk::reduction::MonotoneCnf f{3, {{1, 2}, {1, 3}}};
  EXPECT_EQ(h::cnf_from_json(h::cnf_to_json(f)), f);
  EXPECT_EQ(h::cnf_from_json("{\"vars\": 3, \"clauses\": [[1,2],[1,3]]}"), f);
  EXPECT_THROW(h::cnf_from_json("{\"vars\": 2, \"clauses\": [[3]]}"), bk::InvalidArgument);
}

TEST(HardSetJson, RoundTrip) {
  bk::adversarial::HardSetParams p;
  p.n = 40;
  p.weight = 6;
  p.intersection_cap = 2;
  p.count = 4;
  const auto hs = bk::adversarial::gen_hard_set(p);
  const auto back = h::hard_set_from_json(h::hard_set_to_json(hs));
  EXPECT_EQ(back.vectors, hs.vectors);
  EXPECT_EQ(back.params.seed, hs.params.seed);
}

TEST(KwpJson, RoundTrip) {
  const bk::reduction::M2SatInstance f{2, {{1, 2}}, 1};
  const auto inst = bk::reduction::build_kwp(f, 2, bk::ipow(ExactRat(2), 425)).instance;
  const auto text = h::kwp_instance_to_json(inst);
  const auto back = h::kwp_instance_from_json(text);
  EXPECT_EQ(back.m, inst.m);
  EXPECT_EQ(back.alpha, inst.alpha);
  EXPECT_EQ(back.theta, inst.theta);
  EXPECT_EQ(back.sequence, inst.sequence);
  EXPECT_EQ(back.annotations, inst.annotations);
  EXPECT_EQ(back.z, inst.z);
  EXPECT_EQ(back.source.clauses, inst.source.clauses);
  EXPECT_EQ(back.source.K, inst.source.K);
  EXPECT_EQ(h::kwp_instance_to_json(back), text);
}

TEST(Presets, JsonRoundTrip) {
  for (const auto& p : h::builtin_presets()) {
    EXPECT_EQ(h::preset_from_json(h::preset_to_json(p)), p) << p.name;
  }
  EXPECT_THROW(h::preset_from_json("{}"), bk::ConfigError);
  EXPECT_THROW(h::preset_from_json("[1"), bk::ConfigError);
}

TEST(Presets, Lookup) {
  EXPECT_EQ(h::find_preset("thm6-desk").target, "adversarial-thm6");
  EXPECT_THROW(h::find_preset("no-such-preset"), bk::ConfigError);
  const auto p = h::find_preset("thm6-desk");
  EXPECT_EQ(p.param("n"), "320");
  EXPECT_THROW(p.param("missing"), bk::ConfigError);
  std::set<std::string> names;
  for (const auto& q : h::builtin_presets()) names.insert(q.name);
  for (const char* n : {"thm6-desk", "thm8-desk", "remark7-negative", "remark7-large", "winnow", "thm9-n2", "thm9-n3"}) {
    EXPECT_TRUE(names.count(n)) << n;
  }
}

TEST(RunPreset, Thm6Artifacts) {
  const auto dir = scratch("thm6");
  const auto r = h::run_preset(h::find_preset("thm6-desk"), {dir, std::nullopt, std::nullopt});
  ASSERT_EQ(r.code, h::ExitCode::Ok) << r.message;
  EXPECT_EQ(r.totals.at("mistakes"), "27");
  for (const char* f : {"preset.json", "trace.json", "summary.csv", "plot.csv", "totals.csv"}) {
    EXPECT_TRUE(fs::exists(dir / "thm6-desk" / f)) << f;
  }
  const auto plot = lines(slurp(dir / "thm6-desk" / "plot.csv"));
  ASSERT_EQ(plot.size(), 28u);
  EXPECT_EQ(plot.back(), "27,27");
  std::size_t prev = 0;
  for (std::size_t i = 1; i < plot.size(); ++i) {
    const std::size_t v = std::stoul(plot[i].substr(plot[i].find(',') + 1));
    EXPECT_GE(v, prev);
    prev = v;
  }
  fs::remove_all(dir);
}

TEST(RunPreset, Deterministic) {
  const auto a = scratch("det_a");
  const auto b = scratch("det_b");
  const auto preset = h::find_preset("winnow");
  ASSERT_EQ(h::run_preset(preset, {a, 7, std::nullopt}).code, h::ExitCode::Ok);
  ASSERT_EQ(h::run_preset(preset, {b, 7, std::nullopt}).code, h::ExitCode::Ok);
  EXPECT_EQ(slurp(a / "winnow" / "trace.json"), slurp(b / "winnow" / "trace.json"));
  EXPECT_EQ(slurp(a / "winnow" / "summary.csv"), slurp(b / "winnow" / "summary.csv"));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(RunPreset, ErrorsMapToCodes) {
  const auto dir = scratch("errors");
  auto bad = h::find_preset("thm6-desk");
  bad.params["n"] = "ten";
  EXPECT_EQ(h::run_preset(bad, {dir, std::nullopt, std::nullopt}).code, h::ExitCode::Usage);
  auto weak = h::find_preset("thm6-desk");
  weak.params["t"] = "40";  // margin turns negative
  EXPECT_EQ(h::run_preset(weak, {dir, std::nullopt, std::nullopt}).code, h::ExitCode::AssertionFailure);
  auto low = h::find_preset("thm9-n2");
  low.params["theta_exp"] = "1";
  EXPECT_EQ(h::run_preset(low, {dir, std::nullopt, std::nullopt}).code, h::ExitCode::ParameterViolation);
  auto guard = h::find_preset("winnow");
  EXPECT_EQ(h::run_preset(guard, {dir, std::nullopt, std::size_t{1}}).code, h::ExitCode::GuardExceeded);
  auto unknown = h::find_preset("winnow");
  unknown.target = "nothing";
  EXPECT_EQ(h::run_preset(unknown, {dir, std::nullopt, std::nullopt}).code, h::ExitCode::Usage);
  fs::remove_all(dir);
}
