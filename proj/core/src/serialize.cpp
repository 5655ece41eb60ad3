#include <nlohmann/json.hpp>

#include <sstream>
#include <string>

#include "boolkern/errors.hpp"
#include "boolkern/harness.hpp"

namespace boolkern::harness {

using nlohmann::json;

ExitCode exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return ExitCode::Usage;
  if (dynamic_cast<const GuardExceeded*>(&e)) return ExitCode::GuardExceeded;
  if (dynamic_cast<const AssertionFailure*>(&e)) return ExitCode::AssertionFailure;
  if (dynamic_cast<const ParameterViolation*>(&e)) return ExitCode::ParameterViolation;
  if (dynamic_cast<const GenerationFailed*>(&e)) return ExitCode::GenerationFailed;
  if (dynamic_cast<const ConsistencyViolation*>(&e)) return ExitCode::ConsistencyViolation;
  if (dynamic_cast<const InvalidArgument*>(&e) || dynamic_cast<const LengthMismatch*>(&e)) {
    return ExitCode::InvalidInput;
  }
  if (dynamic_cast<const json::exception*>(&e)) return ExitCode::InvalidInput;
  return ExitCode::Internal;
}

namespace {

json parse_document(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string(what) + ": " + e.what());
  }
}

template <class T>
T field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string(what) + ": missing field '" + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string(what) + ": field '" + key + "': " + e.what());
  }
}

json annotation_json(const reduction::Annotation& a) {
  return json{{"stage", a.stage},
              {"purpose", reduction::purpose_name(a.purpose)},
              {"gadget", a.gadget},
              {"group", a.group}};
}

reduction::Annotation annotation_from(const json& j) {
  reduction::Annotation a;
  a.stage = field<int>(j, "stage", "annotation");
  a.purpose = reduction::parse_purpose(field<std::string>(j, "purpose", "annotation"));
  a.gadget = field<std::int64_t>(j, "gadget", "annotation");
  a.group = field<int>(j, "group", "annotation");
  return a;
}

json check_json(const reduction::InequalityCheck& c) {
  return json{{"name", c.name}, {"lhs", to_string(c.lhs)}, {"relation", c.relation},
              {"rhs", to_string(c.rhs)}, {"pass", c.pass}, {"fatal", c.fatal}};
}

}  // namespace

std::string trace_to_json(const std::vector<TraceRecord>& trace) {
  json arr = json::array();
  for (const auto& r : trace) {
    json j{{"step", r.step},
           {"example", r.example},
           {"label", to_int(r.label)},
           {"prediction", to_int(r.prediction)},
           {"mistake", r.mistake},
           {"score", to_string(r.score)}};
    if (r.annotation) j["annotation"] = annotation_json(*r.annotation);
    arr.push_back(std::move(j));
  }
  return arr.dump(1) + "\n";
}

std::vector<TraceRecord> trace_from_json(const std::string& text) {
  const json arr = parse_document(text, "trace");
  if (!arr.is_array()) throw InvalidArgument("trace: expected an array");
  std::vector<TraceRecord> out;
  out.reserve(arr.size());
  for (const auto& j : arr) {
    TraceRecord r;
    r.step = field<std::size_t>(j, "step", "trace");
    r.example = field<std::string>(j, "example", "trace");
    r.label = label_from_int(field<int>(j, "label", "trace"));
    r.prediction = label_from_int(field<int>(j, "prediction", "trace"));
    r.mistake = field<bool>(j, "mistake", "trace");
    r.score = parse_rat(field<std::string>(j, "score", "trace"));
    if (j.contains("annotation")) r.annotation = annotation_from(j.at("annotation"));
    out.push_back(std::move(r));
  }
  return out;
}

std::string summary_csv(const std::vector<TraceRecord>& trace) {
  std::ostringstream out;
  out << "step,prediction,label,mistake,score_num,score_den\n";
  for (const auto& r : trace) {
    out << r.step << ',' << to_int(r.prediction) << ',' << to_int(r.label) << ','
        << (r.mistake ? 1 : 0) << ',' << r.score.get_num().get_str() << ','
        << r.score.get_den().get_str() << '\n';
  }
  return out.str();
}

std::string emit_plotdata(const std::vector<TraceRecord>& trace) {
  std::ostringstream out;
  out << "step,cumulative_mistakes\n";
  std::size_t total = 0;
  for (const auto& r : trace) {
    if (r.mistake) ++total;
    out << r.step << ',' << total << '\n';
  }
  return out.str();
}

std::vector<LabeledExample> parse_stream_jsonl(const std::string& text) {
  std::vector<LabeledExample> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const json j = parse_document(line, ("stream line " + std::to_string(lineno)).c_str());
    LabeledExample e{BitVec::parse(field<std::string>(j, "x", "stream")),
                     label_from_int(field<int>(j, "label", "stream"))};
    if (!out.empty() && out.front().x.size() != e.x.size()) {
      throw LengthMismatch("stream line " + std::to_string(lineno) + ": length differs");
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string stream_to_jsonl(const std::vector<LabeledExample>& stream) {
  std::string out;
  for (const auto& e : stream) {
    out += json{{"x", e.x.to_string()}, {"label", to_int(e.label)}}.dump();
    out += '\n';
  }
  return out;
}

std::string hard_set_to_json(const adversarial::HardSet& hs) {
  json vectors = json::array();
  for (const auto& v : hs.vectors) vectors.push_back(v.to_string());
  const auto& p = hs.params;
  return json{{"n", p.n},
              {"weight", p.weight},
              {"cap", p.intersection_cap},
              {"t", p.count},
              {"seed", p.seed},
              {"vectors", vectors}}
             .dump(1) +
         "\n";
}

adversarial::HardSet hard_set_from_json(const std::string& text) {
  const json j = parse_document(text, "hard set");
  adversarial::HardSet hs;
  hs.params.n = field<std::size_t>(j, "n", "hard set");
  hs.params.weight = field<std::size_t>(j, "weight", "hard set");
  hs.params.intersection_cap = field<std::size_t>(j, "cap", "hard set");
  hs.params.count = field<std::size_t>(j, "t", "hard set");
  hs.params.seed = field<std::uint64_t>(j, "seed", "hard set");
  for (const auto& s : field<std::vector<std::string>>(j, "vectors", "hard set")) {
    hs.vectors.push_back(BitVec::parse(s));
  }
  hs.verify();
  return hs;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_clauses(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.empty()) continue;
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw InvalidArgument("clause '" + item + "' is not 'i,j'");
    try {
      std::size_t used = 0;
      const std::string a = item.substr(0, comma);
      const std::string b = item.substr(comma + 1);
      const unsigned long i = std::stoul(a, &used);
      if (used != a.size()) throw std::invalid_argument(a);
      const unsigned long k = std::stoul(b, &used);
      if (used != b.size()) throw std::invalid_argument(b);
      out.emplace_back(i, k);
    } catch (const std::logic_error&) {
      throw InvalidArgument("clause '" + item + "' is not 'i,j'");
    }
  }
  return out;
}

reduction::MonotoneCnf cnf_from_json(const std::string& text) {
  const json j = parse_document(text, "cnf");
  reduction::MonotoneCnf cnf;
  cnf.vars = field<std::size_t>(j, "vars", "cnf");
  cnf.clauses = field<std::vector<std::vector<std::size_t>>>(j, "clauses", "cnf");
  cnf.validate();
  return cnf;
}

std::string cnf_to_json(const reduction::MonotoneCnf& cnf) {
  return json{{"vars", cnf.vars}, {"clauses", cnf.clauses}}.dump() + "\n";
}

std::string kwp_instance_to_json(const reduction::KwpInstance& inst) {
  json seq = json::array();
  for (std::size_t i = 0; i < inst.sequence.size(); ++i) {
    json e{{"x", inst.sequence[i].x.to_string()}, {"label", to_int(inst.sequence[i].label)}};
    if (i < inst.annotations.size()) e["annotation"] = annotation_json(inst.annotations[i]);
    seq.push_back(std::move(e));
  }
  json clauses = json::array();
  for (const auto& [a, b] : inst.source.clauses) clauses.push_back({a, b});
  return json{{"m", inst.m},
              {"alpha", to_string(inst.alpha)},
              {"theta", to_string(inst.theta)},
              {"z", inst.z.to_string()},
              {"S", seq},
              {"source", {{"n", inst.source.n}, {"clauses", clauses}, {"K", to_string(inst.source.K)}}}}
             .dump(1) +
         "\n";
}

reduction::KwpInstance kwp_instance_from_json(const std::string& text) {
  const json j = parse_document(text, "kwp instance");
  reduction::KwpInstance inst;
  inst.m = field<std::size_t>(j, "m", "kwp instance");
  inst.alpha = parse_rat(field<std::string>(j, "alpha", "kwp instance"));
  inst.theta = parse_rat(field<std::string>(j, "theta", "kwp instance"));
  inst.z = BitVec::parse(field<std::string>(j, "z", "kwp instance"));
  if (inst.z.size() != inst.m) throw LengthMismatch("kwp instance: z length differs from m");
  const json& seq = j.at("S");
  bool annotated = true;
  for (const auto& e : seq) {
    LabeledExample ex{BitVec::parse(field<std::string>(e, "x", "kwp example")),
                      label_from_int(field<int>(e, "label", "kwp example"))};
    if (ex.x.size() != inst.m) throw LengthMismatch("kwp instance: example length differs from m");
    inst.sequence.push_back(std::move(ex));
    if (e.contains("annotation")) {
      inst.annotations.push_back(annotation_from(e.at("annotation")));
    } else {
      annotated = false;
    }
  }
  if (!annotated) inst.annotations.clear();
  if (j.contains("source")) {
    const json& s = j.at("source");
    inst.source.n = field<std::size_t>(s, "n", "kwp source");
    for (const auto& c : field<std::vector<std::vector<std::size_t>>>(s, "clauses", "kwp source")) {
      if (c.size() != 2) throw InvalidArgument("kwp source: clauses must be pairs");
      inst.source.clauses.emplace_back(c[0], c[1]);
    }
    inst.source.K = parse_int(field<std::string>(s, "K", "kwp source"));
  }
  return inst;
}

std::string inequality_report_to_json(const reduction::InequalityReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back(check_json(c));
  return json{{"all_pass", report.all_pass()}, {"checks", checks}}.dump(1) + "\n";
}

std::string trace_report_to_json(const reduction::TraceReport& r) {
  return json{{"decision", r.decision},
              {"expected", r.expected},
              {"models", to_string(r.models)},
              {"score", to_string(r.score)},
              {"m_a", to_string(r.m_a)},
              {"m_b", to_string(r.m_b)},
              {"m_ab", to_string(r.m_ab)},
              {"steps", r.steps},
              {"mistakes", r.mistakes},
              {"claims_checked", r.claims_checked}}
             .dump(1) +
         "\n";
}

std::string ExperimentPreset::param(const std::string& key) const {
  const auto it = params.find(key);
  if (it == params.end()) throw ConfigError("preset " + name + ": missing parameter '" + key + "'");
  return it->second;
}

std::string preset_to_json(const ExperimentPreset& preset) {
  return json{{"name", preset.name},
              {"target", preset.target},
              {"params", preset.params},
              {"seed", preset.seed},
              {"output_dir", preset.output_dir}}
             .dump(1) +
         "\n";
}

ExperimentPreset preset_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("preset: ") + e.what());
  }
  try {
    ExperimentPreset p;
    p.name = j.at("name").get<std::string>();
    p.target = j.at("target").get<std::string>();
    p.params = j.at("params").get<std::map<std::string, std::string>>();
    p.seed = j.value("seed", std::uint64_t{1});
    p.output_dir = j.value("output_dir", p.name);
    return p;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("preset: ") + e.what());
  }
}

}  // namespace boolkern::harness
