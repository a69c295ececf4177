// Copyright 2026 The hyperrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hyperrec/expcli/report.hpp"

#include <chrono>
#include <ctime>
#include <map>

#include "hyperrec/random.hpp"

namespace hyperrec::expcli {

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json header(const Json& timings) {
  return {{"kind", "header"},
          {"tool", kToolName},
          {"version", kToolVersion},
          {"timestamp", utc_timestamp()},
          {"timings", timings}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  return out + "\"";
}

}  // namespace

Json window_json(const ReturnWindow& w) {
  Json runs = Json::array();
  for (const auto& [start, len] : w.runs()) runs.push_back({start, len});
  Json cert = nullptr;
  if (const auto& c = w.certificate()) {
    std::string pattern;
    for (bool b : c->pattern) pattern += b ? '1' : '0';
    cert = {{"preperiod", c->preperiod}, {"period", c->period}, {"pattern", pattern}};
  }
  return {{"horizon", w.horizon()},
          {"semantics", std::string(to_string(w.semantics()))},
          {"count", w.members().size()},
          {"runs", runs},
          {"certificate", cert}};
}

Json verdict_json(const FamilySpec& spec, const FamilyVerdict& v) {
  return {{"family", spec.describe()},
          {"holds", v.holds},
          {"semantics", std::string(to_string(v.semantics))},
          {"diagnostic", v.diagnostic}};
}

Json equivalence_json(const EquivalenceReport& r) {
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) {
    verdicts.push_back({{"statement", v.statement},
                        {"holds", v.holds},
                        {"semantics", v.semantics},
                        {"detail", v.detail}});
  }
  return {{"system", r.system},
          {"check", r.check},
          {"agreement", r.agreement},
          {"verdicts", verdicts},
          {"payloads", r.payloads}};
}

void ReportLines::write(std::ostream& out) const {
  out << header << '\n';
  for (const auto& line : body) out << line << '\n';
}

int exit_code(const std::vector<AnalysisOutcome>& outcomes) {
  int code = 0;
  for (const auto& o : outcomes) {
    if (o.status == "error") code = std::max(code, 1);
    if (o.status == "assertion" || o.status == "disagreement") code = 2;
  }
  return code;
}

ReportLines run_report(const ExperimentConfig& config, const std::vector<AnalysisOutcome>& outcomes,
                       double total_seconds) {
  ReportLines out;
  Json timings = Json::array();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    timings.push_back({{"name", config.analyses[i].name}, {"seconds", outcomes[i].seconds}});
  }
  out.header = header({{"total_seconds", total_seconds}, {"analyses", timings}}).dump();

  out.body.push_back(Json{{"kind", "run"},
                          {"tool", kToolName},
                          {"version", kToolVersion},
                          {"generator", std::string(Rng::kName)},
                          {"seed", config.seed},
                          {"system", config.system},
                          {"config", config.echo}}
                         .dump());
  std::map<std::string, std::size_t> statuses;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    ++statuses[o.status];
    Json line{{"kind", "analysis"},
              {"index", i},
              {"name", config.analyses[i].name},
              {"op", config.analyses[i].op},
              {"status", o.status}};
    line["holds"] = o.result.holds ? Json(*o.result.holds) : Json(nullptr);
    line["semantics"] = o.result.semantics.empty() ? Json(nullptr) : Json(o.result.semantics);
    line["headline"] = o.result.headline;
    line["message"] = o.message;
    line["result"] = o.result.result.is_null() ? Json::object() : o.result.result;
    out.body.push_back(line.dump());
  }
  Json counts = Json::object();
  for (const auto& [k, v] : statuses) counts[k] = v;
  out.body.push_back(Json{{"kind", "summary"},
                          {"analyses", outcomes.size()},
                          {"statuses", counts},
                          {"exit_code", exit_code(outcomes)}}
                         .dump());
  return out;
}

std::string csv_summary(const ExperimentConfig& config,
                        const std::vector<AnalysisOutcome>& outcomes) {
  std::string out = "index,name,op,status,holds,semantics,headline\n";
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    const std::string holds = o.result.holds ? (*o.result.holds ? "true" : "false") : "";
    out += std::to_string(i) + "," + csv_field(config.analyses[i].name) + "," +
           csv_field(config.analyses[i].op) + "," + o.status + "," + holds + "," +
           o.result.semantics + "," + csv_field(o.status == "ok" ? o.result.headline : o.message) +
           "\n";
  }
  return out;
}

ReportLines selftest_report(std::uint64_t seed,
                            const std::vector<acceptance::CriterionResult>& results) {
  ReportLines out;
  Json timings = Json::array();
  double total = 0.0;
  for (const auto& r : results) {
    timings.push_back({{"id", r.id}, {"seconds", r.seconds}});
    total += r.seconds;
  }
  out.header = header({{"total_seconds", total}, {"criteria", timings}}).dump();
  out.body.push_back(Json{{"kind", "run"},
                          {"tool", kToolName},
                          {"version", kToolVersion},
                          {"generator", std::string(Rng::kName)},
                          {"seed", seed},
                          {"mode", "selftest"}}
                         .dump());
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    out.body.push_back(Json{{"kind", "criterion"},
                            {"id", r.id},
                            {"title", r.title},
                            {"passed", r.passed},
                            {"detail", r.detail}}
                           .dump());
  }
  out.body.push_back(
      Json{{"kind", "summary"}, {"passed", passed}, {"total", results.size()}}.dump());
  return out;
}

}  // namespace hyperrec::expcli
