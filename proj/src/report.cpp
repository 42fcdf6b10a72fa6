// Copyright 2026 The gpa Authors
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

#include "gpa/report.hpp"

#include <sstream>

#include "json.hpp"

#include "gpa/graph_class.hpp"

namespace gpa {

int exit_code(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Finite: return kExitFinite;
    case Verdict::Kind::StrictTame: return kExitStrictTame;
    case Verdict::Kind::Wild: return kExitWild;
    case Verdict::Kind::OutOfScope:
    case Verdict::Kind::Indeterminate: break;
  }
  return kExitOutOfScope;
}

Report classify_report(const GpAlgebra& gp, bool run_oracle) {
  const OrdinaryQuiver oq = build_ordinary_quiver(gp);
  Report report;
  report.verdict = decide_type(gp);
  report.vertices = oq.quiver.vertex_count();
  report.arrows_type1 = oq.count(ArrowType::TypeI);
  report.arrows_type2 = oq.count(ArrowType::TypeII);
  report.relations = oq.lifted_ideal.size();

  const Multigraph q_bar = underlying_graph(oq.quiver);
  if (run_oracle && gp.relation_free() && !q_bar.has_loops()) {
    OracleCheck check;
    check.q_graph = q_bar.is_connected() ? classify_graph(q_bar).to_string() : "disconnected";
    check.definiteness = definiteness(q_bar);
    check.expected = tits_verdict(q_bar).kind;
    check.agrees = check.expected == report.verdict.kind;
    report.oracle_check = check;
  }
  return report;
}

namespace {

std::string joined(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out;
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  const Verdict& v = report.verdict;
  out << "verdict: " << v.name() << '\n';
  if (!v.reason.empty()) out << "reason: " << v.reason << '\n';
  if (v.kind == Verdict::Kind::Finite) out << "indecomposables: " << v.indecomposables << '\n';
  out << "q_stats: vertices=" << report.vertices << " arrows_type1=" << report.arrows_type1
      << " arrows_type2=" << report.arrows_type2 << " relations=" << report.relations << '\n';
  if (v.certificate) {
    out << "certificate: vertices=" << joined(v.certificate->vertices)
        << " arrows=" << joined(v.certificate->arrows) << '\n';
  }
  if (const auto& c = report.oracle_check) {
    out << "oracle_check: q_graph=" << c->q_graph << " definiteness=" << c->definiteness.to_string()
        << " expected=" << Verdict::kind_name(c->expected) << " agrees=" << (c->agrees ? "yes" : "no")
        << '\n';
  }
  return out.str();
}

std::string render_json(const Report& report) {
  nlohmann::ordered_json j;
  const Verdict& v = report.verdict;
  j["verdict"] = v.name();
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.kind == Verdict::Kind::Finite) j["indecomposables"] = v.indecomposables;
  j["q_stats"] = {{"vertices", report.vertices},
                  {"arrows_type1", report.arrows_type1},
                  {"arrows_type2", report.arrows_type2},
                  {"relations", report.relations}};
  if (v.certificate) {
    j["certificate"] = {{"vertices", v.certificate->vertices}, {"arrows", v.certificate->arrows}};
  }
  if (const auto& c = report.oracle_check) {
    j["oracle_check"] = {{"q_graph", c->q_graph},
                         {"definiteness", c->definiteness.to_string()},
                         {"expected", Verdict::kind_name(c->expected)},
                         {"agrees", c->agrees}};
  }
  return j.dump(2) + "\n";
}

}  // namespace gpa
