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

// gpa classify|expand|graph-type|tits|roots <file> [--json] [--dot <out>] [--no-oracle]

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "gpa/errors.hpp"
#include "gpa/graph_class.hpp"
#include "gpa/report.hpp"
#include "gpa/text_format.hpp"
#include "gpa/tits.hpp"

namespace {

using gpa::kExitInputError;
using gpa::kExitOutOfScope;

struct Options {
  std::string file;
  bool json = false;
  std::string dot;
  bool no_oracle = false;
};

// Thrown for problems with the input file; mapped to the input-error code.
struct InputError {
  std::string message;
};

// Thrown when the input is well formed but outside what the command handles.
struct Refusal {
  std::string message;
};

gpa::InputDocument load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read '" + path + "'"};
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return gpa::parse(text.str());
  } catch (const gpa::Error& e) {
    throw InputError{path + ": " + e.what()};
  }
}

gpa::GpAlgebra load_gp(const std::string& path) {
  auto doc = load(path);
  const auto* gp = std::get_if<gpa::GpDocument>(&doc);
  if (!gp) throw InputError{path + ": expected a gamma block (gp-algebra file)"};
  try {
    return gp->algebra();
  } catch (const gpa::Error& e) {
    throw InputError{path + ": " + e.what()};
  }
}

gpa::OrdinaryQuiver expand(const gpa::GpAlgebra& gp) {
  try {
    return gpa::build_ordinary_quiver(gp);
  } catch (const gpa::GpValidationError& e) {
    throw InputError{e.what()};
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) throw InputError{"cannot write '" + path + "'"};
}

void write_dot(const Options& opt, const gpa::OrdinaryQuiver& oq, const gpa::GpAlgebra& gp) {
  if (!opt.dot.empty()) write_text(opt.dot, gpa::render_dot(oq, gp));
}

// The commands working on a single quiver accept a plain quiver file or a
// gp-algebra file, which stands for its ordinary quiver.
gpa::Multigraph load_graph(const Options& opt) {
  auto doc = load(opt.file);
  if (const auto* q = std::get_if<gpa::QuiverDocument>(&doc)) {
    if (!opt.dot.empty()) write_text(opt.dot, gpa::render_dot(q->quiver));
    return gpa::underlying_graph(q->quiver.quiver);
  }
  const gpa::GpAlgebra gp = load_gp(opt.file);
  const gpa::OrdinaryQuiver oq = expand(gp);
  write_dot(opt, oq, gp);
  return gpa::underlying_graph(oq.quiver);
}

void require_connected(const gpa::Multigraph& g) {
  if (g.vertex_count() == 0) throw InputError{"quiver has no vertices"};
  if (!g.is_connected()) throw InputError{"quiver is disconnected"};
}

int cmd_classify(const Options& opt) {
  const gpa::GpAlgebra gp = load_gp(opt.file);
  gpa::Report report;
  try {
    report = gpa::classify_report(gp, !opt.no_oracle);
  } catch (const gpa::GpValidationError& e) {
    throw InputError{e.what()};
  }
  write_dot(opt, gpa::build_ordinary_quiver(gp), gp);
  std::cout << (opt.json ? gpa::render_json(report) : gpa::render_text(report));
  return gpa::exit_code(report.verdict.kind);
}

int cmd_expand(const Options& opt) {
  const gpa::GpAlgebra gp = load_gp(opt.file);
  const gpa::OrdinaryQuiver oq = expand(gp);
  write_dot(opt, oq, gp);
  if (opt.json) {
    nlohmann::ordered_json j;
    j["vertices"] = oq.quiver.vertices();
    j["arrows"] = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < oq.quiver.arrow_count(); ++a) {
      const gpa::Arrow& arrow = oq.quiver.arrows()[a];
      j["arrows"].push_back({{"id", arrow.id},
                             {"source", arrow.source},
                             {"target", arrow.target},
                             {"type", oq.arrow_types[a] == gpa::ArrowType::TypeI ? "typeI" : "typeII"}});
    }
    j["relations"] = nlohmann::ordered_json::array();
    for (const auto& g : oq.lifted_ideal.generators()) j["relations"].push_back(g.to_string());
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << gpa::render_ordinary_quiver(oq);
  }
  return 0;
}

int cmd_graph_type(const Options& opt) {
  const gpa::Multigraph g = load_graph(opt);
  require_connected(g);
  const gpa::GraphClass c = gpa::classify_graph(g);
  if (opt.json) {
    std::cout << nlohmann::ordered_json{{"graph_type", c.to_string()}}.dump(2) << '\n';
  } else {
    std::cout << c.to_string() << '\n';
  }
  return 0;
}

int cmd_tits(const Options& opt) {
  const gpa::Multigraph g = load_graph(opt);
  require_connected(g);
  if (g.has_loops()) throw Refusal{"the Tits form is not defined for quivers with loops"};
  const gpa::Definiteness d = gpa::definiteness(g);
  if (opt.json) {
    nlohmann::ordered_json j{{"definiteness", d.to_string()}, {"corank", d.corank}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << d.to_string() << '\n';
  }
  return 0;
}

int cmd_roots(const Options& opt) {
  const gpa::Multigraph g = load_graph(opt);
  require_connected(g);
  std::vector<gpa::IntVector> roots;
  try {
    roots = gpa::enumerate_positive_roots(g);
  } catch (const gpa::Error& e) {
    throw Refusal{e.what()};
  }
  if (opt.json) {
    nlohmann::ordered_json j;
    j["vertices"] = g.vertices();
    j["count"] = roots.size();
    j["roots"] = nlohmann::ordered_json::array();
    for (const auto& r : roots) j["roots"].push_back(std::vector<std::int64_t>(r.begin(), r.end()));
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "vertices:";
  for (const auto& v : g.vertices()) std::cout << ' ' << v;
  std::cout << "\ncount: " << roots.size() << '\n';
  for (const auto& r : roots) {
    for (Eigen::Index i = 0; i < r.size(); ++i) std::cout << (i ? " " : "") << r(i);
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representation type of generalized path algebras"};
  app.require_subcommand(1);
  Options opt;

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Command commands[] = {
      {"classify", "decide the representation type of a gp-algebra", cmd_classify},
      {"expand", "print the ordinary quiver with lifted relations", cmd_expand},
      {"graph-type", "Dynkin / Euclidean class of a quiver's underlying graph", cmd_graph_type},
      {"tits", "definiteness and corank of the Tits form", cmd_tits},
      {"roots", "positive roots of a Dynkin quiver", cmd_roots},
  };
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("file", opt.file, "input file")->required();
    sub->add_flag("--json", opt.json, "machine-readable output");
    sub->add_option("--dot", opt.dot, "write the ordinary quiver as DOT to this path");
    sub->add_flag("--no-oracle", opt.no_oracle, "skip the Tits cross-check");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    for (const Command& c : commands) {
      if (app.got_subcommand(c.name)) return c.run(opt);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitInputError;
  } catch (const Refusal& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitOutOfScope;
  } catch (const gpa::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
