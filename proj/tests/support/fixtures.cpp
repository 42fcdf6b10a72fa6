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

#include "fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gpa/text_format.hpp"

namespace gpa::testing {

std::string data_path(const std::string& relative) { return std::string(GPA_TEST_DATA_DIR) + "/" + relative; }
std::string golden_path(const std::string& relative) { return std::string(GPA_GOLDEN_DIR) + "/" + relative; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

GpAlgebra load_gp(const std::string& path) {
  const InputDocument doc = parse(read_file(path));
  return std::get<GpDocument>(doc).algebra();
}

namespace {

Verdict::Kind verdict_kind(const std::string& name) {
  for (auto k : {Verdict::Kind::Finite, Verdict::Kind::StrictTame, Verdict::Kind::Wild,
                 Verdict::Kind::OutOfScope, Verdict::Kind::Indeterminate}) {
    if (Verdict::kind_name(k) == name) return k;
  }
  throw std::runtime_error("unknown verdict " + name);
}

}  // namespace

std::vector<DecisionCase> decision_table() {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(data_path("decision_table"))) {
    if (entry.path().extension() == ".gpa") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<DecisionCase> cases;
  for (const auto& file : files) {
    const std::string text = read_file(file.string());
    const auto at = text.find("# expect: ");
    if (at == std::string::npos) throw std::runtime_error(file.string() + " has no expect line");
    std::istringstream expect(text.substr(at + 10, text.find('\n', at) - at - 10));
    std::string kind;
    expect >> kind;
    DecisionCase c{file.stem().string(), file.string(), load_gp(file.string()), verdict_kind(kind), std::nullopt};
    std::size_t count = 0;
    if (expect >> count) c.indecomposables = count;
    cases.push_back(std::move(c));
  }
  return cases;
}

}  // namespace gpa::testing
