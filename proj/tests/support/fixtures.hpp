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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpa/gp_algebra.hpp"
#include "gpa/typecheck.hpp"

namespace gpa::testing {

std::string data_path(const std::string& relative);
std::string golden_path(const std::string& relative);
std::string read_file(const std::string& path);

/// Parses a gp-algebra file; throws if it is a plain quiver file.
GpAlgebra load_gp(const std::string& path);

/// A decision-table file: its "# expect: <Verdict> [count]" header and the
/// algebra below it.
struct DecisionCase {
  std::string name;
  std::string path;
  GpAlgebra algebra;
  Verdict::Kind expected;
  std::optional<std::size_t> indecomposables;
};

std::vector<DecisionCase> decision_table();

}  // namespace gpa::testing
