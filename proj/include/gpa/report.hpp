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

#include <cstddef>
#include <optional>
#include <string>

#include "gpa/gp_algebra.hpp"
#include "gpa/tits.hpp"
#include "gpa/typecheck.hpp"

namespace gpa {

// Exit codes of the command-line tool.
inline constexpr int kExitFinite = 0;
inline constexpr int kExitStrictTame = 1;
inline constexpr int kExitWild = 2;
inline constexpr int kExitOutOfScope = 3;
inline constexpr int kExitInputError = 64;

int exit_code(Verdict::Kind kind);

/// Expand-then-Tits verdict for a relation-free algebra, next to the verdict
/// decide_type reached.
struct OracleCheck {
  std::string q_graph;  // class of the underlying graph of Q, or "disconnected"
  Definiteness definiteness;
  Verdict::Kind expected = Verdict::Kind::Indeterminate;
  bool agrees = false;
};

struct Report {
  Verdict verdict;
  std::size_t vertices = 0;
  std::size_t arrows_type1 = 0;
  std::size_t arrows_type2 = 0;
  std::size_t relations = 0;
  std::optional<OracleCheck> oracle_check;
};

/// Runs decide_type and, for relation-free loop-free algebras when
/// `run_oracle` is set, the Tits cross-check on the expansion.
/// Throws GpValidationError for invalid input.
Report classify_report(const GpAlgebra& gp, bool run_oracle = true);

/// Line-oriented text; carries the same facts as render_json.
std::string render_text(const Report& report);
/// One JSON object with keys verdict, reason, indecomposables, q_stats,
/// certificate, oracle_check in that order; optional keys are omitted.
std::string render_json(const Report& report);

}  // namespace gpa
