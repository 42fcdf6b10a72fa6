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

// Text format shared by gp-algebra files, plain quiver files and expansion
// output:
//
//   file     := block+
//   block    := ("gamma" | "quiver" | "algebra" IDENT) "{" line* "}"
//   line     := "vertices:" IDENT+
//             | "arrow" IDENT ":" IDENT "->" IDENT
//             | "relations:" relation ("," relation)*
//   relation := IDENT ("*" IDENT)+        composed left to right
//
// IDENT is [A-Za-z0-9_.]+ and '#' starts a comment running to end of line.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gpa/errors.hpp"
#include "gpa/gp_algebra.hpp"
#include "gpa/quiver.hpp"

namespace gpa {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// One gamma block plus algebra blocks in file order.
struct GpDocument {
  Quiver gamma;
  std::vector<std::pair<std::string, BoundQuiver>> algebras;

  GpAlgebra algebra() const;

  bool operator==(const GpDocument&) const = default;
};

/// A single quiver block.
struct QuiverDocument {
  BoundQuiver quiver;

  bool operator==(const QuiverDocument&) const = default;
};

using InputDocument = std::variant<GpDocument, QuiverDocument>;

/// Throws ParseError (syntax, unknown references, duplicate ids or blocks).
InputDocument parse(std::string_view text);

std::string render(const InputDocument& doc);
std::string render(const GpDocument& doc);
std::string render(const QuiverDocument& doc);

/// Document for a gp-algebra; algebras appear in gamma vertex order.
GpDocument to_document(const GpAlgebra& gp);

/// The expanded bound quiver as a quiver block, arrows annotated with a
/// "# typeI" / "# typeII" comment.
std::string render_ordinary_quiver(const OrdinaryQuiver& oq);

/// Directed DOT graph with one cluster per gamma vertex; type-I edges black,
/// type-II edges blue, lifted relations in the graph label.
std::string render_dot(const OrdinaryQuiver& oq, const GpAlgebra& gp);

/// Plain directed DOT graph of a bound quiver.
std::string render_dot(const BoundQuiver& bq);

}  // namespace gpa
