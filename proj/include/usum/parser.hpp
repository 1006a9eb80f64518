/*
 * Copyright 2026 The usum Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "usum/context.hpp"
#include "usum/error.hpp"
#include "usum/formula.hpp"
#include "usum/model.hpp"
#include "usum/path.hpp"
#include "usum/proof.hpp"
#include "usum/signature.hpp"

namespace usum {

/// Positioned syntax error with the set of tokens that would have been
/// accepted.
class ParseError : public Error {
 public:
  ParseError(int line, int col, std::set<std::string> expected, const std::string& message);

  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  int line_;
  int col_;
  std::set<std::string> expected_;
  std::string detail_;
};

struct SourcePos {
  int line = 0;
  int col = 0;
};

struct TheoremEntry {
  std::string name;
  Formula formula;
  bool expects_proof = true;  // `theorem` rather than `formula`
  SourcePos pos;
};

struct ProofEntry {
  std::string name;
  Proof term;
  SourcePos pos;
};

struct StructureEntry {
  std::string name;
  Structure structure;
  SourcePos pos;
};

/// A parsed `.nd` file.
struct Document {
  std::shared_ptr<Signature> signature = std::make_shared<Signature>();
  Context context;
  std::vector<TheoremEntry> theorems;
  std::vector<ProofEntry> proofs;
  std::vector<StructureEntry> structures;

  const TheoremEntry* theorem(const std::string& name) const;
  const ProofEntry* proof(const std::string& name) const;
  const StructureEntry* structure(const std::string& name) const;
};

inline constexpr std::string_view kFormatTag = "usum/1";

/// Parse a sectioned document. The first line must be the format tag.
Document parse_document(std::string_view text);

/// Single values against a signature and context. The whole input must be
/// consumed.
Term parse_term(std::string_view text, const Signature& sig, const Context& ctx = {});
Formula parse_formula(std::string_view text, const Signature& sig, const Context& ctx = {});
Proof parse_proof(std::string_view text, const Signature& sig, const Context& ctx = {});
PathExpr parse_path(std::string_view text, const Signature& sig, const Context& ctx = {});

/// Render a document back to the sectioned format.
std::string print_document(const Document& doc);

}  // namespace usum
