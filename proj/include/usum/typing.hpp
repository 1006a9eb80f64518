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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "usum/context.hpp"
#include "usum/error.hpp"
#include "usum/formula.hpp"
#include "usum/path.hpp"
#include "usum/proof.hpp"
#include "usum/signature.hpp"

namespace usum {

enum class Rule : std::uint8_t {
  Hyp,
  ConjIntro,
  ConjElimLeft,
  ConjElimRight,
  DisjIntroLeft,
  DisjIntroRight,
  DisjElim,
  ImplIntro,
  ImplElim,
  ForallIntro,
  ForallElim,
  ExistsIntro,
  ExistsElim,
  IdIntro,
  IdElim,
};

/// "∧-intr", "∨-elim", "Id-elim", ...
std::string_view rule_name(Rule r);

/// A natural-deduction derivation of `context ⊢ term : formula`.
struct Derivation {
  Rule rule;
  Context context;
  Proof term;
  Formula formula;
  std::vector<Derivation> premises;
  std::vector<std::string> discharged;

  std::size_t node_count() const;
};

enum class TypeErrorKind : std::uint8_t {
  UnknownHypothesis,
  ConstructorMismatch,
  DestructorMismatch,
  SortError,
  InvalidPath,
  VariableEscapes,
  CannotInfer,
};

std::string_view kind_name(TypeErrorKind k);

class TypeError : public Error {
 public:
  TypeError(TypeErrorKind kind, Position location, const std::string& message);

  TypeErrorKind kind() const noexcept { return kind_; }
  /// Child-index path to the offending subterm.
  const Position& location() const noexcept { return location_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  TypeErrorKind kind_;
  Position location_;
  std::string detail_;
};

/// Decide ctx ⊢ term : goal. Constructors are checked against the goal;
/// hypotheses and destructors are inferred and compared.
Derivation check(const Signature& sig, const Context& ctx, const Proof& term, const Formula& goal);

/// Derivation whose formula is the unique inferred one. Unannotated lam,
/// inl, inr and eps need a goal and fail with CannotInfer.
Derivation infer_derivation(const Signature& sig, const Context& ctx, const Proof& term);
Formula infer(const Signature& sig, const Context& ctx, const Proof& term);

/// Sort of a domain term in context; throws TypeError{SortError}.
std::string check_term(const Signature& sig, const Context& ctx, const Term& t);

/// Well-sortedness of a formula in context; throws TypeError{SortError}.
void check_formula(const Signature& sig, const Context& ctx, const Formula& f);

/// Individuals declared with known sorts; hypotheses and path assumptions
/// well-formed.
void check_context(const Signature& sig, const Context& ctx);

/// Endpoints and sort of a path expression in context.
struct PathType {
  std::string sort;
  Term from;
  Term to;
};
PathType path_type(const Signature& sig, const Context& ctx, const PathExpr& r);

}  // namespace usum
