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
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "usum/signature.hpp"
#include "usum/term.hpp"

namespace usum {

enum class Direction : std::uint8_t { Forward, Backward };

/// One application of a signature axiom at a 1-based position, read left to
/// right (Forward) or right to left (Backward).
struct RewriteStep {
  std::string axiom;
  Direction direction = Direction::Forward;
  std::vector<int> position;
  std::vector<std::pair<std::string, Term>> instantiation;

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

/// A ground rewrite chain: the reason r in u =_r v. The empty chain is
/// reflexivity on its source.
class Path {
 public:
  explicit Path(Term source, std::vector<RewriteStep> steps = {})
      : source_(std::move(source)), steps_(std::move(steps)) {}

  static Path refl(Term t) { return Path(std::move(t)); }

  const Term& source() const noexcept { return source_; }
  const std::vector<RewriteStep>& steps() const noexcept { return steps_; }
  bool is_refl() const noexcept { return steps_.empty(); }

  friend bool operator==(const Path&, const Path&) = default;

 private:
  Term source_;
  std::vector<RewriteStep> steps_;
};

/// Apply one step to `t`. Returns nullopt when the axiom side does not match
/// the subterm at the step's position. Throws PathError when the step itself
/// is ill-formed (unknown axiom, missing or ill-sorted instantiation).
std::optional<Term> apply_step(const Signature& sig, const Term& t, const RewriteStep& step);

/// Replay the chain. nullopt if some step does not match.
std::optional<std::pair<Term, Term>> endpoints(const Signature& sig, const Path& path);

/// True iff the chain starts at u, ends at v, and each step matches.
bool check_path(const Signature& sig, const Path& path, const Term& u, const Term& v);

/// Reversed chain with every step's direction flipped. Throws PathError if
/// the path does not replay.
Path inverse(const Signature& sig, const Path& path);

/// p followed by q. Throws PathError unless p ends where q starts.
Path concat(const Signature& sig, const Path& p, const Path& q);

/// Find an instantiation making `pattern` equal to `t`, extending `inst`.
bool match_pattern(const Term& pattern, const Term& t, std::vector<std::pair<std::string, Term>>& inst);

/// Proof-level path expression: a concrete chain, a path variable, or a
/// composite. Bound path variables are de Bruijn indices over REWR binders.
class PathExpr {
 public:
  enum class Kind : std::uint8_t { Concrete, Free, Bound, Inverse, Concat };

  static PathExpr concrete(Path p);
  static PathExpr free(std::string name);
  static PathExpr bound(int index, std::string hint);
  static PathExpr inverse(PathExpr p);
  static PathExpr concat(PathExpr p, PathExpr q);

  Kind kind() const noexcept { return node_->kind; }
  const Path& path() const { return *node_->path; }
  const std::string& name() const noexcept { return node_->name; }
  int index() const noexcept { return node_->index; }
  const std::vector<PathExpr>& kids() const noexcept { return node_->kids; }

  PathExpr with(std::vector<PathExpr> kids) const;

  friend bool operator==(const PathExpr& a, const PathExpr& b);
  friend bool operator!=(const PathExpr& a, const PathExpr& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::optional<Path> path;
    std::string name;
    int index = 0;
    std::vector<PathExpr> kids;
  };
  explicit PathExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Collapse a closed composite into a single chain.
std::optional<Path> resolve(const Signature& sig, const PathExpr& e);

}  // namespace usum
