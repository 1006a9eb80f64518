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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace usum {

/// Name of the individual domain. Every signature carries it.
inline const std::string kIndividuals = "D";

/// A first-order term over the individual sorts.
///
/// Bound variables are de Bruijn indices counting enclosing domain binders
/// (quantifiers in formulas; gen/eps/inst binders in proof terms). The hint
/// is only used for printing and never takes part in equality.
class Term {
 public:
  enum class Kind : std::uint8_t { Free, Bound, Constant, Apply };

  static Term free(std::string name, std::string sort);
  static Term bound(int index, std::string hint, std::string sort);
  static Term constant(std::string name, std::string sort);
  static Term apply(std::string function, std::vector<Term> args, std::string sort);

  Kind kind() const noexcept { return node_->kind; }
  bool is_free() const noexcept { return kind() == Kind::Free; }
  bool is_bound() const noexcept { return kind() == Kind::Bound; }
  /// Variable name, bound hint, constant name, or function symbol.
  const std::string& name() const noexcept { return node_->name; }
  int index() const noexcept { return node_->index; }
  const std::string& sort() const noexcept { return node_->sort; }
  const std::vector<Term>& args() const noexcept { return node_->args; }
  std::size_t size() const noexcept { return node_->size; }

  /// No free or bound variables.
  bool is_ground() const;

  /// Rebuild with the same head and new arguments.
  Term with_args(std::vector<Term> args) const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    int index = 0;
    std::string sort;
    std::vector<Term> args;
    std::size_t size = 1;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Replace variable leaves. `fn` sees every Free and Bound leaf and returns a
/// replacement, or nullopt to keep the leaf.
Term map_leaves(const Term& t, const std::function<std::optional<Term>(const Term&)>& fn);

/// Subterm at a 1-based argument position; nullopt if the position is invalid.
std::optional<Term> subterm_at(const Term& t, const std::vector<int>& position);

/// Replace the subterm at a 1-based position. Throws std::out_of_range.
Term replace_at(const Term& t, const std::vector<int>& position, const Term& replacement);

/// True if `name` occurs as a free variable in `t`.
bool occurs_free(const Term& t, const std::string& name);

void collect_free(const Term& t, std::vector<std::string>& out);

}  // namespace usum
