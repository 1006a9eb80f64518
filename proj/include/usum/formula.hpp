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
#include <string>
#include <vector>

#include "usum/term.hpp"

namespace usum {

/// First-order formula. Quantifier bodies refer to their variable as the
/// bound domain index 0.
class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, Conj, Disj, Impl, Forall, Exists, Id, Bot };

  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula impl(Formula antecedent, Formula consequent);
  static Formula forall(std::string hint, std::string sort, Formula body);
  static Formula exists(std::string hint, std::string sort, Formula body);
  static Formula identity(std::string sort, Term left, Term right);
  static Formula bottom();
  /// ~A is A -> False.
  static Formula negation(Formula f) { return impl(std::move(f), bottom()); }

  Kind kind() const noexcept { return node_->kind; }
  /// Predicate name for atoms, binder hint for quantifiers.
  const std::string& name() const noexcept { return node_->name; }
  /// Quantifier sort or identity sort.
  const std::string& sort() const noexcept { return node_->sort; }
  const std::vector<Term>& terms() const noexcept { return node_->terms; }
  const Formula& left() const { return node_->kids.at(0); }
  const Formula& right() const { return node_->kids.at(1); }
  const Formula& body() const { return node_->kids.at(0); }
  const std::vector<Formula>& kids() const noexcept { return node_->kids; }
  std::size_t size() const noexcept { return node_->size; }

  bool is_quantifier() const noexcept { return kind() == Kind::Forall || kind() == Kind::Exists; }
  /// Atoms and absurdity: no particle rule, asserted only by copy-cat.
  bool is_atomic() const noexcept { return kind() == Kind::Atom || kind() == Kind::Bot; }
  bool is_negation() const noexcept { return kind() == Kind::Impl && right().kind() == Kind::Bot; }

  Formula with(std::vector<Formula> kids, std::vector<Term> terms) const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::string sort;
    std::vector<Term> terms;
    std::vector<Formula> kids;
    std::size_t size = 1;
  };
  static Formula make(Kind kind, std::string name, std::string sort, std::vector<Term> terms,
                      std::vector<Formula> kids);
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

int quantifier_count(const Formula& f);

}  // namespace usum
