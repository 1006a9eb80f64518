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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "usum/term.hpp"

namespace usum {

struct FunctionDecl {
  std::vector<std::string> args;
  std::string result;
};

/// An equation l = r over the declared variables. Variables occur in l and r
/// as free terms; every variable of r also occurs in l.
struct Axiom {
  std::string name;
  std::vector<std::pair<std::string, std::string>> vars;  // name, sort
  Term lhs;
  Term rhs;
};

/// Sorts, constants, functions, predicates and equational axioms.
/// The individual sort D is always present.
class Signature {
 public:
  Signature();

  void add_sort(const std::string& name);
  void add_constant(const std::string& name, const std::string& sort);
  void add_function(const std::string& name, std::vector<std::string> args, const std::string& result);
  void add_predicate(const std::string& name, std::vector<std::string> args);
  void add_axiom(Axiom axiom);

  bool has_sort(const std::string& name) const;
  const std::vector<std::string>& sorts() const { return sorts_; }
  std::optional<std::string> constant_sort(const std::string& name) const;
  const FunctionDecl* function(const std::string& name) const;
  const std::vector<std::string>* predicate(const std::string& name) const;
  const Axiom* axiom(const std::string& name) const;

  const std::map<std::string, std::string>& constants() const { return constants_; }
  const std::map<std::string, FunctionDecl>& functions() const { return functions_; }
  const std::map<std::string, std::vector<std::string>>& predicates() const { return predicates_; }
  const std::vector<Axiom>& axioms() const { return axioms_; }

  /// Constants of the given sort, in declaration order.
  std::vector<Term> constants_of(const std::string& sort) const;

  /// Any symbol (sort, constant, function, predicate, axiom) with this name.
  bool declares(const std::string& name) const;

 private:
  std::vector<std::string> sorts_;
  std::map<std::string, std::string> constants_;
  std::vector<std::string> constant_order_;
  std::map<std::string, FunctionDecl> functions_;
  std::map<std::string, std::vector<std::string>> predicates_;
  std::vector<Axiom> axioms_;
};

/// Sort of a well-formed term against a signature; throws SortError otherwise.
/// Variables carry their own sort and are accepted as is.
std::string sort_of(const Signature& sig, const Term& t);

}  // namespace usum
