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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "usum/error.hpp"
#include "usum/formula.hpp"
#include "usum/signature.hpp"

namespace usum {

class ModelError : public Error {
 public:
  using Error::Error;
};

/// A finite structure. Elements of each carrier are numbered from 0 and
/// carry display labels.
class Structure {
 public:
  void set_carrier(const std::string& sort, std::vector<std::string> labels);
  void set_constant(const std::string& name, int element);
  void set_function(const std::string& name, std::map<std::vector<int>, int> table);
  void set_relation(const std::string& name, std::set<std::vector<int>> tuples);

  int size(const std::string& sort) const;
  const std::vector<std::string>& labels(const std::string& sort) const;
  /// Element with the given label, or -1.
  int element(const std::string& sort, const std::string& label) const;

  int constant(const std::string& name) const;
  int apply(const std::string& function, const std::vector<int>& args) const;
  bool holds(const std::string& predicate, const std::vector<int>& args) const;

  const std::map<std::string, std::vector<std::string>>& carriers() const { return carriers_; }
  const std::map<std::string, int>& constants() const { return constants_; }
  const std::map<std::string, std::map<std::vector<int>, int>>& functions() const { return functions_; }
  const std::map<std::string, std::set<std::vector<int>>>& relations() const { return relations_; }

  /// Every sort has a non-empty carrier and every symbol a total table
  /// within bounds. Throws ModelError.
  void validate(const Signature& sig) const;

 private:
  std::map<std::string, std::vector<std::string>> carriers_;
  std::map<std::string, int> constants_;
  std::map<std::string, std::map<std::vector<int>, int>> functions_;
  std::map<std::string, std::set<std::vector<int>>> relations_;
};

/// Free individual variable -> element of its sort.
using Assignment = std::map<std::string, int>;

int eval_term(const Structure& m, const Assignment& v, const Term& t);

/// Standard recursive truth. Throws ModelError on an unassigned variable.
bool eval_tarski(const Signature& sig, const Structure& m, const Assignment& v, const Formula& f);

enum class GamePlayer : std::uint8_t { Verifier, Falsifier, None };

/// Node of the explicit evaluation game. Players are the original roles;
/// `swapped` records whether they have exchanged sides.
struct GameNode {
  GamePlayer mover = GamePlayer::None;
  std::string label;  // move that led here
  bool swapped = false;
  bool leaf_value = false;  // leaves: truth of the atom
  std::vector<int> children;
};

struct GameTree {
  std::vector<GameNode> nodes;  // node 0 is the root
};

GameTree build_game(const Signature& sig, const Structure& m, const Assignment& v, const Formula& f);

/// Backward induction: does the original verifier win from the root?
/// `strategy` receives the winning child for each verifier node.
bool solve(const GameTree& g, std::map<int, int>* strategy = nullptr);

/// Verifier moves at ∨ and ∃, falsifier at ∧ and ∀; at A→B the falsifier
/// grants A and the verifier either takes B or plays A with roles swapped.
bool eval_game(const Signature& sig, const Structure& m, const Assignment& v, const Formula& f);

/// Every structure over `sig` with carrier sizes 1..max_size for sort D.
/// The signature may only have predicates over D and no constants or
/// functions.
std::vector<Structure> enumerate_structures(const Signature& sig, int max_size);

/// Seeded generator of closed formulas with at most `max_quantifiers`
/// quantifiers and at most `max_size` nodes, over the signature's
/// predicates on D and identity.
std::vector<Formula> random_closed_formulas(const Signature& sig, unsigned seed, int count, int max_quantifiers,
                                            int max_size);

}  // namespace usum
