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
#include <optional>
#include <string_view>
#include <vector>

#include "usum/error.hpp"
#include "usum/proof.hpp"

namespace usum {

enum class BetaRule : std::uint8_t { ConjLeft, ConjRight, DisjLeft, DisjRight, Impl, Forall, Exists, Id };

/// "∧-β-l", "∨-β-r", "→-β", ...
std::string_view rule_name(BetaRule r);
/// Connective family: "∧-β", "∨-β", "→-β", "∀-β", "∃-β", "Id-β".
std::string_view family_name(BetaRule r);

struct Redex {
  Position position;
  BetaRule rule;

  friend bool operator==(const Redex&, const Redex&) = default;
};

/// The rule whose left-hand side matches `t` at its root, if any.
std::optional<BetaRule> root_redex(const Proof& t);

/// Every redex, outermost-leftmost (preorder). Empty iff `t` is normal.
std::vector<Redex> redexes(const Proof& t);

class StaleRedex : public Error {
 public:
  using Error::Error;
};

/// Contract the given redex. Throws StaleRedex if the subterm at the
/// position does not match the rule.
Proof step(const Proof& t, const Redex& r);

/// Contract a root redex.
Proof contract(const Proof& t, BetaRule rule);

enum class Strategy : std::uint8_t { NormalOrder, ApplicativeOrder };

std::string_view strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view s);

inline constexpr int kDefaultFuel = 10000;

struct TraceStep {
  Redex redex;
  Proof result;
};

struct Trace {
  Proof initial;
  std::vector<TraceStep> steps;
  Proof terminal;
  bool exhausted = false;
};

/// Redex the strategy contracts next: the first in preorder (normal order)
/// or the first in postorder (applicative order).
std::optional<Redex> choose(const Proof& t, Strategy s);

Trace normalize(const Proof& t, Strategy s = Strategy::NormalOrder, int fuel = kDefaultFuel);

enum class Convertibility : std::uint8_t { Convertible, NotConvertible, Exhausted };

/// Compare normal forms reached within `fuel` steps each.
Convertibility conv(const Proof& a, const Proof& b, int fuel = kDefaultFuel);

/// Weak head normal form: reduce the principal argument of destructors and
/// contract root redexes until the root is a constructor or neutral.
/// nullopt if fuel runs out.
std::optional<Proof> whnf(const Proof& t, int fuel = kDefaultFuel);

}  // namespace usum
