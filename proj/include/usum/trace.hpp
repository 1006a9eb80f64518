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

#include <string>

#include <json.hpp>

#include "usum/dialogue.hpp"
#include "usum/reduction.hpp"
#include "usum/typing.hpp"

namespace usum {

using json = nlohmann::json;

/// Position as dotted child indices; "root" for the empty path.
std::string position_text(const Position& p);

/// Reduction trace document: one object per step with the rule family,
/// the exact variant, the redex position, and the whole term before and
/// after the step.
json trace_json(const Trace& t, Strategy s, int fuel);

/// One rewriting per line: "before ⟶ after  [∧-β]".
std::string trace_text(const Trace& t, bool unicode = true);

json derivation_json(const Derivation& d);

json move_json(const GameState& g, const Move& m);
/// History, status and the moves available to the player to move.
json game_json(const GameState& g);

}  // namespace usum
