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

#include "usum/trace.hpp"

#include "usum/parser.hpp"
#include "usum/printer.hpp"

namespace usum {

std::string position_text(const Position& p) {
  if (p.empty()) return "root";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "." : "") + std::to_string(p[i]);
  return s;
}

json trace_json(const Trace& t, Strategy s, int fuel) {
  json steps = json::array();
  Proof before = t.initial;
  for (const auto& st : t.steps) {
    steps.push_back({{"rule", family_name(st.redex.rule)},
                     {"variant", rule_name(st.redex.rule)},
                     {"position", st.redex.position},
                     {"redex", position_text(st.redex.position)},
                     {"before", print(before)},
                     {"after", print(st.result)}});
    before = st.result;
  }
  return {{"format", kFormatTag},     {"kind", "trace"},          {"strategy", strategy_name(s)},
          {"fuel", fuel},             {"initial", print(t.initial)}, {"steps", steps},
          {"terminal", print(t.terminal)}, {"exhausted", t.exhausted}};
}

std::string trace_text(const Trace& t, bool unicode) {
  PrintOptions o{unicode};
  std::string out;
  Proof before = t.initial;
  for (const auto& st : t.steps) {
    out += print(before, o) + (unicode ? " ⟶ " : " --> ") + print(st.result, o) + "  [" +
           std::string(family_name(st.redex.rule)) + "]\n";
    before = st.result;
  }
  return out;
}

json derivation_json(const Derivation& d) {
  json premises = json::array();
  for (const auto& p : d.premises) premises.push_back(derivation_json(p));
  return {{"rule", rule_name(d.rule)},
          {"term", print(d.term)},
          {"formula", print(d.formula)},
          {"discharged", d.discharged},
          {"premises", premises}};
}

namespace {

std::string kind_text(MoveKind k) {
  switch (k) {
    case MoveKind::Assert: return "assert";
    case MoveKind::Attack: return "attack";
    case MoveKind::Defend: return "defend";
  }
  return "?";
}

}  // namespace

json move_json(const GameState& g, const Move& m) {
  json j = {{"player", player_name(m.player)}, {"kind", kind_text(m.kind)}};
  if (m.target >= 0) j["target"] = m.target;
  if (m.formula) j["formula"] = print(*m.formula);
  if (m.attack) {
    j["attack"] = attack_name(*m.attack);
    if (m.target >= 0 && m.target < static_cast<int>(g.history().size()))
      j["display"] = display(*g.history()[m.target].formula);
  }
  if (m.term) j["term"] = print(*m.term);
  if (m.choice) j["choice"] = *m.choice;
  if (m.path) j["path"] = print(*m.path);
  if (!m.token.empty()) j["token"] = m.token;
  if (m.residual) j["residual"] = print(*m.residual);
  if (m.rule) j["rule"] = family_name(*m.rule);
  return j;
}

json game_json(const GameState& g) {
  json history = json::array();
  for (int i = 0; i < static_cast<int>(g.history().size()); ++i) {
    json m = move_json(g, g.history()[i]);
    m["index"] = i;
    m["text"] = describe(g, i);
    history.push_back(m);
  }
  json legal = json::array();
  if (g.status() == Status::Running) {
    auto moves = g.legal_moves();
    for (int i = 0; i < static_cast<int>(moves.size()); ++i) {
      json m = move_json(g, moves[i]);
      m["index"] = i;
      legal.push_back(m);
    }
  }
  json j = {{"thesis", print(g.thesis())},
            {"status", status_name(g.status())},
            {"turn", player_name(g.turn())},
            {"history", history},
            {"legal_moves", legal}};
  if (g.status() == Status::ProponentWins) j["winner"] = "P";
  if (g.status() == Status::OpponentWins) j["winner"] = "O";
  return j;
}

}  // namespace usum
