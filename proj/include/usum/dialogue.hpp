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
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "usum/context.hpp"
#include "usum/error.hpp"
#include "usum/formula.hpp"
#include "usum/path.hpp"
#include "usum/proof.hpp"
#include "usum/reduction.hpp"
#include "usum/signature.hpp"

namespace usum {

enum class Player : std::uint8_t { Proponent, Opponent };

std::string_view player_name(Player p);

enum class AttackKind : std::uint8_t {
  ConjLeft,        // L?
  ConjRight,       // R?
  DisjQuery,       // ?
  ImplGrant,       // attacker asserts the antecedent
  ForallInstance,  // attacker chooses s
  ExistsQuery,     // ?
  IdQuery,         // ?
};

std::string_view attack_name(AttackKind k);
std::optional<AttackKind> parse_attack(std::string_view s);

/// Attack kinds available against `f`; empty for atoms and absurdity.
std::vector<AttackKind> attacks_of(const Formula& f);

/// True for attacks that carry an attacker-chosen domain term.
bool carries_term(AttackKind k);

struct Attack {
  AttackKind kind;
  std::optional<Term> instance;  // ForallInstance
};

enum class DefenseShape : std::uint8_t {
  Formula,  // assert the given formula
  Choice,   // assert one of two formulas, defender's pick
  Witness,  // exhibit a term s and assert body[s]
  Path,     // exhibit a path between the identity's sides
};

struct DefenseSchema {
  DefenseShape shape;
  /// Formula: the prescribed formula. Choice: both alternatives.
  /// Witness: the existential. Path: the identity.
  std::vector<Formula> formulas;
};

class DialogueError : public Error {
 public:
  using Error::Error;
};

/// Defense prescribed for (f, a). Throws DialogueError on a mismatched kind.
DefenseSchema defense_of(const Formula& f, const Attack& a);

/// Three-column rendering of the particle rules in display notation:
/// assertion, attack, defense. One row per (attack, defense) pair.
struct TableRow {
  std::string assertion;
  std::string attack;
  std::string defense;
};
std::vector<TableRow> table_rows(const Formula& f);

/// Formula in display notation (∀x^D.P(x), Id_A(u,v)).
std::string display(const Formula& f);

struct Defense {
  Formula formula;
  std::optional<int> choice;      // 0 left, 1 right
  std::optional<Term> witness;
  std::optional<PathExpr> path;
  std::optional<Proof> residual;  // proof of `formula`; none for paths
};

struct Response {
  BetaRule rule;
  Proof redex;   // destructor applied to the constructor
  Proof reduct;  // result of contracting the root
  Defense defense;
};

/// Answer attack `a` on a constructor `residual` proving `f`. `grant` is the
/// attacker's proof of the antecedent for implication attacks. The ∨, ∃ and
/// Id destructors use identity continuations, so the reduct is the chosen
/// constructor component. Throws DialogueError if `residual` is not a
/// constructor of the right shape.
Response respond(const Signature& sig, const Proof& residual, const Formula& f, const Attack& a,
                 const std::optional<Proof>& grant = std::nullopt);

enum class MoveKind : std::uint8_t { Assert, Attack, Defend };

/// Proponent bookkeeping on its attacks: the obligation being worked on
/// (an Opponent attack index), the work term, and where the attacked
/// elimination sits inside it.
struct Work {
  int obligation = -1;
  Proof term;
  Formula goal;
  bool opened = false;  // term proves the defended formula itself
  std::optional<int> choice;
  std::optional<Term> witness;
  std::optional<BetaRule> rule;
  Position position;
};

struct Move {
  Player player = Player::Proponent;
  MoveKind kind = MoveKind::Assert;
  int target = -1;  // Attack: attacked move. Defend: answered attack.
  std::optional<Formula> formula;  // formula asserted by the move
  std::optional<AttackKind> attack;
  std::optional<Term> term;        // ∀ instance or ∃ witness
  std::optional<int> choice;       // ∨ defense
  std::optional<PathExpr> path;    // Id defense: the move asserts a path, not the formula
  std::string token;               // name of an Opponent assertion or path
  std::optional<Proof> residual;   // Proponent's proof of `formula`
  std::optional<Work> work;        // Proponent attacks
  std::optional<BetaRule> rule;    // Proponent defenses: root contraction used
};

/// Can the other player attack this move?
bool attackable(const Move& m);

enum class Status : std::uint8_t { Running, ProponentWins, OpponentWins, Indeterminate };

std::string_view status_name(Status s);

class GameState {
 public:
  GameState(std::shared_ptr<const Signature> sig, Formula thesis, std::optional<Proof> proof);

  const Signature& signature() const { return *sig_; }
  std::shared_ptr<const Signature> signature_ptr() const { return sig_; }
  const Formula& thesis() const { return thesis_; }
  const std::vector<Move>& history() const { return history_; }
  /// Opponent tokens, individuals and paths introduced so far.
  const Context& context() const { return ctx_; }
  Status status() const { return status_; }
  Player turn() const { return history_.size() % 2 == 0 ? Player::Proponent : Player::Opponent; }

  bool answered(int attack) const;
  /// Unanswered attacks by `by`, oldest first.
  std::vector<int> open_attacks(Player by) const;
  /// Has the Opponent asserted `f`?
  bool granted(const Formula& f) const;
  /// Index of the Opponent assertion recorded under `token`, or -1.
  int token_move(const std::string& token) const;

  std::optional<std::string> illegal_reason(const Move& m) const;
  bool is_legal(const Move& m) const { return !illegal_reason(m); }
  /// Moves for the player to move. Opponent moves are concrete; Proponent
  /// moves omit residuals, and Id defenses omit the path.
  std::vector<Move> legal_moves() const;

  /// Validated successor. Throws DialogueError on an illegal move.
  GameState apply(const Move& m) const;
  /// Mark a running game as cut off.
  void cut();

  /// Fresh Opponent name for the next move: o<n>, i<n> or r<n>.
  std::string fresh(const std::string& prefix) const;

 private:
  void record(const Move& m);
  void update_status();
  std::vector<Term> term_choices(const std::string& sort, bool with_fresh) const;
  void opponent_moves(std::vector<Move>& out) const;
  void proponent_moves(std::vector<Move>& out) const;

  std::shared_ptr<const Signature> sig_;
  Formula thesis_;
  std::vector<Move> history_;
  Context ctx_;
  Status status_ = Status::Running;
};

/// Short text for a move, e.g. "O [0] grant A /\ B  (o1)".
std::string describe(const GameState& g, int index);

/// The Proponent's move computed from the residual terms in the history;
/// nullopt if the strategy has nothing to say.
std::optional<Move> proponent_move(const GameState& g);

/// Picks an Opponent move from the legal list; nullopt to stop.
using Policy = std::function<std::optional<Move>(const GameState&, const std::vector<Move>&)>;

Policy random_policy(unsigned seed);
/// Plays the given indices into the legal-move list in order, then stops.
Policy scripted_policy(std::vector<int> choices);

struct PlayResult {
  GameState state;
  std::optional<std::string> error;  // a rejected move
};

/// Run a game with the proof-driven Proponent. Stops at a result, after
/// `depth` moves following the thesis (Indeterminate), or when the policy
/// stops.
PlayResult play(std::shared_ptr<const Signature> sig, const Proof& proof, const Formula& thesis,
                const Policy& opponent, int depth);

enum class Verdict : std::uint8_t { Win, NotWin, Indeterminate };

std::string_view verdict_name(Verdict v);

struct SearchStats {
  std::size_t states = 0;
  std::size_t cuts = 0;
};

/// Search every Opponent behaviour within `depth` moves after the thesis. Win iff all of
/// them lose; NotWin if some line is lost or the strategy fails; otherwise
/// Indeterminate.
Verdict exhaustive_win(std::shared_ptr<const Signature> sig, const Proof& proof, const Formula& thesis, int depth,
                       SearchStats* stats = nullptr);

}  // namespace usum
