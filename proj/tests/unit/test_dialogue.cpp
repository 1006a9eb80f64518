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

#include <doctest.h>

#include <memory>

#include "fixture.hpp"
#include "usum/dialogue.hpp"

using namespace usum;
using unit::world;

namespace {

std::shared_ptr<const Signature> shared_sig() { return world().doc.signature; }

}  // namespace

TEST_CASE("attacks_of") {
  const auto& w = world();
  CHECK(attacks_of(w.formula("A /\\ B")) == std::vector{AttackKind::ConjLeft, AttackKind::ConjRight});
  CHECK(attacks_of(w.formula("A \\/ B")) == std::vector{AttackKind::DisjQuery});
  CHECK(attacks_of(w.formula("A -> B")) == std::vector{AttackKind::ImplGrant});
  CHECK(attacks_of(w.formula("forall x. P(x)")) == std::vector{AttackKind::ForallInstance});
  CHECK(carries_term(AttackKind::ForallInstance));
  CHECK(attacks_of(w.formula("exists x. P(x)")) == std::vector{AttackKind::ExistsQuery});
  CHECK(attacks_of(w.formula("Id(c, d)")) == std::vector{AttackKind::IdQuery});
  CHECK(attacks_of(w.formula("P(c)")).empty());
  CHECK(attacks_of(w.formula("False")).empty());
}

TEST_CASE("defense_of") {
  const auto& w = world();
  auto d = defense_of(w.formula("A -> B"), {AttackKind::ImplGrant, {}});
  CHECK(d.shape == DefenseShape::Formula);
  CHECK(d.formulas == std::vector{w.formula("B")});

  d = defense_of(w.formula("exists x. P(x)"), {AttackKind::ExistsQuery, {}});
  CHECK(d.shape == DefenseShape::Witness);

  d = defense_of(w.formula("Id(c, d)"), {AttackKind::IdQuery, {}});
  CHECK(d.shape == DefenseShape::Path);

  d = defense_of(w.formula("forall x. P(x)"), {AttackKind::ForallInstance, w.term("s")});
  CHECK(d.formulas == std::vector{w.formula("P(s)")});

  d = defense_of(w.formula("A \\/ B"), {AttackKind::DisjQuery, {}});
  CHECK(d.shape == DefenseShape::Choice);
  CHECK(d.formulas.size() == 2);

  CHECK_THROWS_AS(defense_of(w.formula("A /\\ B"), {AttackKind::DisjQuery, {}}), DialogueError);
}

TEST_CASE("respond") {
  const auto& w = world();
  auto r = respond(w.sig(), w.proof("pair(a, b)"), w.formula("A /\\ B"), {AttackKind::ConjLeft, {}});
  CHECK(r.rule == BetaRule::ConjLeft);
  CHECK(r.defense.formula == w.formula("A"));
  CHECK(*r.defense.residual == w.proof("a"));

  r = respond(w.sig(), w.proof("inl[B](a)"), w.formula("A \\/ B"), {AttackKind::DisjQuery, {}});
  CHECK(r.defense.choice == 0);
  CHECK(*r.defense.residual == w.proof("a"));

  r = respond(w.sig(), w.proof("lam x. pair(x, b)"), w.formula("A -> A /\\ B"), {AttackKind::ImplGrant, {}},
              w.proof("a"));
  CHECK(r.rule == BetaRule::Impl);
  CHECK(r.defense.formula == w.formula("A /\\ B"));
  CHECK(*r.defense.residual == w.proof("pair(a, b)"));

  r = respond(w.sig(), w.proof("eps x. (pc, c) : P(x)"), w.formula("exists x. P(x)"), {AttackKind::ExistsQuery, {}});
  CHECK(r.rule == BetaRule::Exists);
  CHECK(*r.defense.witness == w.term("c"));
  CHECK(r.defense.formula == w.formula("P(c)"));
  CHECK(*r.defense.residual == w.proof("pc"));

  r = respond(w.sig(), w.proof("idp(rw(f(c), fc), f(c), d)"), w.formula("Id(f(c), d)"), {AttackKind::IdQuery, {}});
  CHECK(r.rule == BetaRule::Id);
  CHECK(*r.defense.path == w.path("rw(f(c), fc)"));

  CHECK_THROWS_AS(respond(w.sig(), w.proof("a"), w.formula("A /\\ B"), {AttackKind::ConjLeft, {}}), DialogueError);
}

TEST_CASE("legal moves of the initial state") {
  const auto& w = world();
  GameState g(shared_sig(), w.formula("A /\\ B"), std::nullopt);
  auto moves = g.legal_moves();
  REQUIRE(moves.size() == 2);
  CHECK(moves[0].player == Player::Opponent);
  CHECK(*moves[0].attack == AttackKind::ConjLeft);
  CHECK(*moves[1].attack == AttackKind::ConjRight);
}

TEST_CASE("Proponent copies a granted atom") {
  const auto& w = world();
  Proof id = w.proof("lam x. x");
  GameState g(shared_sig(), w.formula("A -> A"), id);
  g = g.apply(g.legal_moves().at(0));
  auto reply = proponent_move(g);
  REQUIRE(reply);
  CHECK(reply->kind == MoveKind::Defend);
  CHECK(*reply->formula == w.formula("A"));
  CHECK(g.is_legal(*reply));
  g = g.apply(*reply);
  CHECK(g.status() == Status::ProponentWins);
  CHECK(g.legal_moves().empty());
}

TEST_CASE("an unjustified atom loses") {
  const auto& w = world();
  auto r = play(shared_sig(), w.proof("a"), w.formula("A"), random_policy(1), 12);
  CHECK(r.state.status() == Status::OpponentWins);
}

TEST_CASE("play and exhaustive_win") {
  const auto& w = world();
  auto sig = shared_sig();
  Proof comm = w.proof("lam z. pair(SND(z), FST(z))");
  Formula thesis = w.formula("A /\\ B -> B /\\ A");
  for (unsigned seed = 0; seed < 20; ++seed) {
    auto r = play(sig, comm, thesis, random_policy(seed), 12);
    CHECK_FALSE(r.error);
    CHECK(r.state.status() == Status::ProponentWins);
  }
  CHECK(exhaustive_win(sig, comm, thesis, 8) == Verdict::Win);
  CHECK(exhaustive_win(sig, w.proof("lam x. FST(x)"), w.formula("A /\\ B -> A"), 6) == Verdict::Win);
  CHECK(exhaustive_win(sig, w.proof("lam x. x"), w.formula("A -> A"), 2) == Verdict::Win);
  CHECK(exhaustive_win(sig, comm, thesis, 0) == Verdict::Indeterminate);
  CHECK(exhaustive_win(sig, comm, thesis, 2) == Verdict::Indeterminate);
  // a proof of the wrong formula cannot carry the game
  CHECK(exhaustive_win(sig, w.proof("lam x. FST(x)"), w.formula("A /\\ B -> B"), 6) == Verdict::NotWin);
}

TEST_CASE("depth 0 cuts immediately") {
  const auto& w = world();
  auto r = play(shared_sig(), w.proof("lam x. x"), w.formula("A -> A"), random_policy(0), 0);
  CHECK(r.state.status() == Status::Indeterminate);
  CHECK(r.state.history().size() == 1);
}

TEST_CASE("illegal moves are rejected") {
  const auto& w = world();
  GameState g(shared_sig(), w.formula("A /\\ B"), w.proof("pair(a, b)"));
  Move bogus;
  bogus.player = Player::Opponent;
  bogus.kind = MoveKind::Attack;
  bogus.target = 0;
  bogus.attack = AttackKind::DisjQuery;
  CHECK(g.illegal_reason(bogus));
  CHECK_THROWS_AS(g.apply(bogus), DialogueError);
  auto r = play(shared_sig(), w.proof("pair(a, b)"), w.formula("A /\\ B"),
                [&](const GameState&, const std::vector<Move>&) { return std::optional<Move>(bogus); }, 6);
  CHECK(r.error);
}

TEST_CASE("Opponent cannot answer one attack twice") {
  const auto& w = world();
  GameState g(shared_sig(), w.formula("(A -> B -> C) -> A /\\ B -> C"),
              w.proof("lam f. lam p. APP(APP(f, FST(p)), SND(p))"));
  bool tested = false;
  for (int round = 0; round < 10 && g.status() == Status::Running && !tested; ++round) {
    auto moves = g.legal_moves();
    REQUIRE(!moves.empty());
    Move chosen = moves[0];
    for (const auto& m : moves)
      if (m.kind == MoveKind::Defend) chosen = m;
    g = g.apply(chosen);
    if (g.status() == Status::Running) g = g.apply(*proponent_move(g));
    if (chosen.kind == MoveKind::Defend && g.status() == Status::Running) {
      CHECK(g.answered(chosen.target));
      auto why = g.illegal_reason(chosen);
      REQUIRE(why);
      CHECK(why->find("answered") != std::string::npos);
      tested = true;
    }
  }
  CHECK(tested);
}
