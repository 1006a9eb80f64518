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

#include "usum/dialogue.hpp"

#include <random>

#include "usum/binding.hpp"
#include "usum/printer.hpp"
#include "usum/typing.hpp"

namespace usum {

std::string_view player_name(Player p) { return p == Player::Proponent ? "P" : "O"; }

std::string_view attack_name(AttackKind k) {
  switch (k) {
    case AttackKind::ConjLeft: return "L?";
    case AttackKind::ConjRight: return "R?";
    case AttackKind::DisjQuery: return "?";
    case AttackKind::ImplGrant: return "grant";
    case AttackKind::ForallInstance: return "instance";
    case AttackKind::ExistsQuery: return "?";
    case AttackKind::IdQuery: return "?";
  }
  return "?";
}

std::optional<AttackKind> parse_attack(std::string_view s) {
  if (s == "L?" || s == "conj-left") return AttackKind::ConjLeft;
  if (s == "R?" || s == "conj-right") return AttackKind::ConjRight;
  if (s == "disj-query") return AttackKind::DisjQuery;
  if (s == "grant" || s == "impl-grant") return AttackKind::ImplGrant;
  if (s == "instance" || s == "forall-instance") return AttackKind::ForallInstance;
  if (s == "exists-query") return AttackKind::ExistsQuery;
  if (s == "id-query") return AttackKind::IdQuery;
  return std::nullopt;
}

std::vector<AttackKind> attacks_of(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Conj: return {AttackKind::ConjLeft, AttackKind::ConjRight};
    case Formula::Kind::Disj: return {AttackKind::DisjQuery};
    case Formula::Kind::Impl: return {AttackKind::ImplGrant};
    case Formula::Kind::Forall: return {AttackKind::ForallInstance};
    case Formula::Kind::Exists: return {AttackKind::ExistsQuery};
    case Formula::Kind::Id: return {AttackKind::IdQuery};
    default: return {};
  }
}

bool carries_term(AttackKind k) { return k == AttackKind::ForallInstance; }

DefenseSchema defense_of(const Formula& f, const Attack& a) {
  auto kinds = attacks_of(f);
  bool ok = false;
  for (auto k : kinds) ok = ok || k == a.kind;
  if (!ok) throw DialogueError(std::string(attack_name(a.kind)) + " does not attack " + print(f));
  switch (a.kind) {
    case AttackKind::ConjLeft: return {DefenseShape::Formula, {f.left()}};
    case AttackKind::ConjRight: return {DefenseShape::Formula, {f.right()}};
    case AttackKind::DisjQuery: return {DefenseShape::Choice, {f.left(), f.right()}};
    case AttackKind::ImplGrant: return {DefenseShape::Formula, {f.right()}};
    case AttackKind::ForallInstance:
      if (!a.instance) throw DialogueError("instance attack without a term");
      if (a.instance->sort() != f.sort()) throw DialogueError("instance of the wrong sort");
      return {DefenseShape::Formula, {instantiate(f.body(), *a.instance)}};
    case AttackKind::ExistsQuery: return {DefenseShape::Witness, {f}};
    case AttackKind::IdQuery: return {DefenseShape::Path, {f}};
  }
  throw DialogueError("unknown attack");
}

namespace {

class Display {
 public:
  std::string term(const Term& t) const {
    switch (t.kind()) {
      case Term::Kind::Bound: {
        int i = t.index();
        return i < static_cast<int>(names_.size()) ? names_[names_.size() - 1 - i] : "#" + std::to_string(i);
      }
      case Term::Kind::Apply: {
        std::string s = t.name() + "(";
        for (std::size_t i = 0; i < t.args().size(); ++i) s += (i ? "," : "") + term(t.args()[i]);
        return s + ")";
      }
      default: return t.name();
    }
  }

  std::string formula(const Formula& f, int prec = 0) {
    switch (f.kind()) {
      case Formula::Kind::Atom: {
        if (f.terms().empty()) return f.name();
        std::string s = f.name() + "(";
        for (std::size_t i = 0; i < f.terms().size(); ++i) s += (i ? "," : "") + term(f.terms()[i]);
        return s + ")";
      }
      case Formula::Kind::Id:
        return "Id_" + f.sort() + "(" + term(f.terms()[0]) + "," + term(f.terms()[1]) + ")";
      case Formula::Kind::Bot: return "⊥";
      case Formula::Kind::Conj: return wrap(prec > 3, formula(f.left(), 3) + "∧" + formula(f.right(), 4));
      case Formula::Kind::Disj: return wrap(prec > 2, formula(f.left(), 2) + "∨" + formula(f.right(), 3));
      case Formula::Kind::Impl:
        if (f.right().kind() == Formula::Kind::Bot) return "¬" + formula(f.left(), 4);
        return wrap(prec > 1, formula(f.left(), 2) + "→" + formula(f.right(), 1));
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        names_.push_back(f.name());
        std::string s = (f.kind() == Formula::Kind::Forall ? "∀" : "∃") + f.name() + "^" + f.sort() + "." +
                        formula(f.body(), 4);
        names_.pop_back();
        return wrap(prec > 0, s);
      }
    }
    return {};
  }

 private:
  static std::string wrap(bool p, const std::string& s) { return p ? "(" + s + ")" : s; }
  std::vector<std::string> names_;
};

}  // namespace

std::string display(const Formula& f) { return Display().formula(f); }

std::vector<TableRow> table_rows(const Formula& f) {
  std::vector<TableRow> rows;
  std::string assertion = display(f);
  for (AttackKind k : attacks_of(f)) {
    Attack a{k, std::nullopt};
    Term s = Term::constant("s", f.is_quantifier() ? f.sort() : kIndividuals);
    std::string attack(attack_name(k));
    if (k == AttackKind::ImplGrant) attack = display(f.left()) + " ?";
    if (k == AttackKind::ForallInstance) {
      a.instance = s;
      attack = "s:" + f.sort() + " ?";
    }
    DefenseSchema d = defense_of(f, a);
    switch (d.shape) {
      case DefenseShape::Formula: rows.push_back({assertion, attack, display(d.formulas[0])}); break;
      case DefenseShape::Choice:
        for (const auto& alt : d.formulas) rows.push_back({assertion, attack, display(alt)});
        break;
      case DefenseShape::Witness:
        rows.push_back({assertion, attack,
                        "s:" + f.sort() + ", " + display(instantiate(d.formulas[0].body(), s))});
        break;
      case DefenseShape::Path: {
        Display dp;
        const Formula& id = d.formulas[0];
        rows.push_back({assertion, attack,
                        dp.term(id.terms()[0]) + "=_r " + dp.term(id.terms()[1]) + ":" + id.sort()});
        break;
      }
    }
  }
  return rows;
}

Response respond(const Signature& sig, const Proof& residual, const Formula& f, const Attack& a,
                 const std::optional<Proof>& grant) {
  (void)sig;
  DefenseSchema schema = defense_of(f, a);
  Proof redex = residual;
  switch (a.kind) {
    case AttackKind::ConjLeft: redex = Proof::fst(residual); break;
    case AttackKind::ConjRight: redex = Proof::snd(residual); break;
    case AttackKind::ImplGrant:
      if (!grant) throw DialogueError("implication attack without a granted proof");
      redex = Proof::app(residual, *grant);
      break;
    case AttackKind::ForallInstance: redex = Proof::extr(residual, *a.instance); break;
    case AttackKind::DisjQuery:
      redex = Proof::case_of(residual, "x", Proof::inl(Proof::var(0, "x")), "y", Proof::inr(Proof::var(0, "y")));
      break;
    case AttackKind::ExistsQuery:
      redex = Proof::inst(residual, "g", "t", f.sort(),
                          Proof::eps("x", f.sort(), Proof::var(0, "g"), Term::bound(0, "t", f.sort())));
      break;
    case AttackKind::IdQuery:
      redex = Proof::rewr(residual, "p", Proof::idintro(PathExpr::bound(0, "p"), f.terms()[0], f.terms()[1]));
      break;
  }
  auto rule = root_redex(redex);
  if (!rule) throw DialogueError("the assertion's term is not a matching constructor: " + print(residual));
  Proof reduct = contract(redex, *rule);
  Response r{*rule, redex, reduct, Defense{f, {}, {}, {}, {}}};
  switch (schema.shape) {
    case DefenseShape::Formula:
      r.defense.formula = schema.formulas[0];
      r.defense.residual = reduct;
      break;
    case DefenseShape::Choice: {
      int c = reduct.kind() == Proof::Kind::Inl ? 0 : 1;
      r.defense.formula = schema.formulas[c];
      r.defense.choice = c;
      r.defense.residual = reduct.kid(0);
      break;
    }
    case DefenseShape::Witness: {
      const Term& s = reduct.terms()[0];
      r.defense.witness = s;
      r.defense.formula = instantiate(f.body(), s);
      r.defense.residual = instantiate(reduct.kid(0), {{}, {s}, {}});
      break;
    }
    case DefenseShape::Path:
      r.defense.formula = f;
      r.defense.path = reduct.reason();
      break;
  }
  return r;
}

bool attackable(const Move& m) { return m.formula && !m.formula->is_atomic() && !m.path; }

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Running: return "running";
    case Status::ProponentWins: return "proponent-wins";
    case Status::OpponentWins: return "opponent-wins";
    case Status::Indeterminate: return "indeterminate";
  }
  return "?";
}

GameState::GameState(std::shared_ptr<const Signature> sig, Formula thesis, std::optional<Proof> proof)
    : sig_(std::move(sig)), thesis_(thesis) {
  Move m;
  m.player = Player::Proponent;
  m.kind = MoveKind::Assert;
  m.formula = thesis;
  m.residual = std::move(proof);
  history_.push_back(m);
  // Nothing was granted before the thesis.
  status_ = thesis.is_atomic() ? Status::OpponentWins : Status::Running;
  update_status();
}

bool GameState::answered(int attack) const {
  for (const auto& m : history_)
    if (m.kind == MoveKind::Defend && m.target == attack) return true;
  return false;
}

std::vector<int> GameState::open_attacks(Player by) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(history_.size()); ++i)
    if (history_[i].kind == MoveKind::Attack && history_[i].player == by && !answered(i)) out.push_back(i);
  return out;
}

bool GameState::granted(const Formula& f) const {
  for (const auto& m : history_)
    if (m.player == Player::Opponent && m.formula && !m.path && *m.formula == f) return true;
  return false;
}

int GameState::token_move(const std::string& token) const {
  for (int i = 0; i < static_cast<int>(history_.size()); ++i)
    if (history_[i].player == Player::Opponent && history_[i].token == token) return i;
  return -1;
}

std::string GameState::fresh(const std::string& prefix) const {
  std::string name = prefix + std::to_string(history_.size());
  while (sig_->declares(name) || ctx_.declares(name)) name += "'";
  return name;
}

std::vector<Term> GameState::term_choices(const std::string& sort, bool with_fresh) const {
  std::vector<Term> out = sig_->constants_of(sort);
  for (const auto& [name, s] : ctx_.vars())
    if (s == sort) out.push_back(Term::free(name, s));
  if (with_fresh) out.push_back(Term::free(fresh("i"), sort));
  return out;
}

void GameState::opponent_moves(std::vector<Move>& out) const {
  int n = static_cast<int>(history_.size());
  const Move& last = history_.back();
  if (attackable(last)) {
    const Formula& f = *last.formula;
    for (AttackKind k : attacks_of(f)) {
      Move m;
      m.player = Player::Opponent;
      m.kind = MoveKind::Attack;
      m.target = n - 1;
      m.attack = k;
      if (k == AttackKind::ForallInstance) {
        for (const auto& t : term_choices(f.sort(), true)) {
          m.term = t;
          out.push_back(m);
        }
        continue;
      }
      if (k == AttackKind::ImplGrant) {
        m.formula = f.left();
        m.token = fresh("o");
      }
      out.push_back(m);
    }
  }
  if (last.kind == MoveKind::Attack && last.player == Player::Proponent) {
    const Formula& f = *history_[last.target].formula;
    DefenseSchema d = defense_of(f, {*last.attack, last.term});
    Move m;
    m.player = Player::Opponent;
    m.kind = MoveKind::Defend;
    m.target = n - 1;
    switch (d.shape) {
      case DefenseShape::Formula:
        m.formula = d.formulas[0];
        m.token = fresh("o");
        out.push_back(m);
        break;
      case DefenseShape::Choice:
        m.token = fresh("o");
        for (int c = 0; c < 2; ++c) {
          m.choice = c;
          m.formula = d.formulas[c];
          out.push_back(m);
        }
        break;
      case DefenseShape::Witness:
        m.token = fresh("o");
        for (const auto& t : term_choices(f.sort(), true)) {
          m.term = t;
          m.formula = instantiate(f.body(), t);
          out.push_back(m);
        }
        break;
      case DefenseShape::Path:
        m.token = fresh("r");
        m.formula = f;
        m.path = PathExpr::free(m.token);
        out.push_back(m);
        break;
    }
  }
}

void GameState::proponent_moves(std::vector<Move>& out) const {
  for (int i = 0; i < static_cast<int>(history_.size()); ++i) {
    const Move& a = history_[i];
    if (a.player != Player::Opponent || !attackable(a)) continue;
    const Formula& f = *a.formula;
    for (AttackKind k : attacks_of(f)) {
      Move m;
      m.player = Player::Proponent;
      m.kind = MoveKind::Attack;
      m.target = i;
      m.attack = k;
      if (k == AttackKind::ForallInstance) {
        for (const auto& t : term_choices(f.sort(), false)) {
          m.term = t;
          out.push_back(m);
        }
        continue;
      }
      if (k == AttackKind::ImplGrant) {
        if (f.left().is_atomic() && !granted(f.left())) continue;
        m.formula = f.left();
      }
      out.push_back(m);
    }
  }
  auto open = open_attacks(Player::Opponent);
  if (open.empty()) return;
  int k = open.back();
  const Move& attack = history_[k];
  const Formula& f = *history_[attack.target].formula;
  DefenseSchema d = defense_of(f, {*attack.attack, attack.term});
  Move m;
  m.player = Player::Proponent;
  m.kind = MoveKind::Defend;
  m.target = k;
  auto allowed = [&](const Formula& g) { return !g.is_atomic() || granted(g); };
  switch (d.shape) {
    case DefenseShape::Formula:
      if (allowed(d.formulas[0])) {
        m.formula = d.formulas[0];
        out.push_back(m);
      }
      break;
    case DefenseShape::Choice:
      for (int c = 0; c < 2; ++c) {
        if (!allowed(d.formulas[c])) continue;
        m.choice = c;
        m.formula = d.formulas[c];
        out.push_back(m);
      }
      break;
    case DefenseShape::Witness:
      for (const auto& t : term_choices(f.sort(), false)) {
        Formula g = instantiate(f.body(), t);
        if (!allowed(g)) continue;
        m.term = t;
        m.formula = g;
        out.push_back(m);
      }
      break;
    case DefenseShape::Path:
      m.formula = f;
      out.push_back(m);
      break;
  }
}

std::vector<Move> GameState::legal_moves() const {
  std::vector<Move> out;
  if (status_ != Status::Running) return out;
  if (turn() == Player::Opponent)
    opponent_moves(out);
  else
    proponent_moves(out);
  return out;
}

namespace {

// A term chosen by a player: well-sorted in the game context, or for the
// Opponent a single fresh individual.
std::optional<std::string> term_problem(const GameState& g, const Term& t, const std::string& sort,
                                        bool may_be_fresh) {
  if (t.sort() != sort) return "term " + print(t) + " is not of sort " + sort;
  if (may_be_fresh && t.kind() == Term::Kind::Free && !g.context().declares(t.name()) &&
      !g.signature().declares(t.name()))
    return std::nullopt;
  try {
    if (check_term(g.signature(), g.context(), t) != sort) return "term " + print(t) + " is not of sort " + sort;
  } catch (const Error& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

std::optional<std::string> token_problem(const GameState& g, const std::string& token) {
  if (token.empty()) return "the Opponent's assertion needs a token";
  if (g.context().declares(token) || g.signature().declares(token)) return "token " + token + " is already in use";
  return std::nullopt;
}

std::optional<std::string> residual_problem(const GameState& g, const Move& m) {
  if (!m.residual || !m.formula || m.path) return std::nullopt;
  try {
    check(g.signature(), g.context(), *m.residual, *m.formula);
  } catch (const Error& e) {
    return "the residual does not prove the asserted formula: " + std::string(e.what());
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> GameState::illegal_reason(const Move& m) const {
  if (status_ != Status::Running) return "the game is over";
  if (m.player != turn()) return "it is not " + std::string(player_name(m.player)) + "'s turn";
  int n = static_cast<int>(history_.size());
  bool opp = m.player == Player::Opponent;
  if (m.kind == MoveKind::Assert) return "only the thesis is asserted outright";
  if (m.target < 0 || m.target >= n) return "move target out of range";
  const Move& t = history_[m.target];
  if (m.kind == MoveKind::Attack) {
    if (t.player == m.player) return "a player cannot attack their own move";
    if (!attackable(t)) return "move " + std::to_string(m.target) + " cannot be attacked";
    if (opp && m.target != n - 1) return "the Opponent must react to the immediately preceding move";
    if (!m.attack) return "attack kind missing";
    const Formula& f = *t.formula;
    bool ok = false;
    for (auto k : attacks_of(f)) ok = ok || k == *m.attack;
    if (!ok) return std::string(attack_name(*m.attack)) + " does not attack " + print(f);
    if (*m.attack == AttackKind::ForallInstance) {
      if (!m.term) return "an instance attack needs a term";
      if (auto p = term_problem(*this, *m.term, f.sort(), opp)) return p;
    }
    if (*m.attack == AttackKind::ImplGrant) {
      if (!m.formula || *m.formula != f.left()) return "a grant must assert the antecedent " + print(f.left());
      if (opp) {
        if (auto p = token_problem(*this, m.token)) return p;
      } else {
        if (f.left().is_atomic() && !granted(f.left()))
          return "the Proponent may assert " + print(f.left()) + " only after the Opponent has";
        if (auto p = residual_problem(*this, m)) return p;
      }
    }
    return std::nullopt;
  }
  // Defense.
  if (t.kind != MoveKind::Attack || t.player == m.player) return "only the other player's attacks can be answered";
  if (answered(m.target)) return "attack " + std::to_string(m.target) + " was already answered";
  if (opp && m.target != n - 1) return "the Opponent must react to the immediately preceding move";
  if (!opp) {
    auto open = open_attacks(Player::Opponent);
    if (open.empty() || open.back() != m.target) return "the Proponent may only answer the latest open attack";
  }
  const Formula& f = *history_[t.target].formula;
  DefenseSchema d = defense_of(f, {*t.attack, t.term});
  if (!m.formula) return "a defense must assert a formula";
  switch (d.shape) {
    case DefenseShape::Formula:
      if (*m.formula != d.formulas[0]) return "the defense must assert " + print(d.formulas[0]);
      break;
    case DefenseShape::Choice:
      if (!m.choice || *m.choice < 0 || *m.choice > 1) return "a disjunction defense must choose a side";
      if (*m.formula != d.formulas[*m.choice]) return "the defense must assert " + print(d.formulas[*m.choice]);
      break;
    case DefenseShape::Witness: {
      if (!m.term) return "an existential defense needs a witness";
      if (auto p = term_problem(*this, *m.term, f.sort(), opp)) return p;
      Formula g = instantiate(f.body(), *m.term);
      if (*m.formula != g) return "the defense must assert " + print(g);
      break;
    }
    case DefenseShape::Path: {
      if (*m.formula != f) return "the defense must assert " + print(f);
      if (!m.path) return "an identity defense needs a path";
      if (opp) {
        if (m.path->kind() != PathExpr::Kind::Free || m.path->name() != m.token)
          return "the Opponent's path must be its fresh token";
        if (auto p = token_problem(*this, m.token)) return p;
        return std::nullopt;
      }
      try {
        PathType pt = path_type(*sig_, ctx_, *m.path);
        if (pt.from != f.terms()[0] || pt.to != f.terms()[1])
          return "path " + print(*m.path) + " does not join " + print(f.terms()[0]) + " and " + print(f.terms()[1]);
      } catch (const Error& e) {
        return std::string(e.what());
      }
      return std::nullopt;
    }
  }
  if (opp) return token_problem(*this, m.token);
  if (m.formula->is_atomic() && !granted(*m.formula))
    return "the Proponent may assert " + print(*m.formula) + " only after the Opponent has";
  return residual_problem(*this, m);
}

void GameState::record(const Move& m) {
  history_.push_back(m);
  if (m.player != Player::Opponent) return;
  if (m.term && m.term->kind() == Term::Kind::Free && !ctx_.declares(m.term->name()))
    ctx_.add_var(m.term->name(), m.term->sort());
  if (m.path) {
    const Formula& f = *m.formula;
    ctx_.add_path(m.token, f.sort(), f.terms()[0], f.terms()[1]);
  } else if (m.formula) {
    ctx_.add_hyp(m.token, *m.formula);
  }
}

void GameState::update_status() {
  if (status_ != Status::Running) return;
  if (!legal_moves().empty()) return;
  status_ = turn() == Player::Opponent ? Status::ProponentWins : Status::OpponentWins;
}

GameState GameState::apply(const Move& m) const {
  if (auto why = illegal_reason(m)) throw DialogueError("illegal move: " + *why);
  GameState next = *this;
  next.record(m);
  next.update_status();
  return next;
}

void GameState::cut() {
  if (status_ == Status::Running) status_ = Status::Indeterminate;
}

std::string describe(const GameState& g, int index) {
  const Move& m = g.history().at(index);
  std::string who(player_name(m.player));
  std::string s;
  switch (m.kind) {
    case MoveKind::Assert: s = who + " asserts " + print(*m.formula); break;
    case MoveKind::Attack:
      s = who + " attacks #" + std::to_string(m.target) + ": ";
      if (*m.attack == AttackKind::ImplGrant)
        s += "grant " + print(*m.formula);
      else if (*m.attack == AttackKind::ForallInstance)
        s += print(*m.term) + " ?";
      else
        s += std::string(attack_name(*m.attack));
      break;
    case MoveKind::Defend:
      s = who + " defends #" + std::to_string(m.target) + ": ";
      if (m.path)
        s += print(m.formula->terms()[0]) + " =_" + print(*m.path) + " " + print(m.formula->terms()[1]);
      else if (m.term)
        s += print(*m.term) + ", " + print(*m.formula);
      else
        s += print(*m.formula);
      break;
  }
  if (m.player == Player::Opponent && !m.token.empty() && !m.path && m.formula) s += "  as " + m.token;
  return s;
}

namespace {

// Elimination that attacks the Opponent assertion under the head token.
std::optional<AttackKind> attack_for(Proof::Kind k) {
  switch (k) {
    case Proof::Kind::Fst: return AttackKind::ConjLeft;
    case Proof::Kind::Snd: return AttackKind::ConjRight;
    case Proof::Kind::Case: return AttackKind::DisjQuery;
    case Proof::Kind::App: return AttackKind::ImplGrant;
    case Proof::Kind::Extr: return AttackKind::ForallInstance;
    case Proof::Kind::Inst: return AttackKind::ExistsQuery;
    case Proof::Kind::Rewr: return AttackKind::IdQuery;
    default: return std::nullopt;
  }
}

Proof eta(const Proof& t, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Disj:
      return Proof::case_of(t, "x", Proof::inl(Proof::var(0, "x")), "y", Proof::inr(Proof::var(0, "y")));
    case Formula::Kind::Exists:
      return Proof::inst(t, "g", "t", f.sort(),
                         Proof::eps("x", f.sort(), Proof::var(0, "g"), Term::bound(0, "t", f.sort())));
    case Formula::Kind::Id:
      return Proof::rewr(t, "p", Proof::idintro(PathExpr::bound(0, "p"), f.terms()[0], f.terms()[1]));
    default:
      return t;
  }
}

bool ready(const GameState& g, const Proof& t, const Formula& goal) {
  if (t.kind() != Proof::Kind::Hyp) return false;
  const Formula* f = g.context().hyp(t.name());
  return f && *f == goal;
}

class Strategist {
 public:
  explicit Strategist(const GameState& g) : g_(g) {}

  std::optional<Move> move() {
    auto open = g_.open_attacks(Player::Opponent);
    if (open.empty()) return std::nullopt;
    int k = open.back();
    auto w = current(k);
    if (!w) return std::nullopt;
    return advance(*w);
  }

 private:
  std::optional<Work> initial(int k) {
    const Move& attack = g_.history()[k];
    const Move& asserted = g_.history()[attack.target];
    if (!asserted.residual) return std::nullopt;
    const Proof& r = *asserted.residual;
    const Formula& f = *asserted.formula;
    Work w{k, r, f};
    Attack a{*attack.attack, attack.term};
    std::optional<Proof> grant;
    if (a.kind == AttackKind::ImplGrant) grant = Proof::hyp(attack.token);
    if (r.is_constructor()) {
      Response resp = respond(g_.signature(), r, f, a, grant);
      w.rule = resp.rule;
      w.goal = resp.defense.formula;
      w.choice = resp.defense.choice;
      w.witness = resp.defense.witness;
      w.opened = true;
      if (resp.defense.path) {
        // The reduct is the idp itself; keep it whole.
        w.term = resp.reduct;
        w.opened = false;
        w.goal = f;
      } else {
        w.term = *resp.defense.residual;
      }
      return w;
    }
    switch (a.kind) {
      case AttackKind::ConjLeft: w.term = Proof::fst(r); break;
      case AttackKind::ConjRight: w.term = Proof::snd(r); break;
      case AttackKind::ImplGrant: w.term = Proof::app(r, *grant); break;
      case AttackKind::ForallInstance: w.term = Proof::extr(r, *a.instance); break;
      default: w.term = r; return w;
    }
    w.opened = true;
    w.goal = defense_of(f, a).formulas[0];
    return w;
  }

  std::optional<Work> current(int k) {
    int last = -1;
    for (int i = 0; i < static_cast<int>(g_.history().size()); ++i) {
      const Move& m = g_.history()[i];
      if (m.player == Player::Proponent && m.kind == MoveKind::Attack && m.work && m.work->obligation == k) last = i;
    }
    if (last < 0) return initial(k);
    Work w = *g_.history()[last].work;
    for (const auto& d : g_.history()) {
      if (d.kind != MoveKind::Defend || d.target != last) continue;
      auto e = subterm_at(w.term, w.position);
      if (!e) return std::nullopt;
      Proof rep = Proof::hyp(d.token);
      switch (e->kind()) {
        case Proof::Kind::Case: rep = instantiate(e->kid(*d.choice == 0 ? 1 : 2), {{Proof::hyp(d.token)}, {}, {}}); break;
        case Proof::Kind::Inst: rep = instantiate(e->kid(1), {{Proof::hyp(d.token)}, {*d.term}, {}}); break;
        case Proof::Kind::Rewr: rep = instantiate(e->kid(1), {{}, {}, {PathExpr::free(d.token)}}); break;
        default: break;
      }
      w.term = replace_at(w.term, w.position, rep);
      w.position.clear();
    }
    return w;
  }

  Move defend(const Work& w, const Proof& residual) {
    Move m;
    m.player = Player::Proponent;
    m.kind = MoveKind::Defend;
    m.target = w.obligation;
    m.formula = w.goal;
    m.choice = w.choice;
    m.term = w.witness;
    m.residual = residual;
    m.rule = w.rule;
    return m;
  }

  std::optional<Move> advance(Work w) {
    for (int guard = 0; guard < 64; ++guard) {
      auto t = whnf(w.term);
      if (!t) return std::nullopt;
      w.term = *t;
      if (!w.opened) {
        const Formula& f = w.goal;
        if (t->kind() == Proof::Kind::Hyp) {
          w.term = eta(*t, f);
          return attack(w);
        }
        if (!t->is_constructor()) return attack(w);
        switch (t->kind()) {
          case Proof::Kind::Inl:
          case Proof::Kind::Inr:
            w.choice = t->kind() == Proof::Kind::Inl ? 0 : 1;
            w.goal = *w.choice == 0 ? f.left() : f.right();
            w.term = t->kid(0);
            break;
          case Proof::Kind::Eps:
            w.witness = t->terms()[0];
            w.goal = instantiate(f.body(), *w.witness);
            w.term = instantiate(t->kid(0), {{}, {*w.witness}, {}});
            break;
          case Proof::Kind::IdIntro: {
            Move m = defend(w, *t);
            m.residual.reset();
            m.formula = f;
            m.path = t->reason();
            return m;
          }
          default:
            return std::nullopt;
        }
        w.opened = true;
        continue;
      }
      if (!w.goal.is_atomic()) return defend(w, w.term);
      if (ready(g_, w.term, w.goal)) return defend(w, w.term);
      return attack(w);
    }
    return std::nullopt;
  }

  // Attack the elimination whose principal argument is an Opponent token,
  // first making an atomic grant ready if needed.
  std::optional<Move> attack(Work w) {
    Position base;
    for (int guard = 0; guard < 256; ++guard) {
      auto sub = subterm_at(w.term, base);
      if (!sub) return std::nullopt;
      Position pos = base;
      Proof cur = *sub;
      while (cur.is_destructor() && cur.kid(0).kind() != Proof::Kind::Hyp) {
        cur = cur.kid(0);
        pos.push_back(0);
      }
      if (!cur.is_destructor()) return std::nullopt;
      const std::string& token = cur.kid(0).name();
      int target = g_.token_move(token);
      if (target < 0) return std::nullopt;
      const Formula& f = *g_.history()[target].formula;
      auto kind = attack_for(cur.kind());
      if (!kind) return std::nullopt;
      Move m;
      m.player = Player::Proponent;
      m.kind = MoveKind::Attack;
      m.target = target;
      m.attack = kind;
      if (*kind == AttackKind::ForallInstance) m.term = cur.terms()[0];
      if (*kind == AttackKind::ImplGrant) {
        if (f.kind() != Formula::Kind::Impl) return std::nullopt;
        auto arg = whnf(cur.kid(1));
        if (!arg) return std::nullopt;
        if (*arg != cur.kid(1)) {
          w.term = replace_at(w.term, pos, cur.with_kids({cur.kid(0), *arg}));
          cur = *subterm_at(w.term, pos);
        }
        if (f.left().is_atomic() && !ready(g_, *arg, f.left())) {
          base = pos;
          base.push_back(1);
          continue;
        }
        m.formula = f.left();
        m.residual = *arg;
      }
      w.position = pos;
      m.work = w;
      return m;
    }
    return std::nullopt;
  }

  const GameState& g_;
};

}  // namespace

std::optional<Move> proponent_move(const GameState& g) {
  if (g.status() != Status::Running || g.turn() != Player::Proponent) return std::nullopt;
  try {
    return Strategist(g).move();
  } catch (const Error&) {
    return std::nullopt;
  }
}

Policy random_policy(unsigned seed) {
  auto rng = std::make_shared<std::mt19937>(seed);
  return [rng](const GameState&, const std::vector<Move>& legal) -> std::optional<Move> {
    if (legal.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
    return legal[pick(*rng)];
  };
}

Policy scripted_policy(std::vector<int> choices) {
  auto next = std::make_shared<std::size_t>(0);
  return [choices = std::move(choices), next](const GameState&,
                                              const std::vector<Move>& legal) -> std::optional<Move> {
    if (*next >= choices.size()) return std::nullopt;
    int c = choices[(*next)++];
    if (c < 0 || c >= static_cast<int>(legal.size())) return std::nullopt;
    return legal[c];
  };
}

PlayResult play(std::shared_ptr<const Signature> sig, const Proof& proof, const Formula& thesis,
                const Policy& opponent, int depth) {
  PlayResult r{GameState(std::move(sig), thesis, proof), std::nullopt};
  for (;;) {
    if (r.state.status() != Status::Running) return r;
    if (static_cast<int>(r.state.history().size()) > depth) {
      r.state.cut();
      return r;
    }
    std::optional<Move> m;
    if (r.state.turn() == Player::Proponent) {
      m = proponent_move(r.state);
      if (!m) {
        r.error = "the proof term yields no move";
        return r;
      }
    } else {
      m = opponent(r.state, r.state.legal_moves());
      if (!m) return r;
    }
    if (auto why = r.state.illegal_reason(*m)) {
      r.error = std::string(player_name(m->player)) + " move rejected: " + *why;
      return r;
    }
    r.state = r.state.apply(*m);
  }
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Win: return "win";
    case Verdict::NotWin: return "not-win";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

Verdict search(const GameState& g, int depth, SearchStats& stats) {
  ++stats.states;
  if (g.status() == Status::ProponentWins) return Verdict::Win;
  if (g.status() == Status::OpponentWins) return Verdict::NotWin;
  if (static_cast<int>(g.history().size()) > depth) {
    ++stats.cuts;
    return Verdict::Indeterminate;
  }
  if (g.turn() == Player::Proponent) {
    auto m = proponent_move(g);
    if (!m || !g.is_legal(*m)) return Verdict::NotWin;
    return search(g.apply(*m), depth, stats);
  }
  Verdict out = Verdict::Win;
  for (const auto& m : g.legal_moves()) {
    Verdict v = search(g.apply(m), depth, stats);
    if (v == Verdict::NotWin) return v;
    if (v == Verdict::Indeterminate) out = v;
  }
  return out;
}

}  // namespace

Verdict exhaustive_win(std::shared_ptr<const Signature> sig, const Proof& proof, const Formula& thesis, int depth,
                       SearchStats* stats) {
  SearchStats local;
  GameState g(std::move(sig), thesis, proof);
  Verdict v = search(g, depth, stats ? *stats : local);
  return v;
}

}  // namespace usum
