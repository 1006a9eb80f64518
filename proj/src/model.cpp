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

#include "usum/model.hpp"

#include <functional>
#include <random>

#include "usum/binding.hpp"
#include "usum/printer.hpp"

namespace usum {

void Structure::set_carrier(const std::string& sort, std::vector<std::string> labels) {
  if (labels.empty()) throw ModelError("carrier of " + sort + " is empty");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw ModelError("carrier of " + sort + " repeats an element");
  carriers_[sort] = std::move(labels);
}

void Structure::set_constant(const std::string& name, int element) { constants_[name] = element; }

void Structure::set_function(const std::string& name, std::map<std::vector<int>, int> table) {
  functions_[name] = std::move(table);
}

void Structure::set_relation(const std::string& name, std::set<std::vector<int>> tuples) {
  relations_[name] = std::move(tuples);
}

int Structure::size(const std::string& sort) const {
  auto it = carriers_.find(sort);
  return it == carriers_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<std::string>& Structure::labels(const std::string& sort) const {
  auto it = carriers_.find(sort);
  if (it == carriers_.end()) throw ModelError("no carrier for sort " + sort);
  return it->second;
}

int Structure::element(const std::string& sort, const std::string& label) const {
  auto it = carriers_.find(sort);
  if (it == carriers_.end()) return -1;
  for (std::size_t i = 0; i < it->second.size(); ++i)
    if (it->second[i] == label) return static_cast<int>(i);
  return -1;
}

int Structure::constant(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) throw ModelError("constant " + name + " is not interpreted");
  return it->second;
}

int Structure::apply(const std::string& function, const std::vector<int>& args) const {
  auto it = functions_.find(function);
  if (it == functions_.end()) throw ModelError("function " + function + " is not interpreted");
  auto jt = it->second.find(args);
  if (jt == it->second.end()) throw ModelError("function " + function + " is not total");
  return jt->second;
}

bool Structure::holds(const std::string& predicate, const std::vector<int>& args) const {
  auto it = relations_.find(predicate);
  if (it == relations_.end()) throw ModelError("predicate " + predicate + " is not interpreted");
  return it->second.count(args) > 0;
}

namespace {

// All argument tuples over the given carriers.
void tuples(const Structure& m, const std::vector<std::string>& sorts, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(sorts.size(), 0);
  for (const auto& s : sorts)
    if (m.size(s) == 0) return;
  for (;;) {
    out.push_back(cur);
    std::size_t i = 0;
    for (; i < sorts.size(); ++i) {
      if (++cur[i] < m.size(sorts[i])) break;
      cur[i] = 0;
    }
    if (i == sorts.size()) return;
  }
}

bool in_bounds(const Structure& m, const std::vector<std::string>& sorts, const std::vector<int>& t) {
  if (t.size() != sorts.size()) return false;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] < 0 || t[i] >= m.size(sorts[i])) return false;
  return true;
}

}  // namespace

void Structure::validate(const Signature& sig) const {
  for (const auto& s : sig.sorts())
    if (size(s) == 0) throw ModelError("sort " + s + " has no carrier");
  for (const auto& [name, sort] : sig.constants()) {
    auto it = constants_.find(name);
    if (it == constants_.end()) throw ModelError("constant " + name + " is not interpreted");
    if (it->second < 0 || it->second >= size(sort)) throw ModelError("constant " + name + " is out of bounds");
  }
  for (const auto& [name, decl] : sig.functions()) {
    auto it = functions_.find(name);
    if (it == functions_.end()) throw ModelError("function " + name + " is not interpreted");
    std::vector<std::vector<int>> all;
    tuples(*this, decl.args, all);
    for (const auto& t : all) {
      auto jt = it->second.find(t);
      if (jt == it->second.end()) throw ModelError("function " + name + " is not total");
      if (jt->second < 0 || jt->second >= size(decl.result))
        throw ModelError("function " + name + " leaves its carrier");
    }
    for (const auto& [args, value] : it->second)
      if (!in_bounds(*this, decl.args, args)) throw ModelError("function " + name + " has an out-of-bounds entry");
  }
  for (const auto& [name, args] : sig.predicates()) {
    auto it = relations_.find(name);
    if (it == relations_.end()) throw ModelError("predicate " + name + " is not interpreted");
    for (const auto& t : it->second)
      if (!in_bounds(*this, args, t)) throw ModelError("predicate " + name + " has an out-of-bounds tuple");
  }
}

namespace {

// Values of bound variables, innermost last.
using Env = std::vector<int>;

int term_value(const Structure& m, const Assignment& v, const Env& env, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Free: {
      auto it = v.find(t.name());
      if (it == v.end()) throw ModelError("unassigned variable " + t.name());
      return it->second;
    }
    case Term::Kind::Bound:
      if (t.index() >= static_cast<int>(env.size())) throw ModelError("dangling bound variable");
      return env[env.size() - 1 - t.index()];
    case Term::Kind::Constant: return m.constant(t.name());
    case Term::Kind::Apply: {
      std::vector<int> args;
      for (const auto& a : t.args()) args.push_back(term_value(m, v, env, a));
      return m.apply(t.name(), args);
    }
  }
  return 0;
}

bool atom_value(const Structure& m, const Assignment& v, const Env& env, const Formula& f) {
  std::vector<int> args;
  for (const auto& t : f.terms()) args.push_back(term_value(m, v, env, t));
  if (f.kind() == Formula::Kind::Id) return args[0] == args[1];
  return m.holds(f.name(), args);
}

bool tarski(const Structure& m, const Assignment& v, Env& env, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Id: return atom_value(m, v, env, f);
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Conj: return tarski(m, v, env, f.left()) && tarski(m, v, env, f.right());
    case Formula::Kind::Disj: return tarski(m, v, env, f.left()) || tarski(m, v, env, f.right());
    case Formula::Kind::Impl: return !tarski(m, v, env, f.left()) || tarski(m, v, env, f.right());
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool all = f.kind() == Formula::Kind::Forall;
      int n = m.size(f.sort());
      if (n == 0) throw ModelError("empty carrier for sort " + f.sort());
      for (int e = 0; e < n; ++e) {
        env.push_back(e);
        bool b = tarski(m, v, env, f.body());
        env.pop_back();
        if (all && !b) return false;
        if (!all && b) return true;
      }
      return all;
    }
  }
  return false;
}

class GameBuilder {
 public:
  GameBuilder(const Structure& m, const Assignment& v) : m_(m), v_(v) {}

  int build(const Formula& f, bool swapped, const std::string& label) {
    int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.push_back({GamePlayer::None, label, swapped, false, {}});
    // Verifier of the current subgame, in original roles.
    GamePlayer me = swapped ? GamePlayer::Falsifier : GamePlayer::Verifier;
    GamePlayer other = swapped ? GamePlayer::Verifier : GamePlayer::Falsifier;
    std::vector<int> kids;
    GamePlayer mover = GamePlayer::None;
    switch (f.kind()) {
      case Formula::Kind::Atom:
      case Formula::Kind::Id:
        tree_.nodes[id].leaf_value = atom_value(m_, v_, env_, f);
        return id;
      case Formula::Kind::Bot:
        tree_.nodes[id].leaf_value = false;
        return id;
      case Formula::Kind::Conj:
      case Formula::Kind::Disj:
        mover = f.kind() == Formula::Kind::Disj ? me : other;
        kids.push_back(build(f.left(), swapped, f.kind() == Formula::Kind::Disj ? "left" : "L?"));
        kids.push_back(build(f.right(), swapped, f.kind() == Formula::Kind::Disj ? "right" : "R?"));
        break;
      case Formula::Kind::Impl: {
        // The falsifier grants the antecedent; the verifier then answers.
        mover = other;
        int grant = static_cast<int>(tree_.nodes.size());
        tree_.nodes.push_back({me, "grant", swapped, false, {}});
        int a = build(f.left(), !swapped, "swap");
        int b = build(f.right(), swapped, "consequent");
        tree_.nodes[grant].children = {a, b};
        kids.push_back(grant);
        break;
      }
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        mover = f.kind() == Formula::Kind::Exists ? me : other;
        int n = m_.size(f.sort());
        if (n == 0) throw ModelError("empty carrier for sort " + f.sort());
        for (int e = 0; e < n; ++e) {
          env_.push_back(e);
          kids.push_back(build(f.body(), swapped, f.name() + "=" + m_.labels(f.sort())[e]));
          env_.pop_back();
        }
        break;
      }
    }
    tree_.nodes[id].mover = mover;
    tree_.nodes[id].children = std::move(kids);
    return id;
  }

  GameTree take() { return std::move(tree_); }

 private:
  const Structure& m_;
  const Assignment& v_;
  Env env_;
  GameTree tree_;
};

}  // namespace

int eval_term(const Structure& m, const Assignment& v, const Term& t) { return term_value(m, v, {}, t); }

bool eval_tarski(const Signature& sig, const Structure& m, const Assignment& v, const Formula& f) {
  (void)sig;
  Env env;
  return tarski(m, v, env, f);
}

GameTree build_game(const Signature& sig, const Structure& m, const Assignment& v, const Formula& f) {
  (void)sig;
  GameBuilder b(m, v);
  b.build(f, false, "start");
  return b.take();
}

bool solve(const GameTree& g, std::map<int, int>* strategy) {
  std::vector<char> win(g.nodes.size(), 0);
  // Children always have larger indices than their parent.
  for (int i = static_cast<int>(g.nodes.size()) - 1; i >= 0; --i) {
    const GameNode& n = g.nodes[i];
    if (n.children.empty()) {
      // The original verifier wins a leaf iff its truth matches its side.
      win[i] = n.leaf_value != n.swapped;
      continue;
    }
    bool verifier = n.mover == GamePlayer::Verifier;
    bool w = !verifier;
    for (int c : n.children) {
      if (verifier && win[c]) {
        w = true;
        if (strategy) (*strategy)[i] = c;
        break;
      }
      if (!verifier && !win[c]) {
        w = false;
        break;
      }
    }
    win[i] = w;
  }
  return win[0];
}

bool eval_game(const Signature& sig, const Structure& m, const Assignment& v, const Formula& f) {
  return solve(build_game(sig, m, v, f));
}

std::vector<Structure> enumerate_structures(const Signature& sig, int max_size) {
  if (!sig.constants().empty() || !sig.functions().empty())
    throw ModelError("structure enumeration supports relational signatures only");
  std::vector<Structure> out;
  for (const auto& [name, args] : sig.predicates())
    for (const auto& s : args)
      if (s != kIndividuals) throw ModelError("structure enumeration supports the sort D only");
  for (int n = 1; n <= max_size; ++n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    // One bit per possible tuple of each predicate.
    std::vector<std::pair<std::string, std::vector<std::vector<int>>>> slots;
    Structure base;
    base.set_carrier(kIndividuals, labels);
    for (const auto& [name, args] : sig.predicates()) {
      std::vector<std::vector<int>> all;
      tuples(base, args, all);
      slots.push_back({name, all});
    }
    std::size_t bits = 0;
    for (const auto& s : slots) bits += s.second.size();
    if (bits > 24) throw ModelError("too many structures to enumerate");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      Structure m = base;
      std::size_t bit = 0;
      for (const auto& [name, all] : slots) {
        std::set<std::vector<int>> rel;
        for (const auto& t : all)
          if (mask >> bit++ & 1) rel.insert(t);
        m.set_relation(name, std::move(rel));
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

namespace {

class FormulaGen {
 public:
  FormulaGen(const Signature& sig, unsigned seed) : rng_(seed) {
    for (const auto& [name, args] : sig.predicates()) {
      bool ok = true;
      for (const auto& s : args) ok = ok && s == kIndividuals;
      if (ok) preds_.push_back({name, static_cast<int>(args.size())});
    }
  }

  // A formula of exactly `size` nodes with at most `quants` quantifiers and
  // `depth` variables in scope.
  Formula gen(int size, int quants, int depth) {
    if (size <= 1) return leaf(depth);
    std::vector<int> choices;
    if (size >= 3) choices.insert(choices.end(), {0, 1, 2, 0, 1, 2});
    if (quants > 0) choices.insert(choices.end(), {3, 4, 3, 4});
    if (choices.empty()) return leaf(depth);
    // Without variables in scope, prefer opening a quantifier.
    if (depth == 0 && quants > 0 && pick(4) != 0) choices = {3, 4};
    int c = choices[pick(choices.size())];
    if (c <= 2) {
      int l = 1 + static_cast<int>(pick(size - 2));
      int r = size - 1 - l;
      int ql = static_cast<int>(pick(quants + 1));
      Formula a = gen(l, ql, depth);
      Formula b = gen(r, quants - quantifier_count(a), depth);
      if (c == 0) return Formula::conj(a, b);
      if (c == 1) return Formula::disj(a, b);
      return Formula::impl(a, b);
    }
    std::string x = "x" + std::to_string(depth);
    Formula body = gen(size - 1, quants - 1, depth + 1);
    return c == 3 ? Formula::forall(x, kIndividuals, body) : Formula::exists(x, kIndividuals, body);
  }

 private:
  Formula leaf(int depth) {
    if (depth == 0) {
      // Closed leaves only: absurdity or a nullary predicate.
      return Formula::bottom();
    }
    std::size_t options = preds_.size() + 1;
    std::size_t c = pick(options + 1);
    auto var = [&]() {
      int i = static_cast<int>(pick(depth));
      return Term::bound(i, "x" + std::to_string(depth - 1 - i), kIndividuals);
    };
    if (c >= preds_.size()) {
      if (c == options) return Formula::bottom();
      return Formula::identity(kIndividuals, var(), var());
    }
    std::vector<Term> args;
    for (int i = 0; i < preds_[c].second; ++i) args.push_back(var());
    return Formula::atom(preds_[c].first, args);
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::mt19937 rng_;
  std::vector<std::pair<std::string, int>> preds_;
};

}  // namespace

std::vector<Formula> random_closed_formulas(const Signature& sig, unsigned seed, int count, int max_quantifiers,
                                            int max_size) {
  FormulaGen g(sig, seed);
  std::mt19937 sizes(seed ^ 0x9e3779b9u);
  std::vector<Formula> out;
  std::set<std::string> seen;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts < count * 100) {
    ++attempts;
    int size = std::uniform_int_distribution<int>(3, max_size)(sizes);
    Formula f = g.gen(size, max_quantifiers, 0);
    if (quantifier_count(f) > max_quantifiers || static_cast<int>(f.size()) > max_size) continue;
    if (!seen.insert(canonical_key(f)).second) continue;
    out.push_back(f);
  }
  return out;
}

}  // namespace usum
