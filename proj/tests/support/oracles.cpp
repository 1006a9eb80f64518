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

#include "oracles.hpp"

#include <deque>
#include <functional>
#include <map>

#include "usum/binding.hpp"

namespace usum::testing {

namespace {

std::optional<BetaRule> pattern(const Proof& t) {
  using K = Proof::Kind;
  if (t.kids().empty()) return std::nullopt;
  K head = t.kind(), arg = t.kid(0).kind();
  if (head == K::Fst && arg == K::Pair) return BetaRule::ConjLeft;
  if (head == K::Snd && arg == K::Pair) return BetaRule::ConjRight;
  if (head == K::Case && arg == K::Inl) return BetaRule::DisjLeft;
  if (head == K::Case && arg == K::Inr) return BetaRule::DisjRight;
  if (head == K::App && arg == K::Lam) return BetaRule::Impl;
  if (head == K::Extr && arg == K::Gen) return BetaRule::Forall;
  if (head == K::Inst && arg == K::Eps) return BetaRule::Exists;
  if (head == K::Rewr && arg == K::IdIntro) return BetaRule::Id;
  return std::nullopt;
}

void scan(const Proof& t, Position& at, std::vector<Redex>& out) {
  if (auto r = pattern(t)) out.push_back({at, *r});
  for (std::size_t i = 0; i < t.kids().size(); ++i) {
    at.push_back(static_cast<int>(i));
    scan(t.kid(i), at, out);
    at.pop_back();
  }
}

void term_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind() == Term::Kind::Free) out.insert(t.name());
  for (const auto& a : t.args()) term_vars(a, out);
}

void formula_vars(const Formula& f, std::set<std::string>& out) {
  for (const auto& t : f.terms()) term_vars(t, out);
  for (const auto& k : f.kids()) formula_vars(k, out);
}

void path_vars(const PathExpr& p, std::set<std::string>& out) {
  if (p.kind() == PathExpr::Kind::Concrete) {
    term_vars(p.path().source(), out);
    for (const auto& s : p.path().steps())
      for (const auto& [v, t] : s.instantiation) term_vars(t, out);
  }
  for (const auto& k : p.kids()) path_vars(k, out);
}

}  // namespace

std::vector<Redex> scan_redexes(const Proof& t) {
  std::vector<Redex> out;
  Position at;
  scan(t, at, out);
  return out;
}

std::set<std::string> walk_free_hyps(const Proof& t) {
  std::set<std::string> out;
  std::function<void(const Proof&)> go = [&](const Proof& p) {
    if (p.kind() == Proof::Kind::Hyp) out.insert(p.name());
    for (const auto& k : p.kids()) go(k);
  };
  go(t);
  return out;
}

std::set<std::string> walk_free_vars(const Proof& t) {
  std::set<std::string> out;
  std::function<void(const Proof&)> go = [&](const Proof& p) {
    for (const auto& s : p.terms()) term_vars(s, out);
    if (p.annotation()) formula_vars(*p.annotation(), out);
    if (p.kind() == Proof::Kind::IdIntro) path_vars(p.reason(), out);
    for (const auto& k : p.kids()) go(k);
  };
  go(t);
  return out;
}

namespace {

bool truth(const Signature& sig, const Structure& m, const Formula& f, Assignment& v, int& fresh) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::vector<int> args;
      for (const auto& t : f.terms()) args.push_back(eval_term(m, v, t));
      const auto& rel = m.relations().at(f.name());
      return rel.count(args) > 0;
    }
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Id: return eval_term(m, v, f.terms()[0]) == eval_term(m, v, f.terms()[1]);
    case Formula::Kind::Conj: return truth(sig, m, f.left(), v, fresh) && truth(sig, m, f.right(), v, fresh);
    case Formula::Kind::Disj: return truth(sig, m, f.left(), v, fresh) || truth(sig, m, f.right(), v, fresh);
    case Formula::Kind::Impl: return !truth(sig, m, f.left(), v, fresh) || truth(sig, m, f.right(), v, fresh);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      std::string x = "$" + std::to_string(fresh++);
      Formula body = instantiate(f.body(), Term::free(x, f.sort()));
      bool all = f.kind() == Formula::Kind::Forall;
      for (int e = 0; e < m.size(f.sort()); ++e) {
        v[x] = e;
        bool r = truth(sig, m, body, v, fresh);
        if (all && !r) return false;
        if (!all && r) return true;
      }
      return all;
    }
  }
  return false;
}

}  // namespace

bool reference_truth(const Signature& sig, const Structure& m, const Formula& f) {
  Assignment v;
  int fresh = 0;
  return truth(sig, m, f, v, fresh);
}

ReductionGraph explore(const Proof& t, int fuel) {
  ReductionGraph g;
  std::map<std::string, int> seen;  // key -> shortest distance
  std::deque<std::pair<Proof, int>> queue;
  seen[canonical_key(t)] = 0;
  queue.emplace_back(t, 0);
  while (!queue.empty()) {
    auto [p, dist] = queue.front();
    queue.pop_front();
    ++g.nodes;
    auto rs = scan_redexes(p);
    if (rs.empty()) {
      g.normal_forms.insert(canonical_key(p));
      continue;
    }
    if (dist >= fuel) {
      g.truncated = true;
      continue;
    }
    for (const auto& r : rs) {
      Proof q = step(p, r);
      std::string k = canonical_key(q);
      if (seen.count(k)) continue;
      seen[k] = dist + 1;
      queue.emplace_back(q, dist + 1);
    }
  }
  return g;
}

}  // namespace usum::testing
