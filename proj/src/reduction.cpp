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

#include "usum/reduction.hpp"

#include "usum/binding.hpp"

namespace usum {

std::string_view rule_name(BetaRule r) {
  switch (r) {
    case BetaRule::ConjLeft: return "∧-β-l";
    case BetaRule::ConjRight: return "∧-β-r";
    case BetaRule::DisjLeft: return "∨-β-l";
    case BetaRule::DisjRight: return "∨-β-r";
    case BetaRule::Impl: return "→-β";
    case BetaRule::Forall: return "∀-β";
    case BetaRule::Exists: return "∃-β";
    case BetaRule::Id: return "Id-β";
  }
  return "?";
}

std::string_view family_name(BetaRule r) {
  switch (r) {
    case BetaRule::ConjLeft:
    case BetaRule::ConjRight: return "∧-β";
    case BetaRule::DisjLeft:
    case BetaRule::DisjRight: return "∨-β";
    case BetaRule::Impl: return "→-β";
    case BetaRule::Forall: return "∀-β";
    case BetaRule::Exists: return "∃-β";
    case BetaRule::Id: return "Id-β";
  }
  return "?";
}

std::optional<BetaRule> root_redex(const Proof& t) {
  if (!t.is_destructor()) return std::nullopt;
  Proof::Kind k = t.kid(0).kind();
  switch (t.kind()) {
    case Proof::Kind::Fst:
      if (k == Proof::Kind::Pair) return BetaRule::ConjLeft;
      break;
    case Proof::Kind::Snd:
      if (k == Proof::Kind::Pair) return BetaRule::ConjRight;
      break;
    case Proof::Kind::Case:
      if (k == Proof::Kind::Inl) return BetaRule::DisjLeft;
      if (k == Proof::Kind::Inr) return BetaRule::DisjRight;
      break;
    case Proof::Kind::App:
      if (k == Proof::Kind::Lam) return BetaRule::Impl;
      break;
    case Proof::Kind::Extr:
      if (k == Proof::Kind::Gen) return BetaRule::Forall;
      break;
    case Proof::Kind::Inst:
      if (k == Proof::Kind::Eps) return BetaRule::Exists;
      break;
    case Proof::Kind::Rewr:
      if (k == Proof::Kind::IdIntro) return BetaRule::Id;
      break;
    default:
      break;
  }
  return std::nullopt;
}

namespace {

void collect(const Proof& t, Position& pos, std::vector<Redex>& out, bool post) {
  auto here = root_redex(t);
  if (here && !post) out.push_back({pos, *here});
  for (std::size_t i = 0; i < t.kids().size(); ++i) {
    pos.push_back(static_cast<int>(i));
    collect(t.kid(i), pos, out, post);
    pos.pop_back();
  }
  if (here && post) out.push_back({pos, *here});
}

// Contract with the redex sitting at `depth` binders of each space below the
// root; the reduct is built from subterms that live at the same depth, so no
// shifting is needed.
Proof contract_here(const Proof& t, BetaRule rule) {
  const Proof& c = t.kid(0);
  switch (rule) {
    case BetaRule::ConjLeft: return c.kid(0);
    case BetaRule::ConjRight: return c.kid(1);
    case BetaRule::DisjLeft: return instantiate(t.kid(1), {{c.kid(0)}, {}, {}});
    case BetaRule::DisjRight: return instantiate(t.kid(2), {{c.kid(0)}, {}, {}});
    case BetaRule::Impl: return instantiate(c.kid(0), {{t.kid(1)}, {}, {}});
    case BetaRule::Forall: return instantiate(c.kid(0), {{}, {t.terms()[0]}, {}});
    case BetaRule::Exists: {
      const Term& s = c.terms()[0];
      Proof f = instantiate(c.kid(0), {{}, {s}, {}});
      return instantiate(t.kid(1), {{f}, {s}, {}});
    }
    case BetaRule::Id: return instantiate(t.kid(1), {{}, {}, {c.reason()}});
  }
  return t;
}

}  // namespace

std::vector<Redex> redexes(const Proof& t) {
  std::vector<Redex> out;
  Position pos;
  collect(t, pos, out, false);
  return out;
}

Proof contract(const Proof& t, BetaRule rule) {
  auto r = root_redex(t);
  if (!r || *r != rule) throw StaleRedex("no " + std::string(rule_name(rule)) + " redex at the root");
  return contract_here(t, rule);
}

Proof step(const Proof& t, const Redex& r) {
  auto sub = subterm_at(t, r.position);
  if (!sub) throw StaleRedex("position does not address a subterm");
  auto here = root_redex(*sub);
  if (!here || *here != r.rule)
    throw StaleRedex("no " + std::string(rule_name(r.rule)) + " redex at the given position");
  return replace_at(t, r.position, contract_here(*sub, r.rule));
}

std::string_view strategy_name(Strategy s) {
  return s == Strategy::NormalOrder ? "normal-order" : "applicative-order";
}

std::optional<Strategy> parse_strategy(std::string_view s) {
  if (s == "normal-order" || s == "normal") return Strategy::NormalOrder;
  if (s == "applicative-order" || s == "applicative") return Strategy::ApplicativeOrder;
  return std::nullopt;
}

std::optional<Redex> choose(const Proof& t, Strategy s) {
  std::vector<Redex> out;
  Position pos;
  collect(t, pos, out, s == Strategy::ApplicativeOrder);
  if (out.empty()) return std::nullopt;
  return out.front();
}

Trace normalize(const Proof& t, Strategy s, int fuel) {
  Trace tr{t, {}, t, false};
  Proof cur = t;
  for (;;) {
    auto r = choose(cur, s);
    if (!r) break;
    if (static_cast<int>(tr.steps.size()) >= fuel) {
      tr.exhausted = true;
      break;
    }
    cur = step(cur, *r);
    tr.steps.push_back({*r, cur});
  }
  tr.terminal = cur;
  return tr;
}

Convertibility conv(const Proof& a, const Proof& b, int fuel) {
  Trace ta = normalize(a, Strategy::NormalOrder, fuel);
  Trace tb = normalize(b, Strategy::NormalOrder, fuel);
  if (ta.exhausted || tb.exhausted) return Convertibility::Exhausted;
  return ta.terminal == tb.terminal ? Convertibility::Convertible : Convertibility::NotConvertible;
}

namespace {

std::optional<Proof> head(const Proof& t, int& fuel) {
  Proof cur = t;
  while (cur.is_destructor()) {
    auto k = head(cur.kid(0), fuel);
    if (!k) return std::nullopt;
    if (*k != cur.kid(0)) {
      std::vector<Proof> kids = cur.kids();
      kids[0] = *k;
      cur = cur.with_kids(std::move(kids));
    }
    auto r = root_redex(cur);
    if (!r) break;
    if (fuel-- <= 0) return std::nullopt;
    cur = contract_here(cur, *r);
  }
  return cur;
}

}  // namespace

std::optional<Proof> whnf(const Proof& t, int fuel) { return head(t, fuel); }

}  // namespace usum
