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

#include "usum/proof.hpp"

#include <stdexcept>

namespace usum {

Proof Proof::make(Node node) {
  std::size_t size = 1;
  for (const auto& k : node.kids) size += k.size();
  node.size = size;
  return Proof(std::make_shared<const Node>(std::move(node)));
}

Proof Proof::hyp(std::string name) { return make(Node{Kind::Hyp, std::move(name)}); }

Proof Proof::var(int index, std::string hint) {
  Node n{Kind::Var, std::move(hint)};
  n.index = index;
  return make(std::move(n));
}

Proof Proof::pair(Proof a, Proof b) {
  Node n{Kind::Pair};
  n.kids = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Proof Proof::fst(Proof p) {
  Node n{Kind::Fst};
  n.kids = {std::move(p)};
  return make(std::move(n));
}

Proof Proof::snd(Proof p) {
  Node n{Kind::Snd};
  n.kids = {std::move(p)};
  return make(std::move(n));
}

Proof Proof::inl(Proof a, std::optional<Formula> right) {
  Node n{Kind::Inl};
  n.kids = {std::move(a)};
  n.annotation = std::move(right);
  return make(std::move(n));
}

Proof Proof::inr(Proof b, std::optional<Formula> left) {
  Node n{Kind::Inr};
  n.kids = {std::move(b)};
  n.annotation = std::move(left);
  return make(std::move(n));
}

Proof Proof::case_of(Proof scrutinee, std::string x, Proof left, std::string y, Proof right) {
  Node n{Kind::Case};
  n.binders = {std::move(x), std::move(y)};
  n.kids = {std::move(scrutinee), std::move(left), std::move(right)};
  return make(std::move(n));
}

Proof Proof::lam(std::string x, std::optional<Formula> antecedent, Proof body) {
  Node n{Kind::Lam};
  n.binders = {std::move(x)};
  n.kids = {std::move(body)};
  n.annotation = std::move(antecedent);
  return make(std::move(n));
}

Proof Proof::app(Proof fn, Proof arg) {
  Node n{Kind::App};
  n.kids = {std::move(fn), std::move(arg)};
  return make(std::move(n));
}

Proof Proof::gen(std::string x, std::string sort, Proof body) {
  Node n{Kind::Gen};
  n.binders = {std::move(x)};
  n.sort = std::move(sort);
  n.kids = {std::move(body)};
  return make(std::move(n));
}

Proof Proof::extr(Proof p, Term witness) {
  Node n{Kind::Extr};
  n.kids = {std::move(p)};
  n.terms = {std::move(witness)};
  return make(std::move(n));
}

Proof Proof::eps(std::string x, std::string sort, Proof body, Term witness, std::optional<Formula> body_formula) {
  Node n{Kind::Eps};
  n.binders = {std::move(x)};
  n.sort = std::move(sort);
  n.kids = {std::move(body)};
  n.terms = {std::move(witness)};
  n.annotation = std::move(body_formula);
  return make(std::move(n));
}

Proof Proof::inst(Proof scrutinee, std::string g, std::string t, std::string sort, Proof body) {
  Node n{Kind::Inst};
  n.binders = {std::move(g), std::move(t)};
  n.sort = std::move(sort);
  n.kids = {std::move(scrutinee), std::move(body)};
  return make(std::move(n));
}

Proof Proof::idintro(PathExpr reason, Term u, Term v) {
  Node n{Kind::IdIntro};
  n.terms = {std::move(u), std::move(v)};
  n.reason = std::move(reason);
  return make(std::move(n));
}

Proof Proof::rewr(Proof scrutinee, std::string t, Proof body) {
  Node n{Kind::Rewr};
  n.binders = {std::move(t)};
  n.kids = {std::move(scrutinee), std::move(body)};
  return make(std::move(n));
}

bool Proof::is_constructor() const noexcept {
  switch (kind()) {
    case Kind::Pair:
    case Kind::Inl:
    case Kind::Inr:
    case Kind::Lam:
    case Kind::Gen:
    case Kind::Eps:
    case Kind::IdIntro:
      return true;
    default:
      return false;
  }
}

bool Proof::is_destructor() const noexcept {
  switch (kind()) {
    case Kind::Fst:
    case Kind::Snd:
    case Kind::Case:
    case Kind::App:
    case Kind::Extr:
    case Kind::Inst:
    case Kind::Rewr:
      return true;
    default:
      return false;
  }
}

Proof Proof::rebuild(std::vector<Proof> kids, std::vector<Term> terms, std::optional<Formula> annotation,
                     std::optional<PathExpr> reason) const {
  Node n = *node_;
  n.kids = std::move(kids);
  n.terms = std::move(terms);
  n.annotation = std::move(annotation);
  n.reason = std::move(reason);
  return make(std::move(n));
}

Proof Proof::with_kids(std::vector<Proof> kids) const {
  Node n = *node_;
  n.kids = std::move(kids);
  return make(std::move(n));
}

bool operator==(const Proof& a, const Proof& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Proof::Kind::Hyp:
      return a.name() == b.name();
    case Proof::Kind::Var:
      return a.index() == b.index();
    default:
      break;
  }
  return a.sort() == b.sort() && a.kids() == b.kids() && a.terms() == b.terms() &&
         a.annotation() == b.annotation() && a.node_->reason == b.node_->reason;
}

std::string_view kind_name(Proof::Kind k) {
  switch (k) {
    case Proof::Kind::Hyp: return "hyp";
    case Proof::Kind::Var: return "var";
    case Proof::Kind::Pair: return "pair";
    case Proof::Kind::Fst: return "FST";
    case Proof::Kind::Snd: return "SND";
    case Proof::Kind::Inl: return "inl";
    case Proof::Kind::Inr: return "inr";
    case Proof::Kind::Case: return "CASE";
    case Proof::Kind::Lam: return "lam";
    case Proof::Kind::App: return "APP";
    case Proof::Kind::Gen: return "gen";
    case Proof::Kind::Extr: return "EXTR";
    case Proof::Kind::Eps: return "eps";
    case Proof::Kind::Inst: return "INST";
    case Proof::Kind::IdIntro: return "idp";
    case Proof::Kind::Rewr: return "REWR";
  }
  return "?";
}

BinderCount binders_above(Proof::Kind kind, std::size_t child) {
  switch (kind) {
    case Proof::Kind::Case:
      return child == 0 ? BinderCount{} : BinderCount{1, 0, 0};
    case Proof::Kind::Lam:
      return {1, 0, 0};
    case Proof::Kind::Gen:
    case Proof::Kind::Eps:
      return {0, 1, 0};
    case Proof::Kind::Inst:
      return child == 0 ? BinderCount{} : BinderCount{1, 1, 0};
    case Proof::Kind::Rewr:
      return child == 0 ? BinderCount{} : BinderCount{0, 0, 1};
    default:
      return {};
  }
}

std::optional<Proof> subterm_at(const Proof& t, const Position& pos) {
  const Proof* cur = &t;
  for (int i : pos) {
    if (i < 0 || i >= static_cast<int>(cur->kids().size())) return std::nullopt;
    cur = &cur->kids()[i];
  }
  return *cur;
}

namespace {

Proof replace_from(const Proof& t, const Position& pos, std::size_t depth, const Proof& replacement) {
  if (depth == pos.size()) return replacement;
  int i = pos[depth];
  if (i < 0 || i >= static_cast<int>(t.kids().size())) throw std::out_of_range("proof position out of range");
  std::vector<Proof> kids = t.kids();
  kids[i] = replace_from(kids[i], pos, depth + 1, replacement);
  return t.with_kids(std::move(kids));
}

}  // namespace

Proof replace_at(const Proof& t, const Position& pos, const Proof& replacement) {
  return replace_from(t, pos, 0, replacement);
}

}  // namespace usum
