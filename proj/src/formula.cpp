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

#include "usum/formula.hpp"

namespace usum {

Formula Formula::make(Kind kind, std::string name, std::string sort, std::vector<Term> terms,
                      std::vector<Formula> kids) {
  std::size_t size = 1;
  for (const auto& k : kids) size += k.size();
  return Formula(std::make_shared<const Node>(
      Node{kind, std::move(name), std::move(sort), std::move(terms), std::move(kids), size}));
}

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  return make(Kind::Atom, std::move(predicate), {}, std::move(args), {});
}
Formula Formula::conj(Formula left, Formula right) {
  return make(Kind::Conj, {}, {}, {}, {std::move(left), std::move(right)});
}
Formula Formula::disj(Formula left, Formula right) {
  return make(Kind::Disj, {}, {}, {}, {std::move(left), std::move(right)});
}
Formula Formula::impl(Formula antecedent, Formula consequent) {
  return make(Kind::Impl, {}, {}, {}, {std::move(antecedent), std::move(consequent)});
}
Formula Formula::forall(std::string hint, std::string sort, Formula body) {
  return make(Kind::Forall, std::move(hint), std::move(sort), {}, {std::move(body)});
}
Formula Formula::exists(std::string hint, std::string sort, Formula body) {
  return make(Kind::Exists, std::move(hint), std::move(sort), {}, {std::move(body)});
}
Formula Formula::identity(std::string sort, Term left, Term right) {
  return make(Kind::Id, {}, std::move(sort), {std::move(left), std::move(right)}, {});
}
Formula Formula::bottom() { return make(Kind::Bot, {}, {}, {}, {}); }

Formula Formula::with(std::vector<Formula> kids, std::vector<Term> terms) const {
  return make(kind(), name(), sort(), std::move(terms), std::move(kids));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Atom:
      return a.name() == b.name() && a.terms() == b.terms();
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return a.sort() == b.sort() && a.body() == b.body();
    case Formula::Kind::Id:
      return a.sort() == b.sort() && a.terms() == b.terms();
    case Formula::Kind::Bot:
      return true;
    default:
      return a.kids() == b.kids();
  }
}

int quantifier_count(const Formula& f) {
  int n = f.is_quantifier() ? 1 : 0;
  for (const auto& k : f.kids()) n += quantifier_count(k);
  return n;
}

}  // namespace usum
