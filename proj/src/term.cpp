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

#include "usum/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace usum {

Term Term::free(std::string name, std::string sort) {
  return Term(std::make_shared<const Node>(Node{Kind::Free, std::move(name), 0, std::move(sort), {}, 1}));
}

Term Term::bound(int index, std::string hint, std::string sort) {
  return Term(std::make_shared<const Node>(Node{Kind::Bound, std::move(hint), index, std::move(sort), {}, 1}));
}

Term Term::constant(std::string name, std::string sort) {
  return Term(std::make_shared<const Node>(Node{Kind::Constant, std::move(name), 0, std::move(sort), {}, 1}));
}

Term Term::apply(std::string function, std::vector<Term> args, std::string sort) {
  std::size_t size = 1;
  for (const auto& a : args) size += a.size();
  return Term(std::make_shared<const Node>(
      Node{Kind::Apply, std::move(function), 0, std::move(sort), std::move(args), size}));
}

bool Term::is_ground() const {
  switch (kind()) {
    case Kind::Free:
    case Kind::Bound:
      return false;
    case Kind::Constant:
      return true;
    case Kind::Apply:
      return std::all_of(args().begin(), args().end(), [](const Term& a) { return a.is_ground(); });
  }
  return false;
}

Term Term::with_args(std::vector<Term> args) const {
  if (kind() != Kind::Apply) return *this;
  return apply(name(), std::move(args), sort());
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Free:
      return a.name() == b.name() && a.sort() == b.sort();
    case Term::Kind::Bound:
      return a.index() == b.index();
    case Term::Kind::Constant:
      return a.name() == b.name();
    case Term::Kind::Apply:
      return a.name() == b.name() && a.args() == b.args();
  }
  return false;
}

Term map_leaves(const Term& t, const std::function<std::optional<Term>(const Term&)>& fn) {
  switch (t.kind()) {
    case Term::Kind::Free:
    case Term::Kind::Bound:
      if (auto r = fn(t)) return *r;
      return t;
    case Term::Kind::Constant:
      return t;
    case Term::Kind::Apply: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(map_leaves(a, fn));
      return t.with_args(std::move(args));
    }
  }
  return t;
}

std::optional<Term> subterm_at(const Term& t, const std::vector<int>& position) {
  const Term* cur = &t;
  for (int i : position) {
    if (cur->kind() != Term::Kind::Apply || i < 1 || i > static_cast<int>(cur->args().size()))
      return std::nullopt;
    cur = &cur->args()[i - 1];
  }
  return *cur;
}

namespace {

Term replace_from(const Term& t, const std::vector<int>& position, std::size_t depth,
                  const Term& replacement) {
  if (depth == position.size()) return replacement;
  int i = position[depth];
  if (t.kind() != Term::Kind::Apply || i < 1 || i > static_cast<int>(t.args().size()))
    throw std::out_of_range("term position out of range");
  std::vector<Term> args = t.args();
  args[i - 1] = replace_from(args[i - 1], position, depth + 1, replacement);
  return t.with_args(std::move(args));
}

}  // namespace

Term replace_at(const Term& t, const std::vector<int>& position, const Term& replacement) {
  return replace_from(t, position, 0, replacement);
}

bool occurs_free(const Term& t, const std::string& name) {
  switch (t.kind()) {
    case Term::Kind::Free:
      return t.name() == name;
    case Term::Kind::Bound:
    case Term::Kind::Constant:
      return false;
    case Term::Kind::Apply:
      return std::any_of(t.args().begin(), t.args().end(),
                         [&](const Term& a) { return occurs_free(a, name); });
  }
  return false;
}

void collect_free(const Term& t, std::vector<std::string>& out) {
  if (t.kind() == Term::Kind::Free) {
    if (std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
  } else if (t.kind() == Term::Kind::Apply) {
    for (const auto& a : t.args()) collect_free(a, out);
  }
}

}  // namespace usum
