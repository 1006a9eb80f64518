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

#include "usum/path.hpp"

#include <algorithm>

#include "usum/error.hpp"

namespace usum {

namespace {

Term instantiate(const Term& t, const std::vector<std::pair<std::string, Term>>& inst) {
  return map_leaves(t, [&](const Term& leaf) -> std::optional<Term> {
    if (!leaf.is_free()) return std::nullopt;
    for (const auto& [name, value] : inst)
      if (name == leaf.name()) return value;
    return std::nullopt;
  });
}

}  // namespace

bool match_pattern(const Term& pattern, const Term& t, std::vector<std::pair<std::string, Term>>& inst) {
  switch (pattern.kind()) {
    case Term::Kind::Free: {
      for (const auto& [name, value] : inst)
        if (name == pattern.name()) return value == t;
      if (t.sort() != pattern.sort()) return false;
      inst.emplace_back(pattern.name(), t);
      return true;
    }
    case Term::Kind::Bound:
      return pattern == t;
    case Term::Kind::Constant:
      return t.kind() == Term::Kind::Constant && t.name() == pattern.name();
    case Term::Kind::Apply:
      if (t.kind() != Term::Kind::Apply || t.name() != pattern.name() || t.args().size() != pattern.args().size())
        return false;
      for (std::size_t i = 0; i < t.args().size(); ++i)
        if (!match_pattern(pattern.args()[i], t.args()[i], inst)) return false;
      return true;
  }
  return false;
}

std::optional<Term> apply_step(const Signature& sig, const Term& t, const RewriteStep& step) {
  const Axiom* ax = sig.axiom(step.axiom);
  if (!ax) throw PathError("unknown axiom '" + step.axiom + "'");
  for (const auto& [name, value] : step.instantiation) {
    auto it = std::find_if(ax->vars.begin(), ax->vars.end(), [&](const auto& v) { return v.first == name; });
    if (it == ax->vars.end())
      throw PathError("axiom '" + ax->name + "' has no variable '" + name + "'");
    std::string s = sort_of(sig, value);
    if (s != it->second)
      throw PathError("instantiation of '" + name + "' in axiom '" + ax->name + "' has sort " + s +
                      ", expected " + it->second);
  }
  for (const auto& [name, sort] : ax->vars) {
    bool given = std::any_of(step.instantiation.begin(), step.instantiation.end(),
                             [&](const auto& p) { return p.first == name; });
    if (!given) throw PathError("axiom '" + ax->name + "': variable '" + name + "' is not instantiated");
  }
  const Term& from = step.direction == Direction::Forward ? ax->lhs : ax->rhs;
  const Term& to = step.direction == Direction::Forward ? ax->rhs : ax->lhs;
  auto sub = subterm_at(t, step.position);
  if (!sub) return std::nullopt;
  if (!(*sub == instantiate(from, step.instantiation))) return std::nullopt;
  return replace_at(t, step.position, instantiate(to, step.instantiation));
}

std::optional<std::pair<Term, Term>> endpoints(const Signature& sig, const Path& path) {
  Term cur = path.source();
  for (const auto& step : path.steps()) {
    auto next = apply_step(sig, cur, step);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return std::make_pair(path.source(), cur);
}

bool check_path(const Signature& sig, const Path& path, const Term& u, const Term& v) {
  auto ends = endpoints(sig, path);
  return ends && ends->first == u && ends->second == v;
}

Path inverse(const Signature& sig, const Path& path) {
  auto ends = endpoints(sig, path);
  if (!ends) throw PathError("cannot invert a path that does not replay");
  std::vector<RewriteStep> steps(path.steps().rbegin(), path.steps().rend());
  for (auto& s : steps)
    s.direction = s.direction == Direction::Forward ? Direction::Backward : Direction::Forward;
  return Path(ends->second, std::move(steps));
}

Path concat(const Signature& sig, const Path& p, const Path& q) {
  auto ends = endpoints(sig, p);
  if (!ends) throw PathError("cannot compose a path that does not replay");
  if (!(ends->second == q.source())) throw PathError("paths do not chain");
  std::vector<RewriteStep> steps = p.steps();
  steps.insert(steps.end(), q.steps().begin(), q.steps().end());
  return Path(p.source(), std::move(steps));
}

PathExpr PathExpr::concrete(Path p) {
  return PathExpr(std::make_shared<const Node>(Node{Kind::Concrete, std::move(p), {}, 0, {}}));
}
PathExpr PathExpr::free(std::string name) {
  return PathExpr(std::make_shared<const Node>(Node{Kind::Free, std::nullopt, std::move(name), 0, {}}));
}
PathExpr PathExpr::bound(int index, std::string hint) {
  return PathExpr(std::make_shared<const Node>(Node{Kind::Bound, std::nullopt, std::move(hint), index, {}}));
}
PathExpr PathExpr::inverse(PathExpr p) {
  return PathExpr(std::make_shared<const Node>(Node{Kind::Inverse, std::nullopt, {}, 0, {std::move(p)}}));
}
PathExpr PathExpr::concat(PathExpr p, PathExpr q) {
  return PathExpr(
      std::make_shared<const Node>(Node{Kind::Concat, std::nullopt, {}, 0, {std::move(p), std::move(q)}}));
}

PathExpr PathExpr::with(std::vector<PathExpr> kids) const {
  return PathExpr(std::make_shared<const Node>(Node{kind(), node_->path, name(), index(), std::move(kids)}));
}

bool operator==(const PathExpr& a, const PathExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case PathExpr::Kind::Concrete:
      return a.path() == b.path();
    case PathExpr::Kind::Free:
      return a.name() == b.name();
    case PathExpr::Kind::Bound:
      return a.index() == b.index();
    default:
      return a.kids() == b.kids();
  }
}

std::optional<Path> resolve(const Signature& sig, const PathExpr& e) {
  switch (e.kind()) {
    case PathExpr::Kind::Concrete:
      return e.path();
    case PathExpr::Kind::Free:
    case PathExpr::Kind::Bound:
      return std::nullopt;
    case PathExpr::Kind::Inverse: {
      auto p = resolve(sig, e.kids()[0]);
      if (!p) return std::nullopt;
      return usum::inverse(sig, *p);
    }
    case PathExpr::Kind::Concat: {
      auto p = resolve(sig, e.kids()[0]);
      auto q = resolve(sig, e.kids()[1]);
      if (!p || !q) return std::nullopt;
      return usum::concat(sig, *p, *q);
    }
  }
  return std::nullopt;
}

}  // namespace usum
