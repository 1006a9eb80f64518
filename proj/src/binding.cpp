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

#include "usum/binding.hpp"

#include "usum/error.hpp"

namespace usum {

Term map_vars(const Term& t, const VarMap& m, const Depth& d) {
  if (!m.domain) return t;
  return map_leaves(t, [&](const Term& leaf) { return m.domain(leaf, d); });
}

Formula map_vars(const Formula& f, const VarMap& m, const Depth& d) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Id: {
      std::vector<Term> terms;
      terms.reserve(f.terms().size());
      for (const auto& t : f.terms()) terms.push_back(map_vars(t, m, d));
      return f.with({}, std::move(terms));
    }
    case Formula::Kind::Bot:
      return f;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return f.with({map_vars(f.body(), m, d + BinderCount{0, 1, 0})}, {});
    default:
      return f.with({map_vars(f.left(), m, d), map_vars(f.right(), m, d)}, {});
  }
}

Path map_vars(const Path& p, const VarMap& m, const Depth& d) {
  std::vector<RewriteStep> steps = p.steps();
  for (auto& s : steps)
    for (auto& [name, value] : s.instantiation) value = map_vars(value, m, d);
  return Path(map_vars(p.source(), m, d), std::move(steps));
}

PathExpr map_vars(const PathExpr& p, const VarMap& m, const Depth& d) {
  switch (p.kind()) {
    case PathExpr::Kind::Concrete:
      return PathExpr::concrete(map_vars(p.path(), m, d));
    case PathExpr::Kind::Free:
    case PathExpr::Kind::Bound:
      if (m.path)
        if (auto r = m.path(p, d)) return *r;
      return p;
    default: {
      std::vector<PathExpr> kids;
      for (const auto& k : p.kids()) kids.push_back(map_vars(k, m, d));
      return p.with(std::move(kids));
    }
  }
}

Proof map_vars(const Proof& t, const VarMap& m, const Depth& d) {
  if (t.is_variable()) {
    if (m.proof)
      if (auto r = m.proof(t, d)) return *r;
    return t;
  }
  std::vector<Proof> kids;
  kids.reserve(t.kids().size());
  for (std::size_t i = 0; i < t.kids().size(); ++i)
    kids.push_back(map_vars(t.kids()[i], m, d + binders_above(t.kind(), i)));
  std::vector<Term> terms;
  for (const auto& term : t.terms()) terms.push_back(map_vars(term, m, d));
  std::optional<Formula> ann;
  if (t.annotation()) {
    Depth ad = t.kind() == Proof::Kind::Eps ? d + BinderCount{0, 1, 0} : d;
    ann = map_vars(*t.annotation(), m, ad);
  }
  std::optional<PathExpr> reason;
  if (t.kind() == Proof::Kind::IdIntro) reason = map_vars(t.reason(), m, d);
  return t.rebuild(std::move(kids), std::move(terms), std::move(ann), std::move(reason));
}

namespace {

VarMap shifter(const Depth& by) {
  VarMap m;
  if (by.proof != 0)
    m.proof = [by](const Proof& v, const Depth& d) -> std::optional<Proof> {
      if (v.kind() == Proof::Kind::Var && v.index() >= d.proof) return Proof::var(v.index() + by.proof, v.name());
      return std::nullopt;
    };
  if (by.domain != 0)
    m.domain = [by](const Term& v, const Depth& d) -> std::optional<Term> {
      if (v.is_bound() && v.index() >= d.domain) return Term::bound(v.index() + by.domain, v.name(), v.sort());
      return std::nullopt;
    };
  if (by.path != 0)
    m.path = [by](const PathExpr& v, const Depth& d) -> std::optional<PathExpr> {
      if (v.kind() == PathExpr::Kind::Bound && v.index() >= d.path) return PathExpr::bound(v.index() + by.path, v.name());
      return std::nullopt;
    };
  return m;
}

bool is_zero(const Depth& d) { return d.proof == 0 && d.domain == 0 && d.path == 0; }

}  // namespace

Term shift(const Term& t, const Depth& by) { return is_zero(by) ? t : map_vars(t, shifter(by)); }
Formula shift(const Formula& f, const Depth& by) { return is_zero(by) ? f : map_vars(f, shifter(by)); }
PathExpr shift(const PathExpr& p, const Depth& by) { return is_zero(by) ? p : map_vars(p, shifter(by)); }
Proof shift(const Proof& t, const Depth& by) { return is_zero(by) ? t : map_vars(t, shifter(by)); }

Proof instantiate(const Proof& body, const Instantiation& values) {
  const int np = static_cast<int>(values.proofs.size());
  const int nd = static_cast<int>(values.domains.size());
  const int nr = static_cast<int>(values.paths.size());
  VarMap m;
  if (np)
    m.proof = [&](const Proof& v, const Depth& d) -> std::optional<Proof> {
      if (v.kind() != Proof::Kind::Var || v.index() < d.proof) return std::nullopt;
      int j = v.index() - d.proof;
      if (j < np) return shift(values.proofs[j], d);
      return Proof::var(v.index() - np, v.name());
    };
  if (nd)
    m.domain = [&](const Term& v, const Depth& d) -> std::optional<Term> {
      if (!v.is_bound() || v.index() < d.domain) return std::nullopt;
      int j = v.index() - d.domain;
      if (j < nd) return shift(values.domains[j], d);
      return Term::bound(v.index() - nd, v.name(), v.sort());
    };
  if (nr)
    m.path = [&](const PathExpr& v, const Depth& d) -> std::optional<PathExpr> {
      if (v.kind() != PathExpr::Kind::Bound || v.index() < d.path) return std::nullopt;
      int j = v.index() - d.path;
      if (j < nr) return shift(values.paths[j], d);
      return PathExpr::bound(v.index() - nr, v.name());
    };
  return map_vars(body, m);
}

namespace {

VarMap domain_instantiator(const Term& value) {
  VarMap m;
  m.domain = [value](const Term& v, const Depth& d) -> std::optional<Term> {
    if (!v.is_bound() || v.index() < d.domain) return std::nullopt;
    if (v.index() == d.domain) return shift(value, d);
    return Term::bound(v.index() - 1, v.name(), v.sort());
  };
  return m;
}

VarMap domain_abstractor(const std::string& name) {
  VarMap m;
  m.domain = [name](const Term& v, const Depth& d) -> std::optional<Term> {
    if (v.is_free() && v.name() == name) return Term::bound(d.domain, name, v.sort());
    return std::nullopt;
  };
  return m;
}

}  // namespace

Formula instantiate(const Formula& body, const Term& value) { return map_vars(body, domain_instantiator(value)); }
Term instantiate(const Term& body, const Term& value) { return map_vars(body, domain_instantiator(value)); }

Proof abstract_hyp(const Proof& body, const std::string& name) {
  VarMap m;
  m.proof = [&](const Proof& v, const Depth& d) -> std::optional<Proof> {
    if (v.kind() == Proof::Kind::Hyp && v.name() == name) return Proof::var(d.proof, name);
    return std::nullopt;
  };
  return map_vars(body, m);
}

Proof abstract_var(const Proof& body, const std::string& name) { return map_vars(body, domain_abstractor(name)); }
Formula abstract_var(const Formula& body, const std::string& name) {
  return map_vars(body, domain_abstractor(name));
}

Proof abstract_path(const Proof& body, const std::string& name) {
  VarMap m;
  m.path = [&](const PathExpr& v, const Depth& d) -> std::optional<PathExpr> {
    if (v.kind() == PathExpr::Kind::Free && v.name() == name) return PathExpr::bound(d.path, name);
    return std::nullopt;
  };
  return map_vars(body, m);
}

Proof substitute_proof(const Proof& body, const std::string& var, const Proof& replacement) {
  VarMap m;
  m.proof = [&](const Proof& v, const Depth& d) -> std::optional<Proof> {
    if (v.kind() == Proof::Kind::Hyp && v.name() == var) return shift(replacement, d);
    return std::nullopt;
  };
  return map_vars(body, m);
}

namespace {

VarMap domain_substituter(const std::string& var, const Term& replacement) {
  VarMap m;
  m.domain = [var, replacement](const Term& v, const Depth& d) -> std::optional<Term> {
    if (!v.is_free() || v.name() != var) return std::nullopt;
    if (v.sort() != replacement.sort())
      throw SortError("cannot substitute a term of sort " + replacement.sort() + " for '" + var + "' of sort " +
                      v.sort());
    return shift(replacement, d);
  };
  return m;
}

}  // namespace

Proof substitute_domain(const Proof& target, const std::string& var, const Term& replacement) {
  return map_vars(target, domain_substituter(var, replacement));
}
Formula substitute_domain(const Formula& target, const std::string& var, const Term& replacement) {
  return map_vars(target, domain_substituter(var, replacement));
}
Term substitute_domain(const Term& target, const std::string& var, const Term& replacement) {
  return map_vars(target, domain_substituter(var, replacement));
}

namespace {

VarMap name_collector(FreeNames& out) {
  VarMap m;
  m.proof = [&out](const Proof& v, const Depth&) -> std::optional<Proof> {
    if (v.kind() == Proof::Kind::Hyp) out.hyps.insert(v.name());
    return std::nullopt;
  };
  m.domain = [&out](const Term& v, const Depth&) -> std::optional<Term> {
    if (v.is_free()) out.vars.insert(v.name());
    return std::nullopt;
  };
  m.path = [&out](const PathExpr& v, const Depth&) -> std::optional<PathExpr> {
    if (v.kind() == PathExpr::Kind::Free) out.paths.insert(v.name());
    return std::nullopt;
  };
  return m;
}

}  // namespace

FreeNames free_names(const Proof& t) {
  FreeNames out;
  map_vars(t, name_collector(out));
  return out;
}

std::set<std::string> free_vars(const Formula& f) {
  FreeNames out;
  map_vars(f, name_collector(out));
  return out.vars;
}

namespace {

VarMap dangling_detector(bool& found) {
  VarMap m;
  m.proof = [&found](const Proof& v, const Depth& d) -> std::optional<Proof> {
    if (v.kind() == Proof::Kind::Var && v.index() >= d.proof) found = true;
    return std::nullopt;
  };
  m.domain = [&found](const Term& v, const Depth& d) -> std::optional<Term> {
    if (v.is_bound() && v.index() >= d.domain) found = true;
    return std::nullopt;
  };
  m.path = [&found](const PathExpr& v, const Depth& d) -> std::optional<PathExpr> {
    if (v.kind() == PathExpr::Kind::Bound && v.index() >= d.path) found = true;
    return std::nullopt;
  };
  return m;
}

void key_of(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Free:
      out += "v:" + t.name();
      break;
    case Term::Kind::Bound:
      out += "#" + std::to_string(t.index());
      break;
    case Term::Kind::Constant:
      out += "c:" + t.name();
      break;
    case Term::Kind::Apply:
      out += "f:" + t.name() + "(";
      for (const auto& a : t.args()) {
        key_of(a, out);
        out += ',';
      }
      out += ')';
      break;
  }
}

void key_of(const Formula& f, std::string& out) {
  out += std::to_string(static_cast<int>(f.kind()));
  out += '{';
  if (f.kind() == Formula::Kind::Atom) out += f.name();
  out += f.sort();
  for (const auto& t : f.terms()) {
    key_of(t, out);
    out += ',';
  }
  for (const auto& k : f.kids()) key_of(k, out);
  out += '}';
}

void key_of(const PathExpr& p, std::string& out) {
  switch (p.kind()) {
    case PathExpr::Kind::Concrete:
      out += "P[";
      key_of(p.path().source(), out);
      for (const auto& s : p.path().steps()) {
        out += ';' + s.axiom + (s.direction == Direction::Forward ? "+" : "-");
        for (int i : s.position) out += std::to_string(i) + ".";
        for (const auto& [n, v] : s.instantiation) {
          out += n + "=";
          key_of(v, out);
        }
      }
      out += ']';
      break;
    case PathExpr::Kind::Free:
      out += "p:" + p.name();
      break;
    case PathExpr::Kind::Bound:
      out += "p#" + std::to_string(p.index());
      break;
    case PathExpr::Kind::Inverse:
      out += "inv(";
      key_of(p.kids()[0], out);
      out += ')';
      break;
    case PathExpr::Kind::Concat:
      out += "cat(";
      key_of(p.kids()[0], out);
      out += ',';
      key_of(p.kids()[1], out);
      out += ')';
      break;
  }
}

void key_of(const Proof& t, std::string& out) {
  out += kind_name(t.kind());
  if (t.kind() == Proof::Kind::Hyp) {
    out += ":" + t.name();
    return;
  }
  if (t.kind() == Proof::Kind::Var) {
    out += std::to_string(t.index());
    return;
  }
  out += '(';
  out += t.sort();
  for (const auto& k : t.kids()) {
    key_of(k, out);
    out += ',';
  }
  for (const auto& term : t.terms()) {
    key_of(term, out);
    out += ',';
  }
  if (t.annotation()) key_of(*t.annotation(), out);
  if (t.kind() == Proof::Kind::IdIntro) key_of(t.reason(), out);
  out += ')';
}

}  // namespace

bool locally_closed(const Proof& t) {
  bool found = false;
  map_vars(t, dangling_detector(found));
  return !found;
}

bool locally_closed(const Formula& f) {
  bool found = false;
  map_vars(f, dangling_detector(found));
  return !found;
}

std::string canonical_key(const Proof& t) {
  std::string out;
  key_of(t, out);
  return out;
}

std::string canonical_key(const Formula& f) {
  std::string out;
  key_of(f, out);
  return out;
}

}  // namespace usum
