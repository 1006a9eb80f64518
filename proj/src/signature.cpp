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

#include "usum/signature.hpp"

#include <algorithm>

#include "usum/error.hpp"

namespace usum {

Signature::Signature() { sorts_.push_back(kIndividuals); }

void Signature::add_sort(const std::string& name) {
  if (has_sort(name)) throw SignatureError("duplicate sort '" + name + "'");
  sorts_.push_back(name);
}

void Signature::add_constant(const std::string& name, const std::string& sort) {
  if (!has_sort(sort)) throw SignatureError("unknown sort '" + sort + "' for constant '" + name + "'");
  if (constants_.count(name) || functions_.count(name))
    throw SignatureError("duplicate function symbol '" + name + "'");
  constants_.emplace(name, sort);
  constant_order_.push_back(name);
}

void Signature::add_function(const std::string& name, std::vector<std::string> args,
                             const std::string& result) {
  for (const auto& s : args)
    if (!has_sort(s)) throw SignatureError("unknown sort '" + s + "' in function '" + name + "'");
  if (!has_sort(result)) throw SignatureError("unknown sort '" + result + "' in function '" + name + "'");
  if (args.empty()) {
    add_constant(name, result);
    return;
  }
  if (constants_.count(name) || functions_.count(name))
    throw SignatureError("duplicate function symbol '" + name + "'");
  functions_.emplace(name, FunctionDecl{std::move(args), result});
}

void Signature::add_predicate(const std::string& name, std::vector<std::string> args) {
  for (const auto& s : args)
    if (!has_sort(s)) throw SignatureError("unknown sort '" + s + "' in predicate '" + name + "'");
  if (predicates_.count(name)) throw SignatureError("duplicate predicate '" + name + "'");
  predicates_.emplace(name, std::move(args));
}

void Signature::add_axiom(Axiom axiom) {
  if (this->axiom(axiom.name)) throw SignatureError("duplicate axiom '" + axiom.name + "'");
  for (const auto& [v, s] : axiom.vars)
    if (!has_sort(s)) throw SignatureError("unknown sort '" + s + "' in axiom '" + axiom.name + "'");
  std::string ls = sort_of(*this, axiom.lhs);
  std::string rs = sort_of(*this, axiom.rhs);
  if (ls != rs) throw SignatureError("axiom '" + axiom.name + "' relates terms of sorts " + ls + " and " + rs);
  std::vector<std::string> lv, rv;
  collect_free(axiom.lhs, lv);
  collect_free(axiom.rhs, rv);
  for (const auto& v : rv)
    if (std::find(lv.begin(), lv.end(), v) == lv.end())
      throw SignatureError("axiom '" + axiom.name + "': variable '" + v +
                           "' occurs on the right but not on the left");
  for (const auto& v : lv) {
    bool declared = std::any_of(axiom.vars.begin(), axiom.vars.end(),
                                [&](const auto& p) { return p.first == v; });
    if (!declared) throw SignatureError("axiom '" + axiom.name + "': undeclared variable '" + v + "'");
  }
  axioms_.push_back(std::move(axiom));
}

bool Signature::has_sort(const std::string& name) const {
  return std::find(sorts_.begin(), sorts_.end(), name) != sorts_.end();
}

std::optional<std::string> Signature::constant_sort(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) return std::nullopt;
  return it->second;
}

const FunctionDecl* Signature::function(const std::string& name) const {
  auto it = functions_.find(name);
  return it == functions_.end() ? nullptr : &it->second;
}

const std::vector<std::string>* Signature::predicate(const std::string& name) const {
  auto it = predicates_.find(name);
  return it == predicates_.end() ? nullptr : &it->second;
}

const Axiom* Signature::axiom(const std::string& name) const {
  for (const auto& a : axioms_)
    if (a.name == name) return &a;
  return nullptr;
}

std::vector<Term> Signature::constants_of(const std::string& sort) const {
  std::vector<Term> out;
  for (const auto& name : constant_order_)
    if (constants_.at(name) == sort) out.push_back(Term::constant(name, sort));
  return out;
}

bool Signature::declares(const std::string& name) const {
  return has_sort(name) || constants_.count(name) || functions_.count(name) || predicates_.count(name) ||
         axiom(name) != nullptr;
}

std::string sort_of(const Signature& sig, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Free:
    case Term::Kind::Bound:
      if (!sig.has_sort(t.sort())) throw SortError("variable '" + t.name() + "' has unknown sort " + t.sort());
      return t.sort();
    case Term::Kind::Constant: {
      auto s = sig.constant_sort(t.name());
      if (!s) throw SortError("unknown constant '" + t.name() + "'");
      return *s;
    }
    case Term::Kind::Apply: {
      const FunctionDecl* f = sig.function(t.name());
      if (!f) throw SortError("unknown function '" + t.name() + "'");
      if (f->args.size() != t.args().size())
        throw SortError("function '" + t.name() + "' expects " + std::to_string(f->args.size()) +
                        " arguments, got " + std::to_string(t.args().size()));
      for (std::size_t i = 0; i < f->args.size(); ++i) {
        std::string s = sort_of(sig, t.args()[i]);
        if (s != f->args[i])
          throw SortError("argument " + std::to_string(i + 1) + " of '" + t.name() + "' has sort " + s +
                          ", expected " + f->args[i]);
      }
      return f->result;
    }
  }
  return {};
}

}  // namespace usum
