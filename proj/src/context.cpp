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

#include "usum/context.hpp"

#include "usum/binding.hpp"
#include "usum/error.hpp"

namespace usum {

void Context::add_var(const std::string& name, const std::string& sort) {
  if (declares(name)) throw ContextError("duplicate name '" + name + "' in context");
  vars_.emplace_back(name, sort);
}

void Context::add_hyp(const std::string& name, const Formula& formula) {
  if (declares(name)) throw ContextError("duplicate name '" + name + "' in context");
  for (const auto& v : free_vars(formula))
    if (!var_sort(v)) throw ContextError("hypothesis '" + name + "' mentions undeclared individual '" + v + "'");
  hyps_.emplace_back(name, formula);
}

void Context::add_path(const std::string& name, const std::string& sort, const Term& from, const Term& to) {
  if (declares(name)) throw ContextError("duplicate name '" + name + "' in context");
  paths_.push_back(PathHyp{name, sort, from, to});
}

std::optional<std::string> Context::var_sort(const std::string& name) const {
  for (const auto& [n, s] : vars_)
    if (n == name) return s;
  return std::nullopt;
}

const Formula* Context::hyp(const std::string& name) const {
  for (const auto& [n, f] : hyps_)
    if (n == name) return &f;
  return nullptr;
}

const PathHyp* Context::path(const std::string& name) const {
  for (const auto& p : paths_)
    if (p.name == name) return &p;
  return nullptr;
}

bool Context::declares(const std::string& name) const {
  return var_sort(name) || hyp(name) || path(name);
}

std::set<std::string> Context::names() const {
  std::set<std::string> out;
  for (const auto& v : vars_) out.insert(v.first);
  for (const auto& h : hyps_) out.insert(h.first);
  for (const auto& p : paths_) out.insert(p.name);
  return out;
}

bool Context::mentioned_in_assumptions(const std::string& var) const {
  for (const auto& [n, f] : hyps_)
    if (free_vars(f).count(var)) return true;
  for (const auto& p : paths_)
    if (occurs_free(p.from, var) || occurs_free(p.to, var)) return true;
  return false;
}

std::string fresh_name(const std::string& hint, const std::set<std::string>& taken) {
  std::string base = hint.empty() ? std::string("x") : hint;
  std::string name = base;
  while (taken.count(name)) name += '\'';
  return name;
}

}  // namespace usum
