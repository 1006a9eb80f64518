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

#include "usum/build.hpp"

#include "usum/binding.hpp"

namespace usum::build {

Term var(const std::string& name, const std::string& sort) { return Term::free(name, sort); }
Term cst(const std::string& name, const std::string& sort) { return Term::constant(name, sort); }
Term fn(const std::string& name, std::vector<Term> args, const std::string& sort) {
  return Term::apply(name, std::move(args), sort);
}

Formula atom(const std::string& name, std::vector<Term> args) { return Formula::atom(name, std::move(args)); }

Formula forall(const std::string& x, const Formula& body, const std::string& sort) {
  return Formula::forall(x, sort, abstract_var(body, x));
}

Formula exists(const std::string& x, const Formula& body, const std::string& sort) {
  return Formula::exists(x, sort, abstract_var(body, x));
}

Formula id(const Term& u, const Term& v) { return Formula::identity(u.sort(), u, v); }

Proof h(const std::string& name) { return Proof::hyp(name); }

Proof lam(const std::string& x, const Proof& body, std::optional<Formula> antecedent) {
  return Proof::lam(x, std::move(antecedent), abstract_hyp(body, x));
}

Proof case_of(const Proof& s, const std::string& x, const Proof& f, const std::string& y, const Proof& g) {
  return Proof::case_of(s, x, abstract_hyp(f, x), y, abstract_hyp(g, y));
}

Proof gen(const std::string& x, const Proof& body, const std::string& sort) {
  return Proof::gen(x, sort, abstract_var(body, x));
}

Proof eps(const std::string& x, const Proof& body, const Term& witness, std::optional<Formula> body_formula,
          const std::string& sort) {
  std::optional<Formula> ann;
  if (body_formula) ann = abstract_var(*body_formula, x);
  return Proof::eps(x, sort, abstract_var(body, x), witness, std::move(ann));
}

Proof inst(const Proof& s, const std::string& g, const std::string& t, const Proof& body, const std::string& sort) {
  return Proof::inst(s, g, t, sort, abstract_hyp(abstract_var(body, t), g));
}

Proof rewr(const Proof& s, const std::string& t, const Proof& body) {
  return Proof::rewr(s, t, abstract_path(body, t));
}

Proof idp(const PathExpr& r, const Term& u, const Term& v) { return Proof::idintro(r, u, v); }

PathExpr pvar(const std::string& name) { return PathExpr::free(name); }

}  // namespace usum::build
