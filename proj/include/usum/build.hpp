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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "usum/formula.hpp"
#include "usum/path.hpp"
#include "usum/proof.hpp"
#include "usum/term.hpp"

// Named-binder constructors. Bodies mention the bound name as a free
// hypothesis / individual / path, which is abstracted into an index.
namespace usum::build {

Term var(const std::string& name, const std::string& sort = kIndividuals);
Term cst(const std::string& name, const std::string& sort = kIndividuals);
Term fn(const std::string& name, std::vector<Term> args, const std::string& sort = kIndividuals);

Formula atom(const std::string& name, std::vector<Term> args = {});
Formula forall(const std::string& x, const Formula& body, const std::string& sort = kIndividuals);
Formula exists(const std::string& x, const Formula& body, const std::string& sort = kIndividuals);
Formula id(const Term& u, const Term& v);

Proof h(const std::string& name);
Proof lam(const std::string& x, const Proof& body, std::optional<Formula> antecedent = std::nullopt);
Proof case_of(const Proof& s, const std::string& x, const Proof& f, const std::string& y, const Proof& g);
Proof gen(const std::string& x, const Proof& body, const std::string& sort = kIndividuals);
/// eps x.(f, s); `body_formula` may mention x free.
Proof eps(const std::string& x, const Proof& body, const Term& witness,
          std::optional<Formula> body_formula = std::nullopt, const std::string& sort = kIndividuals);
Proof inst(const Proof& s, const std::string& g, const std::string& t, const Proof& body,
           const std::string& sort = kIndividuals);
Proof rewr(const Proof& s, const std::string& t, const Proof& body);
Proof idp(const PathExpr& r, const Term& u, const Term& v);
PathExpr pvar(const std::string& name);

}  // namespace usum::build
