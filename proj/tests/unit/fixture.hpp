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

#include <string>

#include "usum/parser.hpp"
#include "usum/printer.hpp"

namespace usum::unit {

// Shared signature and hypotheses for the module tests.
inline const char* kWorld = R"(usum/1
[signature]
const c, d, s : D
func f : D -> D
pred A, B, C
pred P : D
pred Q : D
pred R : D, D
axiom fc : f(c) = d
axiom fcc : f(c) = c

[context]
var y : D
hyp a : A
hyp b : B
hyp p : A /\ B
hyp h : forall x. P(x)
hyp pc : P(c)
)";

struct World {
  Document doc = parse_document(kWorld);

  const Signature& sig() const { return *doc.signature; }
  const Context& ctx() const { return doc.context; }
  Proof proof(const std::string& text) const { return parse_proof(text, sig(), ctx()); }
  Formula formula(const std::string& text) const { return parse_formula(text, sig(), ctx()); }
  Term term(const std::string& text) const { return parse_term(text, sig(), ctx()); }
  PathExpr path(const std::string& text) const { return parse_path(text, sig(), ctx()); }
};

inline const World& world() {
  static const World w;
  return w;
}

}  // namespace usum::unit
