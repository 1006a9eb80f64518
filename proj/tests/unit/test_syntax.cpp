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

#include <doctest.h>

#include "fixture.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "usum/binding.hpp"
#include "usum/build.hpp"
#include "usum/typing.hpp"

using namespace usum;
using unit::world;

TEST_CASE("substitute_proof") {
  const auto& w = world();
  CHECK(substitute_proof(w.proof("x"), "x", w.proof("a")) == w.proof("a"));
  CHECK(substitute_proof(w.proof("pair(x, b)"), "x", w.proof("a")) == w.proof("pair(a, b)"));
  CHECK(substitute_proof(w.proof("lam x. x"), "x", w.proof("a")) == w.proof("lam x. x"));

  // the replacement's free names are not captured by the body's binders
  Proof r = substitute_proof(w.proof("lam z. pair(x, z)"), "x", w.proof("z"));
  CHECK(free_names(r).hyps == std::set<std::string>{"z"});
  CHECK(print(r) != "lam z. pair(z, z)");
}

TEST_CASE("substitute_domain") {
  const auto& w = world();
  CHECK(substitute_domain(w.formula("P(y)"), "y", w.term("s")) == w.formula("P(s)"));
  CHECK(substitute_domain(w.formula("forall y. P(y)"), "y", w.term("s")) == w.formula("forall y. P(y)"));
  CHECK(substitute_domain(w.formula("P(y) /\\ Q(c)"), "y", w.term("c")) == w.formula("P(c) /\\ Q(c)"));
  CHECK(substitute_domain(w.formula("R(y, f(y))"), "y", w.term("c")) == w.formula("R(c, f(c))"));
}

TEST_CASE("alpha_eq") {
  const auto& w = world();
  CHECK(alpha_eq(w.proof("lam x. x"), w.proof("lam y. y")));
  CHECK(alpha_eq(w.proof("lam x. pair(x, a)"), w.proof("lam z. pair(z, a)")));
  CHECK_FALSE(alpha_eq(w.proof("inl(a)"), w.proof("inr(a)")));
  CHECK_FALSE(alpha_eq(w.proof("lam x. lam y. x"), w.proof("lam x. lam y. y")));
  CHECK(alpha_eq(w.proof("gen u. EXTR(h, u)"), w.proof("gen v. EXTR(h, v)")));
}

TEST_CASE("free_names") {
  const auto& w = world();
  auto n = free_names(w.proof("lam x. x"));
  CHECK(n.hyps.empty());
  CHECK(n.vars.empty());
  n = free_names(w.proof("pair(a, b)"));
  CHECK(n.hyps == std::set<std::string>{"a", "b"});
  CHECK(n.vars.empty());
  n = free_names(w.proof("EXTR(gen x. EXTR(h, x), y)"));
  CHECK(n.hyps == std::set<std::string>{"h"});
  CHECK(n.vars == std::set<std::string>{"y"});
}

TEST_CASE("free_names agrees with the scope walk on random syntax") {
  testing::SyntaxGenerator gen(7);
  for (int i = 0; i < 2000; ++i) {
    Proof t = gen.proof(1 + i % 12);
    auto n = free_names(t);
    INFO(print(t));
    CHECK(n.hyps == testing::walk_free_hyps(t));
    CHECK(n.vars == testing::walk_free_vars(t));
  }
}

TEST_CASE("substitution laws on random syntax") {
  testing::SyntaxGenerator gen(11);
  int exercised = 0;
  for (int i = 0; i < 2000; ++i) {
    Proof t = gen.proof(1 + i % 12);
    auto names = free_names(t).hyps;
    if (names.empty()) continue;
    const std::string x = *names.begin();
    INFO(print(t), " x=", x);
    CHECK(alpha_eq(substitute_proof(t, x, Proof::hyp(x)), t));

    Proof r = gen.proof(1 + i % 4);
    auto want = names;
    want.erase(x);
    for (const auto& n : free_names(r).hyps) want.insert(n);
    CHECK(free_names(substitute_proof(t, x, r)).hyps == want);
    ++exercised;
  }
  CHECK(exercised > 500);
}

TEST_CASE("alpha_eq is an equivalence on random syntax") {
  testing::SyntaxGenerator gen(3);
  std::vector<Proof> terms;
  for (int i = 0; i < 300; ++i) terms.push_back(gen.proof(1 + i % 6));
  for (const auto& x : terms) {
    CHECK(alpha_eq(x, x));
    for (const auto& y : terms) {
      if (alpha_eq(x, y) != alpha_eq(y, x)) FAIL("asymmetric: " << print(x) << " / " << print(y));
      if (!alpha_eq(x, y)) continue;
      for (const auto& z : terms)
        if (alpha_eq(y, z) && !alpha_eq(x, z)) FAIL("intransitive");
    }
  }
}

TEST_CASE("path endpoints chain through composition") {
  const auto& w = world();
  auto t = path_type(w.sig(), w.ctx(), w.path("trans(rw(f(c), fc), inv(rw(f(c), fc)))"));
  CHECK(t.from == w.term("f(c)"));
  CHECK(t.to == w.term("f(c)"));
  t = path_type(w.sig(), w.ctx(), w.path("inv(rw(f(c), fc))"));
  CHECK(t.from == w.term("d"));
  CHECK(t.to == w.term("f(c)"));
}
