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
#include "usum/reduction.hpp"

using namespace usum;
using unit::world;

TEST_CASE("redexes") {
  const auto& w = world();
  auto rs = redexes(w.proof("FST(pair(a, b))"));
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].position.empty());
  CHECK(rs[0].rule == BetaRule::ConjLeft);
  CHECK(family_name(rs[0].rule) == "∧-β");

  CHECK(redexes(w.proof("lam x. x")).empty());

  Proof t = w.proof("APP(lam x. FST(pair(x, b)), a)");
  rs = redexes(t);
  CHECK(rs == testing::scan_redexes(t));
  REQUIRE(rs.size() == 2);
  CHECK(rs[0] == Redex{{}, BetaRule::Impl});
  CHECK(rs[1].rule == BetaRule::ConjLeft);
}

TEST_CASE("step contracts one redex") {
  const auto& w = world();
  auto root = [&](const std::string& text) {
    Proof t = w.proof(text);
    auto rs = redexes(t);
    REQUIRE(!rs.empty());
    REQUIRE(rs[0].position.empty());
    return step(t, rs[0]);
  };
  CHECK(root("SND(pair(a, b))") == w.proof("b"));
  CHECK(root("CASE(inr[A](b), x. pair(x, x), y. pair(y, a))") == w.proof("pair(b, a)"));
  CHECK(root("REWR(idp(rw(f(c), fc), f(c), d), t. idp(t, f(c), d))") == w.proof("idp(rw(f(c), fc), f(c), d)"));
  CHECK(root("INST(eps x. (pc, c) : P(x), g. t. eps z. (g, t) : P(z))") == w.proof("eps z. (pc, c) : P(z)"));
  CHECK(root("EXTR(gen x. EXTR(h, x), s)") == w.proof("EXTR(h, s)"));

  // the inner redex of a nested term leaves the rest alone
  Proof t = w.proof("APP(lam x. FST(pair(x, b)), a)");
  CHECK(step(t, redexes(t)[1]) == w.proof("APP(lam x. x, a)"));
}

TEST_CASE("stale redex") {
  const auto& w = world();
  CHECK_THROWS_AS(step(w.proof("a"), Redex{{}, BetaRule::ConjLeft}), StaleRedex);
  CHECK_THROWS_AS(step(w.proof("SND(pair(a, b))"), Redex{{}, BetaRule::ConjLeft}), StaleRedex);
  CHECK_THROWS_AS(step(w.proof("FST(pair(a, b))"), Redex{{0, 1}, BetaRule::ConjLeft}), StaleRedex);
}

TEST_CASE("normalize") {
  const auto& w = world();
  auto tr = normalize(w.proof("APP(lam x. x, a)"), Strategy::NormalOrder, 10);
  CHECK(tr.terminal == w.proof("a"));
  CHECK(tr.steps.size() == 1);
  CHECK_FALSE(tr.exhausted);

  tr = normalize(w.proof("FST(pair(SND(pair(a, b)), c))"), Strategy::NormalOrder, 10);
  CHECK(tr.terminal == w.proof("b"));
  CHECK(tr.steps.size() == 2);
  auto graph = testing::explore(w.proof("FST(pair(SND(pair(a, b)), c))"), 10);
  REQUIRE(graph.normal_forms.size() == 1);
  CHECK(*graph.normal_forms.begin() == canonical_key(w.proof("b")));

  tr = normalize(w.proof("FST(pair(SND(pair(a, b)), c))"), Strategy::ApplicativeOrder, 1);
  CHECK(tr.exhausted);
  CHECK(tr.steps.size() == 1);
  CHECK(tr.terminal == w.proof("FST(pair(b, c))"));
}

TEST_CASE("normalize is deterministic") {
  testing::TypedGenerator gen(testing::mixed_signature(), 17);
  for (int i = 0; i < 200; ++i) {
    Proof t = gen.next(12).term;
    for (auto s : {Strategy::NormalOrder, Strategy::ApplicativeOrder}) {
      auto x = normalize(t, s, 100);
      auto y = normalize(t, s, 100);
      REQUIRE(x.steps.size() == y.steps.size());
      for (std::size_t k = 0; k < x.steps.size(); ++k) {
        CHECK(x.steps[k].redex == y.steps[k].redex);
        CHECK(x.steps[k].result == y.steps[k].result);
      }
      CHECK(x.terminal == y.terminal);
    }
  }
}

TEST_CASE("small closed terms terminate under both strategies") {
  auto terms = testing::enumerate_closed(6, testing::default_annotations());
  CHECK(terms.size() > 100);
  for (const auto& t : terms) {
    auto n = normalize(t.term, Strategy::NormalOrder, 100);
    auto a = normalize(t.term, Strategy::ApplicativeOrder, 100);
    CHECK_FALSE(n.exhausted);
    CHECK_FALSE(a.exhausted);
    CHECK(n.terminal == a.terminal);
  }
}

TEST_CASE("conv") {
  const auto& w = world();
  CHECK(conv(w.proof("FST(pair(a, b))"), w.proof("a")) == Convertibility::Convertible);
  CHECK(conv(w.proof("inl(a)"), w.proof("inr(a)")) == Convertibility::NotConvertible);
  CHECK(conv(w.proof("APP(lam x. pair(x, x), a)"), w.proof("pair(a, a)")) == Convertibility::Convertible);
  CHECK(conv(w.proof("FST(pair(SND(pair(a, b)), c))"), w.proof("b"), 1) == Convertibility::Exhausted);
}

TEST_CASE("every associated rewriting holds under conv with fuel 1") {
  const auto& w = world();
  const std::pair<const char*, const char*> rows[] = {
      {"FST(pair(a, b))", "a"},
      {"SND(pair(a, b))", "b"},
      {"CASE(inl[B](a), x. pair(x, x), y. pair(a, y))", "pair(a, a)"},
      {"CASE(inr[A](b), x. pair(x, b), y. pair(a, y))", "pair(a, b)"},
      {"APP(lam x:A. pair(x, b), a)", "pair(a, b)"},
      {"EXTR(gen x. EXTR(h, x), c)", "EXTR(h, c)"},
      {"INST(eps x. (pc, c) : P(x), g. t. eps z. (g, t) : P(z))", "eps z. (pc, c) : P(z)"},
      {"REWR(idp(rw(f(c), fc), f(c), d), t. idp(t, f(c), d))", "idp(rw(f(c), fc), f(c), d)"},
  };
  for (const auto& [lhs, rhs] : rows) {
    INFO(lhs);
    CHECK(conv(w.proof(lhs), w.proof(rhs), 1) == Convertibility::Convertible);
  }
}

TEST_CASE("whnf") {
  const auto& w = world();
  auto r = whnf(w.proof("FST(pair(lam x. FST(pair(x, x)), b))"));
  REQUIRE(r);
  CHECK(*r == w.proof("lam x. FST(pair(x, x))"));
}
