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

#include "generators.hpp"

#include <algorithm>
#include <map>

#include "usum/binding.hpp"
#include "usum/build.hpp"

namespace usum::testing {

namespace b = usum::build;

std::shared_ptr<Signature> mixed_signature() {
  auto sig = std::make_shared<Signature>();
  sig->add_constant("c", kIndividuals);
  sig->add_constant("d", kIndividuals);
  sig->add_function("f", {kIndividuals}, kIndividuals);
  for (const char* p : {"A", "B", "C"}) sig->add_predicate(p, {});
  sig->add_predicate("P", {kIndividuals});
  sig->add_predicate("R", {kIndividuals});
  sig->add_predicate("S", {kIndividuals, kIndividuals});
  sig->add_axiom(Axiom{"fc", {}, b::fn("f", {b::cst("c")}), b::cst("d")});
  sig->add_axiom(Axiom{"ff", {{"x", kIndividuals}}, b::fn("f", {b::fn("f", {b::var("x")})}), b::var("x")});
  return sig;
}

Context mixed_context() {
  Context ctx;
  ctx.add_var("w", kIndividuals);
  ctx.add_hyp("a", b::atom("A"));
  ctx.add_hyp("b", b::atom("B"));
  ctx.add_hyp("e", b::atom("C"));
  ctx.add_hyp("pc", b::atom("P", {b::cst("c")}));
  ctx.add_hyp("pd", b::atom("P", {b::cst("d")}));
  return ctx;
}

std::shared_ptr<Signature> propositional_signature() {
  auto sig = std::make_shared<Signature>();
  sig->add_predicate("A", {});
  sig->add_predicate("B", {});
  return sig;
}

// ---------------------------------------------------------------- typed

TypedGenerator::TypedGenerator(std::shared_ptr<const Signature> sig, unsigned seed)
    : sig_(std::move(sig)), rng_(seed) {}

int TypedGenerator::pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

std::string TypedGenerator::fresh(const std::string& prefix) { return prefix + std::to_string(++counter_); }

Term TypedGenerator::witness() {
  std::vector<Term> ws = {b::cst("c"), b::cst("d"), b::fn("f", {b::cst("c")}), b::var("w")};
  for (const auto& v : scope_vars_) ws.push_back(b::var(v));
  return ws[pick(static_cast<int>(ws.size()))];
}

Formula TypedGenerator::goal(int depth) {
  if (depth <= 0 || pick(4) == 0) {
    switch (pick(7)) {
      case 0: return b::atom("A");
      case 1: return b::atom("B");
      case 2: return b::atom("C");
      case 3: return b::atom("P", {b::cst("c")});
      case 4: return b::atom("P", {b::cst("d")});
      case 5: return b::id(b::cst("c"), b::cst("c"));
      default: return b::id(b::fn("f", {b::cst("c")}), b::cst("d"));
    }
  }
  switch (pick(6)) {
    case 0: return Formula::conj(goal(depth - 1), goal(depth - 1));
    case 1: return Formula::disj(goal(depth - 1), goal(depth - 1));
    case 2: return Formula::impl(goal(depth - 1), goal(depth - 1));
    case 3: {
      // A body mentioning x that stays provable: a hypothesis-free shape.
      std::string x = "x";
      Formula px = b::atom("P", {b::var(x)});
      switch (pick(3)) {
        case 0: return b::forall(x, Formula::impl(px, px));
        case 1: return b::forall(x, Formula::impl(px, goal(depth - 1)));
        default: return b::forall(x, goal(depth - 1));
      }
    }
    case 4: {
      std::string x = "x";
      Formula px = b::atom("P", {b::var(x)});
      switch (pick(2)) {
        case 0: return b::exists(x, px);
        default: return b::exists(x, Formula::conj(goal(depth - 1), px));
      }
    }
    default: return goal(depth - 1);
  }
}

Formula TypedGenerator::side_formula() {
  switch (pick(6)) {
    case 0: return b::atom("A");
    case 1: return b::atom("B");
    case 2: return b::atom("P", {b::cst("c")});
    case 3: return Formula::conj(b::atom("A"), b::atom("C"));
    case 4: return Formula::impl(b::atom("B"), b::atom("A"));
    default: return b::exists("x", b::atom("P", {b::var("x")}));
  }
}

std::optional<Proof> TypedGenerator::under(std::vector<Hyp>& hyps, const std::string& name, const Formula& f,
                                           const Formula& goal, int budget) {
  hyps.push_back({name, f});
  auto p = prove(hyps, goal, budget);
  hyps.pop_back();
  return p;
}

std::optional<Proof> TypedGenerator::introduce(std::vector<Hyp>& hyps, const Formula& g, int budget) {
  switch (g.kind()) {
    case Formula::Kind::Conj: {
      if (budget < 3) return std::nullopt;
      int l = 1 + pick(budget - 2);
      auto a = prove(hyps, g.left(), l);
      if (!a) return std::nullopt;
      auto c = prove(hyps, g.right(), budget - 1 - l);
      if (!c) return std::nullopt;
      return Proof::pair(*a, *c);
    }
    case Formula::Kind::Disj: {
      if (budget < 2) return std::nullopt;
      if (pick(2) == 0) {
        auto a = prove(hyps, g.left(), budget - 1);
        if (a) return Proof::inl(*a, g.right());
        auto c = prove(hyps, g.right(), budget - 1);
        if (c) return Proof::inr(*c, g.left());
      } else {
        auto c = prove(hyps, g.right(), budget - 1);
        if (c) return Proof::inr(*c, g.left());
        auto a = prove(hyps, g.left(), budget - 1);
        if (a) return Proof::inl(*a, g.right());
      }
      return std::nullopt;
    }
    case Formula::Kind::Impl: {
      if (budget < 2) return std::nullopt;
      std::string x = fresh("x");
      auto body = under(hyps, x, g.left(), g.right(), budget - 1);
      if (!body) return std::nullopt;
      return b::lam(x, *body, g.left());
    }
    case Formula::Kind::Forall: {
      if (budget < 2) return std::nullopt;
      std::string x = fresh("v");
      scope_vars_.push_back(x);
      auto body = prove(hyps, instantiate(g.body(), b::var(x)), budget - 1);
      scope_vars_.pop_back();
      if (!body) return std::nullopt;
      return b::gen(x, *body);
    }
    case Formula::Kind::Exists: {
      if (budget < 2) return std::nullopt;
      Term s = witness();
      auto body = prove(hyps, instantiate(g.body(), s), budget - 1);
      if (!body) return std::nullopt;
      std::string x = fresh("y");
      return b::eps(x, *body, s, instantiate(g.body(), b::var(x)));
    }
    case Formula::Kind::Id: {
      const Term& u = g.terms()[0];
      const Term& v = g.terms()[1];
      if (u == v) return b::idp(PathExpr::concrete(Path::refl(u)), u, v);
      if (u == b::fn("f", {b::cst("c")}) && v == b::cst("d"))
        return b::idp(PathExpr::concrete(Path(u, {RewriteStep{"fc", Direction::Forward, {}, {}}})), u, v);
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

std::optional<Proof> TypedGenerator::eliminate(std::vector<Hyp>& hyps, const Formula& g, int budget) {
  std::vector<int> order(hyps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::shuffle(order.begin(), order.end(), rng_);
  for (int i : order) {
    Hyp h = hyps[i];
    Proof hp = Proof::hyp(h.name);
    const Formula& f = h.formula;
    switch (f.kind()) {
      case Formula::Kind::Conj:
        if (f.left() == g) return Proof::fst(hp);
        if (f.right() == g) return Proof::snd(hp);
        break;
      case Formula::Kind::Impl:
        if (f.right() == g && budget >= 3) {
          auto a = prove(hyps, f.left(), budget - 2);
          if (a) return Proof::app(hp, *a);
        }
        break;
      case Formula::Kind::Disj:
        if (budget >= 5) {
          std::string x = fresh("l"), y = fresh("r");
          int half = (budget - 2) / 2;
          auto l = under(hyps, x, f.left(), g, half);
          if (!l) break;
          auto r = under(hyps, y, f.right(), g, budget - 2 - half);
          if (!r) break;
          return b::case_of(hp, x, *l, y, *r);
        }
        break;
      case Formula::Kind::Exists:
        if (budget >= 3) {
          std::string gname = fresh("g"), t = fresh("t");
          scope_vars_.push_back(t);
          auto body = under(hyps, gname, instantiate(f.body(), b::var(t)), g, budget - 2);
          scope_vars_.pop_back();
          if (body) return b::inst(hp, gname, t, *body);
        }
        break;
      case Formula::Kind::Forall: {
        Term s = witness();
        if (instantiate(f.body(), s) == g) return Proof::extr(hp, s);
        break;
      }
      case Formula::Kind::Id:
        if (budget >= 3) {
          auto body = prove(hyps, g, budget - 2);
          if (body) return b::rewr(hp, fresh("p"), *body);
        }
        break;
      default: break;
    }
  }
  return std::nullopt;
}

std::optional<Proof> TypedGenerator::detour(std::vector<Hyp>& hyps, const Formula& g, int budget) {
  if (budget < 3) return std::nullopt;
  switch (pick(7)) {
    case 0: {
      auto p = prove(hyps, Formula::conj(g, side_formula()), budget - 1);
      if (p) return Proof::fst(*p);
      return std::nullopt;
    }
    case 1: {
      auto p = prove(hyps, Formula::conj(side_formula(), g), budget - 1);
      if (p) return Proof::snd(*p);
      return std::nullopt;
    }
    case 2: {
      Formula x = side_formula();
      std::string n = fresh("x");
      int fb = std::max(1, (budget - 2) / 2);
      auto body = under(hyps, n, x, g, fb);
      if (!body) return std::nullopt;
      auto arg = prove(hyps, x, budget - 2 - fb);
      if (!arg) return std::nullopt;
      return Proof::app(b::lam(n, *body, x), *arg);
    }
    case 3: {
      if (budget < 5) return std::nullopt;
      Formula l = side_formula(), r = side_formula();
      int sb = 2 + pick(std::max(1, budget - 5));
      auto s = prove(hyps, Formula::disj(l, r), sb);
      if (!s) return std::nullopt;
      std::string x = fresh("l"), y = fresh("r");
      int rest = budget - 1 - static_cast<int>(s->size());
      if (rest < 2) return std::nullopt;
      auto f = under(hyps, x, l, g, rest / 2);
      if (!f) return std::nullopt;
      auto h = under(hyps, y, r, g, rest - rest / 2);
      if (!h) return std::nullopt;
      return b::case_of(*s, x, *f, y, *h);
    }
    case 4: {
      std::string x = fresh("v");
      Formula all = b::forall(x, g);
      auto p = prove(hyps, all, budget - 1);
      if (p) return Proof::extr(*p, witness());
      return std::nullopt;
    }
    case 5: {
      Formula e = b::exists("x", b::atom("P", {b::var("x")}));
      int eb = 2 + pick(std::max(1, budget - 4));
      auto s = prove(hyps, e, eb);
      if (!s) return std::nullopt;
      std::string gname = fresh("g"), t = fresh("t");
      scope_vars_.push_back(t);
      auto body = under(hyps, gname, b::atom("P", {b::var(t)}), g, budget - 1 - static_cast<int>(s->size()));
      scope_vars_.pop_back();
      if (!body) return std::nullopt;
      return b::inst(*s, gname, t, *body);
    }
    default: {
      Formula id = pick(2) ? b::id(b::cst("c"), b::cst("c")) : b::id(b::fn("f", {b::cst("c")}), b::cst("d"));
      auto s = prove(hyps, id, 1);
      if (!s) return std::nullopt;
      auto body = prove(hyps, g, budget - 2);
      if (!body) return std::nullopt;
      return b::rewr(*s, fresh("p"), *body);
    }
  }
}

std::optional<Proof> TypedGenerator::prove(std::vector<Hyp>& hyps, const Formula& g, int budget) {
  if (budget < 1) return std::nullopt;
  std::vector<int> tactics = {0, 1, 2, 3};
  std::shuffle(tactics.begin(), tactics.end(), rng_);
  for (int t : tactics) {
    std::optional<Proof> p;
    switch (t) {
      case 0: {
        std::vector<std::string> names;
        for (const auto& h : hyps)
          if (h.formula == g) names.push_back(h.name);
        if (!names.empty()) p = Proof::hyp(names[pick(static_cast<int>(names.size()))]);
        break;
      }
      case 1: p = introduce(hyps, g, budget); break;
      case 2: p = eliminate(hyps, g, budget); break;
      default: p = detour(hyps, g, budget); break;
    }
    if (p && static_cast<int>(p->size()) <= budget) return p;
  }
  return std::nullopt;
}

Typed TypedGenerator::next(int max_size) {
  Context ctx = mixed_context();
  for (;;) {
    std::vector<Hyp> hyps;
    for (const auto& [n, f] : ctx.hyps()) hyps.push_back({n, f});
    Formula g = goal(1 + pick(3));
    int budget = 2 + pick(std::max(1, max_size - 1));
    auto p = prove(hyps, g, budget);
    if (p && static_cast<int>(p->size()) <= max_size) return {*p, g};
  }
}

// ---------------------------------------------------------------- closed

std::vector<Formula> default_annotations() {
  return {b::atom("A"), b::atom("B")};
}

namespace {

class Enumerator {
 public:
  explicit Enumerator(std::vector<Formula> ann) : ann_(std::move(ann)) {}

  const std::vector<Typed>& terms(const std::vector<Formula>& ctx, int n) {
    std::string key = std::to_string(n) + "|";
    for (const auto& f : ctx) key += canonical_key(f) + ";";
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Typed> out = build(ctx, n);
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::vector<Typed> build(const std::vector<Formula>& ctx, int n) {
    std::vector<Typed> out;
    if (n == 1) {
      int k = static_cast<int>(ctx.size());
      for (int i = 0; i < k; ++i) out.push_back({Proof::var(i, "x"), ctx[k - 1 - i]});
      return out;
    }
    for (int l = 1; l < n - 1; ++l) {
      const auto& ls = terms(ctx, l);
      if (ls.empty()) continue;
      const auto& rs = terms(ctx, n - 1 - l);
      for (const auto& a : ls)
        for (const auto& r : rs) {
          out.push_back({Proof::pair(a.term, r.term), Formula::conj(a.formula, r.formula)});
          if (a.formula.kind() == Formula::Kind::Impl && a.formula.left() == r.formula)
            out.push_back({Proof::app(a.term, r.term), a.formula.right()});
        }
    }
    for (const auto& p : terms(ctx, n - 1)) {
      if (p.formula.kind() == Formula::Kind::Conj) {
        out.push_back({Proof::fst(p.term), p.formula.left()});
        out.push_back({Proof::snd(p.term), p.formula.right()});
      }
      for (const auto& f : ann_) {
        out.push_back({Proof::inl(p.term, f), Formula::disj(p.formula, f)});
        out.push_back({Proof::inr(p.term, f), Formula::disj(f, p.formula)});
      }
    }
    for (const auto& f : ann_) {
      auto inner = ctx;
      inner.push_back(f);
      for (const auto& body : terms(inner, n - 1))
        out.push_back({Proof::lam("x", f, body.term), Formula::impl(f, body.formula)});
    }
    // CASE(s, x.f, y.g): sizes s + f + g = n - 1.
    for (int s = 1; s <= n - 3; ++s) {
      for (const auto& sc : terms(ctx, s)) {
        if (sc.formula.kind() != Formula::Kind::Disj) continue;
        auto lctx = ctx, rctx = ctx;
        lctx.push_back(sc.formula.left());
        rctx.push_back(sc.formula.right());
        for (int fl = 1; fl <= n - 2 - s; ++fl) {
          int gl = n - 1 - s - fl;
          const auto& fs = terms(lctx, fl);
          if (fs.empty()) continue;
          const auto& gs = terms(rctx, gl);
          for (const auto& f : fs)
            for (const auto& g : gs)
              if (f.formula == g.formula)
                out.push_back({Proof::case_of(sc.term, "x", f.term, "y", g.term), f.formula});
        }
      }
    }
    return out;
  }

  std::vector<Formula> ann_;
  std::map<std::string, std::vector<Typed>> memo_;
};

}  // namespace

std::vector<Typed> enumerate_closed(int max_size, const std::vector<Formula>& annotations) {
  Enumerator e(annotations);
  std::vector<Typed> out;
  for (int n = 1; n <= max_size; ++n) {
    const auto& ts = e.terms({}, n);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

// ---------------------------------------------------------------- syntax

SyntaxGenerator::SyntaxGenerator(unsigned seed) : sig_(mixed_signature()), rng_(seed) {}

int SyntaxGenerator::pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

std::string SyntaxGenerator::hint() {
  static const char* hints[] = {"x", "y", "g", "t", "a", "h", "c", "f", "w", "x'", "lam", "P"};
  return hints[pick(12)];
}

std::string SyntaxGenerator::hyp_name() {
  static const char* names[] = {"a", "b", "h", "x", "y", "g", "t", "x'", "pc"};
  return names[pick(9)];
}

Term SyntaxGenerator::term(int depth) {
  int scope = static_cast<int>(domain_scope_.size());
  int choice = pick(depth > 0 ? 5 : 4);
  switch (choice) {
    case 0: return b::cst(pick(2) ? "c" : "d");
    case 1: return b::var("w");
    case 2:
    case 3:
      if (scope > 0) {
        int i = pick(scope);
        return Term::bound(i, domain_scope_[scope - 1 - i], kIndividuals);
      }
      return b::cst("c");
    default: return b::fn("f", {term(depth - 1)});
  }
}

Formula SyntaxGenerator::formula(int size) {
  if (size <= 1) {
    switch (pick(6)) {
      case 0: return b::atom("A");
      case 1: return b::atom("B");
      case 2: return b::atom("P", {term(2)});
      case 3: return b::atom("S", {term(1), term(1)});
      case 4: return Formula::identity(kIndividuals, term(2), term(1));
      default: return Formula::bottom();
    }
  }
  int l = 1 + pick(std::max(1, size - 2));
  switch (pick(6)) {
    case 0: return Formula::conj(formula(l), formula(size - 1 - l));
    case 1: return Formula::disj(formula(l), formula(size - 1 - l));
    case 2: return Formula::impl(formula(l), formula(size - 1 - l));
    case 3: return Formula::negation(formula(size - 1));
    default: {
      std::string x = hint();
      domain_scope_.push_back(x);
      Formula body = formula(size - 1);
      domain_scope_.pop_back();
      return pick(2) ? Formula::forall(x, kIndividuals, body) : Formula::exists(x, kIndividuals, body);
    }
  }
}

PathExpr SyntaxGenerator::path(int size) {
  if (size <= 1) {
    switch (pick(4)) {
      case 0: return PathExpr::concrete(Path::refl(term(2)));
      case 1:
        if (path_depth_ > 0) return PathExpr::bound(pick(path_depth_), hint());
        return PathExpr::free("r");
      case 2: return PathExpr::free(pick(2) ? "r" : "q");
      default: {
        std::vector<RewriteStep> steps;
        steps.push_back({"fc", pick(2) ? Direction::Forward : Direction::Backward, {}, {}});
        RewriteStep ff{"ff", Direction::Forward, {}, {{"x", term(1)}}};
        if (pick(2)) ff.position = {1};
        steps.push_back(ff);
        return PathExpr::concrete(Path(b::fn("f", {term(1)}), steps));
      }
    }
  }
  if (pick(2)) return PathExpr::inverse(path(size - 1));
  int l = 1 + pick(std::max(1, size - 2));
  return PathExpr::concat(path(l), path(size - 1 - l));
}

Proof SyntaxGenerator::proof(int size) {
  auto bound_hyp = [&]() -> Proof {
    if (proof_depth_ > 0 && pick(2)) return Proof::var(pick(proof_depth_), hint());
    return Proof::hyp(hyp_name());
  };
  if (size <= 1) {
    if (pick(5) == 0) return Proof::idintro(path(2), term(1), term(1));
    return bound_hyp();
  }
  auto split = [&](int total) { return 1 + pick(std::max(1, total - 1)); };
  auto bind_proof = [&](int n, int count) {
    proof_depth_ += count;
    Proof p = proof(n);
    proof_depth_ -= count;
    return p;
  };
  auto bind_domain = [&](int n, const std::string& x) {
    domain_scope_.push_back(x);
    Proof p = proof(n);
    domain_scope_.pop_back();
    return p;
  };
  int rest = size - 1;
  switch (pick(15)) {
    case 0: {
      int l = split(rest);
      return Proof::pair(proof(l), proof(std::max(1, rest - l)));
    }
    case 1: return Proof::fst(proof(rest));
    case 2: return Proof::snd(proof(rest));
    case 3: return Proof::inl(proof(rest), pick(2) ? std::optional<Formula>(formula(3)) : std::nullopt);
    case 4: return Proof::inr(proof(rest), pick(2) ? std::optional<Formula>(formula(3)) : std::nullopt);
    case 5: {
      int s = split(rest - 1);
      int f = std::max(1, (rest - s) / 2);
      Proof sc = proof(s);
      Proof l = bind_proof(f, 1);
      Proof r = bind_proof(std::max(1, rest - s - f), 1);
      return Proof::case_of(sc, hint(), l, hint(), r);
    }
    case 6:
      return Proof::lam(hint(), pick(3) ? std::optional<Formula>(formula(1 + pick(4))) : std::nullopt,
                        bind_proof(rest, 1));
    case 7: {
      int l = split(rest);
      return Proof::app(proof(l), proof(std::max(1, rest - l)));
    }
    case 8: {
      std::string x = hint();
      return Proof::gen(x, kIndividuals, bind_domain(rest, x));
    }
    case 9: return Proof::extr(proof(rest), term(2));
    case 10: {
      std::string x = hint();
      Proof body = bind_domain(rest, x);
      std::optional<Formula> ann;
      if (pick(2)) {
        domain_scope_.push_back(x);
        ann = formula(1 + pick(3));
        domain_scope_.pop_back();
      }
      return Proof::eps(x, kIndividuals, body, term(2), ann);
    }
    case 11: {
      int s = split(rest);
      Proof sc = proof(s);
      std::string t = hint();
      proof_depth_ += 1;
      Proof d = bind_domain(std::max(1, rest - s), t);
      proof_depth_ -= 1;
      return Proof::inst(sc, hint(), t, kIndividuals, d);
    }
    case 12: return Proof::idintro(path(1 + pick(3)), term(2), term(2));
    default: {
      int s = split(rest);
      Proof sc = proof(s);
      path_depth_ += 1;
      Proof d = proof(std::max(1, rest - s));
      path_depth_ -= 1;
      return Proof::rewr(sc, hint(), d);
    }
  }
}

}  // namespace usum::testing
