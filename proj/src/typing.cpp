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

#include "usum/typing.hpp"

#include <set>

#include "usum/binding.hpp"
#include "usum/printer.hpp"

namespace usum {

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::Hyp: return "hyp";
    case Rule::ConjIntro: return "∧-intr";
    case Rule::ConjElimLeft: return "∧-elim-l";
    case Rule::ConjElimRight: return "∧-elim-r";
    case Rule::DisjIntroLeft: return "∨-intr-l";
    case Rule::DisjIntroRight: return "∨-intr-r";
    case Rule::DisjElim: return "∨-elim";
    case Rule::ImplIntro: return "→-intr";
    case Rule::ImplElim: return "→-elim";
    case Rule::ForallIntro: return "∀-intr";
    case Rule::ForallElim: return "∀-elim";
    case Rule::ExistsIntro: return "∃-intr";
    case Rule::ExistsElim: return "∃-elim";
    case Rule::IdIntro: return "Id-intr";
    case Rule::IdElim: return "Id-elim";
  }
  return "?";
}

std::size_t Derivation::node_count() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.node_count();
  return n;
}

std::string_view kind_name(TypeErrorKind k) {
  switch (k) {
    case TypeErrorKind::UnknownHypothesis: return "unknown hypothesis";
    case TypeErrorKind::ConstructorMismatch: return "constructor/formula mismatch";
    case TypeErrorKind::DestructorMismatch: return "destructor on non-matching type";
    case TypeErrorKind::SortError: return "sort error";
    case TypeErrorKind::InvalidPath: return "invalid path";
    case TypeErrorKind::VariableEscapes: return "variable escapes scope";
    case TypeErrorKind::CannotInfer: return "cannot infer";
  }
  return "?";
}

namespace {

std::string position_text(const Position& p) {
  if (p.empty()) return "root";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(p[i]);
  }
  return s;
}

}  // namespace

TypeError::TypeError(TypeErrorKind kind, Position location, const std::string& message)
    : Error(std::string(kind_name(kind)) + " at " + position_text(location) + ": " + message),
      kind_(kind),
      location_(std::move(location)),
      detail_(message) {}

namespace {

Position child(const Position& p, int i) {
  Position q = p;
  q.push_back(i);
  return q;
}

// Well-formedness of terms and formulas with a stack of bound sorts
// (innermost last).
std::string term_sort(const Signature& sig, const Context& ctx, const Term& t,
                      const std::vector<std::string>& bound, const Position& pos) {
  switch (t.kind()) {
    case Term::Kind::Free: {
      auto s = ctx.var_sort(t.name());
      if (!s) throw TypeError(TypeErrorKind::SortError, pos, "undeclared individual '" + t.name() + "'");
      if (*s != t.sort())
        throw TypeError(TypeErrorKind::SortError, pos,
                        "individual '" + t.name() + "' has sort " + *s + ", used at sort " + t.sort());
      return *s;
    }
    case Term::Kind::Bound: {
      int i = t.index();
      if (i < 0 || i >= static_cast<int>(bound.size()))
        throw TypeError(TypeErrorKind::SortError, pos, "unbound individual variable");
      const std::string& s = bound[bound.size() - 1 - i];
      if (s != t.sort()) throw TypeError(TypeErrorKind::SortError, pos, "bound variable used at the wrong sort");
      return s;
    }
    case Term::Kind::Constant:
    case Term::Kind::Apply: {
      if (t.kind() == Term::Kind::Constant) {
        auto s = sig.constant_sort(t.name());
        if (!s) throw TypeError(TypeErrorKind::SortError, pos, "unknown constant '" + t.name() + "'");
        return *s;
      }
      const FunctionDecl* f = sig.function(t.name());
      if (!f) throw TypeError(TypeErrorKind::SortError, pos, "unknown function '" + t.name() + "'");
      if (f->args.size() != t.args().size())
        throw TypeError(TypeErrorKind::SortError, pos, "wrong number of arguments to '" + t.name() + "'");
      for (std::size_t i = 0; i < f->args.size(); ++i)
        if (term_sort(sig, ctx, t.args()[i], bound, pos) != f->args[i])
          throw TypeError(TypeErrorKind::SortError, pos,
                          "argument " + std::to_string(i + 1) + " of '" + t.name() + "' has the wrong sort");
      return f->result;
    }
  }
  return {};
}

void formula_ok(const Signature& sig, const Context& ctx, const Formula& f, std::vector<std::string>& bound,
                const Position& pos) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const auto* args = sig.predicate(f.name());
      if (!args) throw TypeError(TypeErrorKind::SortError, pos, "unknown predicate '" + f.name() + "'");
      if (args->size() != f.terms().size())
        throw TypeError(TypeErrorKind::SortError, pos, "wrong number of arguments to '" + f.name() + "'");
      for (std::size_t i = 0; i < args->size(); ++i)
        if (term_sort(sig, ctx, f.terms()[i], bound, pos) != (*args)[i])
          throw TypeError(TypeErrorKind::SortError, pos,
                          "argument " + std::to_string(i + 1) + " of '" + f.name() + "' has the wrong sort");
      return;
    }
    case Formula::Kind::Id:
      if (!sig.has_sort(f.sort())) throw TypeError(TypeErrorKind::SortError, pos, "unknown sort " + f.sort());
      for (const auto& t : f.terms())
        if (term_sort(sig, ctx, t, bound, pos) != f.sort())
          throw TypeError(TypeErrorKind::SortError, pos, "identity sides must both have sort " + f.sort());
      return;
    case Formula::Kind::Bot:
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      if (!sig.has_sort(f.sort())) throw TypeError(TypeErrorKind::SortError, pos, "unknown sort " + f.sort());
      bound.push_back(f.sort());
      formula_ok(sig, ctx, f.body(), bound, pos);
      bound.pop_back();
      return;
    default:
      formula_ok(sig, ctx, f.left(), bound, pos);
      formula_ok(sig, ctx, f.right(), bound, pos);
      return;
  }
}

class Engine {
 public:
  Engine(const Signature& sig, const Context& ctx, const Proof& root) : sig_(sig) {
    taken_ = ctx.names();
    FreeNames fn = free_names(root);
    taken_.insert(fn.hyps.begin(), fn.hyps.end());
    taken_.insert(fn.vars.begin(), fn.vars.end());
    taken_.insert(fn.paths.begin(), fn.paths.end());
    for (const auto& [c, s] : sig.constants()) taken_.insert(c);
  }

  Derivation check(const Context& ctx, const Proof& t, const Formula& goal, const Position& pos) {
    switch (t.kind()) {
      case Proof::Kind::Pair: {
        expect(goal, Formula::Kind::Conj, t, pos);
        return node(Rule::ConjIntro, ctx, t, goal,
                    {check(ctx, t.kid(0), goal.left(), child(pos, 0)),
                     check(ctx, t.kid(1), goal.right(), child(pos, 1))});
      }
      case Proof::Kind::Inl:
      case Proof::Kind::Inr: {
        expect(goal, Formula::Kind::Disj, t, pos);
        bool left = t.kind() == Proof::Kind::Inl;
        const Formula& other = left ? goal.right() : goal.left();
        if (t.annotation()) {
          formula(ctx, *t.annotation(), pos);
          if (*t.annotation() != other)
            throw TypeError(TypeErrorKind::ConstructorMismatch, pos,
                            "annotation " + print(*t.annotation()) + " disagrees with goal " + print(goal));
        }
        return node(left ? Rule::DisjIntroLeft : Rule::DisjIntroRight, ctx, t, goal,
                    {check(ctx, t.kid(0), left ? goal.left() : goal.right(), child(pos, 0))});
      }
      case Proof::Kind::Lam: {
        expect(goal, Formula::Kind::Impl, t, pos);
        if (t.annotation()) {
          formula(ctx, *t.annotation(), pos);
          if (*t.annotation() != goal.left())
            throw TypeError(TypeErrorKind::ConstructorMismatch, pos,
                            "binder annotation " + print(*t.annotation()) + " disagrees with antecedent " +
                                print(goal.left()));
        }
        std::string x = fresh(t.binders()[0]);
        Context inner = ctx;
        inner.add_hyp(x, goal.left());
        Proof body = instantiate(t.kid(0), {{Proof::hyp(x)}, {}, {}});
        Derivation d = node(Rule::ImplIntro, ctx, t, goal, {check(inner, body, goal.right(), child(pos, 0))});
        d.discharged = {x};
        return d;
      }
      case Proof::Kind::Gen: {
        expect(goal, Formula::Kind::Forall, t, pos);
        if (t.sort() != goal.sort())
          throw TypeError(TypeErrorKind::SortError, pos,
                          "generalization over sort " + t.sort() + " for a quantifier over " + goal.sort());
        eigenvariable(ctx, t.binders()[0], pos);
        std::string x = fresh(t.binders()[0]);
        Context inner = ctx;
        inner.add_var(x, t.sort());
        Term xv = Term::free(x, t.sort());
        Proof body = instantiate(t.kid(0), {{}, {xv}, {}});
        Derivation d =
            node(Rule::ForallIntro, ctx, t, goal, {check(inner, body, instantiate(goal.body(), xv), child(pos, 0))});
        d.discharged = {x};
        return d;
      }
      case Proof::Kind::Eps: {
        expect(goal, Formula::Kind::Exists, t, pos);
        if (t.sort() != goal.sort())
          throw TypeError(TypeErrorKind::SortError, pos,
                          "witness binder of sort " + t.sort() + " for a quantifier over " + goal.sort());
        if (t.annotation() && *t.annotation() != goal.body())
          throw TypeError(TypeErrorKind::ConstructorMismatch, pos, "eps annotation disagrees with goal " + print(goal));
        const Term& s = t.terms()[0];
        if (term(ctx, s, pos) != goal.sort())
          throw TypeError(TypeErrorKind::SortError, pos, "witness " + print(s) + " is not of sort " + goal.sort());
        Proof body = instantiate(t.kid(0), {{}, {s}, {}});
        return node(Rule::ExistsIntro, ctx, t, goal, {check(ctx, body, instantiate(goal.body(), s), child(pos, 0))});
      }
      case Proof::Kind::IdIntro: {
        expect(goal, Formula::Kind::Id, t, pos);
        if (t.terms()[0] != goal.terms()[0] || t.terms()[1] != goal.terms()[1])
          throw TypeError(TypeErrorKind::ConstructorMismatch, pos, "idp endpoints disagree with goal " + print(goal));
        return id_intro(ctx, t, pos, goal);
      }
      case Proof::Kind::Case: {
        Derivation s = infer(ctx, t.kid(0), child(pos, 0));
        destructed(s.formula, Formula::Kind::Disj, t, pos);
        std::string x = fresh(t.binders()[0]);
        std::string y = fresh(t.binders()[1]);
        Context lc = ctx, rc = ctx;
        lc.add_hyp(x, s.formula.left());
        rc.add_hyp(y, s.formula.right());
        Derivation f = check(lc, instantiate(t.kid(1), {{Proof::hyp(x)}, {}, {}}), goal, child(pos, 1));
        Derivation g = check(rc, instantiate(t.kid(2), {{Proof::hyp(y)}, {}, {}}), goal, child(pos, 2));
        Derivation d = node(Rule::DisjElim, ctx, t, goal, {std::move(s), std::move(f), std::move(g)});
        d.discharged = {x, y};
        return d;
      }
      case Proof::Kind::Inst:
        return inst(ctx, t, pos, &goal);
      case Proof::Kind::Rewr:
        return rewr(ctx, t, pos, &goal);
      default: {
        Derivation d = infer(ctx, t, pos);
        if (d.formula != goal)
          throw TypeError(TypeErrorKind::ConstructorMismatch, pos,
                          print(t) + " proves " + print(d.formula) + ", not " + print(goal));
        return d;
      }
    }
  }

  Derivation infer(const Context& ctx, const Proof& t, const Position& pos) {
    switch (t.kind()) {
      case Proof::Kind::Hyp: {
        const Formula* f = ctx.hyp(t.name());
        if (!f) throw TypeError(TypeErrorKind::UnknownHypothesis, pos, "unknown hypothesis '" + t.name() + "'");
        return node(Rule::Hyp, ctx, t, *f, {});
      }
      case Proof::Kind::Var:
        throw TypeError(TypeErrorKind::UnknownHypothesis, pos, "unbound hypothesis variable");
      case Proof::Kind::Fst:
      case Proof::Kind::Snd: {
        Derivation p = infer(ctx, t.kid(0), child(pos, 0));
        destructed(p.formula, Formula::Kind::Conj, t, pos);
        bool left = t.kind() == Proof::Kind::Fst;
        Formula f = left ? p.formula.left() : p.formula.right();
        return node(left ? Rule::ConjElimLeft : Rule::ConjElimRight, ctx, t, f, {std::move(p)});
      }
      case Proof::Kind::App: {
        Derivation fn = infer(ctx, t.kid(0), child(pos, 0));
        destructed(fn.formula, Formula::Kind::Impl, t, pos);
        Derivation arg = check(ctx, t.kid(1), fn.formula.left(), child(pos, 1));
        Formula f = fn.formula.right();
        return node(Rule::ImplElim, ctx, t, f, {std::move(fn), std::move(arg)});
      }
      case Proof::Kind::Extr: {
        Derivation p = infer(ctx, t.kid(0), child(pos, 0));
        destructed(p.formula, Formula::Kind::Forall, t, pos);
        const Term& s = t.terms()[0];
        if (term(ctx, s, pos) != p.formula.sort())
          throw TypeError(TypeErrorKind::SortError, pos,
                          "instance " + print(s) + " is not of sort " + p.formula.sort());
        Formula f = instantiate(p.formula.body(), s);
        return node(Rule::ForallElim, ctx, t, f, {std::move(p)});
      }
      case Proof::Kind::Pair: {
        Derivation a = infer(ctx, t.kid(0), child(pos, 0));
        Derivation b = infer(ctx, t.kid(1), child(pos, 1));
        Formula f = Formula::conj(a.formula, b.formula);
        return node(Rule::ConjIntro, ctx, t, f, {std::move(a), std::move(b)});
      }
      case Proof::Kind::Inl:
      case Proof::Kind::Inr: {
        if (!t.annotation())
          throw TypeError(TypeErrorKind::CannotInfer, pos, "unannotated " + std::string(kind_name(t.kind())));
        formula(ctx, *t.annotation(), pos);
        Derivation a = infer(ctx, t.kid(0), child(pos, 0));
        bool left = t.kind() == Proof::Kind::Inl;
        Formula f = left ? Formula::disj(a.formula, *t.annotation()) : Formula::disj(*t.annotation(), a.formula);
        return node(left ? Rule::DisjIntroLeft : Rule::DisjIntroRight, ctx, t, f, {std::move(a)});
      }
      case Proof::Kind::Lam: {
        if (!t.annotation()) throw TypeError(TypeErrorKind::CannotInfer, pos, "unannotated lam");
        formula(ctx, *t.annotation(), pos);
        std::string x = fresh(t.binders()[0]);
        Context inner = ctx;
        inner.add_hyp(x, *t.annotation());
        Derivation b = infer(inner, instantiate(t.kid(0), {{Proof::hyp(x)}, {}, {}}), child(pos, 0));
        Formula f = Formula::impl(*t.annotation(), b.formula);
        Derivation d = node(Rule::ImplIntro, ctx, t, f, {std::move(b)});
        d.discharged = {x};
        return d;
      }
      case Proof::Kind::Gen: {
        if (!sig_.has_sort(t.sort())) throw TypeError(TypeErrorKind::SortError, pos, "unknown sort " + t.sort());
        eigenvariable(ctx, t.binders()[0], pos);
        std::string x = fresh(t.binders()[0]);
        Context inner = ctx;
        inner.add_var(x, t.sort());
        Derivation b = infer(inner, instantiate(t.kid(0), {{}, {Term::free(x, t.sort())}, {}}), child(pos, 0));
        Formula f = Formula::forall(t.binders()[0], t.sort(), abstract_var(b.formula, x));
        Derivation d = node(Rule::ForallIntro, ctx, t, f, {std::move(b)});
        d.discharged = {x};
        return d;
      }
      case Proof::Kind::Eps: {
        if (!t.annotation()) throw TypeError(TypeErrorKind::CannotInfer, pos, "unannotated eps");
        Formula goal = Formula::exists(t.binders()[0], t.sort(), *t.annotation());
        formula(ctx, goal, pos);
        return check(ctx, t, goal, pos);
      }
      case Proof::Kind::IdIntro: {
        std::string s = term(ctx, t.terms()[0], pos);
        Formula goal = Formula::identity(s, t.terms()[0], t.terms()[1]);
        formula(ctx, goal, pos);
        return id_intro(ctx, t, pos, goal);
      }
      case Proof::Kind::Case: {
        Derivation s = infer(ctx, t.kid(0), child(pos, 0));
        destructed(s.formula, Formula::Kind::Disj, t, pos);
        std::string x = fresh(t.binders()[0]);
        std::string y = fresh(t.binders()[1]);
        Context lc = ctx, rc = ctx;
        lc.add_hyp(x, s.formula.left());
        rc.add_hyp(y, s.formula.right());
        Derivation f = infer(lc, instantiate(t.kid(1), {{Proof::hyp(x)}, {}, {}}), child(pos, 1));
        Derivation g = check(rc, instantiate(t.kid(2), {{Proof::hyp(y)}, {}, {}}), f.formula, child(pos, 2));
        Formula c = f.formula;
        Derivation d = node(Rule::DisjElim, ctx, t, c, {std::move(s), std::move(f), std::move(g)});
        d.discharged = {x, y};
        return d;
      }
      case Proof::Kind::Inst:
        return inst(ctx, t, pos, nullptr);
      case Proof::Kind::Rewr:
        return rewr(ctx, t, pos, nullptr);
    }
    throw TypeError(TypeErrorKind::CannotInfer, pos, "unsupported term");
  }

  std::string term(const Context& ctx, const Term& t, const Position& pos) {
    return term_sort(sig_, ctx, t, {}, pos);
  }

  void formula(const Context& ctx, const Formula& f, const Position& pos) {
    std::vector<std::string> bound;
    formula_ok(sig_, ctx, f, bound, pos);
  }

  PathType path(const Context& ctx, const PathExpr& r, const Position& pos) {
    switch (r.kind()) {
      case PathExpr::Kind::Concrete: {
        std::string s = term(ctx, r.path().source(), pos);
        std::optional<std::pair<Term, Term>> ends;
        try {
          for (const auto& step : r.path().steps())
            for (const auto& inst : step.instantiation) term(ctx, inst.second, pos);
          ends = endpoints(sig_, r.path());
        } catch (const PathError& e) {
          throw TypeError(TypeErrorKind::InvalidPath, pos, e.what());
        }
        if (!ends) throw TypeError(TypeErrorKind::InvalidPath, pos, "rewrite chain " + print(r) + " does not replay");
        return {s, ends->first, ends->second};
      }
      case PathExpr::Kind::Free: {
        const PathHyp* p = ctx.path(r.name());
        if (!p) throw TypeError(TypeErrorKind::UnknownHypothesis, pos, "unknown path '" + r.name() + "'");
        return {p->sort, p->from, p->to};
      }
      case PathExpr::Kind::Bound:
        throw TypeError(TypeErrorKind::UnknownHypothesis, pos, "unbound path variable");
      case PathExpr::Kind::Inverse: {
        PathType p = path(ctx, r.kids()[0], pos);
        return {p.sort, p.to, p.from};
      }
      case PathExpr::Kind::Concat: {
        PathType p = path(ctx, r.kids()[0], pos);
        PathType q = path(ctx, r.kids()[1], pos);
        if (p.to != q.from)
          throw TypeError(TypeErrorKind::InvalidPath, pos,
                          "trans: " + print(p.to) + " and " + print(q.from) + " do not meet");
        return {p.sort, p.from, q.to};
      }
    }
    throw TypeError(TypeErrorKind::InvalidPath, pos, "bad path");
  }

 private:
  std::string fresh(const std::string& hint) {
    std::string n = fresh_name(hint, taken_);
    taken_.insert(n);
    return n;
  }

  static Derivation node(Rule rule, const Context& ctx, const Proof& t, const Formula& f,
                         std::vector<Derivation> premises) {
    return Derivation{rule, ctx, t, f, std::move(premises), {}};
  }

  static void expect(const Formula& goal, Formula::Kind k, const Proof& t, const Position& pos) {
    if (goal.kind() != k)
      throw TypeError(TypeErrorKind::ConstructorMismatch, pos,
                      std::string(kind_name(t.kind())) + " cannot prove " + print(goal));
  }

  static void destructed(const Formula& f, Formula::Kind k, const Proof& t, const Position& pos) {
    if (f.kind() != k)
      throw TypeError(TypeErrorKind::DestructorMismatch, pos,
                      std::string(kind_name(t.kind())) + " applied to a proof of " + print(f));
  }

  void eigenvariable(const Context& ctx, const std::string& x, const Position& pos) {
    if (ctx.var_sort(x) && ctx.mentioned_in_assumptions(x))
      throw TypeError(TypeErrorKind::VariableEscapes, pos,
                      "cannot generalize over '" + x + "': it occurs free in an undischarged assumption");
  }

  Derivation id_intro(const Context& ctx, const Proof& t, const Position& pos, const Formula& goal) {
    PathType p = path(ctx, t.reason(), pos);
    if (p.sort != goal.sort() || p.from != goal.terms()[0] || p.to != goal.terms()[1])
      throw TypeError(TypeErrorKind::InvalidPath, pos,
                      "path " + print(t.reason()) + " joins " + print(p.from) + " and " + print(p.to) + ", not " +
                          print(goal.terms()[0]) + " and " + print(goal.terms()[1]));
    return node(Rule::IdIntro, ctx, t, goal, {});
  }

  Derivation inst(const Context& ctx, const Proof& t, const Position& pos, const Formula* goal) {
    Derivation s = infer(ctx, t.kid(0), child(pos, 0));
    destructed(s.formula, Formula::Kind::Exists, t, pos);
    if (s.formula.sort() != t.sort())
      throw TypeError(TypeErrorKind::SortError, pos,
                      "INST binds an individual of sort " + t.sort() + " for a quantifier over " + s.formula.sort());
    std::string tv = fresh(t.binders()[1]);
    std::string g = fresh(t.binders()[0]);
    Term witness = Term::free(tv, t.sort());
    Context inner = ctx;
    inner.add_var(tv, t.sort());
    inner.add_hyp(g, instantiate(s.formula.body(), witness));
    Proof body = instantiate(t.kid(1), {{Proof::hyp(g)}, {witness}, {}});
    Derivation d = goal ? check(inner, body, *goal, child(pos, 1)) : infer(inner, body, child(pos, 1));
    if (free_vars(d.formula).count(tv))
      throw TypeError(TypeErrorKind::VariableEscapes, pos,
                      "the witness variable escapes into " + print(d.formula));
    Formula c = d.formula;
    Derivation out = node(Rule::ExistsElim, ctx, t, c, {std::move(s), std::move(d)});
    out.discharged = {tv, g};
    return out;
  }

  Derivation rewr(const Context& ctx, const Proof& t, const Position& pos, const Formula* goal) {
    Derivation s = infer(ctx, t.kid(0), child(pos, 0));
    destructed(s.formula, Formula::Kind::Id, t, pos);
    std::string r = fresh(t.binders()[0]);
    Context inner = ctx;
    inner.add_path(r, s.formula.sort(), s.formula.terms()[0], s.formula.terms()[1]);
    Proof body = instantiate(t.kid(1), {{}, {}, {PathExpr::free(r)}});
    Derivation d = goal ? check(inner, body, *goal, child(pos, 1)) : infer(inner, body, child(pos, 1));
    Formula c = d.formula;
    Derivation out = node(Rule::IdElim, ctx, t, c, {std::move(s), std::move(d)});
    out.discharged = {r};
    return out;
  }

  const Signature& sig_;
  std::set<std::string> taken_;
};

}  // namespace

Derivation check(const Signature& sig, const Context& ctx, const Proof& term, const Formula& goal) {
  Engine e(sig, ctx, term);
  e.formula(ctx, goal, {});
  return e.check(ctx, term, goal, {});
}

Derivation infer_derivation(const Signature& sig, const Context& ctx, const Proof& term) {
  Engine e(sig, ctx, term);
  return e.infer(ctx, term, {});
}

Formula infer(const Signature& sig, const Context& ctx, const Proof& term) {
  return infer_derivation(sig, ctx, term).formula;
}

std::string check_term(const Signature& sig, const Context& ctx, const Term& t) {
  return term_sort(sig, ctx, t, {}, {});
}

void check_formula(const Signature& sig, const Context& ctx, const Formula& f) {
  std::vector<std::string> bound;
  formula_ok(sig, ctx, f, bound, {});
}

void check_context(const Signature& sig, const Context& ctx) {
  for (const auto& [name, sort] : ctx.vars())
    if (!sig.has_sort(sort)) throw TypeError(TypeErrorKind::SortError, {}, "individual '" + name + "' has unknown sort");
  for (const auto& [name, f] : ctx.hyps()) check_formula(sig, ctx, f);
  for (const auto& p : ctx.paths()) {
    if (check_term(sig, ctx, p.from) != p.sort || check_term(sig, ctx, p.to) != p.sort)
      throw TypeError(TypeErrorKind::SortError, {}, "path assumption '" + p.name + "' is ill-sorted");
  }
}

PathType path_type(const Signature& sig, const Context& ctx, const PathExpr& r) {
  Engine e(sig, ctx, Proof::idintro(r, Term::constant("", kIndividuals), Term::constant("", kIndividuals)));
  return e.path(ctx, r, {});
}

}  // namespace usum
