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

#include "usum/printer.hpp"

#include <set>
#include <vector>

#include "usum/binding.hpp"
#include "usum/context.hpp"

namespace usum {

namespace {

std::string join_position(const std::vector<int>& pos) {
  std::string s;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(pos[i]);
  }
  return s;
}

class Printer {
 public:
  explicit Printer(const PrintOptions& o) : opts_(o) {}

  // Names free in the value being printed; binders must avoid them.
  void reserve(const std::set<std::string>& names) { reserved_.insert(names.begin(), names.end()); }

  std::string term(const Term& t) const {
    switch (t.kind()) {
      case Term::Kind::Free:
      case Term::Kind::Constant:
        return t.name();
      case Term::Kind::Bound: {
        int i = t.index();
        if (i >= 0 && i < static_cast<int>(domains_.size())) return domains_[domains_.size() - 1 - i];
        return "#" + std::to_string(i);
      }
      case Term::Kind::Apply: {
        std::string s = t.name() + "(";
        for (std::size_t i = 0; i < t.args().size(); ++i) {
          if (i) s += ", ";
          s += term(t.args()[i]);
        }
        return s + ")";
      }
    }
    return {};
  }

  // Precedence levels: 0 quantifier, 1 ->, 2 \/, 3 /\, 4 ~ and atoms.
  // `tail` means nothing follows the printed text in the enclosing
  // expression, so a quantifier needs no parentheses.
  std::string formula(const Formula& f, int prec = 0, bool tail = true) {
    switch (f.kind()) {
      case Formula::Kind::Atom: {
        if (f.terms().empty()) return f.name();
        std::string s = f.name() + "(";
        for (std::size_t i = 0; i < f.terms().size(); ++i) {
          if (i) s += ", ";
          s += term(f.terms()[i]);
        }
        return s + ")";
      }
      case Formula::Kind::Id:
        return "Id(" + term(f.terms()[0]) + ", " + term(f.terms()[1]) + ")";
      case Formula::Kind::Bot:
        return opts_.unicode ? "⊥" : "False";
      case Formula::Kind::Impl:
        if (f.right().kind() == Formula::Kind::Bot)
          return (opts_.unicode ? "¬" : "~") + formula(f.left(), 4, tail);
        return binary(f, 1, opts_.unicode ? " → " : " -> ", 2, 1, prec, tail);
      case Formula::Kind::Disj:
        return binary(f, 2, opts_.unicode ? " ∨ " : " \\/ ", 2, 3, prec, tail);
      case Formula::Kind::Conj:
        return binary(f, 3, opts_.unicode ? " ∧ " : " /\\ ", 3, 4, prec, tail);
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        std::string x = bind_domain(f.name());
        std::string q = f.kind() == Formula::Kind::Forall ? (opts_.unicode ? "∀" : "forall ")
                                                          : (opts_.unicode ? "∃" : "exists ");
        std::string s = q + x + sort_suffix(f.sort()) + ". " + formula(f.body(), 0, true);
        unbind_domain();
        return (prec > 0 && !tail) ? "(" + s + ")" : s;
      }
    }
    return {};
  }

  std::string path(const Path& p) const {
    if (p.is_refl()) return "refl(" + term(p.source()) + ")";
    std::string s = "rw(" + term(p.source());
    for (const auto& step : p.steps()) s += ", " + rewrite_step(step);
    return s + ")";
  }

  std::string rewrite_step(const RewriteStep& step) const {
    std::string s = step.direction == Direction::Backward ? "-" : "";
    s += step.axiom;
    if (!step.position.empty()) s += "@" + join_position(step.position);
    if (!step.instantiation.empty()) {
      s += "{";
      for (std::size_t i = 0; i < step.instantiation.size(); ++i) {
        if (i) s += ", ";
        s += step.instantiation[i].first + " := " + term(step.instantiation[i].second);
      }
      s += "}";
    }
    return s;
  }

  std::string path_expr(const PathExpr& r) const {
    switch (r.kind()) {
      case PathExpr::Kind::Concrete: return path(r.path());
      case PathExpr::Kind::Free: return r.name();
      case PathExpr::Kind::Bound: {
        int i = r.index();
        if (i >= 0 && i < static_cast<int>(paths_.size())) return paths_[paths_.size() - 1 - i];
        return "#" + std::to_string(i);
      }
      case PathExpr::Kind::Inverse: return "inv(" + path_expr(r.kids()[0]) + ")";
      case PathExpr::Kind::Concat:
        return "trans(" + path_expr(r.kids()[0]) + ", " + path_expr(r.kids()[1]) + ")";
    }
    return {};
  }

  std::string proof(const Proof& t) {
    switch (t.kind()) {
      case Proof::Kind::Hyp: return t.name();
      case Proof::Kind::Var: {
        int i = t.index();
        if (i >= 0 && i < static_cast<int>(proofs_.size())) return proofs_[proofs_.size() - 1 - i];
        return "#" + std::to_string(i);
      }
      case Proof::Kind::Pair: return "pair(" + proof(t.kid(0)) + ", " + proof(t.kid(1)) + ")";
      case Proof::Kind::Fst: return "FST(" + proof(t.kid(0)) + ")";
      case Proof::Kind::Snd: return "SND(" + proof(t.kid(0)) + ")";
      case Proof::Kind::Inl:
      case Proof::Kind::Inr: {
        std::string s = t.kind() == Proof::Kind::Inl ? "inl" : "inr";
        if (t.annotation()) s += "[" + formula(*t.annotation()) + "]";
        return s + "(" + proof(t.kid(0)) + ")";
      }
      case Proof::Kind::Case: {
        std::string s = "CASE(" + proof(t.kid(0)) + ", ";
        std::string x = bind_proof(t.binders()[0]);
        s += x + ". " + proof(t.kid(1)) + ", ";
        unbind_proof();
        std::string y = bind_proof(t.binders()[1]);
        s += y + ". " + proof(t.kid(2)) + ")";
        unbind_proof();
        return s;
      }
      case Proof::Kind::Lam: {
        std::string ann;
        if (t.annotation()) ann = ":" + formula(*t.annotation(), 1, false);
        std::string x = bind_proof(t.binders()[0]);
        std::string s = (opts_.unicode ? "λ" : "lam ") + x + ann + ". " + proof(t.kid(0));
        unbind_proof();
        return s;
      }
      case Proof::Kind::App: return "APP(" + proof(t.kid(0)) + ", " + proof(t.kid(1)) + ")";
      case Proof::Kind::Gen: {
        std::string x = bind_domain(t.binders()[0]);
        std::string s = (opts_.unicode ? "Λ" : "gen ") + x + sort_suffix(t.sort()) + ". " + proof(t.kid(0));
        unbind_domain();
        return s;
      }
      case Proof::Kind::Extr: return "EXTR(" + proof(t.kid(0)) + ", " + term(t.terms()[0]) + ")";
      case Proof::Kind::Eps: {
        std::string witness = term(t.terms()[0]);
        std::string x = bind_domain(t.binders()[0]);
        std::string s = (opts_.unicode ? "ε" : "eps ") + x + sort_suffix(t.sort()) + ". (" + proof(t.kid(0)) +
                        ", " + witness + ")";
        if (t.annotation()) s += " : (" + formula(*t.annotation()) + ")";
        unbind_domain();
        return s;
      }
      case Proof::Kind::Inst: {
        std::string s = "INST(" + proof(t.kid(0)) + ", ";
        std::string g = bind_proof(t.binders()[0]);
        std::string x = bind_domain(t.binders()[1]);
        s += g + ". " + x + sort_suffix(t.sort()) + ". " + proof(t.kid(1)) + ")";
        unbind_domain();
        unbind_proof();
        return s;
      }
      case Proof::Kind::IdIntro:
        return "idp(" + path_expr(t.reason()) + ", " + term(t.terms()[0]) + ", " + term(t.terms()[1]) + ")";
      case Proof::Kind::Rewr: {
        std::string s = "REWR(" + proof(t.kid(0)) + ", ";
        std::string r = bind_path(t.binders()[0]);
        s += r + ". " + proof(t.kid(1)) + ")";
        unbind_path();
        return s;
      }
    }
    return {};
  }

 private:
  std::string binary(const Formula& f, int level, const char* op, int lprec, int rprec, int prec, bool tail) {
    bool parens = prec > level;
    bool inner_tail = parens || tail;
    std::string s = formula(f.left(), lprec, false) + op + formula(f.right(), rprec, inner_tail);
    return parens ? "(" + s + ")" : s;
  }

  std::string sort_suffix(const std::string& sort) const { return sort == kIndividuals ? "" : ":" + sort; }

  std::string fresh(const std::string& hint) {
    std::string base = hint.empty() ? "x" : hint;
    std::set<std::string> taken = reserved_;
    taken.insert(domains_.begin(), domains_.end());
    taken.insert(proofs_.begin(), proofs_.end());
    taken.insert(paths_.begin(), paths_.end());
    return fresh_name(base, taken);
  }

  std::string bind_domain(const std::string& hint) {
    domains_.push_back(fresh(hint));
    return domains_.back();
  }
  void unbind_domain() { domains_.pop_back(); }
  std::string bind_proof(const std::string& hint) {
    proofs_.push_back(fresh(hint));
    return proofs_.back();
  }
  void unbind_proof() { proofs_.pop_back(); }
  std::string bind_path(const std::string& hint) {
    paths_.push_back(fresh(hint));
    return paths_.back();
  }
  void unbind_path() { paths_.pop_back(); }

  PrintOptions opts_;
  std::set<std::string> reserved_;
  std::vector<std::string> domains_, proofs_, paths_;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> k = {"pair", "FST", "SND", "inl", "inr", "CASE", "lam", "APP",
                                          "gen", "EXTR", "eps", "INST", "idp", "REWR", "refl", "inv",
                                          "trans", "rw", "forall", "exists", "Id", "False"};
  return k;
}

void collect_term_names(const Term& t, std::set<std::string>& out) {
  if (t.kind() == Term::Kind::Free || t.kind() == Term::Kind::Constant || t.kind() == Term::Kind::Apply)
    out.insert(t.name());
  for (const auto& a : t.args()) collect_term_names(a, out);
}

void collect_formula_names(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == Formula::Kind::Atom) out.insert(f.name());
  for (const auto& t : f.terms()) collect_term_names(t, out);
  for (const auto& k : f.kids()) collect_formula_names(k, out);
}

void collect_path_names(const PathExpr& r, std::set<std::string>& out) {
  switch (r.kind()) {
    case PathExpr::Kind::Free: out.insert(r.name()); break;
    case PathExpr::Kind::Concrete:
      collect_term_names(r.path().source(), out);
      for (const auto& s : r.path().steps()) {
        out.insert(s.axiom);
        for (const auto& [v, t] : s.instantiation) collect_term_names(t, out);
      }
      break;
    default:
      for (const auto& k : r.kids()) collect_path_names(k, out);
  }
}

void collect_proof_names(const Proof& t, std::set<std::string>& out) {
  if (t.kind() == Proof::Kind::Hyp) out.insert(t.name());
  for (const auto& term : t.terms()) collect_term_names(term, out);
  if (t.annotation()) collect_formula_names(*t.annotation(), out);
  if (t.kind() == Proof::Kind::IdIntro) collect_path_names(t.reason(), out);
  for (const auto& k : t.kids()) collect_proof_names(k, out);
}

Printer make(const PrintOptions& o, std::set<std::string> names) {
  Printer p(o);
  names.insert(keywords().begin(), keywords().end());
  p.reserve(names);
  return p;
}

}  // namespace

std::string print(const Term& t, const PrintOptions& o) { return make(o, {}).term(t); }

std::string print(const Formula& f, const PrintOptions& o) {
  std::set<std::string> names;
  collect_formula_names(f, names);
  return make(o, std::move(names)).formula(f);
}

std::string print(const Proof& t, const PrintOptions& o) {
  std::set<std::string> names;
  collect_proof_names(t, names);
  return make(o, std::move(names)).proof(t);
}

std::string print(const PathExpr& r, const PrintOptions& o) { return make(o, {}).path_expr(r); }

std::string print(const Path& p, const PrintOptions& o) { return make(o, {}).path(p); }

std::string print(const RewriteStep& s) { return make({}, {}).rewrite_step(s); }

}  // namespace usum
