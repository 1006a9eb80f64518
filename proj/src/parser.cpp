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

#include "usum/parser.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "usum/binding.hpp"
#include "usum/lexer.hpp"
#include "usum/printer.hpp"

namespace usum {

namespace {

std::string format_error(int line, int col, const std::set<std::string>& expected, const std::string& message) {
  std::string s = std::to_string(line) + ":" + std::to_string(col) + ": " + message;
  if (!expected.empty()) {
    s += "; expected ";
    if (expected.size() > 1) s += "one of ";
    bool first = true;
    for (const auto& e : expected) {
      if (!first) s += ", ";
      s += e;
      first = false;
    }
  }
  return s;
}

const std::set<std::string>& reserved() {
  static const std::set<std::string> r = {"pair", "FST", "SND", "inl",   "inr",   "CASE", "lam",    "APP",
                                          "gen",  "EXTR", "eps", "INST",  "idp",   "REWR", "refl",   "inv",
                                          "trans", "rw",  "forall", "exists", "Id", "False"};
  return r;
}

}  // namespace

ParseError::ParseError(int line, int col, std::set<std::string> expected, const std::string& message)
    : Error(format_error(line, col, expected, message)),
      line_(line),
      col_(col),
      expected_(std::move(expected)),
      detail_(message) {}

const TheoremEntry* Document::theorem(const std::string& name) const {
  for (const auto& t : theorems)
    if (t.name == name) return &t;
  return nullptr;
}

const ProofEntry* Document::proof(const std::string& name) const {
  for (const auto& p : proofs)
    if (p.name == name) return &p;
  return nullptr;
}

const StructureEntry* Document::structure(const std::string& name) const {
  for (const auto& s : structures)
    if (s.name == name) return &s;
  return nullptr;
}

namespace {

struct RawItem {
  std::vector<Token> args;  // tuple, or a single element
  bool tuple = false;
  std::optional<Token> value;  // function tables
};

struct RawEntry {
  Token name;
  std::optional<Token> atom;  // single element, true or false
  std::optional<std::vector<RawItem>> set;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, Signature& sig, Context& ctx)
      : toks_(std::move(tokens)), sig_(sig), ctx_(ctx) {}

  bool done() {
    expected_.insert("end of input");
    return peek().kind == Token::Kind::End;
  }

  void finish() {
    if (!done()) fail("unexpected " + describe(peek()));
  }

  // ---- tokens

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }

  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    expected_.clear();
    return t;
  }

  bool at(const std::string& text) {
    expected_.insert("'" + text + "'");
    const Token& t = peek();
    return (t.kind == Token::Kind::Symbol || t.kind == Token::Kind::Ident) && t.text == text;
  }

  bool accept(const std::string& text) {
    if (!at(text)) return false;
    next();
    return true;
  }

  Token expect(const std::string& text) {
    if (!at(text)) fail("unexpected " + describe(peek()));
    return next();
  }

  [[noreturn]] void fail(const std::string& message) { fail_at(peek(), message); }

  [[noreturn]] void fail_at(const Token& t, const std::string& message) {
    throw ParseError(t.line, t.col, expected_, message);
  }

  [[noreturn]] void error_at(const Token& t, const std::string& message) {
    throw ParseError(t.line, t.col, {}, message);
  }

  Token name(const std::string& what) {
    expected_.insert(what);
    const Token& t = peek();
    if (t.kind != Token::Kind::Ident || reserved().count(t.text)) fail("unexpected " + describe(t));
    return next();
  }

  Token element() {
    expected_.insert("element");
    const Token& t = peek();
    if (t.kind != Token::Kind::Ident && t.kind != Token::Kind::Number) fail("unexpected " + describe(t));
    return next();
  }

  int number() {
    expected_.insert("number");
    if (peek().kind != Token::Kind::Number) fail("unexpected " + describe(peek()));
    return std::stoi(next().text);
  }

  std::string sort_name() {
    Token t = name("sort");
    if (!sig_.has_sort(t.text)) error_at(t, "unknown sort '" + t.text + "'");
    return t.text;
  }

  // ---- terms

  Term term() {
    Token t = name("term");
    if (accept("(")) {
      std::vector<Term> args;
      if (!at(")")) {
        do args.push_back(term());
        while (accept(","));
      }
      expect(")");
      const FunctionDecl* f = sig_.function(t.text);
      if (!f) error_at(t, "unknown function '" + t.text + "'");
      if (f->args.size() != args.size())
        error_at(t, "'" + t.text + "' takes " + std::to_string(f->args.size()) + " arguments");
      for (std::size_t i = 0; i < args.size(); ++i)
        if (args[i].sort() != f->args[i])
          error_at(t, "argument " + std::to_string(i + 1) + " of '" + t.text + "' must have sort " + f->args[i]);
      return Term::apply(t.text, std::move(args), f->result);
    }
    for (std::size_t i = domains_.size(); i-- > 0;)
      if (domains_[i].first == t.text)
        return Term::bound(static_cast<int>(domains_.size() - 1 - i), t.text, domains_[i].second);
    if (axiom_vars_)
      for (const auto& [v, s] : *axiom_vars_)
        if (v == t.text) return Term::free(v, s);
    if (auto s = ctx_.var_sort(t.text)) return Term::free(t.text, *s);
    if (auto s = sig_.constant_sort(t.text)) return Term::constant(t.text, *s);
    if (sig_.function(t.text)) error_at(t, "function '" + t.text + "' needs arguments");
    error_at(t, "unknown individual '" + t.text + "'");
  }

  // ---- formulas

  Formula formula() {
    if (at("forall") || at("exists")) return quantifier();
    Formula left = disjunction();
    if (accept("->")) return Formula::impl(left, formula());
    return left;
  }

  Formula quantifier() {
    bool all = next().text == "forall";
    std::vector<std::pair<std::string, std::string>> binders;
    do {
      std::string x = name("variable").text;
      std::string s = accept(":") ? sort_name() : kIndividuals;
      binders.emplace_back(x, s);
      domains_.emplace_back(x, s);
    } while (accept(","));
    expect(".");
    Formula body = formula();
    for (std::size_t i = binders.size(); i-- > 0;) {
      domains_.pop_back();
      body = all ? Formula::forall(binders[i].first, binders[i].second, body)
                 : Formula::exists(binders[i].first, binders[i].second, body);
    }
    return body;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept("\\/")) f = Formula::disj(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept("/\\")) f = Formula::conj(f, unary());
    return f;
  }

  Formula unary() {
    if (accept("~")) return Formula::negation(unary());
    if (at("forall") || at("exists")) return quantifier();
    return atomic();
  }

  Formula atomic() {
    if (accept("False")) return Formula::bottom();
    if (accept("(")) {
      Formula f = formula();
      expect(")");
      return f;
    }
    if (at("Id")) {
      Token t = next();
      expect("(");
      Term u = term();
      expect(",");
      Term v = term();
      expect(")");
      if (u.sort() != v.sort()) error_at(t, "identity between sorts " + u.sort() + " and " + v.sort());
      return Formula::identity(u.sort(), u, v);
    }
    Token t = name("formula");
    const auto* args = sig_.predicate(t.text);
    if (!args) error_at(t, "unknown predicate '" + t.text + "'");
    std::vector<Term> terms;
    if (accept("(")) {
      if (!at(")")) {
        do terms.push_back(term());
        while (accept(","));
      }
      expect(")");
    }
    if (terms.size() != args->size())
      error_at(t, "'" + t.text + "' takes " + std::to_string(args->size()) + " arguments");
    for (std::size_t i = 0; i < terms.size(); ++i)
      if (terms[i].sort() != (*args)[i])
        error_at(t, "argument " + std::to_string(i + 1) + " of '" + t.text + "' must have sort " + (*args)[i]);
    return Formula::atom(t.text, std::move(terms));
  }

  // ---- paths

  PathExpr path() {
    if (accept("refl")) {
      expect("(");
      Term u = term();
      expect(")");
      return PathExpr::concrete(Path::refl(u));
    }
    if (accept("inv")) {
      expect("(");
      PathExpr p = path();
      expect(")");
      return PathExpr::inverse(p);
    }
    if (accept("trans")) {
      expect("(");
      PathExpr p = path();
      expect(",");
      PathExpr q = path();
      expect(")");
      return PathExpr::concat(p, q);
    }
    if (accept("rw")) {
      expect("(");
      Term source = term();
      std::vector<RewriteStep> steps;
      while (accept(",")) steps.push_back(rewrite_step());
      expect(")");
      complete(source, steps);
      return PathExpr::concrete(Path(source, std::move(steps)));
    }
    Token t = name("path");
    for (std::size_t i = paths_.size(); i-- > 0;)
      if (paths_[i] == t.text) return PathExpr::bound(static_cast<int>(paths_.size() - 1 - i), t.text);
    return PathExpr::free(t.text);
  }

  RewriteStep rewrite_step() {
    RewriteStep s;
    if (accept("-")) s.direction = Direction::Backward;
    Token ax = name("axiom");
    const Axiom* a = sig_.axiom(ax.text);
    if (!a) error_at(ax, "unknown axiom '" + ax.text + "'");
    s.axiom = ax.text;
    if (accept("@")) {
      s.position.push_back(number());
      while (accept(".")) s.position.push_back(number());
    }
    if (accept("{")) {
      if (!at("}")) {
        do {
          Token v = name("axiom variable");
          auto it = std::find_if(a->vars.begin(), a->vars.end(), [&](const auto& p) { return p.first == v.text; });
          if (it == a->vars.end()) error_at(v, "axiom '" + a->name + "' has no variable '" + v.text + "'");
          expect(":=");
          Term value = term();
          if (value.sort() != it->second) error_at(v, "'" + v.text + "' must be instantiated at sort " + it->second);
          s.instantiation.emplace_back(v.text, value);
        } while (accept(","));
      }
      expect("}");
    }
    return s;
  }

  // Fill omitted instantiations by matching, then list them in the
  // axiom's variable order.
  void complete(const Term& source, std::vector<RewriteStep>& steps) {
    std::optional<Term> cur = source;
    for (auto& s : steps) {
      const Axiom* a = sig_.axiom(s.axiom);
      if (cur) {
        auto sub = subterm_at(*cur, s.position);
        if (sub) {
          auto inst = s.instantiation;
          const Term& side = s.direction == Direction::Forward ? a->lhs : a->rhs;
          if (match_pattern(side, *sub, inst)) s.instantiation = inst;
        }
      }
      std::vector<std::pair<std::string, Term>> ordered;
      for (const auto& [v, sort] : a->vars)
        for (const auto& p : s.instantiation)
          if (p.first == v) {
            ordered.push_back(p);
            break;
          }
      if (ordered.size() == s.instantiation.size()) s.instantiation = std::move(ordered);
      if (cur) {
        try {
          cur = apply_step(sig_, *cur, s);
        } catch (const Error&) {
          cur.reset();
        }
      }
    }
  }

  // ---- proofs

  Proof proof() {
    if (accept("pair")) {
      expect("(");
      return pair_tail(")");
    }
    if (accept("<")) return pair_tail(">");
    if (accept("FST")) return Proof::fst(parenthesized());
    if (accept("SND")) return Proof::snd(parenthesized());
    if (at("inl") || at("inr")) {
      bool left = next().text == "inl";
      std::optional<Formula> ann;
      if (accept("[")) {
        ann = formula();
        expect("]");
      }
      Proof a = parenthesized();
      return left ? Proof::inl(a, ann) : Proof::inr(a, ann);
    }
    if (accept("CASE")) {
      expect("(");
      Proof s = proof();
      expect(",");
      std::string x = name("binder").text;
      expect(".");
      proofs_.push_back(x);
      Proof f = proof();
      proofs_.pop_back();
      expect(",");
      std::string y = name("binder").text;
      expect(".");
      proofs_.push_back(y);
      Proof g = proof();
      proofs_.pop_back();
      expect(")");
      return Proof::case_of(s, x, f, y, g);
    }
    if (accept("lam")) {
      std::string x = name("binder").text;
      std::optional<Formula> ann;
      if (accept(":")) ann = formula();
      expect(".");
      proofs_.push_back(x);
      Proof body = proof();
      proofs_.pop_back();
      return Proof::lam(x, ann, body);
    }
    if (accept("APP")) {
      expect("(");
      Proof f = proof();
      expect(",");
      Proof a = proof();
      expect(")");
      return Proof::app(f, a);
    }
    if (accept("gen")) {
      std::string x = name("binder").text;
      std::string s = accept(":") ? sort_name() : kIndividuals;
      expect(".");
      domains_.emplace_back(x, s);
      Proof body = proof();
      domains_.pop_back();
      return Proof::gen(x, s, body);
    }
    if (accept("EXTR")) {
      expect("(");
      Proof p = proof();
      expect(",");
      Term s = term();
      expect(")");
      return Proof::extr(p, s);
    }
    if (accept("eps")) {
      std::string x = name("binder").text;
      std::string s = accept(":") ? sort_name() : kIndividuals;
      expect(".");
      expect("(");
      domains_.emplace_back(x, s);
      Proof body = proof();
      domains_.pop_back();
      expect(",");
      Term w = term();
      expect(")");
      std::optional<Formula> ann;
      if (accept(":")) {
        domains_.emplace_back(x, s);
        ann = formula();
        domains_.pop_back();
      }
      return Proof::eps(x, s, body, w, ann);
    }
    if (accept("INST")) {
      expect("(");
      Proof s = proof();
      expect(",");
      std::string g = name("binder").text;
      expect(".");
      std::string t = name("binder").text;
      std::string sort = accept(":") ? sort_name() : kIndividuals;
      expect(".");
      proofs_.push_back(g);
      domains_.emplace_back(t, sort);
      Proof d = proof();
      domains_.pop_back();
      proofs_.pop_back();
      expect(")");
      return Proof::inst(s, g, t, sort, d);
    }
    if (accept("idp")) {
      expect("(");
      PathExpr r = path();
      expect(",");
      Term u = term();
      expect(",");
      Term v = term();
      expect(")");
      return Proof::idintro(r, u, v);
    }
    if (accept("REWR")) {
      expect("(");
      Proof s = proof();
      expect(",");
      std::string t = name("binder").text;
      expect(".");
      paths_.push_back(t);
      Proof d = proof();
      paths_.pop_back();
      expect(")");
      return Proof::rewr(s, t, d);
    }
    if (accept("(")) {
      Proof p = proof();
      expect(")");
      return p;
    }
    Token t = name("proof term");
    for (std::size_t i = proofs_.size(); i-- > 0;)
      if (proofs_[i] == t.text) return Proof::var(static_cast<int>(proofs_.size() - 1 - i), t.text);
    return Proof::hyp(t.text);
  }

  Proof pair_tail(const std::string& close) {
    Proof a = proof();
    expect(",");
    Proof b = proof();
    expect(close);
    return Proof::pair(a, b);
  }

  Proof parenthesized() {
    expect("(");
    Proof p = proof();
    expect(")");
    return p;
  }

  // ---- documents

  void document(Document& doc) {
    std::set<std::string> seen;
    while (!done()) {
      Token open = expect("[");
      Token sec = name("section name");
      static const std::set<std::string> sections = {"signature", "context", "theorems", "proofs", "structures"};
      if (!sections.count(sec.text)) error_at(sec, "unknown section '" + sec.text + "'");
      if (!seen.insert(sec.text).second) error_at(sec, "duplicate section '" + sec.text + "'");
      expect("]");
      while (!done() && !at("[")) {
        if (sec.text == "signature") signature_entry();
        else if (sec.text == "context") context_entry();
        else if (sec.text == "theorems") theorem_entry(doc);
        else if (sec.text == "proofs") proof_entry(doc);
        else structure_entry(doc);
      }
    }
    for (const auto& p : doc.proofs) {
      const TheoremEntry* t = doc.theorem(p.name);
      if (!t) throw ParseError(p.pos.line, p.pos.col, {}, "proof '" + p.name + "' has no theorem");
      if (!t->expects_proof)
        throw ParseError(p.pos.line, p.pos.col, {}, "'" + p.name + "' is declared as a formula, not a theorem");
    }
  }

  template <typename F>
  void guarded(const Token& at, F&& body) {
    try {
      body();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      error_at(at, e.what());
    }
  }

  std::vector<Token> names(const std::string& what) {
    std::vector<Token> out;
    do out.push_back(name(what));
    while (accept(","));
    return out;
  }

  std::vector<std::string> sort_list() {
    std::vector<std::string> out;
    do out.push_back(sort_name());
    while (accept(","));
    return out;
  }

  void signature_entry() {
    const Token& kw = peek();
    if (accept("sort")) {
      // D is always present; declaring it is allowed.
      for (const auto& t : names("sort"))
        if (t.text != kIndividuals) guarded(t, [&] { sig_.add_sort(t.text); });
      return;
    }
    if (accept("const")) {
      auto ts = names("constant");
      expect(":");
      std::string s = sort_name();
      for (const auto& t : ts) guarded(t, [&] { sig_.add_constant(t.text, s); });
      return;
    }
    if (accept("func")) {
      Token f = name("function");
      expect(":");
      auto args = sort_list();
      std::string result;
      if (accept("->")) {
        result = sort_name();
      } else {
        if (args.size() != 1) fail("unexpected " + describe(peek()));
        result = args[0];
        args.clear();
      }
      guarded(f, [&] { sig_.add_function(f.text, args, result); });
      return;
    }
    if (accept("pred")) {
      auto ts = names("predicate");
      std::vector<std::string> args;
      if (accept(":")) args = sort_list();
      for (const auto& t : ts) guarded(t, [&] { sig_.add_predicate(t.text, args); });
      return;
    }
    if (accept("axiom")) {
      Token n = name("axiom");
      std::vector<std::pair<std::string, std::string>> vars;
      if (accept("(")) {
        if (!at(")")) {
          do {
            std::string v = name("variable").text;
            std::string s = accept(":") ? sort_name() : kIndividuals;
            vars.emplace_back(v, s);
          } while (accept(","));
        }
        expect(")");
      }
      expect(":");
      axiom_vars_ = &vars;
      Term lhs = term();
      expect("=");
      Term rhs = term();
      axiom_vars_ = nullptr;
      guarded(n, [&] { sig_.add_axiom(Axiom{n.text, vars, lhs, rhs}); });
      return;
    }
    (void)kw;
    expected_.insert("'['");
    fail("unexpected " + describe(peek()));
  }

  void context_entry() {
    if (accept("var")) {
      auto ts = names("variable");
      expect(":");
      std::string s = sort_name();
      for (const auto& t : ts) guarded(t, [&] { ctx_.add_var(t.text, s); });
      return;
    }
    if (accept("hyp")) {
      Token h = name("hypothesis");
      expect(":");
      Formula f = formula();
      guarded(h, [&] { ctx_.add_hyp(h.text, f); });
      return;
    }
    if (accept("path")) {
      Token r = name("path");
      expect(":");
      Term u = term();
      expect("=");
      Term v = term();
      if (u.sort() != v.sort()) error_at(r, "path between sorts " + u.sort() + " and " + v.sort());
      guarded(r, [&] { ctx_.add_path(r.text, u.sort(), u, v); });
      return;
    }
    expected_.insert("'['");
    fail("unexpected " + describe(peek()));
  }

  void theorem_entry(Document& doc) {
    bool expects = true;
    if (accept("theorem")) {
    } else if (accept("formula")) {
      expects = false;
    } else {
      expected_.insert("'['");
      fail("unexpected " + describe(peek()));
    }
    Token n = name("theorem name");
    if (doc.theorem(n.text)) error_at(n, "duplicate theorem '" + n.text + "'");
    expect(":");
    Formula f = formula();
    doc.theorems.push_back({n.text, f, expects, {n.line, n.col}});
  }

  void proof_entry(Document& doc) {
    if (!accept("proof")) {
      expected_.insert("'['");
      fail("unexpected " + describe(peek()));
    }
    Token n = name("theorem name");
    if (doc.proof(n.text)) error_at(n, "duplicate proof '" + n.text + "'");
    expect("=");
    Proof p = proof();
    doc.proofs.push_back({n.text, p, {n.line, n.col}});
  }

  void structure_entry(Document& doc) {
    if (!accept("structure")) {
      expected_.insert("'['");
      fail("unexpected " + describe(peek()));
    }
    Token n = name("structure name");
    if (doc.structure(n.text)) error_at(n, "duplicate structure '" + n.text + "'");
    expect("{");
    std::vector<RawEntry> entries;
    while (!accept("}")) {
      RawEntry e{name("symbol"), std::nullopt, std::nullopt};
      expect("=");
      if (accept("{")) {
        std::vector<RawItem> items;
        if (!at("}")) {
          do {
            RawItem item;
            if (accept("(")) {
              item.tuple = true;
              if (!at(")")) {
                do item.args.push_back(element());
                while (accept(","));
              }
              expect(")");
            } else {
              item.args.push_back(element());
            }
            if (accept("->")) item.value = element();
            items.push_back(std::move(item));
          } while (accept(","));
        }
        expect("}");
        e.set = std::move(items);
      } else {
        e.atom = element();
      }
      accept(";");
      accept(",");
      entries.push_back(std::move(e));
    }
    Structure m = resolve(entries);
    try {
      m.validate(sig_);
    } catch (const Error& e) {
      error_at(n, "structure '" + n.text + "': " + e.what());
    }
    doc.structures.push_back({n.text, m, {n.line, n.col}});
  }

  Structure resolve(const std::vector<RawEntry>& entries) {
    Structure m;
    std::set<std::string> done;
    for (const auto& e : entries) {
      if (!sig_.has_sort(e.name.text)) continue;
      if (!e.set) error_at(e.name, "a carrier is written as a set of elements");
      std::vector<std::string> labels;
      for (const auto& item : *e.set) {
        if (item.tuple || item.value || item.args.size() != 1) error_at(e.name, "carrier elements must be plain");
        labels.push_back(item.args[0].text);
      }
      guarded(e.name, [&] { m.set_carrier(e.name.text, labels); });
      done.insert(e.name.text);
    }
    auto elem = [&](const Token& t, const std::string& sort) {
      int i = m.element(sort, t.text);
      if (i < 0) error_at(t, "'" + t.text + "' is not an element of " + sort);
      return i;
    };
    auto tuple = [&](const RawItem& item, const std::vector<std::string>& sorts, const Token& where) {
      if (item.args.size() != sorts.size())
        error_at(where, "'" + where.text + "' expects tuples of length " + std::to_string(sorts.size()));
      std::vector<int> out;
      for (std::size_t i = 0; i < sorts.size(); ++i) out.push_back(elem(item.args[i], sorts[i]));
      return out;
    };
    for (const auto& e : entries) {
      const std::string& sym = e.name.text;
      if (sig_.has_sort(sym)) continue;
      if (!done.insert(sym).second) error_at(e.name, "'" + sym + "' is interpreted twice");
      if (auto s = sig_.constant_sort(sym)) {
        if (!e.atom) error_at(e.name, "constant '" + sym + "' takes a single element");
        m.set_constant(sym, elem(*e.atom, *s));
      } else if (const FunctionDecl* f = sig_.function(sym)) {
        if (!e.set) error_at(e.name, "function '" + sym + "' takes a table");
        std::map<std::vector<int>, int> table;
        for (const auto& item : *e.set) {
          if (!item.value) error_at(e.name, "function entries are written 'args -> value'");
          auto args = tuple(item, f->args, e.name);
          if (table.count(args)) error_at(e.name, "function '" + sym + "' has a repeated entry");
          table[args] = elem(*item.value, f->result);
        }
        m.set_function(sym, std::move(table));
      } else if (const auto* args = sig_.predicate(sym)) {
        std::set<std::vector<int>> rel;
        if (e.atom) {
          if (!args->empty() || (e.atom->text != "true" && e.atom->text != "false"))
            error_at(e.name, "predicate '" + sym + "' takes a set of tuples");
          if (e.atom->text == "true") rel.insert({});
        } else {
          for (const auto& item : *e.set) {
            if (item.value) error_at(e.name, "predicate entries are tuples");
            rel.insert(tuple(item, *args, e.name));
          }
        }
        m.set_relation(sym, std::move(rel));
      } else {
        error_at(e.name, "unknown symbol '" + sym + "'");
      }
    }
    return m;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::set<std::string> expected_;
  Signature& sig_;
  Context& ctx_;
  std::vector<std::pair<std::string, std::string>> domains_;
  std::vector<std::string> proofs_;
  std::vector<std::string> paths_;
  const std::vector<std::pair<std::string, std::string>>* axiom_vars_ = nullptr;
};

template <typename T, typename F>
T parse_value(std::string_view text, const Signature& sig, const Context& ctx, F&& f) {
  Signature s = sig;
  Context c = ctx;
  Parser p(tokenize(text), s, c);
  T value = f(p);
  p.finish();
  return value;
}

}  // namespace

Document parse_document(std::string_view text) {
  // The header is the first line that is neither blank nor a comment.
  std::string body(text);
  std::size_t start = 0;
  int line = 1;
  bool found = false;
  while (start <= body.size()) {
    std::size_t end = body.find('\n', start);
    if (end == std::string::npos) end = body.size();
    std::string l = body.substr(start, end - start);
    std::size_t a = l.find_first_not_of(" \t\r");
    if (a != std::string::npos && l[a] != '#') {
      std::size_t b = l.find_last_not_of(" \t\r");
      if (l.substr(a, b - a + 1) != kFormatTag)
        throw ParseError(line, static_cast<int>(a) + 1, {std::string(kFormatTag)}, "missing format header");
      std::fill(body.begin() + static_cast<long>(start), body.begin() + static_cast<long>(end), ' ');
      found = true;
      break;
    }
    start = end + 1;
    ++line;
  }
  if (!found) throw ParseError(line, 1, {std::string(kFormatTag)}, "missing format header");
  Document doc;
  Parser p(tokenize(body), *doc.signature, doc.context);
  p.document(doc);
  return doc;
}

Term parse_term(std::string_view text, const Signature& sig, const Context& ctx) {
  return parse_value<Term>(text, sig, ctx, [](Parser& p) { return p.term(); });
}

Formula parse_formula(std::string_view text, const Signature& sig, const Context& ctx) {
  return parse_value<Formula>(text, sig, ctx, [](Parser& p) { return p.formula(); });
}

Proof parse_proof(std::string_view text, const Signature& sig, const Context& ctx) {
  return parse_value<Proof>(text, sig, ctx, [](Parser& p) { return p.proof(); });
}

PathExpr parse_path(std::string_view text, const Signature& sig, const Context& ctx) {
  return parse_value<PathExpr>(text, sig, ctx, [](Parser& p) { return p.path(); });
}

namespace {

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::string tuple_text(const Structure& m, const std::vector<std::string>& sorts, const std::vector<int>& t,
                       bool parens) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < t.size(); ++i) parts.push_back(m.labels(sorts[i])[t[i]]);
  if (!parens && parts.size() == 1) return parts[0];
  return "(" + join(parts, ", ") + ")";
}

}  // namespace

std::string print_document(const Document& doc) {
  const Signature& sig = *doc.signature;
  std::ostringstream out;
  out << kFormatTag << "\n\n[signature]\n";
  for (const auto& s : sig.sorts())
    if (s != kIndividuals) out << "sort " << s << "\n";
  for (const auto& c : sig.constants_of(kIndividuals)) out << "const " << c.name() << " : " << c.sort() << "\n";
  for (const auto& s : sig.sorts())
    if (s != kIndividuals)
      for (const auto& c : sig.constants_of(s)) out << "const " << c.name() << " : " << c.sort() << "\n";
  for (const auto& [name, f] : sig.functions())
    out << "func " << name << " : " << join(f.args, ", ") << " -> " << f.result << "\n";
  for (const auto& [name, args] : sig.predicates()) {
    out << "pred " << name;
    if (!args.empty()) out << " : " << join(args, ", ");
    out << "\n";
  }
  for (const auto& ax : sig.axioms()) {
    out << "axiom " << ax.name;
    if (!ax.vars.empty()) {
      std::vector<std::string> vs;
      for (const auto& [v, s] : ax.vars) vs.push_back(v + ":" + s);
      out << " (" << join(vs, ", ") << ")";
    }
    out << " : " << print(ax.lhs) << " = " << print(ax.rhs) << "\n";
  }
  out << "\n[context]\n";
  for (const auto& [v, s] : doc.context.vars()) out << "var " << v << " : " << s << "\n";
  for (const auto& [h, f] : doc.context.hyps()) out << "hyp " << h << " : " << print(f) << "\n";
  for (const auto& p : doc.context.paths())
    out << "path " << p.name << " : " << print(p.from) << " = " << print(p.to) << "\n";
  out << "\n[theorems]\n";
  for (const auto& t : doc.theorems)
    out << (t.expects_proof ? "theorem " : "formula ") << t.name << " : " << print(t.formula) << "\n";
  out << "\n[proofs]\n";
  for (const auto& p : doc.proofs) out << "proof " << p.name << " = " << print(p.term) << "\n";
  out << "\n[structures]\n";
  for (const auto& se : doc.structures) {
    const Structure& m = se.structure;
    out << "structure " << se.name << " {\n";
    for (const auto& s : sig.sorts()) out << "  " << s << " = {" << join(m.labels(s), ", ") << "}\n";
    for (const auto& [c, s] : sig.constants()) out << "  " << c << " = " << m.labels(s)[m.constant(c)] << "\n";
    for (const auto& [name, f] : sig.functions()) {
      std::vector<std::string> items;
      for (const auto& [args, value] : m.functions().at(name))
        items.push_back(tuple_text(m, f.args, args, false) + " -> " + m.labels(f.result)[value]);
      out << "  " << name << " = {" << join(items, ", ") << "}\n";
    }
    for (const auto& [name, args] : sig.predicates()) {
      const auto& rel = m.relations().at(name);
      if (args.empty()) {
        out << "  " << name << " = " << (rel.empty() ? "false" : "true") << "\n";
        continue;
      }
      std::vector<std::string> items;
      for (const auto& t : rel) items.push_back(tuple_text(m, args, t, false));
      out << "  " << name << " = {" << join(items, ", ") << "}\n";
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace usum
