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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "usum/formula.hpp"
#include "usum/path.hpp"
#include "usum/term.hpp"

namespace usum {

/// Labelled natural-deduction proof term.
///
/// Binders are de Bruijn indices in three separate spaces: hypotheses
/// (lam, CASE, INST's proof binder), individuals (gen, eps, INST's domain
/// binder) and paths (REWR). Binder names are kept only as printing hints,
/// so structural equality is alpha-equivalence.
///
/// Children and binders per kind:
///   Pair(a, b) | Fst(p) | Snd(p) | Inl(a)[right] | Inr(b)[left]
///   Case(s, x.f, y.g)        kids {s, f, g}; f and g each bind one hypothesis
///   Lam(x[:A]. b)            kids {b}; b binds one hypothesis
///   App(p, a)
///   Gen(x:S. f)              kids {f}; f binds one individual
///   Extr(p, s)               terms {s}
///   Eps(x:S. f, s)[P]        kids {f}, terms {s}; f and P bind one individual
///   Inst(p, g.t:S. d)        kids {p, d}; d binds hypothesis g and individual t
///   IdIntro(r, u, v)         terms {u, v}, path r
///   Rewr(p, t. d)            kids {p, d}; d binds one path
class Proof {
 public:
  enum class Kind : std::uint8_t {
    Hyp, Var, Pair, Fst, Snd, Inl, Inr, Case, Lam, App, Gen, Extr, Eps, Inst, IdIntro, Rewr
  };

  static Proof hyp(std::string name);
  static Proof var(int index, std::string hint);
  static Proof pair(Proof a, Proof b);
  static Proof fst(Proof p);
  static Proof snd(Proof p);
  static Proof inl(Proof a, std::optional<Formula> right = std::nullopt);
  static Proof inr(Proof b, std::optional<Formula> left = std::nullopt);
  static Proof case_of(Proof scrutinee, std::string x, Proof left, std::string y, Proof right);
  static Proof lam(std::string x, std::optional<Formula> antecedent, Proof body);
  static Proof app(Proof fn, Proof arg);
  static Proof gen(std::string x, std::string sort, Proof body);
  static Proof extr(Proof p, Term witness);
  static Proof eps(std::string x, std::string sort, Proof body, Term witness,
                   std::optional<Formula> body_formula = std::nullopt);
  static Proof inst(Proof scrutinee, std::string g, std::string t, std::string sort, Proof body);
  static Proof idintro(PathExpr reason, Term u, Term v);
  static Proof rewr(Proof scrutinee, std::string t, Proof body);

  Kind kind() const noexcept { return node_->kind; }
  /// Hypothesis name (Hyp) or printing hint (Var).
  const std::string& name() const noexcept { return node_->name; }
  int index() const noexcept { return node_->index; }
  const std::vector<std::string>& binders() const noexcept { return node_->binders; }
  const std::string& sort() const noexcept { return node_->sort; }
  const std::vector<Proof>& kids() const noexcept { return node_->kids; }
  const Proof& kid(std::size_t i) const { return node_->kids.at(i); }
  const std::vector<Term>& terms() const noexcept { return node_->terms; }
  const std::optional<Formula>& annotation() const noexcept { return node_->annotation; }
  const PathExpr& reason() const { return *node_->reason; }
  std::size_t size() const noexcept { return node_->size; }

  bool is_constructor() const noexcept;
  bool is_destructor() const noexcept;
  bool is_variable() const noexcept { return kind() == Kind::Hyp || kind() == Kind::Var; }

  /// Same kind and binders with replaced components.
  Proof rebuild(std::vector<Proof> kids, std::vector<Term> terms, std::optional<Formula> annotation,
                std::optional<PathExpr> reason) const;
  Proof with_kids(std::vector<Proof> kids) const;

  friend bool operator==(const Proof& a, const Proof& b);
  friend bool operator!=(const Proof& a, const Proof& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    int index = 0;
    std::vector<std::string> binders;
    std::string sort;
    std::vector<Proof> kids;
    std::vector<Term> terms;
    std::optional<Formula> annotation;
    std::optional<PathExpr> reason;
    std::size_t size = 1;
  };
  static Proof make(Node node);
  explicit Proof(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::string_view kind_name(Proof::Kind k);

/// Binders a kind introduces above child `i`: {hypotheses, individuals, paths}.
struct BinderCount {
  int proof = 0;
  int domain = 0;
  int path = 0;
};
BinderCount binders_above(Proof::Kind kind, std::size_t child);

/// Address of a subterm: child indices from the root.
using Position = std::vector<int>;

std::optional<Proof> subterm_at(const Proof& t, const Position& pos);
Proof replace_at(const Proof& t, const Position& pos, const Proof& replacement);

}  // namespace usum
