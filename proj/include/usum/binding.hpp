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

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "usum/formula.hpp"
#include "usum/path.hpp"
#include "usum/proof.hpp"
#include "usum/term.hpp"

namespace usum {

/// Number of binders crossed in each index space.
struct Depth {
  int proof = 0;
  int domain = 0;
  int path = 0;

  Depth operator+(const BinderCount& b) const { return {proof + b.proof, domain + b.domain, path + b.path}; }
};

/// Callbacks on variable occurrences; nullopt keeps the occurrence.
/// `proof` sees Hyp and Var nodes, `domain` Free and Bound term leaves,
/// `path` Free and Bound path variables.
struct VarMap {
  std::function<std::optional<Proof>(const Proof&, const Depth&)> proof;
  std::function<std::optional<Term>(const Term&, const Depth&)> domain;
  std::function<std::optional<PathExpr>(const PathExpr&, const Depth&)> path;
};

Term map_vars(const Term& t, const VarMap& m, const Depth& d = {});
Formula map_vars(const Formula& f, const VarMap& m, const Depth& d = {});
Path map_vars(const Path& p, const VarMap& m, const Depth& d = {});
PathExpr map_vars(const PathExpr& p, const VarMap& m, const Depth& d = {});
Proof map_vars(const Proof& t, const VarMap& m, const Depth& d = {});

/// Add `by` to every dangling index (one not bound inside the value).
Term shift(const Term& t, const Depth& by);
Formula shift(const Formula& f, const Depth& by);
PathExpr shift(const PathExpr& p, const Depth& by);
Proof shift(const Proof& t, const Depth& by);

/// Values for the innermost binders of a body, index 0 innermost. Values
/// live outside the body; the result has those binders removed.
struct Instantiation {
  std::vector<Proof> proofs;
  std::vector<Term> domains;
  std::vector<PathExpr> paths;
};

Proof instantiate(const Proof& body, const Instantiation& values);
Formula instantiate(const Formula& body, const Term& value);
Term instantiate(const Term& body, const Term& value);

/// Replace a free name by bound index 0 (adjusted under inner binders),
/// producing a binder body.
Proof abstract_hyp(const Proof& body, const std::string& name);
Proof abstract_var(const Proof& body, const std::string& name);
Formula abstract_var(const Formula& body, const std::string& name);
Proof abstract_path(const Proof& body, const std::string& name);

/// Capture-avoiding substitution of a free hypothesis.
Proof substitute_proof(const Proof& body, const std::string& var, const Proof& replacement);

/// Capture-avoiding substitution of a free individual. Throws SortError if an
/// occurrence of `var` has a sort different from the replacement's.
Proof substitute_domain(const Proof& target, const std::string& var, const Term& replacement);
Formula substitute_domain(const Formula& target, const std::string& var, const Term& replacement);
Term substitute_domain(const Term& target, const std::string& var, const Term& replacement);

struct FreeNames {
  std::set<std::string> hyps;
  std::set<std::string> vars;
  std::set<std::string> paths;
};

FreeNames free_names(const Proof& t);
std::set<std::string> free_vars(const Formula& f);

/// Equal up to renaming of bound variables.
inline bool alpha_eq(const Proof& a, const Proof& b) { return a == b; }

/// True if the value has no dangling bound index in any space.
bool locally_closed(const Proof& t);
bool locally_closed(const Formula& f);

/// Hint-free serialization; equal keys iff alpha-equivalent.
std::string canonical_key(const Proof& t);
std::string canonical_key(const Formula& f);

}  // namespace usum
