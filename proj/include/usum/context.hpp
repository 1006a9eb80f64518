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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "usum/formula.hpp"
#include "usum/term.hpp"

namespace usum {

/// Assumption u =_t v : S for a path variable t.
struct PathHyp {
  std::string name;
  std::string sort;
  Term from;
  Term to;
};

/// Ordered declarations: individuals, hypotheses and path assumptions.
/// Names are unique across the three kinds.
class Context {
 public:
  void add_var(const std::string& name, const std::string& sort);
  /// Throws ContextError if the formula mentions an undeclared individual.
  void add_hyp(const std::string& name, const Formula& formula);
  void add_path(const std::string& name, const std::string& sort, const Term& from, const Term& to);

  std::optional<std::string> var_sort(const std::string& name) const;
  const Formula* hyp(const std::string& name) const;
  const PathHyp* path(const std::string& name) const;

  const std::vector<std::pair<std::string, std::string>>& vars() const { return vars_; }
  const std::vector<std::pair<std::string, Formula>>& hyps() const { return hyps_; }
  const std::vector<PathHyp>& paths() const { return paths_; }

  bool declares(const std::string& name) const;
  std::set<std::string> names() const;

  /// Does `name` occur free in any hypothesis or path assumption?
  bool mentioned_in_assumptions(const std::string& var) const;

 private:
  std::vector<std::pair<std::string, std::string>> vars_;
  std::vector<std::pair<std::string, Formula>> hyps_;
  std::vector<PathHyp> paths_;
};

/// `hint`, or `hint` followed by primes, avoiding every name in `taken`.
std::string fresh_name(const std::string& hint, const std::set<std::string>& taken);

}  // namespace usum
