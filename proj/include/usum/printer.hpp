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

#include "usum/formula.hpp"
#include "usum/path.hpp"
#include "usum/proof.hpp"
#include "usum/term.hpp"

namespace usum {

/// Concrete syntax, ASCII by default. The output reparses to an
/// alpha-equivalent value. Binder hints that would capture a free name are
/// primed. Dangling indices print as #n.
struct PrintOptions {
  bool unicode = false;
};

std::string print(const Term& t, const PrintOptions& o = {});
std::string print(const Formula& f, const PrintOptions& o = {});
std::string print(const Proof& t, const PrintOptions& o = {});
std::string print(const PathExpr& r, const PrintOptions& o = {});
std::string print(const Path& p, const PrintOptions& o = {});
std::string print(const RewriteStep& s);

}  // namespace usum
