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
#include <string>
#include <string_view>
#include <vector>

namespace usum {

struct Token {
  enum class Kind : std::uint8_t { Ident, Number, Symbol, End };
  Kind kind = Kind::End;
  std::string text;  // symbols are normalized to their ASCII spelling
  int line = 1;
  int col = 1;
};

/// Split source text into tokens. Unicode connectives and binders are
/// mapped to their ASCII spellings; the binder sigils υ and σ are dropped.
/// Comments run from '#' or '//' to the end of the line. Throws ParseError
/// on a character that starts no token.
std::vector<Token> tokenize(std::string_view text);

std::string describe(const Token& t);

}  // namespace usum
