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

#include "usum/lexer.hpp"

#include <array>
#include <cctype>
#include <utility>

#include "usum/parser.hpp"

namespace usum {

namespace {

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\''; }

// Multi-byte spellings accepted on input, with their canonical text.
const std::array<std::pair<std::string_view, std::string_view>, 16>& unicode_symbols() {
  static const std::array<std::pair<std::string_view, std::string_view>, 16> table = {{
      {"∧", "/\\"},
      {"∨", "\\/"},
      {"→", "->"},
      {"¬", "~"},
      {"∀", "forall"},
      {"∃", "exists"},
      {"⊥", "False"},
      {"λ", "lam"},
      {"Λ", "gen"},
      {"ε", "eps"},
      {"⟨", "<"},
      {"⟩", ">"},
      {"υ", ""},
      {"σ", ""},
      {"↦", "->"},
      {"≔", ":="},
  }};
  return table;
}

const std::array<std::string_view, 4>& multi_symbols() {
  static const std::array<std::string_view, 4> s = {"->", "/\\", "\\/", ":="};
  return s;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    unsigned char c = text[i];
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      t.kind = Token::Kind::Ident;
      t.text = std::string(text.substr(i, j - i));
      advance(j - i);
      out.push_back(t);
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Token::Kind::Number;
      t.text = std::string(text.substr(i, j - i));
      advance(j - i);
      out.push_back(t);
      continue;
    }
    bool matched = false;
    for (const auto& [spelling, canon] : unicode_symbols()) {
      if (text.substr(i, spelling.size()) == spelling) {
        advance(spelling.size());
        matched = true;
        if (canon.empty()) break;
        t.kind = std::isalpha(static_cast<unsigned char>(canon[0])) ? Token::Kind::Ident : Token::Kind::Symbol;
        t.text = std::string(canon);
        out.push_back(t);
        break;
      }
    }
    if (matched) continue;
    for (auto s : multi_symbols()) {
      if (text.substr(i, s.size()) == s) {
        t.kind = Token::Kind::Symbol;
        t.text = std::string(s);
        advance(s.size());
        out.push_back(t);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    static const std::string_view singles = "()[]{}<>,.:;=-@|*~";
    if (singles.find(static_cast<char>(c)) != std::string_view::npos) {
      t.kind = Token::Kind::Symbol;
      t.text = std::string(1, static_cast<char>(c));
      advance(1);
      out.push_back(t);
      continue;
    }
    throw ParseError(line, col, {}, "unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
  }
  Token end;
  end.kind = Token::Kind::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::End: return "end of input";
    case Token::Kind::Ident: return "identifier '" + t.text + "'";
    case Token::Kind::Number: return "number " + t.text;
    case Token::Kind::Symbol: return "'" + t.text + "'";
  }
  return "?";
}

}  // namespace usum
