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

#include <stdexcept>
#include <string>

namespace usum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ill-sorted domain term, or a substitution whose replacement has the wrong sort.
class SortError : public Error {
 public:
  using Error::Error;
};

// A rewrite step that cannot be instantiated (unknown axiom, missing variable).
class PathError : public Error {
 public:
  using Error::Error;
};

class SignatureError : public Error {
 public:
  using Error::Error;
};

class ContextError : public Error {
 public:
  using Error::Error;
};

}  // namespace usum
