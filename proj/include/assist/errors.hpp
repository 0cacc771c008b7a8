// Copyright 2026 The Assist-Reasoner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ASSIST_ERRORS_HPP_
#define ASSIST_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace assist {

// Structural violations in a scene graph (dangling edge, duplicate id, ...).
class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data (CSV/TSV/JSON); message carries file and line/path.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation was called outside its stated precondition.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace assist

#endif  // ASSIST_ERRORS_HPP_
