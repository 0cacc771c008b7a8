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

#ifndef ASSIST_TEXT_HPP_
#define ASSIST_TEXT_HPP_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace assist {

// ASCII-only case folding; multi-byte UTF-8 passes through untouched.
std::string to_lower(std::string_view s);

// Lowercase, trim, collapse internal whitespace runs to single spaces.
std::string normalize_label(std::string_view s);

// Strip leading/trailing ASCII punctuation from a token.
std::string strip_punct(std::string_view token);

// Membership test for plural folding ("is this word known?").
using VocabFn = std::function<bool(const std::string&)>;

// Naive plural folding: drop a trailing 's' when the stripped form is known.
std::string fold_plural(const std::string& token, const VocabFn& vocab);

// Split on whitespace, lowercase, strip punctuation, drop empties.
std::vector<std::string> tokenize(std::string_view phrase);

// tokenize() plus plural folding against the given vocabulary.
std::vector<std::string> tokenize_folded(std::string_view phrase, const VocabFn& vocab);

// Shortest round-trip decimal form of a double, with a trailing ".0" for
// integral values so the output always reads as a real number.
std::string format_real(double value);

}  // namespace assist

#endif  // ASSIST_TEXT_HPP_
