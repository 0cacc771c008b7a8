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

#include "assist/text.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

namespace assist {

namespace {

bool is_space(unsigned char c) { return std::isspace(c) != 0; }
bool is_punct(unsigned char c) { return std::ispunct(c) != 0; }

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

std::string normalize_label(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (unsigned char c : s) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

std::string strip_punct(std::string_view token) {
  std::size_t begin = 0;
  std::size_t end = token.size();
  while (begin < end && is_punct(static_cast<unsigned char>(token[begin]))) ++begin;
  while (end > begin && is_punct(static_cast<unsigned char>(token[end - 1]))) --end;
  return std::string(token.substr(begin, end - begin));
}

std::string fold_plural(const std::string& token, const VocabFn& vocab) {
  if (token.size() > 1 && token.back() == 's') {
    std::string stripped = token.substr(0, token.size() - 1);
    if (vocab && vocab(stripped)) return stripped;
  }
  return token;
}

std::vector<std::string> tokenize(std::string_view phrase) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < phrase.size()) {
    while (i < phrase.size() && is_space(static_cast<unsigned char>(phrase[i]))) ++i;
    std::size_t start = i;
    while (i < phrase.size() && !is_space(static_cast<unsigned char>(phrase[i]))) ++i;
    if (i > start) {
      std::string tok = strip_punct(to_lower(phrase.substr(start, i - start)));
      if (!tok.empty()) out.push_back(std::move(tok));
    }
  }
  return out;
}

std::vector<std::string> tokenize_folded(std::string_view phrase, const VocabFn& vocab) {
  std::vector<std::string> toks = tokenize(phrase);
  for (std::string& t : toks) t = fold_plural(t, vocab);
  return toks;
}

std::string format_real(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) {
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return std::string(buf);
  }
  std::string out(buf, ptr);
  if (out.find('.') == std::string::npos && out.find('e') == std::string::npos &&
      out.find("inf") == std::string::npos && out.find("nan") == std::string::npos) {
    out += ".0";
  }
  return out;
}

}  // namespace assist
