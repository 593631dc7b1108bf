//
// Copyright 2026 The TextDP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "textdp/tokenizer.h"

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/string_view.h"

namespace textdp {
namespace {

bool IsSpace(char c) { return absl::ascii_isspace(static_cast<unsigned char>(c)); }
bool IsPunct(char c) { return absl::ascii_ispunct(static_cast<unsigned char>(c)); }

void Emit(absl::string_view text, size_t begin, size_t end,
          std::vector<Token>& out) {
  out.push_back(Token{absl::AsciiStrToLower(text.substr(begin, end - begin)),
                      begin, end});
}

}  // namespace

std::vector<Token> Tokenize(absl::string_view text) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < text.size()) {
    if (IsSpace(text[i])) {
      ++i;
      continue;
    }
    size_t chunk_end = i;
    while (chunk_end < text.size() && !IsSpace(text[chunk_end])) ++chunk_end;

    size_t core_begin = i;
    while (core_begin < chunk_end && IsPunct(text[core_begin])) ++core_begin;
    size_t core_end = chunk_end;
    while (core_end > core_begin && IsPunct(text[core_end - 1])) --core_end;

    for (size_t p = i; p < core_begin; ++p) Emit(text, p, p + 1, tokens);
    if (core_begin < core_end) Emit(text, core_begin, core_end, tokens);
    for (size_t p = core_end; p < chunk_end; ++p) Emit(text, p, p + 1, tokens);
    i = chunk_end;
  }
  return tokens;
}

absl::StatusOr<std::string> Detokenize(
    absl::string_view original, std::span<const Token> tokens,
    std::span<const std::optional<std::string>> replacements) {
  if (replacements.size() != tokens.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        tokens.size(), " tokens but ", replacements.size(), " replacement slots"));
  }
  size_t cursor = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.begin < cursor || t.end < t.begin || t.end > original.size() ||
        absl::AsciiStrToLower(original.substr(t.begin, t.end - t.begin)) != t.text) {
      return absl::InvalidArgumentError(absl::StrCat(
          "token ", i, " ('", t.text, "') does not match the original text"));
    }
    cursor = t.end;
  }

  std::string out;
  out.reserve(original.size());
  size_t copied = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    const bool replaced = replacements[i].has_value();
    if (i > 0 && replaced && replacements[i - 1].has_value()) {
      out.push_back(' ');
    } else {
      absl::StrAppend(&out, original.substr(copied, t.begin - copied));
    }
    if (replaced) {
      absl::StrAppend(&out, absl::AsciiStrToLower(*replacements[i]));
    } else {
      absl::StrAppend(&out, original.substr(t.begin, t.end - t.begin));
    }
    copied = t.end;
  }
  absl::StrAppend(&out, original.substr(copied));
  return out;
}

}  // namespace textdp
