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

#ifndef TEXTDP_TOKENIZER_H_
#define TEXTDP_TOKENIZER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace textdp {

struct Token {
  // ASCII-lowercased surface form.
  std::string text;
  // Byte span [begin, end) in the original string.
  size_t begin = 0;
  size_t end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

// Splits on ASCII whitespace, then peels each leading and trailing ASCII
// punctuation character off a chunk as its own token. Interior punctuation
// ("it's", "e-mail") stays attached. Bytes >= 0x80 are never split or
// lowercased, so UTF-8 sequences survive intact.
std::vector<Token> Tokenize(absl::string_view text);

// Rebuilds text from `tokens` (produced by Tokenize(original)) where
// `replacements[i]` optionally replaces token i. Text outside tokens is
// copied from `original`, except that two adjacent replaced tokens are
// joined by exactly one space. With no replacements the result is
// byte-identical to `original`.
absl::StatusOr<std::string> Detokenize(
    absl::string_view original, std::span<const Token> tokens,
    std::span<const std::optional<std::string>> replacements);

}  // namespace textdp

#endif  // TEXTDP_TOKENIZER_H_
