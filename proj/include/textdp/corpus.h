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

// Corpus files. Two shapes are understood:
//
//  * GLUE-style TSV with a header line. Text columns are recognised by name
//    (sentence, question, sentence1, sentence2, question1, question2, text,
//    text_a, text_b; at most two, in column order), the id column by
//    index/idx/id/record_id and the label by "label". Other columns pass
//    through untouched. Without an id column the 0-based row ordinal is used.
//  * JSONL, one object per line with "record_id" (or "id"/"idx"), "text",
//    optional "text_b" and optional "label". Other keys pass through.
//
// Lines of unchanged records are written back verbatim, so a corpus whose
// texts were not modified serializes to the original bytes.

#ifndef TEXTDP_CORPUS_H_
#define TEXTDP_CORPUS_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "textdp/tokenizer.h"

namespace textdp {

// Marker placed between the two fields of a sentence-pair record in
// importance files. Tokenize() can never produce it (it lowercases and splits
// off brackets).
inline constexpr absl::string_view kFieldBoundary = "[FIELD_BOUNDARY]";

struct Record {
  std::string record_id;
  // One or two text fields.
  std::vector<std::string> texts;
  std::optional<std::string> label;
};

enum class CorpusFormat { kTsv, kJsonl };

struct CorpusLayout {
  CorpusFormat format = CorpusFormat::kTsv;
  std::string line_ending = "\n";
  bool trailing_newline = true;
  // Raw lines without terminators.
  std::vector<std::string> lines;
  // Line index of each record.
  std::vector<int> record_line;
  std::vector<std::vector<std::string>> original_texts;
  // TSV only.
  std::vector<int> text_columns;
  int column_count = 0;
};

struct Document {
  std::vector<Record> records;
  CorpusLayout layout;
};

absl::StatusOr<Document> ParseCorpus(absl::string_view text, CorpusFormat format);
// Format is chosen by extension: .jsonl/.json are JSONL, anything else TSV.
absl::StatusOr<Document> ReadCorpus(const std::string& path);
CorpusFormat FormatForPath(absl::string_view path);

absl::StatusOr<std::string> SerializeCorpus(const Document& doc);
absl::Status WriteCorpus(const std::string& path, const Document& doc);

// Tokens of every field of a record, plus the flat sequence used by
// importance files: field tokens concatenated with kFieldBoundary between
// fields.
struct RecordTokens {
  std::vector<std::vector<Token>> fields;
  std::vector<std::string> flat;
  // For each flat position, (field, token index), or (-1, -1) at a boundary.
  std::vector<std::pair<int, int>> origin;

  bool IsBoundary(int position) const { return origin[position].first < 0; }
};

RecordTokens TokenizeRecord(const Record& record);

}  // namespace textdp

#endif  // TEXTDP_CORPUS_H_
