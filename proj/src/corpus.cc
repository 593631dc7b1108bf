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

#include "textdp/corpus.h"

#include <algorithm>
#include <array>

#include "absl/container/flat_hash_set.h"
#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "json.hpp"
#include "textdp/file_io.h"
#include "textdp/status_macros.h"

namespace textdp {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<absl::string_view, 9> kTextColumns = {
    "sentence", "question",  "sentence1", "sentence2", "question1",
    "question2", "text", "text_a", "text_b"};
constexpr std::array<absl::string_view, 4> kIdColumns = {"index", "idx", "id",
                                                        "record_id"};

template <size_t N>
bool OneOf(absl::string_view name, const std::array<absl::string_view, N>& set) {
  return std::find(set.begin(), set.end(), name) != set.end();
}

void SplitLines(absl::string_view text, CorpusLayout& layout) {
  layout.trailing_newline = absl::EndsWith(text, "\n");
  if (layout.trailing_newline) text.remove_suffix(1);
  if (text.empty() && !layout.trailing_newline) return;
  const size_t first_nl = text.find('\n');
  const bool crlf = first_nl != absl::string_view::npos && first_nl > 0 &&
                    text[first_nl - 1] == '\r';
  if (crlf || (first_nl == absl::string_view::npos && absl::EndsWith(text, "\r") &&
               layout.trailing_newline)) {
    layout.line_ending = "\r\n";
  }
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    if (layout.line_ending == "\r\n" && absl::EndsWith(line, "\r")) {
      line.remove_suffix(1);
    }
    layout.lines.emplace_back(line);
  }
}

std::string JsonScalar(const Json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

absl::Status ParseTsv(Document& doc) {
  CorpusLayout& layout = doc.layout;
  if (layout.lines.empty()) return absl::OkStatus();
  const std::vector<std::string> header = absl::StrSplit(layout.lines[0], '\t');
  layout.column_count = static_cast<int>(header.size());
  int id_column = -1, label_column = -1;
  for (int c = 0; c < layout.column_count; ++c) {
    const std::string name = absl::AsciiStrToLower(absl::StripAsciiWhitespace(header[c]));
    if (OneOf(name, kTextColumns) && layout.text_columns.size() < 2) {
      layout.text_columns.push_back(c);
    } else if (OneOf(name, kIdColumns) && id_column < 0) {
      id_column = c;
    } else if (name == "label" && label_column < 0) {
      label_column = c;
    }
  }
  if (layout.text_columns.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "TSV header '", layout.lines[0], "' names no text column"));
  }
  for (int l = 1; l < static_cast<int>(layout.lines.size()); ++l) {
    if (layout.lines[l].empty()) continue;
    const std::vector<std::string> cells = absl::StrSplit(layout.lines[l], '\t');
    if (static_cast<int>(cells.size()) != layout.column_count) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", l + 1, ": expected ", layout.column_count, " columns, got ",
          cells.size()));
    }
    Record record;
    record.record_id = id_column >= 0 ? cells[id_column]
                                      : absl::StrCat(doc.records.size());
    for (int c : layout.text_columns) record.texts.push_back(cells[c]);
    if (label_column >= 0) record.label = cells[label_column];
    layout.record_line.push_back(l);
    layout.original_texts.push_back(record.texts);
    doc.records.push_back(std::move(record));
  }
  return absl::OkStatus();
}

absl::Status ParseJsonl(Document& doc) {
  CorpusLayout& layout = doc.layout;
  for (int l = 0; l < static_cast<int>(layout.lines.size()); ++l) {
    if (absl::StripAsciiWhitespace(layout.lines[l]).empty()) continue;
    Json object = Json::parse(layout.lines[l], nullptr, /*allow_exceptions=*/false);
    if (object.is_discarded() || !object.is_object()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", l + 1, ": not a JSON object"));
    }
    Record record;
    record.record_id = absl::StrCat(doc.records.size());
    for (const char* key : {"record_id", "id", "idx"}) {
      if (object.contains(key)) {
        record.record_id = JsonScalar(object[key]);
        break;
      }
    }
    for (const char* key : {"text", "text_b"}) {
      if (!object.contains(key)) continue;
      if (!object[key].is_string()) {
        return absl::InvalidArgumentError(
            absl::StrCat("line ", l + 1, ": '", key, "' must be a string"));
      }
      record.texts.push_back(object[key].get<std::string>());
    }
    if (record.texts.empty() || !object.contains("text")) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", l + 1, ": missing 'text'"));
    }
    if (object.contains("label")) record.label = JsonScalar(object["label"]);
    layout.record_line.push_back(l);
    layout.original_texts.push_back(record.texts);
    doc.records.push_back(std::move(record));
  }
  return absl::OkStatus();
}

}  // namespace

CorpusFormat FormatForPath(absl::string_view path) {
  return absl::EndsWith(path, ".jsonl") || absl::EndsWith(path, ".json")
             ? CorpusFormat::kJsonl
             : CorpusFormat::kTsv;
}

absl::StatusOr<Document> ParseCorpus(absl::string_view text,
                                     CorpusFormat format) {
  Document doc;
  doc.layout.format = format;
  SplitLines(text, doc.layout);
  RETURN_IF_ERROR(format == CorpusFormat::kTsv ? ParseTsv(doc) : ParseJsonl(doc));
  absl::flat_hash_set<std::string> ids;
  for (const Record& record : doc.records) {
    if (!ids.insert(record.record_id).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate record_id '", record.record_id, "'"));
    }
  }
  return doc;
}

absl::StatusOr<Document> ReadCorpus(const std::string& path) {
  ASSIGN_OR_RETURN(std::string text, ReadFileToString(path));
  return ParseCorpus(text, FormatForPath(path));
}

absl::StatusOr<std::string> SerializeCorpus(const Document& doc) {
  const CorpusLayout& layout = doc.layout;
  if (doc.records.size() != layout.record_line.size()) {
    return absl::InvalidArgumentError("records do not match the corpus layout");
  }
  std::vector<std::string> lines = layout.lines;
  for (size_t r = 0; r < doc.records.size(); ++r) {
    const Record& record = doc.records[r];
    if (record.texts == layout.original_texts[r]) continue;
    if (record.texts.size() != layout.original_texts[r].size()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "record '", record.record_id, "' changed its number of text fields"));
    }
    std::string& line = lines[layout.record_line[r]];
    if (layout.format == CorpusFormat::kTsv) {
      std::vector<std::string> cells = absl::StrSplit(line, '\t');
      for (size_t f = 0; f < record.texts.size(); ++f) {
        if (absl::StrContains(record.texts[f], '\t') ||
            absl::StrContains(record.texts[f], '\n')) {
          return absl::InvalidArgumentError(absl::StrCat(
              "record '", record.record_id, "' text cannot be written as TSV"));
        }
        cells[layout.text_columns[f]] = record.texts[f];
      }
      line = absl::StrJoin(cells, "\t");
    } else {
      Json object = Json::parse(line);
      object["text"] = record.texts[0];
      if (record.texts.size() > 1) object["text_b"] = record.texts[1];
      line = object.dump();
    }
  }
  std::string out = absl::StrJoin(lines, layout.line_ending);
  if (layout.trailing_newline) out += layout.line_ending;
  return out;
}

absl::Status WriteCorpus(const std::string& path, const Document& doc) {
  ASSIGN_OR_RETURN(std::string text, SerializeCorpus(doc));
  return WriteStringToFile(path, text);
}

RecordTokens TokenizeRecord(const Record& record) {
  RecordTokens out;
  for (size_t f = 0; f < record.texts.size(); ++f) {
    if (f > 0) {
      out.flat.emplace_back(kFieldBoundary);
      out.origin.emplace_back(-1, -1);
    }
    out.fields.push_back(Tokenize(record.texts[f]));
    const std::vector<Token>& tokens = out.fields.back();
    for (size_t i = 0; i < tokens.size(); ++i) {
      out.flat.push_back(tokens[i].text);
      out.origin.emplace_back(static_cast<int>(f), static_cast<int>(i));
    }
  }
  return out;
}

}  // namespace textdp
