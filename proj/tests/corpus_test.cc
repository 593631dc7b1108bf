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

#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"
#include "textdp/file_io.h"

namespace textdp {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

constexpr char kSst2[] =
    "sentence\tlabel\n"
    "A fine film .\t1\n"
    "dull , dull , dull\t0\n";

constexpr char kQnli[] =
    "index\tquestion\tsentence\tlabel\n"
    "q7\tWho won?\tThe home team won.\tentailment\n"
    "q8\tWhy?\tNo reason.\tnot_entailment\n";

TEST(ParseCorpusTest, SingleSentenceTsv) {
  ASSERT_OK_AND_ASSIGN(Document doc, ParseCorpus(kSst2, CorpusFormat::kTsv));
  ASSERT_EQ(doc.records.size(), 2u);
  EXPECT_EQ(doc.records[0].record_id, "0");
  EXPECT_THAT(doc.records[0].texts, ElementsAre("A fine film ."));
  EXPECT_EQ(doc.records[1].label, "0");
}

TEST(ParseCorpusTest, SentencePairTsvWithIds) {
  ASSERT_OK_AND_ASSIGN(Document doc, ParseCorpus(kQnli, CorpusFormat::kTsv));
  ASSERT_EQ(doc.records.size(), 2u);
  EXPECT_EQ(doc.records[0].record_id, "q7");
  EXPECT_THAT(doc.records[0].texts, ElementsAre("Who won?", "The home team won."));
  EXPECT_EQ(doc.records[0].label, "entailment");
}

TEST(ParseCorpusTest, Jsonl) {
  ASSERT_OK_AND_ASSIGN(
      Document doc,
      ParseCorpus("{\"record_id\": \"r1\", \"text\": \"Hi there\", \"label\": 1}\n"
                  "{\"id\": 5, \"text\": \"A\", \"text_b\": \"B\", \"extra\": [1]}\n",
                  CorpusFormat::kJsonl));
  ASSERT_EQ(doc.records.size(), 2u);
  EXPECT_EQ(doc.records[0].record_id, "r1");
  EXPECT_EQ(doc.records[0].label, "1");
  EXPECT_EQ(doc.records[1].record_id, "5");
  EXPECT_THAT(doc.records[1].texts, ElementsAre("A", "B"));
  EXPECT_FALSE(doc.records[1].label.has_value());
}

TEST(ParseCorpusTest, Errors) {
  EXPECT_THAT(ParseCorpus("foo\tbar\nx\ty\n", CorpusFormat::kTsv).status().message(),
              HasSubstr("no text column"));
  EXPECT_FALSE(ParseCorpus("sentence\tlabel\nonly-one-cell\n", CorpusFormat::kTsv).ok());
  EXPECT_THAT(ParseCorpus("id\tsentence\n1\ta\n1\tb\n", CorpusFormat::kTsv)
                  .status()
                  .message(),
              HasSubstr("duplicate record_id"));
  EXPECT_FALSE(ParseCorpus("{not json}\n", CorpusFormat::kJsonl).ok());
  EXPECT_FALSE(ParseCorpus("{\"record_id\": \"1\"}\n", CorpusFormat::kJsonl).ok());
  EXPECT_FALSE(ParseCorpus("{\"text\": 3}\n", CorpusFormat::kJsonl).ok());
}

TEST(ParseCorpusTest, EmptyInputs) {
  ASSERT_OK_AND_ASSIGN(Document jsonl, ParseCorpus("", CorpusFormat::kJsonl));
  EXPECT_TRUE(jsonl.records.empty());
  ASSERT_OK_AND_ASSIGN(Document tsv, ParseCorpus("sentence\tlabel\n", CorpusFormat::kTsv));
  EXPECT_TRUE(tsv.records.empty());
  EXPECT_EQ(SerializeCorpus(tsv).value(), "sentence\tlabel\n");
}

TEST(SerializeCorpusTest, UnchangedIsByteIdentical) {
  const std::vector<std::pair<std::string, CorpusFormat>> inputs = {
      {kSst2, CorpusFormat::kTsv},
      {kQnli, CorpusFormat::kTsv},
      {"sentence\r\nA b\r\nc d\r\n", CorpusFormat::kTsv},
      {"sentence\nno trailing newline", CorpusFormat::kTsv},
      {"{\"text\":  \"spaced   json\" , \"k\":1}\n\n{\"text\":\"x\"}\n",
       CorpusFormat::kJsonl},
  };
  for (const auto& [text, format] : inputs) {
    ASSERT_OK_AND_ASSIGN(Document doc, ParseCorpus(text, format));
    EXPECT_EQ(SerializeCorpus(doc).value(), text);
  }
}

TEST(SerializeCorpusTest, ChangedTsvRowKeepsOtherColumns) {
  ASSERT_OK_AND_ASSIGN(Document doc, ParseCorpus(kQnli, CorpusFormat::kTsv));
  doc.records[1].texts[1] = "some reason.";
  EXPECT_EQ(SerializeCorpus(doc).value(),
            "index\tquestion\tsentence\tlabel\n"
            "q7\tWho won?\tThe home team won.\tentailment\n"
            "q8\tWhy?\tsome reason.\tnot_entailment\n");
}

TEST(SerializeCorpusTest, ChangedJsonlLineKeepsOtherKeys) {
  ASSERT_OK_AND_ASSIGN(
      Document doc,
      ParseCorpus("{\"record_id\":\"a\",\"text\":\"old\",\"meta\":{\"x\":1}}\n",
                  CorpusFormat::kJsonl));
  doc.records[0].texts[0] = "new";
  EXPECT_EQ(SerializeCorpus(doc).value(),
            "{\"record_id\":\"a\",\"text\":\"new\",\"meta\":{\"x\":1}}\n");
}

TEST(SerializeCorpusTest, RejectsUnwritableChanges) {
  ASSERT_OK_AND_ASSIGN(Document doc, ParseCorpus(kSst2, CorpusFormat::kTsv));
  doc.records[0].texts[0] = "has\ttab";
  EXPECT_FALSE(SerializeCorpus(doc).ok());
  doc.records[0].texts = {"a", "b"};
  EXPECT_FALSE(SerializeCorpus(doc).ok());
}

TEST(CorpusFileTest, RoundTripThroughDisk) {
  const std::string dir = testing::FreshTempDir("corpus_rt");
  ASSERT_OK(WriteStringToFile(dir + "/in.tsv", kQnli));
  ASSERT_OK_AND_ASSIGN(Document doc, ReadCorpus(dir + "/in.tsv"));
  ASSERT_OK(WriteCorpus(dir + "/out.tsv", doc));
  EXPECT_EQ(ReadFileToString(dir + "/out.tsv").value(), kQnli);
  EXPECT_EQ(FormatForPath("x.jsonl"), CorpusFormat::kJsonl);
  EXPECT_EQ(FormatForPath("x.tsv"), CorpusFormat::kTsv);
}

TEST(TokenizeRecordTest, PairHasBoundary) {
  Record record{"1", {"Who won?", "Team A."}, std::nullopt};
  const RecordTokens tokens = TokenizeRecord(record);
  EXPECT_THAT(tokens.flat,
              ElementsAre("who", "won", "?", std::string(kFieldBoundary), "team", "a", "."));
  EXPECT_TRUE(tokens.IsBoundary(3));
  EXPECT_FALSE(tokens.IsBoundary(4));
  EXPECT_EQ(tokens.origin[4], std::make_pair(1, 0));
  ASSERT_EQ(tokens.fields.size(), 2u);
}

}  // namespace
}  // namespace textdp
