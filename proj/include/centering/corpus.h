// Copyright 2026 The Centering Kit Authors.
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

// Document model for coreference-annotated corpora and the CoNLL readers.
//
// Two column layouts are accepted:
//
//   CoNLL-2012 (12 or more columns):
//     doc-id part token-index word POS parse-bit predicate-lemma frameset
//     word-sense speaker NE [one column per predicate] coref
//
//   Minimal fixture format (exactly 5 columns), see docs/fixture-format.md:
//     doc-id sentence-number word POS[/GRAM[/SEM]] coref
//
// Documents are delimited by "#begin document (<id>); part <n>" and
// "#end document". Sentences are separated by blank lines; in the fixture
// format a change of sentence number also starts a new sentence.

#ifndef CENTERING_CORPUS_H_
#define CENTERING_CORPUS_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace centering {

using EntityId = std::int64_t;

struct Token {
  int index = 0;  // position within the sentence
  std::string surface;
  std::string pos;
  std::string parse_bit;  // e.g. "(TOP(S(NP*"; empty in the fixture format
  std::string speaker;
  // Every column of the row except the trailing coref column, verbatim.
  std::vector<std::string> columns;
  // (predicate column, argument label) for every argument covering the token.
  std::vector<std::pair<int, std::string>> srl_args;

  // Fixture format only: explicit role annotation of the mention headed here.
  std::string gram_tag;      // "S", "O", "X" or empty
  std::string semantic_tag;  // "A0", "A1", "AX" or empty
};

// One labeled argument of one predicate, inclusive token bounds.
struct SrlSpan {
  int predicate = 0;
  std::string label;
  int start = 0;
  int end = 0;
};

struct Sentence {
  std::vector<Token> tokens;
  std::vector<SrlSpan> srl;
  bool has_srl_columns = false;
};

struct MentionSpan {
  int sentence = 0;
  int start = 0;  // inclusive
  int end = 0;    // inclusive
  EntityId chain = 0;

  friend bool operator==(const MentionSpan &, const MentionSpan &) = default;
  friend auto operator<=>(const MentionSpan &, const MentionSpan &) = default;
};

enum class CorpusFormat { kConll2012, kFixture };

struct Document {
  std::string doc_id;
  int part = 0;
  CorpusFormat format = CorpusFormat::kConll2012;
  std::vector<Sentence> sentences;
  // Sorted by (sentence, start, end, chain).
  std::vector<MentionSpan> mentions;
  std::map<EntityId, std::vector<MentionSpan>> chains;

  // "<doc-id>:<part>", the key used in every output table.
  std::string Key() const;
  // Number of mentions of |chain| in the whole document (0 if unknown).
  int ChainSize(EntityId chain) const;
};

enum class GrammaticalSlot { kSubject, kObject, kOther };
enum class SemanticSlot { kAgent, kPatient, kOther };

struct RoleLabel {
  GrammaticalSlot grammatical = GrammaticalSlot::kOther;
  bool is_pronoun = false;
  std::optional<SemanticSlot> semantic;

  friend bool operator==(const RoleLabel &, const RoleLabel &) = default;
};

// Reads every document in |in|. |source| names the input in error messages.
// Throws ParseError on malformed input.
std::vector<Document> ParseConll(std::istream &in,
                                 const std::string &source = "<input>");
std::vector<Document> ParseConllString(std::string_view text);
// Throws Error(kIo) if the file cannot be opened.
std::vector<Document> ParseConllFile(const std::string &path);

// Writes |doc| back in the layout it was read from, regenerating the coref
// column from doc.mentions.
void WriteDocument(const Document &doc, std::ostream &out);
std::string WriteDocuments(const std::vector<Document> &docs);

// Bracket cells ("(3", "3)", "(3)", joined by '|', "-" when empty) of the
// coreference column for one sentence.
std::vector<std::string> CorefCells(const Document &doc, int sentence);

// Rebuilds doc.chains from doc.mentions. Call after editing mentions.
void RebuildChains(Document &doc);

// The pronoun tag set used for is_pronoun.
bool IsPronounTag(std::string_view pos);

// Grammatical role and pronominality of a mention (head = last token).
// Throws Error(kInvalidArgument) if the mention lies outside the document.
RoleLabel GrammaticalRole(const Document &doc, const MentionSpan &mention);

// Agent/Patient/Other from the SRL columns; nullopt when the sentence has no
// SRL columns or no argument covers the mention.
std::optional<SemanticSlot> SemanticRole(const Document &doc,
                                         const MentionSpan &mention);

// GrammaticalRole with the semantic slot filled in.
RoleLabel MentionRole(const Document &doc, const MentionSpan &mention);

// MentionRole for every entry of doc.mentions, in order. Builds each
// sentence's tree once.
std::vector<RoleLabel> MentionRoles(const Document &doc);

const char *ToString(GrammaticalSlot slot);
const char *ToString(SemanticSlot slot);

}  // namespace centering

#endif  // CENTERING_CORPUS_H_
