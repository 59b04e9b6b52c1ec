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

#include "centering/corpus.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "centering/log.h"
#include "centering/parse_tree.h"
#include "centering/status.h"

namespace centering {
namespace {

constexpr size_t kFixtureColumns = 5;
constexpr size_t kConllMinColumns = 12;
// Columns before the per-predicate argument columns in CoNLL-2012.
constexpr size_t kConllFixedColumns = 11;

std::vector<std::string> SplitWhitespace(std::string_view line) {
  std::vector<std::string> fields;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) fields.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool ParseInt(std::string_view text, long long &value) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

struct OpenMention {
  int sentence;
  int token;
  int line;
};

// Accumulates one document while the reader walks its lines.
class DocumentBuilder {
 public:
  DocumentBuilder(std::string doc_id, int part, int line)
      : begin_line_(line) {
    doc_.doc_id = std::move(doc_id);
    doc_.part = part;
  }

  void AddRow(std::vector<std::string> fields, int line) {
    if (columns_ == 0) {
      if (fields.size() == kFixtureColumns) {
        doc_.format = CorpusFormat::kFixture;
      } else if (fields.size() >= kConllMinColumns) {
        doc_.format = CorpusFormat::kConll2012;
      } else {
        throw ParseError("expected 5 (fixture) or at least 12 (CoNLL-2012) "
                         "columns, got " + std::to_string(fields.size()),
                         line);
      }
    }
    if (doc_.format == CorpusFormat::kFixture) {
      if (fields.size() != kFixtureColumns) {
        throw ParseError("ragged row: expected 5 columns, got " +
                             std::to_string(fields.size()),
                         line);
      }
      if (!sentence_.tokens.empty() && fields[1] != sentence_marker_) {
        FlushSentence();
      }
      sentence_marker_ = fields[1];
    } else {
      if (fields.size() < kConllMinColumns) {
        throw ParseError("ragged row: expected at least 12 columns, got " +
                             std::to_string(fields.size()),
                         line);
      }
      if (!sentence_.tokens.empty() && fields.size() != sentence_columns_) {
        throw ParseError("ragged row: sentence rows have " +
                             std::to_string(sentence_columns_) +
                             " columns, this row has " +
                             std::to_string(fields.size()),
                         line);
      }
    }
    if (sentence_.tokens.empty()) sentence_columns_ = fields.size();
    columns_ = fields.size();

    Token token;
    token.index = static_cast<int>(sentence_.tokens.size());
    if (doc_.format == CorpusFormat::kConll2012) {
      long long index = 0;
      if (!ParseInt(fields[2], index) || index != token.index) {
        throw ParseError("token index '" + fields[2] + "' does not continue "
                         "the sentence (expected " +
                             std::to_string(token.index) + ")",
                         line);
      }
      token.surface = fields[3];
      token.pos = fields[4];
      token.parse_bit = fields[5];
      token.speaker = fields[9] == "-" ? "" : fields[9];
      arg_cells_.emplace_back(fields.begin() + kConllFixedColumns,
                              fields.end() - 1);
    } else {
      token.surface = fields[2];
      auto tags = Split(fields[3], '/');
      if (tags.size() > 3 || tags[0].empty()) {
        throw ParseError("malformed POS/role tag '" + fields[3] + "'", line);
      }
      token.pos = std::string(tags[0]);
      if (tags.size() >= 2) token.gram_tag = std::string(tags[1]);
      if (tags.size() == 3) token.semantic_tag = std::string(tags[2]);
      if (tags.size() >= 2 && token.gram_tag != "S" && token.gram_tag != "O" &&
          token.gram_tag != "X") {
        throw ParseError("unknown grammatical tag '" + token.gram_tag +
                             "' (expected S, O or X)",
                         line);
      }
      if (tags.size() == 3 && token.semantic_tag != "A0" &&
          token.semantic_tag != "A1" && token.semantic_tag != "AX") {
        throw ParseError("unknown semantic tag '" + token.semantic_tag +
                             "' (expected A0, A1 or AX)",
                         line);
      }
    }
    ReadCorefCell(fields.back(), line);
    token.columns.assign(fields.begin(), fields.end() - 1);
    sentence_.tokens.push_back(std::move(token));
  }

  void EndSentence() { FlushSentence(); }

  Document Finish(int line) {
    FlushSentence();
    for (const auto &[chain, stack] : open_) {
      if (!stack.empty()) {
        throw ParseError("mention of chain " + std::to_string(chain) +
                             " opened at line " +
                             std::to_string(stack.back().line) +
                             " is not closed before the end of document '" +
                             doc_.doc_id + "'",
                         line);
      }
    }
    std::sort(doc_.mentions.begin(), doc_.mentions.end());
    std::vector<MentionSpan> unique;
    for (const MentionSpan &m : doc_.mentions) {
      if (!unique.empty() && unique.back().sentence == m.sentence &&
          unique.back().start == m.start && unique.back().end == m.end) {
        if (unique.back().chain != m.chain) {
          throw ParseError(
              "span (sentence " + std::to_string(m.sentence) + ", tokens " +
                  std::to_string(m.start) + ".." + std::to_string(m.end) +
                  ") is annotated with chains " +
                  std::to_string(unique.back().chain) + " and " +
                  std::to_string(m.chain) + " in document '" + doc_.doc_id +
                  "'",
              begin_line_);
        }
        LogWarning("duplicate mention dropped in document '" + doc_.doc_id +
                   "'");
        continue;
      }
      unique.push_back(m);
    }
    doc_.mentions = std::move(unique);
    RebuildChains(doc_);
    return std::move(doc_);
  }

 private:
  void ReadCorefCell(const std::string &cell, int line) {
    if (cell == "-" || cell == "_") return;
    const int sentence = static_cast<int>(doc_.sentences.size());
    const int token = static_cast<int>(sentence_.tokens.size());
    for (std::string_view entry : Split(cell, '|')) {
      bool opens = !entry.empty() && entry.front() == '(';
      bool closes = !entry.empty() && entry.back() == ')';
      std::string_view digits = entry;
      if (opens) digits.remove_prefix(1);
      if (closes && !digits.empty()) digits.remove_suffix(1);
      long long chain = 0;
      if ((!opens && !closes) || !ParseInt(digits, chain)) {
        throw ParseError("malformed coreference entry '" +
                             std::string(entry) + "' (chain ids must be "
                             "integers)",
                         line);
      }
      if (opens && closes) {
        doc_.mentions.push_back({sentence, token, token, chain});
      } else if (opens) {
        open_[chain].push_back({sentence, token, line});
      } else {
        auto &stack = open_[chain];
        if (stack.empty()) {
          throw ParseError("chain " + std::to_string(chain) +
                               " closed without a matching open",
                           line);
        }
        OpenMention start = stack.back();
        stack.pop_back();
        if (start.sentence == sentence) {
          doc_.mentions.push_back({sentence, start.token, token, chain});
        } else {
          // Spans are sentence-local; keep the part in the opening sentence.
          int last = static_cast<int>(
              doc_.sentences[start.sentence].tokens.size()) - 1;
          LogWarning("line " + std::to_string(line) + ": mention of chain " +
                     std::to_string(chain) + " crosses a sentence boundary; "
                     "clipped to its opening sentence");
          doc_.mentions.push_back({start.sentence, start.token, last, chain});
        }
      }
    }
  }

  void FlushSentence() {
    if (sentence_.tokens.empty()) return;
    if (doc_.format == CorpusFormat::kConll2012) ReadArguments();
    doc_.sentences.push_back(std::move(sentence_));
    sentence_ = Sentence();
    arg_cells_.clear();
  }

  // Turns the per-predicate argument columns into spans.
  void ReadArguments() {
    const size_t predicates = sentence_columns_ - kConllMinColumns;
    sentence_.has_srl_columns = predicates > 0;
    for (size_t p = 0; p < predicates; ++p) {
      std::vector<std::pair<std::string, int>> open;
      for (size_t t = 0; t < arg_cells_.size(); ++t) {
        std::string_view cell = arg_cells_[t][p];
        size_t star = cell.find('*');
        if (star == std::string_view::npos) {
          LogWarning("unreadable argument cell '" + std::string(cell) +
                     "' in document '" + doc_.doc_id + "'");
          continue;
        }
        std::string_view head = cell.substr(0, star);
        size_t i = 0;
        while (i < head.size()) {
          if (head[i] != '(') break;
          size_t j = i + 1;
          while (j < head.size() && head[j] != '(') ++j;
          open.emplace_back(std::string(head.substr(i + 1, j - i - 1)),
                            static_cast<int>(t));
          i = j;
        }
        for (char c : cell.substr(star + 1)) {
          if (c != ')' || open.empty()) break;
          auto [label, start] = open.back();
          open.pop_back();
          sentence_.srl.push_back(
              {static_cast<int>(p), label, start, static_cast<int>(t)});
        }
      }
    }
    for (const SrlSpan &span : sentence_.srl) {
      for (int t = span.start; t <= span.end; ++t) {
        sentence_.tokens[t].srl_args.emplace_back(span.predicate, span.label);
      }
    }
  }

  Document doc_;
  int begin_line_;
  size_t columns_ = 0;
  size_t sentence_columns_ = 0;
  std::string sentence_marker_;
  Sentence sentence_;
  std::vector<std::vector<std::string>> arg_cells_;
  std::map<EntityId, std::vector<OpenMention>> open_;
};

// "#begin document (bc/cnn/00/cnn_0001); part 000"
std::pair<std::string, int> ParseBeginLine(std::string_view line, int number) {
  std::string_view rest = line.substr(std::string_view("#begin document").size());
  std::string id;
  size_t open = rest.find('(');
  size_t close = rest.rfind(')');
  if (open != std::string_view::npos && close != std::string_view::npos &&
      close > open) {
    id = std::string(rest.substr(open + 1, close - open - 1));
    rest = rest.substr(close + 1);
  } else {
    auto fields = SplitWhitespace(rest);
    if (fields.empty()) throw ParseError("document without an id", number);
    id = fields[0];
    if (!id.empty() && id.back() == ';') id.pop_back();
    rest = rest.substr(rest.find(fields[0]) + fields[0].size());
  }
  int part = 0;
  size_t at = rest.find("part");
  if (at != std::string_view::npos) {
    auto fields = SplitWhitespace(rest.substr(at + 4));
    long long value = 0;
    if (fields.empty() || !ParseInt(fields[0], value)) {
      throw ParseError("malformed part number", number);
    }
    part = static_cast<int>(value);
  }
  return {id, part};
}

GrammaticalSlot SlotFromTree(const ParseTree &tree, const MentionSpan &m) {
  int np = tree.SmallestCovering(m.start, m.end, "NP");
  if (np < 0) return GrammaticalSlot::kOther;
  // Appositions and coordinations: the outermost NP decides.
  while (tree.node(np).parent >= 0 && tree.node(tree.node(np).parent).label == "NP")
    np = tree.node(np).parent;
  int parent = tree.node(np).parent;
  if (parent < 0) return GrammaticalSlot::kOther;
  const ParseTree::Node &p = tree.node(parent);
  auto position = std::find(p.children.begin(), p.children.end(), np);

  if (p.label == "S" || p.label == "SINV" || p.label == "SQ" ||
      p.label == "SBAR") {
    for (auto it = position + 1; it != p.children.end(); ++it) {
      if (tree.node(*it).label == "VP") return GrammaticalSlot::kSubject;
    }
    return GrammaticalSlot::kOther;
  }
  if (p.label == "VP") {
    for (auto it = p.children.begin(); it != position; ++it) {
      const ParseTree::Node &sibling = tree.node(*it);
      if (sibling.preterminal && sibling.label.rfind("VB", 0) == 0)
        return GrammaticalSlot::kObject;
    }
  }
  return GrammaticalSlot::kOther;
}

SemanticSlot SlotFromLabel(std::string_view label) {
  if (label == "ARG0" || label == "A0") return SemanticSlot::kAgent;
  if (label == "ARG1" || label == "A1") return SemanticSlot::kPatient;
  return SemanticSlot::kOther;
}

// ARG0 beats ARG1 beats anything else among equally good spans.
SemanticSlot BestSlot(const std::vector<const SrlSpan *> &spans) {
  SemanticSlot best = SemanticSlot::kOther;
  for (const SrlSpan *s : spans) {
    SemanticSlot slot = SlotFromLabel(s->label);
    if (slot == SemanticSlot::kAgent) return slot;
    if (slot == SemanticSlot::kPatient) best = slot;
  }
  return best;
}

void CheckMention(const Document &doc, const MentionSpan &m) {
  if (m.sentence < 0 || m.sentence >= static_cast<int>(doc.sentences.size()) ||
      m.start < 0 || m.start > m.end ||
      m.end >= static_cast<int>(doc.sentences[m.sentence].tokens.size())) {
    throw Error(ErrorCode::kInvalidArgument,
                "mention (sentence " + std::to_string(m.sentence) + ", tokens " +
                    std::to_string(m.start) + ".." + std::to_string(m.end) +
                    ") lies outside document '" + doc.doc_id + "'");
  }
}

RoleLabel RoleWithTree(const Document &doc, const MentionSpan &m,
                       const std::optional<ParseTree> &tree) {
  const Token &head = doc.sentences[m.sentence].tokens[m.end];
  RoleLabel role;
  role.is_pronoun = IsPronounTag(head.pos);
  if (doc.format == CorpusFormat::kFixture) {
    if (head.gram_tag == "S") role.grammatical = GrammaticalSlot::kSubject;
    if (head.gram_tag == "O") role.grammatical = GrammaticalSlot::kObject;
  } else if (tree) {
    role.grammatical = SlotFromTree(*tree, m);
  }
  return role;
}

}  // namespace

std::string Document::Key() const {
  return doc_id + ":" + std::to_string(part);
}

int Document::ChainSize(EntityId chain) const {
  auto it = chains.find(chain);
  return it == chains.end() ? 0 : static_cast<int>(it->second.size());
}

std::vector<Document> ParseConll(std::istream &in, const std::string &source) {
  std::vector<Document> docs;
  std::optional<DocumentBuilder> current;
  std::string line;
  int number = 0;
  try {
    while (std::getline(in, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::string_view view(line);
      if (view.rfind("#begin document", 0) == 0) {
        if (current) {
          throw ParseError("'#begin document' inside an open document",
                           number);
        }
        auto [id, part] = ParseBeginLine(view, number);
        current.emplace(id, part, number);
        continue;
      }
      if (view.rfind("#end document", 0) == 0) {
        if (!current) {
          throw ParseError("'#end document' without '#begin document'",
                           number);
        }
        docs.push_back(current->Finish(number));
        current.reset();
        continue;
      }
      auto fields = SplitWhitespace(view);
      if (fields.empty()) {
        if (current) current->EndSentence();
        continue;
      }
      if (fields[0].front() == '#') continue;
      if (!current) {
        throw ParseError("token row outside of a document", number);
      }
      current->AddRow(std::move(fields), number);
    }
    if (current) {
      throw ParseError("missing '#end document'", number);
    }
  } catch (const ParseError &e) {
    throw ParseError(source, e.detail(), e.line());
  }
  return docs;
}

std::vector<Document> ParseConllString(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseConll(in);
}

std::vector<Document> ParseConllFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return ParseConll(in, path);
}

void RebuildChains(Document &doc) {
  doc.chains.clear();
  for (const MentionSpan &m : doc.mentions) doc.chains[m.chain].push_back(m);
}

std::vector<std::string> CorefCells(const Document &doc, int sentence) {
  const int n = static_cast<int>(doc.sentences[sentence].tokens.size());
  std::vector<std::vector<std::string>> opens(n), singles(n), closes(n);
  std::vector<const MentionSpan *> spans;
  for (const MentionSpan &m : doc.mentions) {
    if (m.sentence == sentence) spans.push_back(&m);
  }
  // Outer spans open first and close last.
  std::stable_sort(spans.begin(), spans.end(),
                   [](const MentionSpan *a, const MentionSpan *b) {
                     if (a->start != b->start) return a->start < b->start;
                     return a->end > b->end;
                   });
  for (const MentionSpan *m : spans) {
    std::string id = std::to_string(m->chain);
    if (m->start == m->end) {
      singles[m->start].push_back("(" + id + ")");
    } else {
      opens[m->start].push_back("(" + id);
      closes[m->end].insert(closes[m->end].begin(), id + ")");
    }
  }
  std::vector<std::string> cells(n);
  for (int t = 0; t < n; ++t) {
    std::string cell;
    for (const auto *group : {&opens[t], &singles[t], &closes[t]}) {
      for (const std::string &entry : *group) {
        if (!cell.empty()) cell += "|";
        cell += entry;
      }
    }
    cells[t] = cell.empty() ? "-" : cell;
  }
  return cells;
}

void WriteDocument(const Document &doc, std::ostream &out) {
  out << "#begin document (" << doc.doc_id << "); part ";
  std::string part = std::to_string(doc.part);
  if (part.size() < 3) part.insert(0, 3 - part.size(), '0');
  out << part << "\n";
  for (size_t s = 0; s < doc.sentences.size(); ++s) {
    auto cells = CorefCells(doc, static_cast<int>(s));
    const auto &tokens = doc.sentences[s].tokens;
    for (size_t t = 0; t < tokens.size(); ++t) {
      for (const std::string &column : tokens[t].columns) out << column << "\t";
      out << cells[t] << "\n";
    }
    out << "\n";
  }
  out << "#end document\n";
}

std::string WriteDocuments(const std::vector<Document> &docs) {
  std::ostringstream out;
  for (const Document &doc : docs) WriteDocument(doc, out);
  return out.str();
}

bool IsPronounTag(std::string_view pos) {
  return pos == "PRP" || pos == "PRP$" || pos == "WP" || pos == "WP$";
}

RoleLabel GrammaticalRole(const Document &doc, const MentionSpan &mention) {
  CheckMention(doc, mention);
  std::optional<ParseTree> tree;
  if (doc.format == CorpusFormat::kConll2012) {
    tree = ParseTree::FromTokens(doc.sentences[mention.sentence].tokens);
  }
  return RoleWithTree(doc, mention, tree);
}

std::optional<SemanticSlot> SemanticRole(const Document &doc,
                                         const MentionSpan &mention) {
  if (mention.sentence < 0 ||
      mention.sentence >= static_cast<int>(doc.sentences.size())) {
    return std::nullopt;
  }
  const Sentence &sentence = doc.sentences[mention.sentence];
  if (doc.format == CorpusFormat::kFixture) {
    if (mention.end < 0 ||
        mention.end >= static_cast<int>(sentence.tokens.size())) {
      return std::nullopt;
    }
    const std::string &tag = sentence.tokens[mention.end].semantic_tag;
    if (tag.empty()) return std::nullopt;
    return SlotFromLabel(tag);
  }
  if (!sentence.has_srl_columns) return std::nullopt;

  std::vector<const SrlSpan *> exact;
  std::vector<const SrlSpan *> smallest;
  int smallest_width = 0;
  for (const SrlSpan &span : sentence.srl) {
    if (span.label == "V") continue;
    if (span.start == mention.start && span.end == mention.end) {
      exact.push_back(&span);
    }
    if (span.start <= mention.start && span.end >= mention.end) {
      int width = span.end - span.start;
      if (smallest.empty() || width < smallest_width) {
        smallest.assign(1, &span);
        smallest_width = width;
      } else if (width == smallest_width) {
        smallest.push_back(&span);
      }
    }
  }
  if (!exact.empty()) return BestSlot(exact);
  if (!smallest.empty()) return BestSlot(smallest);
  return std::nullopt;
}

RoleLabel MentionRole(const Document &doc, const MentionSpan &mention) {
  RoleLabel role = GrammaticalRole(doc, mention);
  role.semantic = SemanticRole(doc, mention);
  return role;
}

std::vector<RoleLabel> MentionRoles(const Document &doc) {
  std::vector<RoleLabel> roles;
  roles.reserve(doc.mentions.size());
  std::unordered_map<int, std::optional<ParseTree>> trees;
  for (const MentionSpan &m : doc.mentions) {
    CheckMention(doc, m);
    std::optional<ParseTree> *tree = nullptr;
    if (doc.format == CorpusFormat::kConll2012) {
      auto it = trees.find(m.sentence);
      if (it == trees.end()) {
        it = trees
                 .emplace(m.sentence, ParseTree::FromTokens(
                                          doc.sentences[m.sentence].tokens))
                 .first;
      }
      tree = &it->second;
    }
    static const std::optional<ParseTree> kNoTree;
    RoleLabel role = RoleWithTree(doc, m, tree ? *tree : kNoTree);
    role.semantic = SemanticRole(doc, m);
    roles.push_back(role);
  }
  return roles;
}

const char *ToString(GrammaticalSlot slot) {
  switch (slot) {
    case GrammaticalSlot::kSubject:
      return "subject";
    case GrammaticalSlot::kObject:
      return "object";
    case GrammaticalSlot::kOther:
      break;
  }
  return "other";
}

const char *ToString(SemanticSlot slot) {
  switch (slot) {
    case SemanticSlot::kAgent:
      return "agent";
    case SemanticSlot::kPatient:
      return "patient";
    case SemanticSlot::kOther:
      break;
  }
  return "other";
}

}  // namespace centering
