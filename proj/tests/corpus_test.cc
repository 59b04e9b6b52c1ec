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

#include <gtest/gtest.h>

#include <sstream>

#include "centering/parse_tree.h"
#include "centering/random.h"
#include "centering/status.h"
#include "support/synthetic.h"
#include "support/test_util.h"

namespace centering {
namespace {

using testing::DataPath;
using testing::LogCapture;

// One CoNLL-2012 row: doc part idx word POS parse lemma frame sense speaker
// NE [args...] coref.
std::string Row(int idx, const std::string &word, const std::string &pos,
                const std::string &parse, const std::string &args,
                const std::string &coref) {
  std::string row = "d\t0\t" + std::to_string(idx) + "\t" + word + "\t" + pos +
                    "\t" + parse + "\t-\t-\t-\t-\t*\t";
  if (!args.empty()) row += args + "\t";
  return row + coref + "\n";
}

std::string Wrap(const std::string &rows) {
  return "#begin document (d); part 000\n" + rows + "\n#end document\n";
}

TEST(ParseConll, WorkedExampleStructure) {
  auto docs = ParseConllFile(DataPath("john_mike.conll"));
  ASSERT_EQ(docs.size(), 1u);
  const Document &d = docs[0];
  EXPECT_EQ(d.Key(), "worked/john_mike:0");
  EXPECT_EQ(d.format, CorpusFormat::kConll2012);
  ASSERT_EQ(d.sentences.size(), 5u);
  EXPECT_EQ(d.sentences[0].tokens.size(), 12u);
  EXPECT_TRUE(d.sentences[0].has_srl_columns);
  EXPECT_EQ(d.ChainSize(0), 7);  // John / he / his
  EXPECT_EQ(d.ChainSize(4), 3);  // Mike
  EXPECT_EQ(d.ChainSize(1), 1);
  EXPECT_EQ(d.ChainSize(99), 0);
  // "his vacation" nests "his".
  const MentionSpan vacation{0, 9, 10, 2};
  const MentionSpan his{0, 9, 9, 0};
  EXPECT_NE(std::find(d.mentions.begin(), d.mentions.end(), vacation),
            d.mentions.end());
  EXPECT_NE(std::find(d.mentions.begin(), d.mentions.end(), his),
            d.mentions.end());
  EXPECT_TRUE(std::is_sorted(d.mentions.begin(), d.mentions.end()));
}

TEST(ParseConll, MultiTokenAndNestedSameChain) {
  auto docs = ParseConllString(
      Wrap(Row(0, "the", "DT", "(TOP(NP(NP*", "", "(3") +
           Row(1, "man", "NN", "*)", "", "(3)") +  // nested, same chain
           Row(2, "here", "RB", "(ADVP*)))", "", "3)")));
  ASSERT_EQ(docs.size(), 1u);
  ASSERT_EQ(docs[0].mentions.size(), 2u);
  EXPECT_EQ(docs[0].mentions[0], (MentionSpan{0, 0, 2, 3}));
  EXPECT_EQ(docs[0].mentions[1], (MentionSpan{0, 1, 1, 3}));
}

TEST(ParseConll, CloseWithoutOpenNamesLine) {
  std::string text = Wrap(Row(0, "a", "DT", "(TOP*", "", "-") +
                          Row(1, "b", "NN", "*)", "", "7)"));
  try {
    ParseConllString(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos);
  }
}

TEST(ParseConll, UnclosedMentionIsAnError) {
  EXPECT_THROW(ParseConllString(Wrap(Row(0, "a", "DT", "(TOP*)", "", "(4"))),
               ParseError);
}

TEST(ParseConll, NonIntegerChainIsAnError) {
  EXPECT_THROW(ParseConllString(Wrap(Row(0, "a", "DT", "(TOP*)", "", "(x)"))),
               ParseError);
}

TEST(ParseConll, RaggedRowIsAnError) {
  std::string text = Wrap(Row(0, "a", "DT", "(TOP*", "(ARG0*)", "-") +
                          Row(1, "b", "NN", "*)", "", "-"));
  EXPECT_THROW(ParseConllString(text), ParseError);
}

TEST(ParseConll, TooFewColumnsIsAnError) {
  EXPECT_THROW(ParseConllString("#begin document (d); part 000\nd 0 a\n"
                                "#end document\n"),
               ParseError);
}

TEST(ParseConll, TokenIndexMustContinue) {
  std::string text = Wrap(Row(0, "a", "DT", "(TOP*", "", "-") +
                          Row(5, "b", "NN", "*)", "", "-"));
  EXPECT_THROW(ParseConllString(text), ParseError);
}

TEST(ParseConll, MissingFileIsIoError) {
  try {
    ParseConllFile(DataPath("does_not_exist.conll"));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(ParseConll, FileErrorsNameTheSource) {
  try {
    ParseConllFile(DataPath("bad/unclosed.conll"));
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_NE(e.source().find("unclosed.conll"), std::string::npos);
    EXPECT_GT(e.line(), 0);
  }
}

TEST(ParseConll, DuplicateSpanSameChainDroppedWithWarning) {
  LogCapture log;
  auto docs = ParseConllString(
      Wrap(Row(0, "a", "DT", "(TOP*)", "", "(2)|(2)")));
  EXPECT_EQ(docs[0].mentions.size(), 1u);
  EXPECT_TRUE(log.Contains("duplicate"));
}

TEST(ParseConll, DuplicateSpanDifferentChainsIsAnError) {
  EXPECT_THROW(
      ParseConllString(Wrap(Row(0, "a", "DT", "(TOP*)", "", "(2)|(3)"))),
      ParseError);
}

TEST(ParseConll, FixtureFormat) {
  auto docs = ParseConllFile(DataPath("nocb_fixture.conll"));
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].format, CorpusFormat::kFixture);
  EXPECT_EQ(docs[0].Key(), "fixture/nocb_three:0");
  ASSERT_EQ(docs[0].sentences.size(), 3u);
  EXPECT_EQ(docs[0].sentences[2].tokens[2].gram_tag, "O");
  EXPECT_EQ(docs[0].ChainSize(2), 2);
}

TEST(ParseConll, FixtureRejectsUnknownTags) {
  EXPECT_THROW(ParseConllString("#begin document (f); part 000\n"
                                "f 0 Ann NNP/Q (1)\n#end document\n"),
               ParseError);
  EXPECT_THROW(ParseConllString("#begin document (f); part 000\n"
                                "f 0 Ann NNP/S/A7 (1)\n#end document\n"),
               ParseError);
}

TEST(ParseConll, FixtureSentenceNumberStartsSentence) {
  auto docs = ParseConllString("#begin document (f); part 000\n"
                               "f 0 Ann NNP/S (1)\n"
                               "f 1 She PRP/S (1)\n"
                               "#end document\n");
  ASSERT_EQ(docs[0].sentences.size(), 2u);
}

TEST(WriteDocuments, RoundTripsBrackets) {
  for (const char *name : {"john_mike.conll", "nocb_fixture.conll"}) {
    auto docs = ParseConllFile(DataPath(name));
    std::string written = WriteDocuments(docs);
    auto again = ParseConllString(written);
    ASSERT_EQ(again.size(), docs.size()) << name;
    for (size_t i = 0; i < docs.size(); ++i) {
      EXPECT_EQ(again[i].mentions, docs[i].mentions) << name;
      EXPECT_EQ(WriteDocuments({again[i]}), WriteDocuments({docs[i]}));
    }
  }
}

// Random nested mention sets survive write -> parse.
TEST(WriteDocuments, RandomMentionRoundTrip) {
  SeededRng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    testing::FixtureBuilder b("rt");
    const int sentences = 1 + static_cast<int>(rng.Below(3));
    for (int s = 0; s < sentences; ++s) {
      b.NewSentence();
      const int len = 1 + static_cast<int>(rng.Below(6));
      for (int t = 0; t < len; ++t) b.Word("w", "NN");
    }
    Document doc = b.Build();
    std::set<std::pair<int, std::pair<int, int>>> used;
    const int k = static_cast<int>(rng.Below(8));
    for (int i = 0; i < k; ++i) {
      const int s = static_cast<int>(rng.Below(sentences));
      const int len = static_cast<int>(doc.sentences[s].tokens.size());
      int a = static_cast<int>(rng.Below(len));
      int c = static_cast<int>(rng.Below(len));
      if (a > c) std::swap(a, c);
      const auto chain = static_cast<EntityId>(rng.Below(4));
      // Crossing spans of one chain have no bracket encoding.
      bool crosses = false;
      for (const MentionSpan &m : doc.mentions) {
        if (m.sentence != s || m.chain != chain) continue;
        crosses |= (m.start < a && a <= m.end && m.end < c) ||
                   (a < m.start && m.start <= c && c < m.end);
      }
      if (crosses || !used.insert({s, {a, c}}).second) continue;
      doc.mentions.push_back({s, a, c, chain});
    }
    std::sort(doc.mentions.begin(), doc.mentions.end());
    RebuildChains(doc);
    auto again = ParseConllString(WriteDocuments({doc}));
    ASSERT_EQ(again.size(), 1u);
    EXPECT_EQ(again[0].mentions, doc.mentions) << WriteDocuments({doc});
  }
}

TEST(CorefCells, JoinsEntriesWithBars) {
  auto docs = ParseConllFile(DataPath("john_mike.conll"));
  auto cells = CorefCells(docs[0], 0);
  EXPECT_EQ(cells[0], "(0)");
  EXPECT_EQ(cells[1], "-");
  EXPECT_EQ(cells[9], "(2|(0)");
  EXPECT_EQ(cells[10], "2)");
}

TEST(IsPronounTag, TagSet) {
  for (const char *t : {"PRP", "PRP$", "WP", "WP$"}) EXPECT_TRUE(IsPronounTag(t));
  for (const char *t : {"NN", "NNP", "DT", "prp"}) EXPECT_FALSE(IsPronounTag(t));
}

class WorkedExampleRoles : public ::testing::Test {
 protected:
  void SetUp() override { doc_ = ParseConllFile(DataPath("john_mike.conll"))[0]; }
  RoleLabel Role(int s, int a, int b) {
    return MentionRole(doc_, {s, a, b, 0});
  }
  Document doc_;
};

TEST_F(WorkedExampleRoles, SubjectsFromClauseStructure) {
  EXPECT_EQ(Role(0, 0, 0).grammatical, GrammaticalSlot::kSubject);  // John
  EXPECT_FALSE(Role(0, 0, 0).is_pronoun);
  RoleLabel he = Role(1, 0, 0);
  EXPECT_EQ(he.grammatical, GrammaticalSlot::kSubject);
  EXPECT_TRUE(he.is_pronoun);
  EXPECT_EQ(Role(3, 0, 0).grammatical, GrammaticalSlot::kSubject);  // Mike
}

TEST_F(WorkedExampleRoles, ObjectsFollowAVerb) {
  EXPECT_EQ(Role(2, 3, 3).grammatical, GrammaticalSlot::kObject);  // Mike
  EXPECT_EQ(Role(3, 3, 3).grammatical, GrammaticalSlot::kObject);  // John
  // "his" inside the object NP "his vacation".
  RoleLabel his = Role(0, 9, 9);
  EXPECT_EQ(his.grammatical, GrammaticalSlot::kObject);
  EXPECT_TRUE(his.is_pronoun);
}

TEST_F(WorkedExampleRoles, PrepositionalObjectIsOther) {
  EXPECT_EQ(Role(0, 7, 7).grammatical, GrammaticalSlot::kOther);  // trouble
}

TEST_F(WorkedExampleRoles, SemanticFromSrl) {
  EXPECT_EQ(Role(0, 0, 0).semantic, SemanticSlot::kAgent);
  EXPECT_EQ(Role(3, 3, 3).semantic, SemanticSlot::kPatient);
  // Smallest covering argument of "trouble" is ARG1 "a lot of trouble".
  EXPECT_EQ(Role(0, 7, 7).semantic, SemanticSlot::kPatient);
  // "his vacation" sits in ARGM-ADV.
  EXPECT_EQ(Role(0, 9, 10).semantic, SemanticSlot::kOther);
  // "yesterday"-like adjuncts aside, the final period has no argument.
  EXPECT_EQ(SemanticRole(doc_, {0, 11, 11, 0}), std::nullopt);
}

TEST_F(WorkedExampleRoles, MentionRolesMatchesPerMention) {
  auto roles = MentionRoles(doc_);
  ASSERT_EQ(roles.size(), doc_.mentions.size());
  for (size_t i = 0; i < roles.size(); ++i) {
    EXPECT_EQ(roles[i], MentionRole(doc_, doc_.mentions[i])) << i;
  }
}

TEST_F(WorkedExampleRoles, OutsideDocumentIsAnError) {
  EXPECT_THROW(GrammaticalRole(doc_, {9, 0, 0, 0}), Error);
  EXPECT_THROW(GrammaticalRole(doc_, {0, 5, 40, 0}), Error);
}

TEST(GrammaticalRole, UnparseableBitsFallBackToOther) {
  auto docs = ParseConllString(
      Wrap(Row(0, "He", "PRP", "(TOP(S(NP*)", "", "(1)") +
           Row(1, "ran", "VBD", "(VP*)", "", "-")));  // unbalanced
  RoleLabel r = GrammaticalRole(docs[0], docs[0].mentions[0]);
  EXPECT_EQ(r.grammatical, GrammaticalSlot::kOther);
  EXPECT_TRUE(r.is_pronoun);
}

TEST(SemanticRole, NoSrlColumnsIsAbsent) {
  auto docs = ParseConllString(Wrap(Row(0, "He", "PRP", "(TOP(S(NP*))", "", "(1)")));
  EXPECT_EQ(SemanticRole(docs[0], docs[0].mentions[0]), std::nullopt);
}

TEST(SemanticRole, NoCoveringArgumentIsAbsent) {
  auto docs = ParseConllString(
      Wrap(Row(0, "He", "PRP", "(TOP(S(NP*)", "*", "(1)") +
           Row(1, "ran", "VBD", "(VP*)", "(V*)", "-") +
           Row(2, "home", "NN", "(NP*)))", "(ARG1*)", "-")));
  EXPECT_EQ(SemanticRole(docs[0], docs[0].mentions[0]), std::nullopt);
}

TEST(SemanticRole, ExactSpanBeatsSmallestCovering) {
  // Predicate 1 marks "the dog" as ARG1; predicate 2 marks "dog" alone as
  // ARG0. The exact match wins for "the dog".
  auto docs = ParseConllString(
      Wrap(Row(0, "the", "DT", "(TOP(NP*", "(ARG1*\t*", "(5") +
           Row(1, "dog", "NN", "*))", "*)\t(ARG0*)", "5)")));
  EXPECT_EQ(SemanticRole(docs[0], docs[0].mentions[0]), SemanticSlot::kPatient);
}

TEST(ParseTree, StripsFunctionTagsAndCovers) {
  auto docs = ParseConllFile(DataPath("john_mike.conll"));
  auto tree = ParseTree::FromTokens(docs[0].sentences[2].tokens);
  ASSERT_TRUE(tree.has_value());
  const int np = tree->SmallestCovering(8, 9, "NP");
  ASSERT_GE(np, 0);
  EXPECT_EQ(tree->node(np).start, 8);
  EXPECT_EQ(tree->node(np).end, 9);
  EXPECT_EQ(tree->SmallestCovering(0, 10, "NP"), -1);
  EXPECT_EQ(tree->ToString(docs[0].sentences[2].tokens).rfind("(TOP (S", 0), 0u);
}

TEST(ParseTree, FunctionTagStripping) {
  std::vector<Token> tokens(2);
  tokens[0].pos = "PRP";
  tokens[0].parse_bit = "(TOP(S(NP-SBJ*)";
  tokens[1].pos = "VBD";
  tokens[1].parse_bit = "(VP*)))";
  auto tree = ParseTree::FromTokens(tokens);
  ASSERT_TRUE(tree.has_value());
  EXPECT_GE(tree->SmallestCovering(0, 0, "NP"), 0);
  EXPECT_EQ(tree->SmallestCovering(0, 0, "NP-SBJ"), -1);
}

TEST(ParseTree, MalformedBitsGiveNothing) {
  std::vector<Token> tokens(1);
  tokens[0].pos = "NN";
  tokens[0].parse_bit = "(NP*))";
  EXPECT_FALSE(ParseTree::FromTokens(tokens).has_value());
  tokens[0].parse_bit = "(NP";
  EXPECT_FALSE(ParseTree::FromTokens(tokens).has_value());
}

}  // namespace
}  // namespace centering
