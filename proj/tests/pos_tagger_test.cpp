// Lexicon + suffix-rule tagger.

#include "tweetsense/pos_tagger.hpp"

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

using namespace tweetsense;

namespace {

std::vector<PosTag> tags_of(const std::string& text,
                            const TaggerLexicon& lex = TaggerLexicon::defaults()) {
  std::vector<PosTag> out;
  for (const TaggedToken& t : tag(tokenize(text), lex)) out.push_back(t.tag);
  return out;
}

}  // namespace

TEST(PosTagger, PaperExamplePhrase) {
  const auto tagged = tag(tokenize("unforeseeable plot"));
  ASSERT_EQ(2u, tagged.size());
  EXPECT_EQ(PosTag::JJ, tagged[0].tag);
  EXPECT_EQ(PosTag::NN, tagged[1].tag);
}

TEST(PosTagger, EmptyInput) { EXPECT_TRUE(tag(tokenize("")).empty()); }

TEST(PosTagger, CapitalizedMidSentenceIsProperNoun) {
  const auto tags = tags_of("we support Chelsea");
  ASSERT_EQ(3u, tags.size());
  EXPECT_EQ(PosTag::NNP, tags[2]);
}

TEST(PosTagger, SentenceInitialCapitalNotForcedToProperNoun) {
  // "Chelsea" opens the tweet: capitalization rule is skipped and the word
  // falls through suffix rules to the NN default.
  const auto tags = tags_of("Chelsea looked strong");
  ASSERT_EQ(3u, tags.size());
  EXPECT_EQ(PosTag::NN, tags[0]);
}

TEST(PosTagger, SentenceBoundaryResetsInitialFlag) {
  // After the '.' the next word opens a new sentence.
  const auto tags = tags_of("nice. Chelsea");
  ASSERT_EQ(3u, tags.size());
  EXPECT_EQ(PosTag::NN, tags[2]);
  // Without the boundary the same word is a proper noun.
  EXPECT_EQ(PosTag::NNP, tags_of("nice Chelsea")[1]);
}

TEST(PosTagger, LexiconPrecedesCapitalizationAndSuffix) {
  // "Boring" is capitalized mid-sentence and ends in -ing, but the lexicon
  // entry wins.
  const auto tags = tags_of("so Boring");
  ASSERT_EQ(2u, tags.size());
  EXPECT_EQ(PosTag::JJ, tags[1]);
}

TEST(PosTagger, SuffixRulesApplyToUnknownWords) {
  EXPECT_EQ(PosTag::RB, tags_of("he spoke zorply")[2]);
  EXPECT_EQ(PosTag::VBG, tags_of("he was zorpling")[2]);
  EXPECT_EQ(PosTag::VBD, tags_of("he zorped")[1]);
  EXPECT_EQ(PosTag::NNS, tags_of("three zorps")[1]);
  EXPECT_EQ(PosTag::JJR, tags_of("a zorper thing")[1]);
  EXPECT_EQ(PosTag::JJS, tags_of("the zorpest thing")[1]);
}

TEST(PosTagger, ShortWordsSkipSuffixRules) {
  // Stems must keep at least two characters: "ys" is too short for -s and
  // falls to the NN default rather than NNS.
  const auto tags = tags_of("a ys");
  ASSERT_EQ(2u, tags.size());
  EXPECT_EQ(PosTag::NN, tags[1]);
}

TEST(PosTagger, UnknownWordDefaultsToNoun) {
  EXPECT_EQ(PosTag::NN, tags_of("the splorf")[1]);
}

TEST(PosTagger, NonWordTokensAreOther) {
  const auto tagged = tag(tokenize("#tag @user http://x.y :) !"));
  ASSERT_EQ(5u, tagged.size());
  for (const TaggedToken& t : tagged) EXPECT_EQ(PosTag::Other, t.tag);
}

TEST(PosTagger, OutputLengthEqualsInputLength) {
  const auto tokens = tokenize("good day for a #walk :) right?");
  EXPECT_EQ(tokens.size(), tag(tokens).size());
}

// Tag depends only on (word, sentence-initial flag, lexicon): words around
// it may be permuted freely.
TEST(PosTagger, ContextFreeExceptSentenceInitial) {
  const auto a = tags_of("cats quickly Chelsea won");
  const auto b = tags_of("won quickly Chelsea cats");
  ASSERT_EQ(4u, a.size());
  ASSERT_EQ(4u, b.size());
  EXPECT_EQ(a[2], b[2]);  // Chelsea mid-sentence in both
  EXPECT_EQ(a[1], b[1]);  // quickly
}

TEST(PosTagger, EveryLexiconEntryGetsItsLexiconTag) {
  const TaggerLexicon& lex = TaggerLexicon::defaults();
  EXPECT_GE(lex.size(), 2000u);
  std::size_t checked = 0;
  for (const auto& [word, expected] : lex.entries()) {
    const auto tokens = tokenize("x " + word);
    // Entries are plain words; anything that does not tokenize to exactly
    // two word tokens would not be a usable lexicon key.
    ASSERT_EQ(2u, tokens.size()) << word;
    const auto tagged = tag(tokens, lex);
    EXPECT_EQ(expected, tagged[1].tag) << word;
    ++checked;
  }
  EXPECT_EQ(lex.size(), checked);
}

TEST(PosTagger, DefaultLexiconCoversAllPatternTags) {
  const TaggerLexicon& lex = TaggerLexicon::defaults();
  for (PosTag t : kAllPosTags) {
    if (t == PosTag::Other) continue;
    bool found = false;
    for (const auto& [word, wtag] : lex.entries()) {
      if (wtag == t) {
        found = true;
        break;
      }
    }
    EXPECT_TRUE(found) << "no lexicon entry with tag " << to_string(t);
  }
}

TEST(PosTagger, LoadCustomLexiconFile) {
  const std::string path = testing::TempDir() + "/tagger_test.tsv";
  {
    std::ofstream out(path);
    out << "# words\n";
    out << "frob\tJJ\n";
    out << "blick\tVB\n";
    out << "[suffix]\n";
    out << "ward\tRB\n";
  }
  const TaggerLexicon lex = load_tagger_lexicon(path);
  EXPECT_EQ(2u, lex.size());
  EXPECT_EQ(PosTag::JJ, lex.lookup("frob"));
  EXPECT_EQ(PosTag::RB, lex.suffix_tag("homeward"));
  EXPECT_FALSE(lex.suffix_tag("ward").has_value());  // stem too short
  std::remove(path.c_str());
}

TEST(PosTagger, BadTagInFileRejected) {
  const std::string path = testing::TempDir() + "/tagger_bad.tsv";
  {
    std::ofstream out(path);
    out << "frob\tZZ\n";
  }
  EXPECT_THROW(load_tagger_lexicon(path), FormatError);
  std::remove(path.c_str());
}

TEST(PosTagger, MissingLexiconFileIsIoError) {
  EXPECT_THROW(load_tagger_lexicon("/nonexistent/tagger.tsv"), IoError);
}
