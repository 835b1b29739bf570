// Two-word pattern extraction, including the exhaustive decision-table
// check against an independent transcription of the five rows.

#include "tweetsense/phrase_extractor.hpp"

#include <optional>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "tweetsense/pos_tagger.hpp"
#include "tweetsense/text.hpp"

using namespace tweetsense;

namespace {

// Builds a synthetic tagged sequence w0 w1 ... with the given tags.
std::vector<TaggedToken> tagged_with(const std::vector<PosTag>& tags) {
  std::vector<TaggedToken> out;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    Token t;
    t.surface = "w" + std::to_string(i);
    t.normalized = t.surface;
    t.position = i;
    t.kind = TokenKind::Word;
    out.push_back(TaggedToken{std::move(t), tags[i]});
  }
  return out;
}

// Literal transcription of the five pattern rows, written independently of
// the implementation. Returns the matching row or 0.
int table_row(PosTag t1, PosTag t2, std::optional<PosTag> t3) {
  auto noun = [](PosTag t) { return t == PosTag::NN || t == PosTag::NNS; };
  auto adv = [](PosTag t) { return t == PosTag::RB || t == PosTag::RBR || t == PosTag::RBS; };
  auto verb = [](PosTag t) {
    return t == PosTag::VB || t == PosTag::VBD || t == PosTag::VBN || t == PosTag::VBG;
  };
  auto proper = [](PosTag t) { return t == PosTag::NNP || t == PosTag::NNPS; };
  if (proper(t1) || proper(t2)) return 0;
  const bool third_ok_strict = !(t3.has_value() && noun(*t3));
  if (t1 == PosTag::JJ && noun(t2)) return 1;
  if (adv(t1) && t2 == PosTag::JJ && third_ok_strict) return 2;
  if (t1 == PosTag::JJ && t2 == PosTag::JJ && third_ok_strict) return 3;
  if (noun(t1) && t2 == PosTag::JJ && third_ok_strict) return 4;
  if (adv(t1) && verb(t2)) return 5;
  return 0;
}

// Row of the phrase emitted at position 0, or 0 when none is.
int extracted_row_at_zero(const std::vector<TaggedToken>& tagged) {
  for (const CandidatePhrase& p : extract(tagged)) {
    if (p.position == 0) return p.pattern_row;
  }
  return 0;
}

}  // namespace

TEST(PhraseExtractor, Row1AdjectiveNoun) {
  const auto phrases = extract(tagged_with({PosTag::JJ, PosTag::NN}));
  ASSERT_EQ(1u, phrases.size());
  EXPECT_EQ(1, phrases[0].pattern_row);
  EXPECT_EQ("w0", phrases[0].word1);
  EXPECT_EQ("w1", phrases[0].word2);
  EXPECT_EQ(0u, phrases[0].position);
}

TEST(PhraseExtractor, Row2SuppressedByThirdNoun) {
  // RB JJ NN: the (RB, JJ) pair is blocked by the third word, while the
  // (JJ, NN) pair at position 1 matches row 1.
  const auto phrases = extract(tagged_with({PosTag::RB, PosTag::JJ, PosTag::NN}));
  ASSERT_EQ(1u, phrases.size());
  EXPECT_EQ(1, phrases[0].pattern_row);
  EXPECT_EQ(1u, phrases[0].position);
}

TEST(PhraseExtractor, ProperNounsNeverExtracted) {
  EXPECT_TRUE(extract(tagged_with({PosTag::NNP, PosTag::JJ})).empty());
  EXPECT_TRUE(extract(tagged_with({PosTag::JJ, PosTag::NNP})).empty());
  EXPECT_TRUE(extract(tagged_with({PosTag::NNPS, PosTag::JJ, PosTag::VB})).empty());
}

TEST(PhraseExtractor, MissingThirdWordSatisfiesExclusion) {
  const auto phrases = extract(tagged_with({PosTag::RB, PosTag::JJ}));
  ASSERT_EQ(1u, phrases.size());
  EXPECT_EQ(2, phrases[0].pattern_row);
}

TEST(PhraseExtractor, Row5ThirdWordUnconstrained) {
  const auto phrases = extract(tagged_with({PosTag::RB, PosTag::VBG, PosTag::NN}));
  ASSERT_EQ(1u, phrases.size());
  EXPECT_EQ(5, phrases[0].pattern_row);
}

TEST(PhraseExtractor, EmptyAndSingleTokenInputs) {
  EXPECT_TRUE(extract(tagged_with({})).empty());
  EXPECT_TRUE(extract(tagged_with({PosTag::JJ})).empty());
}

TEST(PhraseExtractor, OverlappingMatchesAllEmitted) {
  // JJ JJ JJ: both windows match row 3; emitting at 0 does not consume 1.
  const auto a = extract(tagged_with({PosTag::JJ, PosTag::JJ, PosTag::JJ}));
  ASSERT_EQ(2u, a.size());
  EXPECT_EQ(3, a[0].pattern_row);
  EXPECT_EQ(0u, a[0].position);
  EXPECT_EQ(3, a[1].pattern_row);
  EXPECT_EQ(1u, a[1].position);
}

TEST(PhraseExtractor, RepeatedPhraseEmittedPerOccurrence) {
  const auto phrases =
      extract(tagged_with({PosTag::JJ, PosTag::NN, PosTag::JJ, PosTag::NN}));
  // Positions 0 (JJ NN), 1 (NN JJ with third NN -> blocked), 2 (JJ NN).
  ASSERT_EQ(2u, phrases.size());
  EXPECT_EQ(0u, phrases[0].position);
  EXPECT_EQ(2u, phrases[1].position);
}

TEST(PhraseExtractor, EndToEndFromText) {
  const auto tagged = tag(tokenize("the unforeseeable plot"));
  const auto phrases = extract(tagged);
  ASSERT_EQ(1u, phrases.size());
  EXPECT_EQ("unforeseeable", phrases[0].word1);
  EXPECT_EQ("plot", phrases[0].word2);
  EXPECT_EQ(1, phrases[0].pattern_row);
  EXPECT_EQ("unforeseeable plot", phrase_text(phrases[0]));
}

TEST(PhraseExtractor, PunctuationBreaksAdjacency) {
  // "good, thing": the OTHER-tagged comma sits between the words, so no
  // window of two consecutive tokens matches.
  const auto tagged = tag(tokenize("good, thing"));
  EXPECT_TRUE(extract(tagged).empty());
}

// Full decision-table equivalence over every (tag1, tag2, tag3) triple and
// every (tag1, tag2, absent) pair.
TEST(PhraseExtractor, MatchesLiteralTableOnAllTriples) {
  for (PosTag t1 : kAllPosTags) {
    for (PosTag t2 : kAllPosTags) {
      EXPECT_EQ(table_row(t1, t2, std::nullopt),
                extracted_row_at_zero(tagged_with({t1, t2})))
          << to_string(t1) << " " << to_string(t2) << " <absent>";
      for (PosTag t3 : kAllPosTags) {
        EXPECT_EQ(table_row(t1, t2, t3),
                  extracted_row_at_zero(tagged_with({t1, t2, t3})))
            << to_string(t1) << " " << to_string(t2) << " " << to_string(t3);
      }
    }
  }
}

// The decision at position i never depends on tokens past i+2.
TEST(PhraseExtractor, DecisionLocalToWindow) {
  for (PosTag t1 : {PosTag::JJ, PosTag::RB, PosTag::NN}) {
    for (PosTag t2 : {PosTag::JJ, PosTag::NN, PosTag::VB}) {
      for (PosTag t3 : {PosTag::JJ, PosTag::NN, PosTag::Other}) {
        const int base = extracted_row_at_zero(tagged_with({t1, t2, t3}));
        for (PosTag extra : kAllPosTags) {
          EXPECT_EQ(base, extracted_row_at_zero(tagged_with({t1, t2, t3, extra})));
        }
      }
    }
  }
}
