#ifndef TWEETSENSE_PHRASE_EXTRACTOR_HPP_
#define TWEETSENSE_PHRASE_EXTRACTOR_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tweetsense/pos_tagger.hpp"

namespace tweetsense {

// A two-word expression selected by one of the five tag patterns.
// `pattern_row` is 1..5, `position` the index of word1 in the tagged
// sequence. Words are stored normalized (lowercase).
struct CandidatePhrase {
  std::string word1;
  std::string word2;
  int pattern_row = 0;
  std::size_t position = 0;

  bool operator==(const CandidatePhrase&) const = default;
};

inline std::string phrase_text(const CandidatePhrase& p) {
  return p.word1 + " " + p.word2;
}

namespace detail {

inline bool is_common_noun(PosTag t) { return t == PosTag::NN || t == PosTag::NNS; }
inline bool is_proper_noun(PosTag t) { return t == PosTag::NNP || t == PosTag::NNPS; }
inline bool is_rb_adverb(PosTag t) {
  return t == PosTag::RB || t == PosTag::RBR || t == PosTag::RBS;
}
inline bool is_pattern_verb(PosTag t) {
  return t == PosTag::VB || t == PosTag::VBD || t == PosTag::VBN || t == PosTag::VBG;
}

}  // namespace detail

// The pattern table over (tag1, tag2, tag3). Row semantics:
//   1: JJ           + NN|NNS        third anything
//   2: RB|RBR|RBS   + JJ            third not NN nor NNS
//   3: JJ           + JJ            third not NN nor NNS
//   4: NN|NNS       + JJ            third not NN nor NNS
//   5: RB|RBR|RBS   + VB|VBD|VBN|VBG third anything
// A missing third word satisfies both "anything" and "not NN nor NNS".
// Proper nouns never participate. Returns the lowest matching row, 0 if none.
inline int match_pattern_row(PosTag tag1, PosTag tag2, std::optional<PosTag> tag3) {
  using namespace detail;
  if (is_proper_noun(tag1) || is_proper_noun(tag2)) return 0;
  const bool third_not_noun = !tag3.has_value() || !is_common_noun(*tag3);
  if (tag1 == PosTag::JJ && is_common_noun(tag2)) return 1;
  if (is_rb_adverb(tag1) && tag2 == PosTag::JJ && third_not_noun) return 2;
  if (tag1 == PosTag::JJ && tag2 == PosTag::JJ && third_not_noun) return 3;
  if (is_common_noun(tag1) && tag2 == PosTag::JJ && third_not_noun) return 4;
  if (is_rb_adverb(tag1) && is_pattern_verb(tag2)) return 5;
  return 0;
}

// Slides a window of width two over the tagged sequence (no consumption:
// overlapping matches are all emitted) and keeps every pair some row
// accepts. The decision at position i depends only on tags i, i+1, i+2.
inline std::vector<CandidatePhrase> extract(std::span<const TaggedToken> tagged) {
  std::vector<CandidatePhrase> phrases;
  if (tagged.size() < 2) return phrases;
  for (std::size_t i = 0; i + 1 < tagged.size(); ++i) {
    std::optional<PosTag> third;
    if (i + 2 < tagged.size()) third = tagged[i + 2].tag;
    const int row = match_pattern_row(tagged[i].tag, tagged[i + 1].tag, third);
    if (row == 0) continue;
    phrases.push_back(CandidatePhrase{tagged[i].token.normalized,
                                      tagged[i + 1].token.normalized, row, i});
  }
  return phrases;
}

}  // namespace tweetsense

#endif  // TWEETSENSE_PHRASE_EXTRACTOR_HPP_
