#ifndef TWEETSENSE_SO_CLASSIFIER_HPP_
#define TWEETSENSE_SO_CLASSIFIER_HPP_

#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tweetsense/cooccurrence_index.hpp"
#include "tweetsense/phrase_extractor.hpp"
#include "tweetsense/pos_tagger.hpp"

namespace tweetsense {

// The two anchor words semantic orientation is measured against.
struct ReferenceWords {
  std::string positive_ref = "excellent";
  std::string negative_ref = "poor";

  void validate() const {
    if (positive_ref.empty() || negative_ref.empty())
      throw ConfigError("reference words must be non-empty");
    if (detail::lowercase(positive_ref) == detail::lowercase(negative_ref))
      throw ConfigError("reference words must be distinct");
  }
};

// The four document counts behind one semantic-orientation score.
struct HitCounts {
  std::size_t phrase_near_pos = 0;  // hits(phrase NEAR positive_ref)
  std::size_t phrase_near_neg = 0;  // hits(phrase NEAR negative_ref)
  std::size_t pos_ref = 0;          // hits(positive_ref)
  std::size_t neg_ref = 0;          // hits(negative_ref)
};

inline constexpr double kDefaultSoSmoothing = 0.01;

// Pointwise mutual information with probabilities estimated as document
// frequencies: log2( N * hits_near(a,b) / (hits(a) * hits(b)) ). Requires
// both marginals to be positive; a zero joint count yields -infinity.
inline double pmi(const ReferenceIndex& index, std::string_view a,
                  std::string_view b) {
  const double ha = static_cast<double>(index.hits(a));
  const double hb = static_cast<double>(index.hits(b));
  if (ha == 0 || hb == 0)
    throw ConfigError("pmi undefined: zero marginal count for '" +
                      std::string(ha == 0 ? a : b) + "'");
  const double joint = static_cast<double>(index.hits_near(a, b));
  const double n = static_cast<double>(index.doc_count());
  return std::log2(joint * n / (ha * hb));
}

inline void require_reference_hits(const ReferenceIndex& index,
                                   const ReferenceWords& refs) {
  refs.validate();
  for (const std::string& word : {refs.positive_ref, refs.negative_ref}) {
    if (index.hits(word) == 0)
      throw ConfigError(
          "reference word '" + word +
          "' does not occur in the reference index; supply a background "
          "corpus containing both reference words");
  }
}

// The smoothed score. Smoothing is added only to the two NEAR counts; the
// reference-word counts must be positive for the score to be defined.
inline double so_from_counts(const HitCounts& counts,
                             double smoothing = kDefaultSoSmoothing) {
  const double numerator =
      (static_cast<double>(counts.phrase_near_pos) + smoothing) *
      static_cast<double>(counts.neg_ref);
  const double denominator =
      (static_cast<double>(counts.phrase_near_neg) + smoothing) *
      static_cast<double>(counts.pos_ref);
  return std::log2(numerator / denominator);
}

inline HitCounts collect_hits(const ReferenceIndex& index, std::string_view phrase,
                              const ReferenceWords& refs) {
  require_reference_hits(index, refs);
  HitCounts counts;
  counts.pos_ref = index.hits(refs.positive_ref);
  counts.neg_ref = index.hits(refs.negative_ref);
  counts.phrase_near_pos = index.hits_near(phrase, refs.positive_ref);
  counts.phrase_near_neg = index.hits_near(phrase, refs.negative_ref);
  return counts;
}

// Semantic orientation of one phrase against the reference words.
inline double so_phrase(const ReferenceIndex& index, std::string_view phrase,
                        const ReferenceWords& refs = {},
                        double smoothing = kDefaultSoSmoothing) {
  return so_from_counts(collect_hits(index, phrase, refs), smoothing);
}

struct PhraseScore {
  CandidatePhrase phrase;
  double so = 0;
};

// Outcome of the three-step pipeline on one tweet. When no candidate phrase
// exists the tweet is Neutral and `average_so` is reported as 0 with
// `has_phrases` false.
struct TurneyResult {
  Polarity polarity = Polarity::Neutral;
  double average_so = 0;
  bool has_phrases = false;
  std::vector<PhraseScore> scores;
};

// Step 1 extract, step 2 score each phrase, step 3 average and take the
// sign: positive average -> Positive, negative -> Negative, exactly zero
// (or no phrases) -> Neutral. Repeated phrases count per occurrence.
inline TurneyResult classify_tweet(const ReferenceIndex& index,
                                   std::span<const TaggedToken> tagged,
                                   const ReferenceWords& refs = {},
                                   double smoothing = kDefaultSoSmoothing) {
  TurneyResult result;
  std::vector<CandidatePhrase> phrases = extract(tagged);
  if (phrases.empty()) return result;
  result.has_phrases = true;
  double sum = 0;
  result.scores.reserve(phrases.size());
  for (CandidatePhrase& phrase : phrases) {
    const double so = so_phrase(index, phrase_text(phrase), refs, smoothing);
    sum += so;
    result.scores.push_back(PhraseScore{std::move(phrase), so});
  }
  result.average_so = sum / static_cast<double>(result.scores.size());
  if (result.average_so > 0)
    result.polarity = Polarity::Positive;
  else if (result.average_so < 0)
    result.polarity = Polarity::Negative;
  else
    result.polarity = Polarity::Neutral;
  return result;
}

}  // namespace tweetsense

#endif  // TWEETSENSE_SO_CLASSIFIER_HPP_
