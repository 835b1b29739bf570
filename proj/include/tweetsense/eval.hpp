#ifndef TWEETSENSE_EVAL_HPP_
#define TWEETSENSE_EVAL_HPP_

#include <array>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <string>

#include "tweetsense/bayes_classifier.hpp"
#include "tweetsense/cooccurrence_index.hpp"
#include "tweetsense/corpus.hpp"
#include "tweetsense/so_classifier.hpp"
#include "tweetsense/text.hpp"

namespace tweetsense {

// Per-corpus polarity counts. The four counts always partition the corpus.
struct ClassificationReport {
  std::string corpus_name;
  std::size_t n_tweets = 0;
  std::size_t n_positive = 0;
  std::size_t n_negative = 0;
  std::size_t n_neutral = 0;
  double elapsed_seconds = 0;  // classification only, never asserted on
};

// Row/column index for confusion matrices.
inline std::size_t polarity_index(Polarity p) {
  switch (p) {
    case Polarity::Positive: return 0;
    case Polarity::Negative: return 1;
    case Polarity::Neutral: return 2;
  }
  return 2;
}

// Bayes decision (rows) against Turney decision (columns).
struct AgreementReport {
  std::string corpus_name;
  std::array<std::array<std::size_t, 3>, 3> confusion{};
  std::size_t n_tweets = 0;
  std::size_t n_agree = 0;  // trace of the matrix

  double agreement() const {
    return n_tweets == 0 ? 0.0
                         : static_cast<double>(n_agree) / static_cast<double>(n_tweets);
  }
};

// Classifies a tweet with a trained Bayes model.
struct BayesRunner {
  const BayesModel* model = nullptr;
  const EmoticonLexicon* emoticons = &EmoticonLexicon::defaults();

  Polarity operator()(const Tweet& tweet) const {
    const std::vector<Token> tokens = strip_emoticons(tokenize(tweet.text, *emoticons));
    return classify(*model, tokens).polarity;
  }
};

// Classifies a tweet with the semantic-orientation pipeline.
struct TurneyRunner {
  const ReferenceIndex* index = nullptr;
  const TaggerLexicon* tagger = &TaggerLexicon::defaults();
  const EmoticonLexicon* emoticons = &EmoticonLexicon::defaults();
  ReferenceWords refs;
  double smoothing = kDefaultSoSmoothing;

  Polarity operator()(const Tweet& tweet) const {
    const auto tagged = tag(tokenize(tweet.text, *emoticons), *tagger);
    return classify_tweet(*index, tagged, refs, smoothing).polarity;
  }
};

// Runs one classifier over one corpus. Wall-clock time covers the
// classification loop only (corpus loading and index building happen
// before this is called). Classifier errors are annotated with the corpus
// name.
template <typename Classifier>
ClassificationReport run_report(const Corpus& corpus, const Classifier& classifier) {
  if (corpus.tweets.empty())
    throw Error("corpus '" + corpus.name + "' has no tweets to classify");
  ClassificationReport report;
  report.corpus_name = corpus.name;
  report.n_tweets = corpus.tweets.size();
  const auto started = std::chrono::steady_clock::now();
  try {
    for (const Tweet& tweet : corpus.tweets) {
      switch (classifier(tweet)) {
        case Polarity::Positive: ++report.n_positive; break;
        case Polarity::Negative: ++report.n_negative; break;
        case Polarity::Neutral: ++report.n_neutral; break;
      }
    }
  } catch (const Error& e) {
    throw Error("corpus '" + corpus.name + "': " + e.what());
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

// Pairs the two classifiers per tweet and fills the 3x3 confusion matrix.
template <typename BayesClassifier, typename TurneyClassifier>
AgreementReport compare(const Corpus& corpus, const BayesClassifier& bayes,
                        const TurneyClassifier& turney) {
  if (corpus.tweets.empty())
    throw Error("corpus '" + corpus.name + "' has no tweets to compare");
  AgreementReport report;
  report.corpus_name = corpus.name;
  try {
    for (const Tweet& tweet : corpus.tweets) {
      const std::size_t row = polarity_index(bayes(tweet));
      const std::size_t col = polarity_index(turney(tweet));
      ++report.confusion[row][col];
      ++report.n_tweets;
      if (row == col) ++report.n_agree;
    }
  } catch (const Error& e) {
    throw Error("corpus '" + corpus.name + "': " + e.what());
  }
  return report;
}

// CSV with the column order of the result tables:
// corpus,tweets,positive,negative,neutral,seconds
inline void write_report_header(std::ostream& out) {
  out << "corpus,tweets,positive,negative,neutral,seconds\n";
}

inline void write_report_row(std::ostream& out, const ClassificationReport& r) {
  out << r.corpus_name << "," << r.n_tweets << "," << r.n_positive << ","
      << r.n_negative << "," << r.n_neutral << "," << std::fixed
      << std::setprecision(3) << r.elapsed_seconds << "\n";
  out.unsetf(std::ios_base::floatfield);
}

inline void write_agreement(std::ostream& out, const AgreementReport& r) {
  out << "corpus," << r.corpus_name << "\n";
  out << "tweets," << r.n_tweets << "\n";
  out << "agree," << r.n_agree << "\n";
  out << "agreement," << std::fixed << std::setprecision(4) << r.agreement() << "\n";
  out.unsetf(std::ios_base::floatfield);
  out << "bayes\\turney,positive,negative,neutral\n";
  static constexpr std::array<std::string_view, 3> kLabels = {"positive", "negative",
                                                              "neutral"};
  for (std::size_t row = 0; row < 3; ++row) {
    out << kLabels[row];
    for (std::size_t col = 0; col < 3; ++col) out << "," << r.confusion[row][col];
    out << "\n";
  }
}

}  // namespace tweetsense

#endif  // TWEETSENSE_EVAL_HPP_
