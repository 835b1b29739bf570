#ifndef TWEETSENSE_BAYES_CLASSIFIER_HPP_
#define TWEETSENSE_BAYES_CLASSIFIER_HPP_

#include <cmath>
#include <fstream>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tweetsense/corpus.hpp"
#include "tweetsense/serialize.hpp"
#include "tweetsense/text.hpp"

namespace tweetsense {

// Multinomial Naive Bayes over the two emoticon-supervised classes.
// Neutral is never trained; it falls out of the tie and no-evidence rules
// in classify(). A trained model is immutable and safe to share across
// threads.
struct BayesModel {
  std::size_t docs_positive = 0;
  std::size_t docs_negative = 0;
  std::unordered_map<std::string, std::size_t> counts_positive;
  std::unordered_map<std::string, std::size_t> counts_negative;
  std::size_t total_positive = 0;  // sum of counts_positive values
  std::size_t total_negative = 0;
  std::unordered_set<std::string> vocabulary;
  double alpha = 1.0;
  double tie_epsilon = 1e-9;

  double prior(Polarity c) const {
    const double total = static_cast<double>(docs_positive + docs_negative);
    const double docs = static_cast<double>(c == Polarity::Positive ? docs_positive
                                                                    : docs_negative);
    return docs / total;
  }
};

struct TrainReport {
  std::size_t n_documents = 0;
  std::size_t n_positive = 0;
  std::size_t n_negative = 0;
  std::size_t n_excluded = 0;  // no emoticon label, or conflicting emoticons
};

// Labels every tweet by its emoticons and accumulates word counts per
// class. Features are the normalized Word tokens with emoticons stripped
// (the emoticons are the labels; counting them would be leakage). Tweets
// with no label or with emoticons of both polarities are excluded.
inline std::pair<BayesModel, TrainReport> train(
    const Corpus& corpus,
    const EmoticonLexicon& emoticons = EmoticonLexicon::defaults(),
    double alpha = 1.0, double tie_epsilon = 1e-9) {
  if (alpha <= 0) throw ConfigError("alpha must be > 0");
  if (tie_epsilon < 0) throw ConfigError("tie_epsilon must be >= 0");
  BayesModel model;
  model.alpha = alpha;
  model.tie_epsilon = tie_epsilon;
  TrainReport report;
  report.n_documents = corpus.tweets.size();
  for (const Tweet& tweet : corpus.tweets) {
    const std::vector<Token> tokens = tokenize(tweet.text, emoticons);
    const auto label = emoticon_polarity(tokens, emoticons);
    if (!label) {
      ++report.n_excluded;
      continue;
    }
    const bool positive = *label == Polarity::Positive;
    (positive ? report.n_positive : report.n_negative)++;
    (positive ? model.docs_positive : model.docs_negative)++;
    auto& counts = positive ? model.counts_positive : model.counts_negative;
    auto& total = positive ? model.total_positive : model.total_negative;
    for (const Token& t : strip_emoticons(tokens)) {
      if (t.kind != TokenKind::Word) continue;
      ++counts[t.normalized];
      ++total;
      model.vocabulary.insert(t.normalized);
    }
  }
  if (model.docs_positive == 0)
    throw TrainError("corpus '" + corpus.name +
                     "' has no Positive training examples (no happy emoticons)");
  if (model.docs_negative == 0)
    throw TrainError("corpus '" + corpus.name +
                     "' has no Negative training examples (no sad emoticons)");
  return {std::move(model), report};
}

struct BayesScores {
  double log_positive = 0;
  double log_negative = 0;
};

// log P(C) + sum over Word tokens of log((count(w|C)+alpha) /
// (total(C)+alpha*|V|)). Out-of-vocabulary words use count 0 under the
// same smoothing. Natural logarithms; only the difference matters.
inline BayesScores log_posterior(const BayesModel& model,
                                 std::span<const Token> tokens) {
  const double v = static_cast<double>(model.vocabulary.size());
  const double denom_pos = static_cast<double>(model.total_positive) + model.alpha * v;
  const double denom_neg = static_cast<double>(model.total_negative) + model.alpha * v;
  BayesScores scores{std::log(model.prior(Polarity::Positive)),
                     std::log(model.prior(Polarity::Negative))};
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::Word) continue;
    auto count_of = [&](const std::unordered_map<std::string, std::size_t>& counts) {
      auto it = counts.find(t.normalized);
      return it == counts.end() ? 0.0 : static_cast<double>(it->second);
    };
    scores.log_positive +=
        std::log((count_of(model.counts_positive) + model.alpha) / denom_pos);
    scores.log_negative +=
        std::log((count_of(model.counts_negative) + model.alpha) / denom_neg);
  }
  return scores;
}

struct BayesResult {
  Polarity polarity = Polarity::Neutral;
  BayesScores scores;
};

// Argmax of the log posterior. A tweet with no Word tokens carries no
// evidence and is Neutral, as is a score gap within tie_epsilon.
inline BayesResult classify(const BayesModel& model, std::span<const Token> tokens) {
  BayesResult result;
  result.scores = log_posterior(model, tokens);
  const bool has_words =
      std::any_of(tokens.begin(), tokens.end(),
                  [](const Token& t) { return t.kind == TokenKind::Word; });
  if (!has_words) return result;
  const double gap = result.scores.log_positive - result.scores.log_negative;
  if (std::abs(gap) <= model.tie_epsilon)
    result.polarity = Polarity::Neutral;
  else
    result.polarity = gap > 0 ? Polarity::Positive : Polarity::Negative;
  return result;
}

inline constexpr std::string_view kModelVersionLine = "tweetsense-model v1";

// Plain-text persistence. Layout:
//   tweetsense-model v1
//   alpha <a>
//   tie_epsilon <e>
//   docs <positive> <negative>
//   words positive <k>
//   <word> <count>      (k lines, sorted)
//   words negative <k>
//   <word> <count>
//   end
inline void save_model(const BayesModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write model file: " + path);
  out << kModelVersionLine << "\n";
  out << "alpha " << detail::format_double(model.alpha) << "\n";
  out << "tie_epsilon " << detail::format_double(model.tie_epsilon) << "\n";
  out << "docs " << model.docs_positive << " " << model.docs_negative << "\n";
  auto dump = [&out](std::string_view label,
                     const std::unordered_map<std::string, std::size_t>& counts) {
    out << "words " << label << " " << counts.size() << "\n";
    std::vector<const std::string*> words;
    words.reserve(counts.size());
    for (const auto& [word, _] : counts) words.push_back(&word);
    std::sort(words.begin(), words.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    for (const std::string* word : words) out << *word << " " << counts.at(*word) << "\n";
  };
  dump("positive", model.counts_positive);
  dump("negative", model.counts_negative);
  out << "end\n";
  if (!out) throw IoError("write failed: " + path);
}

inline BayesModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model file: " + path);
  detail::expect_version_line(in, kModelVersionLine);
  BayesModel model;
  auto kv = [&](std::string_view key) {
    auto fields = detail::split_fields(detail::read_line(in, std::string(key) + " line"));
    if (fields.size() != 2 || fields[0] != key)
      throw FormatError(path + ": expected '" + std::string(key) + " <value>'");
    return std::string(fields[1]);
  };
  model.alpha = detail::parse_double(kv("alpha"), "alpha");
  model.tie_epsilon = detail::parse_double(kv("tie_epsilon"), "tie_epsilon");
  auto docs = detail::split_fields(detail::read_line(in, "docs line"));
  if (docs.size() != 3 || docs[0] != "docs")
    throw FormatError(path + ": expected 'docs <positive> <negative>'");
  model.docs_positive = detail::parse_count(docs[1], "positive doc count");
  model.docs_negative = detail::parse_count(docs[2], "negative doc count");
  auto read_class = [&](std::string_view label,
                        std::unordered_map<std::string, std::size_t>& counts,
                        std::size_t& total) {
    auto header = detail::split_fields(detail::read_line(in, "words header"));
    if (header.size() != 3 || header[0] != "words" || header[1] != label)
      throw FormatError(path + ": expected 'words " + std::string(label) + " <k>'");
    const std::size_t k = detail::parse_count(header[2], "word count");
    for (std::size_t i = 0; i < k; ++i) {
      auto fields = detail::split_fields(detail::read_line(in, "word line"));
      if (fields.size() != 2) throw FormatError(path + ": malformed word line");
      const std::size_t count = detail::parse_count(fields[1], "word count");
      if (count == 0) throw FormatError(path + ": zero count for word");
      if (!counts.emplace(std::string(fields[0]), count).second)
        throw FormatError(path + ": duplicate word '" + std::string(fields[0]) + "'");
      total += count;
      model.vocabulary.insert(std::string(fields[0]));
    }
  };
  read_class("positive", model.counts_positive, model.total_positive);
  read_class("negative", model.counts_negative, model.total_negative);
  if (detail::read_line(in, "end marker") != "end")
    throw FormatError(path + ": missing end marker");
  if (model.alpha <= 0) throw FormatError(path + ": alpha must be > 0");
  if (model.docs_positive == 0 || model.docs_negative == 0)
    throw FormatError(path + ": model must have documents in both classes");
  return model;
}

}  // namespace tweetsense

#endif  // TWEETSENSE_BAYES_CLASSIFIER_HPP_
