// Command-line front end: corpus ingestion, index building, Bayes training
// and the side-by-side classification reports.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tweetsense/tweetsense.hpp"

namespace ts = tweetsense;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

std::optional<std::string> lexicon_dir_file(const std::string& filename) {
  const char* dir = std::getenv("TWEETSENSE_LEXICON_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  std::filesystem::path p = std::filesystem::path(dir) / filename;
  if (!std::filesystem::exists(p)) return std::nullopt;
  return p.string();
}

ts::EmoticonLexicon resolve_emoticons(const std::string& flag) {
  if (!flag.empty()) return ts::load_emoticon_lexicon(flag);
  if (auto fallback = lexicon_dir_file("emoticons.tsv"))
    return ts::load_emoticon_lexicon(*fallback);
  return ts::EmoticonLexicon::defaults();
}

ts::TaggerLexicon resolve_tagger(const std::string& flag) {
  if (!flag.empty()) return ts::load_tagger_lexicon(flag);
  if (auto fallback = lexicon_dir_file("tagger_lexicon.tsv"))
    return ts::load_tagger_lexicon(*fallback);
  return ts::TaggerLexicon::defaults();
}

std::vector<ts::Corpus> load_corpora(const std::vector<std::string>& paths,
                                     const std::vector<std::string>& names) {
  if (names.size() > paths.size())
    throw ts::ConfigError("more --name values than --corpus values");
  std::vector<ts::Corpus> corpora;
  corpora.reserve(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const std::string name = i < names.size() ? names[i] : stem_of(paths[i]);
    ts::LoadResult loaded = ts::load_corpus(paths[i], name);
    std::cerr << "loaded corpus '" << name << "': " << loaded.corpus.tweets.size()
              << " tweets";
    if (loaded.skipped > 0) std::cerr << ", " << loaded.skipped << " blank skipped";
    if (!loaded.record_errors.empty())
      std::cerr << ", " << loaded.record_errors.size() << " bad records";
    std::cerr << "\n";
    for (const std::string& err : loaded.record_errors)
      std::cerr << "  " << err << "\n";
    corpora.push_back(std::move(loaded.corpus));
  }
  return corpora;
}

ts::Corpus concatenate(const std::vector<ts::Corpus>& corpora, const std::string& name) {
  ts::Corpus merged;
  merged.name = name;
  for (const ts::Corpus& c : corpora) {
    for (const ts::Tweet& t : c.tweets) {
      ts::Tweet copy = t;
      copy.id = c.name + "/" + t.id;
      copy.corpus = name;
      merged.tweets.push_back(std::move(copy));
    }
  }
  return merged;
}

// Output stream selection: file when --output given, else stdout.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary);
    if (!file_) throw ts::IoError("cannot write output file: " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct CommonFlags {
  std::vector<std::string> corpus_paths;
  std::vector<std::string> corpus_names;
  std::string emoticon_lexicon;
  std::string tagger_lexicon;
  std::string output;
  double alpha = 1.0;
  double tie_epsilon = 1e-9;
  double smoothing = ts::kDefaultSoSmoothing;
  std::string pos_ref = "excellent";
  std::string neg_ref = "poor";
  std::vector<std::string> background_paths;
  std::string model_path;
};

void add_corpus_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--corpus", flags.corpus_paths,
                  "Corpus file (plain text, one tweet per line, or JSON lines "
                  "with id/text fields); repeatable")
      ->required();
  cmd->add_option("--name", flags.corpus_names,
                  "Corpus name, paired with --corpus in order (default: file stem)");
  cmd->add_option("--emoticon-lexicon", flags.emoticon_lexicon,
                  "Emoticon lexicon file, one emoticon<TAB>polarity per line "
                  "(default: built-in; TWEETSENSE_LEXICON_DIR/emoticons.tsv "
                  "is used when set)");
}

void add_bayes_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--alpha", flags.alpha, "Laplace smoothing pseudo-count")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tie-epsilon", flags.tie_epsilon,
                  "Log-score gap at or below which a tweet is Neutral")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
}

void add_turney_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--pos-ref", flags.pos_ref, "Positive reference word")
      ->capture_default_str();
  cmd->add_option("--neg-ref", flags.neg_ref, "Negative reference word")
      ->capture_default_str();
  cmd->add_option("--smoothing", flags.smoothing,
                  "Pseudo-count added to the two NEAR hit counts")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--background", flags.background_paths,
                  "Background corpus file(s) for the reference index "
                  "(default: the union of --corpus files); repeatable");
  cmd->add_option("--tagger-lexicon", flags.tagger_lexicon,
                  "Tagger lexicon file, word<TAB>tag lines plus a [suffix] "
                  "section (default: built-in; TWEETSENSE_LEXICON_DIR/"
                  "tagger_lexicon.tsv is used when set)");
}

ts::ReferenceIndex build_reference_index(const CommonFlags& flags,
                                         const std::vector<ts::Corpus>& corpora,
                                         const ts::EmoticonLexicon& emoticons) {
  if (flags.background_paths.empty()) return ts::ReferenceIndex::build(corpora, emoticons);
  const std::vector<ts::Corpus> background = load_corpora(flags.background_paths, {});
  return ts::ReferenceIndex::build(background, emoticons);
}

int run_classify(const CommonFlags& flags, const std::string& method) {
  const ts::EmoticonLexicon emoticons = resolve_emoticons(flags.emoticon_lexicon);
  const std::vector<ts::Corpus> corpora = load_corpora(flags.corpus_paths, flags.corpus_names);
  OutputTarget out(flags.output);

  const bool want_bayes = method == "bayes" || method == "both";
  const bool want_turney = method == "turney" || method == "both";

  if (want_bayes) {
    std::optional<ts::BayesModel> fixed_model;
    if (!flags.model_path.empty()) fixed_model = ts::load_model(flags.model_path);
    out.stream() << "# method=bayes\n";
    ts::write_report_header(out.stream());
    for (const ts::Corpus& corpus : corpora) {
      ts::BayesModel model;
      if (fixed_model) {
        model = *fixed_model;
      } else {
        auto [trained, report] = ts::train(corpus, emoticons, flags.alpha, flags.tie_epsilon);
        model = std::move(trained);
        if (report.n_excluded > 0)
          std::cerr << "corpus '" << corpus.name << "': " << report.n_excluded
                    << " tweets excluded from training (no usable emoticon label)\n";
      }
      ts::write_report_row(out.stream(),
                           ts::run_report(corpus, ts::BayesRunner{&model, &emoticons}));
    }
  }
  if (want_turney) {
    const ts::TaggerLexicon tagger = resolve_tagger(flags.tagger_lexicon);
    const ts::ReferenceIndex index = build_reference_index(flags, corpora, emoticons);
    ts::TurneyRunner runner{&index, &tagger, &emoticons,
                            ts::ReferenceWords{flags.pos_ref, flags.neg_ref},
                            flags.smoothing};
    out.stream() << "# method=turney\n";
    ts::write_report_header(out.stream());
    for (const ts::Corpus& corpus : corpora)
      ts::write_report_row(out.stream(), ts::run_report(corpus, runner));
  }
  return kExitOk;
}

int run_train(const CommonFlags& flags, const std::string& out_path, double holdout,
              unsigned seed) {
  const ts::EmoticonLexicon emoticons = resolve_emoticons(flags.emoticon_lexicon);
  const std::vector<ts::Corpus> corpora = load_corpora(flags.corpus_paths, flags.corpus_names);
  ts::Corpus merged = concatenate(corpora, "train");

  ts::Corpus heldout;
  heldout.name = "heldout";
  if (holdout > 0) {
    std::vector<std::size_t> order(merged.tweets.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t n_heldout =
        static_cast<std::size_t>(holdout * static_cast<double>(order.size()));
    ts::Corpus training;
    training.name = merged.name;
    for (std::size_t k = 0; k < order.size(); ++k) {
      (k < n_heldout ? heldout : training).tweets.push_back(merged.tweets[order[k]]);
    }
    merged = std::move(training);
  }

  auto [model, report] = ts::train(merged, emoticons, flags.alpha, flags.tie_epsilon);
  ts::save_model(model, out_path);
  std::cout << "trained on " << merged.tweets.size() << " tweets: " << report.n_positive
            << " positive, " << report.n_negative << " negative, " << report.n_excluded
            << " excluded; vocabulary " << model.vocabulary.size() << "; model written to "
            << out_path << "\n";

  if (!heldout.tweets.empty()) {
    std::size_t labeled = 0, correct = 0;
    for (const ts::Tweet& tweet : heldout.tweets) {
      const auto tokens = ts::tokenize(tweet.text, emoticons);
      const auto label = ts::emoticon_polarity(tokens, emoticons);
      if (!label) continue;
      ++labeled;
      const auto features = ts::strip_emoticons(tokens);
      if (ts::classify(model, features).polarity == *label) ++correct;
    }
    std::cout << "held-out: " << heldout.tweets.size() << " tweets, " << labeled
              << " with emoticon labels";
    if (labeled > 0)
      std::cout << ", accuracy vs emoticon label "
                << static_cast<double>(correct) / static_cast<double>(labeled);
    std::cout << "\n";
  }
  return kExitOk;
}

int run_index(const CommonFlags& flags, const std::string& out_path) {
  const ts::EmoticonLexicon emoticons = resolve_emoticons(flags.emoticon_lexicon);
  const std::vector<ts::Corpus> corpora = load_corpora(flags.corpus_paths, flags.corpus_names);
  const ts::ReferenceIndex index = ts::ReferenceIndex::build(corpora, emoticons);
  index.save(out_path);
  std::cout << "indexed " << index.doc_count() << " documents, " << index.total_tokens()
            << " tokens, " << index.vocabulary_size() << " distinct words; written to "
            << out_path << "\n";
  return kExitOk;
}

int run_compare(const CommonFlags& flags) {
  const ts::EmoticonLexicon emoticons = resolve_emoticons(flags.emoticon_lexicon);
  const ts::TaggerLexicon tagger = resolve_tagger(flags.tagger_lexicon);
  const std::vector<ts::Corpus> corpora = load_corpora(flags.corpus_paths, flags.corpus_names);
  OutputTarget out(flags.output);

  std::optional<ts::BayesModel> fixed_model;
  if (!flags.model_path.empty()) fixed_model = ts::load_model(flags.model_path);
  const ts::ReferenceIndex index = build_reference_index(flags, corpora, emoticons);
  ts::TurneyRunner turney{&index, &tagger, &emoticons,
                          ts::ReferenceWords{flags.pos_ref, flags.neg_ref},
                          flags.smoothing};
  bool first = true;
  for (const ts::Corpus& corpus : corpora) {
    ts::BayesModel model;
    if (fixed_model)
      model = *fixed_model;
    else
      model = ts::train(corpus, emoticons, flags.alpha, flags.tie_epsilon).first;
    if (!first) out.stream() << "\n";
    first = false;
    ts::write_agreement(out.stream(),
                        ts::compare(corpus, ts::BayesRunner{&model, &emoticons}, turney));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Opinion polarity detection for short texts: emoticon-supervised "
               "Naive Bayes and PMI-based semantic orientation over a local "
               "proximity index"};
  app.require_subcommand(1);

  CommonFlags classify_flags, train_flags, index_flags, compare_flags;
  std::string method = "both";
  std::string train_out, index_out;
  double holdout = 0.0;
  unsigned seed = 42;

  CLI::App* classify = app.add_subcommand(
      "classify", "Classify corpora and emit one CSV report row per corpus and method");
  add_corpus_flags(classify, classify_flags);
  add_bayes_flags(classify, classify_flags);
  add_turney_flags(classify, classify_flags);
  classify->add_option("--method", method, "Classifier to run")
      ->capture_default_str()
      ->check(CLI::IsMember({"bayes", "turney", "both"}));
  classify->add_option("--model", classify_flags.model_path,
                       "Trained Bayes model file (default: train on each corpus)");
  classify->add_option("--output", classify_flags.output,
                       "Report destination (default: standard output)");

  CLI::App* train_cmd =
      app.add_subcommand("train", "Train a Bayes model from emoticon labels and save it");
  add_corpus_flags(train_cmd, train_flags);
  add_bayes_flags(train_cmd, train_flags);
  train_cmd->add_option("--out", train_out, "Model output path")->required();
  train_cmd->add_option("--holdout", holdout,
                        "Fraction of tweets held out for a self-evaluation split")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 0.999));
  train_cmd->add_option("--seed", seed, "Shuffle seed for the held-out split")
      ->capture_default_str();

  CLI::App* index_cmd =
      app.add_subcommand("index", "Build the proximity reference index and save it");
  add_corpus_flags(index_cmd, index_flags);
  index_cmd->add_option("--out", index_out, "Index output path")->required();

  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Per-tweet agreement between the two classifiers");
  add_corpus_flags(compare_cmd, compare_flags);
  add_bayes_flags(compare_cmd, compare_flags);
  add_turney_flags(compare_cmd, compare_flags);
  compare_cmd->add_option("--model", compare_flags.model_path,
                          "Trained Bayes model file (default: train on each corpus)");
  compare_cmd->add_option("--output", compare_flags.output,
                          "Report destination (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return kExitUsage;
  }

  for (const CommonFlags* flags :
       {&classify_flags, &train_flags, &index_flags, &compare_flags}) {
    if (flags->corpus_names.size() > flags->corpus_paths.size()) {
      std::cerr << "error: more --name values than --corpus values\n";
      return kExitUsage;
    }
  }

  try {
    if (classify->parsed()) return run_classify(classify_flags, method);
    if (train_cmd->parsed()) return run_train(train_flags, train_out, holdout, seed);
    if (index_cmd->parsed()) return run_index(index_flags, index_out);
    if (compare_cmd->parsed()) return run_compare(compare_flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}
