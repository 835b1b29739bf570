#ifndef TWEETSENSE_COOCCURRENCE_INDEX_HPP_
#define TWEETSENSE_COOCCURRENCE_INDEX_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tweetsense/corpus.hpp"
#include "tweetsense/serialize.hpp"
#include "tweetsense/text.hpp"

namespace tweetsense {

// Occurrences of one word in one document; positions count Word tokens
// only (0-based) and are strictly increasing.
struct Posting {
  std::size_t doc = 0;
  std::vector<std::uint32_t> positions;

  bool operator==(const Posting&) const = default;
};

// Positional inverted index over a reference corpus. Stands in for a web
// search engine's hit counts: hits() and hits_near() return document-level
// counts (a document with three occurrences counts once). One tweet is one
// document. Immutable after build; any number of concurrent readers is fine.
class ReferenceIndex {
 public:
  static constexpr std::size_t kNearWindow = 10;

  ReferenceIndex() = default;

  // Indexes every Word token of every tweet. Distances are measured in
  // word positions, so punctuation and other non-word tokens neither
  // occupy positions nor break phrase adjacency.
  static ReferenceIndex build(
      std::span<const Corpus> corpora,
      const EmoticonLexicon& emoticons = EmoticonLexicon::defaults()) {
    ReferenceIndex index;
    for (const Corpus& corpus : corpora) {
      for (const Tweet& tweet : corpus.tweets) {
        const std::size_t doc = index.doc_count_++;
        std::uint32_t word_pos = 0;
        for (const Token& t : tokenize(tweet.text, emoticons)) {
          if (t.kind != TokenKind::Word) continue;
          auto& postings = index.postings_[t.normalized];
          if (postings.empty() || postings.back().doc != doc)
            postings.push_back(Posting{doc, {}});
          postings.back().positions.push_back(word_pos++);
          ++index.total_tokens_;
        }
      }
    }
    if (index.doc_count_ == 0)
      throw Error("cannot build reference index from empty input");
    return index;
  }

  std::size_t doc_count() const { return doc_count_; }
  std::size_t total_tokens() const { return total_tokens_; }
  std::size_t vocabulary_size() const { return postings_.size(); }

  const std::vector<Posting>* postings(std::string_view word) const {
    auto it = postings_.find(detail::lowercase(word));
    if (it == postings_.end()) return nullptr;
    return &it->second;
  }

  // Documents containing the term. A two-word term matches where the words
  // occupy consecutive positions, in order.
  std::size_t hits(std::string_view term) const {
    return resolve(term).size();
  }

  // Documents where `a` (word or two-word phrase) and word `b` occur within
  // kNearWindow word positions of each other, in either order. A phrase
  // occupies the position of its first word.
  std::size_t hits_near(std::string_view a, std::string_view b) const {
    const std::vector<Posting> pa = resolve(a);
    const std::vector<Posting> pb = resolve(b);
    std::size_t count = 0;
    std::size_t ia = 0, ib = 0;
    while (ia < pa.size() && ib < pb.size()) {
      if (pa[ia].doc < pb[ib].doc) {
        ++ia;
      } else if (pb[ib].doc < pa[ia].doc) {
        ++ib;
      } else {
        if (min_gap(pa[ia].positions, pb[ib].positions) <= kNearWindow) ++count;
        ++ia;
        ++ib;
      }
    }
    return count;
  }

  void save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write index file: " + path);
    out << kVersionLine << "\n";
    out << "docs " << doc_count_ << "\n";
    out << "tokens " << total_tokens_ << "\n";
    out << "terms " << postings_.size() << "\n";
    // Deterministic output: terms sorted.
    std::vector<const std::string*> terms;
    terms.reserve(postings_.size());
    for (const auto& [word, _] : postings_) terms.push_back(&word);
    std::sort(terms.begin(), terms.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    for (const std::string* word : terms) {
      const auto& postings = postings_.at(*word);
      out << "term " << *word << " " << postings.size() << "\n";
      for (const Posting& p : postings) {
        out << p.doc;
        for (std::uint32_t pos : p.positions) out << " " << pos;
        out << "\n";
      }
    }
    out << "end\n";
    if (!out) throw IoError("write failed: " + path);
  }

  static ReferenceIndex load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open index file: " + path);
    detail::expect_version_line(in, kVersionLine);
    ReferenceIndex index;
    index.doc_count_ = read_header_count(in, "docs");
    index.total_tokens_ = read_header_count(in, "tokens");
    const std::size_t n_terms = read_header_count(in, "terms");
    for (std::size_t t = 0; t < n_terms; ++t) {
      auto fields = detail::split_fields(detail::read_line(in, "term line"));
      if (fields.size() != 3 || fields[0] != "term")
        throw FormatError(path + ": malformed term line");
      std::string word(fields[1]);
      const std::size_t n_postings = detail::parse_count(fields[2], "posting count");
      std::vector<Posting> postings;
      postings.reserve(n_postings);
      for (std::size_t p = 0; p < n_postings; ++p) {
        auto parts = detail::split_fields(detail::read_line(in, "posting line"));
        if (parts.size() < 2) throw FormatError(path + ": malformed posting line");
        Posting posting;
        posting.doc = detail::parse_count(parts[0], "doc id");
        for (std::size_t k = 1; k < parts.size(); ++k) {
          posting.positions.push_back(static_cast<std::uint32_t>(
              detail::parse_count(parts[k], "position")));
        }
        postings.push_back(std::move(posting));
      }
      index.postings_.emplace(std::move(word), std::move(postings));
    }
    if (detail::read_line(in, "end marker") != "end")
      throw FormatError(path + ": missing end marker");
    return index;
  }

  static constexpr std::string_view kVersionLine = "tweetsense-index v1";

 private:
  static std::size_t read_header_count(std::istream& in, std::string_view key) {
    auto fields = detail::split_fields(detail::read_line(in, std::string(key) + " line"));
    if (fields.size() != 2 || fields[0] != key)
      throw FormatError("malformed header line, expected '" + std::string(key) + " <n>'");
    return detail::parse_count(fields[1], std::string(key));
  }

  static std::size_t min_gap(const std::vector<std::uint32_t>& a,
                             const std::vector<std::uint32_t>& b) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      const std::uint32_t pa = a[i], pb = b[j];
      const std::size_t gap = pa > pb ? pa - pb : pb - pa;
      best = std::min(best, gap);
      if (pa <= pb)
        ++i;
      else
        ++j;
    }
    return best;
  }

  // Postings of a one- or two-word term. Phrase postings are materialized
  // with the position of the first word.
  std::vector<Posting> resolve(std::string_view term) const {
    const std::string lowered = detail::lowercase(term);
    const auto space = lowered.find(' ');
    if (space == std::string::npos) {
      auto it = postings_.find(lowered);
      return it == postings_.end() ? std::vector<Posting>{} : it->second;
    }
    const std::string w1 = lowered.substr(0, space);
    const std::string w2 = lowered.substr(space + 1);
    if (w1.empty() || w2.empty() || w2.find(' ') != std::string::npos)
      throw ConfigError("terms are single words or two-word phrases: '" +
                        std::string(term) + "'");
    auto it1 = postings_.find(w1);
    auto it2 = postings_.find(w2);
    if (it1 == postings_.end() || it2 == postings_.end()) return {};
    std::vector<Posting> result;
    std::size_t i = 0, j = 0;
    const auto& p1 = it1->second;
    const auto& p2 = it2->second;
    while (i < p1.size() && j < p2.size()) {
      if (p1[i].doc < p2[j].doc) {
        ++i;
      } else if (p2[j].doc < p1[i].doc) {
        ++j;
      } else {
        Posting merged{p1[i].doc, {}};
        const auto& pos2 = p2[j].positions;
        for (std::uint32_t p : p1[i].positions) {
          if (std::binary_search(pos2.begin(), pos2.end(), p + 1))
            merged.positions.push_back(p);
        }
        if (!merged.positions.empty()) result.push_back(std::move(merged));
        ++i;
        ++j;
      }
    }
    return result;
  }

  std::unordered_map<std::string, std::vector<Posting>> postings_;
  std::size_t doc_count_ = 0;
  std::size_t total_tokens_ = 0;
};

}  // namespace tweetsense

#endif  // TWEETSENSE_COOCCURRENCE_INDEX_HPP_
