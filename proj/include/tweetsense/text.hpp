#ifndef TWEETSENSE_TEXT_HPP_
#define TWEETSENSE_TEXT_HPP_

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tweetsense/errors.hpp"

namespace tweetsense {

enum class Polarity { Positive, Negative, Neutral };

inline std::string_view to_string(Polarity p) {
  switch (p) {
    case Polarity::Positive: return "positive";
    case Polarity::Negative: return "negative";
    case Polarity::Neutral: return "neutral";
  }
  return "neutral";
}

enum class TokenKind { Word, Emoticon, Hashtag, Mention, Url, Punct };

// One lexical unit of a tweet. `normalized` is the lowercased surface for
// Word tokens and the verbatim surface for everything else (emoticons are
// case-sensitive literals). `position` is the 0-based token index.
struct Token {
  std::string surface;
  std::string normalized;
  std::size_t position = 0;
  TokenKind kind = TokenKind::Word;

  bool operator==(const Token&) const = default;
};

namespace detail {

inline bool is_space_char(unsigned char c) { return std::isspace(c) != 0; }

// Bytes >= 0x80 are kept inside words so multi-byte UTF-8 sequences are
// never split.
inline bool is_word_char(unsigned char c) {
  return std::isalnum(c) != 0 || c == '_' || c >= 0x80;
}

inline char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](char c) { return ascii_lower(c); });
  return out;
}

inline bool url_prefix_at(std::string_view text, std::size_t i) {
  static constexpr std::string_view kHttp = "http://";
  static constexpr std::string_view kHttps = "https://";
  auto matches = [&](std::string_view prefix) {
    if (text.size() - i < prefix.size()) return false;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      if (ascii_lower(text[i + k]) != prefix[k]) return false;
    }
    return true;
  };
  return matches(kHttp) || matches(kHttps);
}

}  // namespace detail

// Maps emoticon literals to Positive/Negative. Entries never carry both
// polarities; inserting a conflict throws.
class EmoticonLexicon {
 public:
  EmoticonLexicon() = default;

  void add(const std::string& emoticon, Polarity polarity) {
    if (emoticon.empty()) throw ConfigError("emoticon entry must be non-empty");
    if (polarity == Polarity::Neutral)
      throw ConfigError("emoticon '" + emoticon + "' must be positive or negative");
    auto it = entries_.find(emoticon);
    if (it != entries_.end()) {
      if (it->second != polarity)
        throw ConfigError("emoticon '" + emoticon + "' listed with both polarities");
      return;
    }
    entries_.emplace(emoticon, polarity);
    auto& bucket = by_first_[emoticon.front()];
    bucket.push_back(emoticon);
    std::sort(bucket.begin(), bucket.end(),
              [](const std::string& a, const std::string& b) {
                return a.size() > b.size() || (a.size() == b.size() && a < b);
              });
  }

  std::optional<Polarity> lookup(std::string_view emoticon) const {
    auto it = entries_.find(std::string(emoticon));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  // Longest entry starting at text[pos]; empty view when none matches.
  std::string_view match_at(std::string_view text, std::size_t pos) const {
    if (pos >= text.size()) return {};
    auto it = by_first_.find(text[pos]);
    if (it == by_first_.end()) return {};
    for (const std::string& e : it->second) {
      if (text.compare(pos, e.size(), e) == 0) return text.substr(pos, e.size());
    }
    return {};
  }

  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, Polarity>& entries() const { return entries_; }

  // The eight built-in emoticons.
  static const EmoticonLexicon& defaults() {
    static const EmoticonLexicon lex = [] {
      EmoticonLexicon l;
      for (const char* e : {":-)", ":)", "=)", ":D"}) l.add(e, Polarity::Positive);
      for (const char* e : {":-(", ":(", "=(", ";("}) l.add(e, Polarity::Negative);
      return l;
    }();
    return lex;
  }

 private:
  std::map<std::string, Polarity> entries_;
  std::unordered_map<char, std::vector<std::string>> by_first_;  // length-descending
};

// Parses `emoticon<TAB>polarity` lines; blank lines and '#' comments skipped.
inline EmoticonLexicon parse_emoticon_lexicon(std::istream& in,
                                              const std::string& source) {
  EmoticonLexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw FormatError(source + ":" + std::to_string(lineno) +
                        ": expected emoticon<TAB>polarity");
    std::string emo = line.substr(0, tab);
    std::string pol = detail::lowercase(line.substr(tab + 1));
    if (pol == "positive")
      lex.add(emo, Polarity::Positive);
    else if (pol == "negative")
      lex.add(emo, Polarity::Negative);
    else
      throw FormatError(source + ":" + std::to_string(lineno) +
                        ": polarity must be 'positive' or 'negative', got '" + pol + "'");
  }
  return lex;
}

inline EmoticonLexicon load_emoticon_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open emoticon lexicon: " + path);
  return parse_emoticon_lexicon(in, path);
}

// Splits a tweet into tokens. Lexicon emoticons are matched greedily
// (longest first) at every scan position, so they come out as single
// Emoticon tokens even when glued to words. Words split on whitespace and
// punctuation; '#'/'@' followed by a word character start Hashtag/Mention
// tokens; http(s):// runs to the next whitespace as a Url token. Every
// non-whitespace character of the input lands in exactly one token.
inline std::vector<Token> tokenize(
    std::string_view text,
    const EmoticonLexicon& lex = EmoticonLexicon::defaults()) {
  using detail::is_space_char;
  using detail::is_word_char;
  std::vector<Token> tokens;
  const std::size_t n = text.size();
  std::size_t i = 0;
  auto push = [&](std::string_view surface, TokenKind kind) {
    Token t;
    t.surface = std::string(surface);
    t.normalized = kind == TokenKind::Word ? detail::lowercase(surface)
                                           : std::string(surface);
    t.position = tokens.size();
    t.kind = kind;
    tokens.push_back(std::move(t));
  };
  auto starts_tag = [&](std::size_t j) {
    return (text[j] == '#' || text[j] == '@') && j + 1 < n &&
           is_word_char(static_cast<unsigned char>(text[j + 1]));
  };
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (is_space_char(c)) {
      ++i;
      continue;
    }
    if (auto emo = lex.match_at(text, i); !emo.empty()) {
      push(emo, TokenKind::Emoticon);
      i += emo.size();
      continue;
    }
    if (detail::url_prefix_at(text, i)) {
      std::size_t j = i;
      while (j < n && !is_space_char(static_cast<unsigned char>(text[j]))) ++j;
      push(text.substr(i, j - i), TokenKind::Url);
      i = j;
      continue;
    }
    if (starts_tag(i)) {
      std::size_t j = i + 1;
      while (j < n && is_word_char(static_cast<unsigned char>(text[j])) &&
             lex.match_at(text, j).empty())
        ++j;
      push(text.substr(i, j - i),
           text[i] == '#' ? TokenKind::Hashtag : TokenKind::Mention);
      i = j;
      continue;
    }
    if (is_word_char(c)) {
      std::size_t j = i + 1;
      while (j < n && is_word_char(static_cast<unsigned char>(text[j])) &&
             lex.match_at(text, j).empty())
        ++j;
      push(text.substr(i, j - i), TokenKind::Word);
      i = j;
      continue;
    }
    // Punctuation run: stops at whitespace, word characters, emoticons and
    // hashtag/mention introducers.
    std::size_t j = i + 1;
    while (j < n) {
      const unsigned char cj = static_cast<unsigned char>(text[j]);
      if (is_space_char(cj) || is_word_char(cj) || starts_tag(j) ||
          !lex.match_at(text, j).empty())
        break;
      ++j;
    }
    push(text.substr(i, j - i), TokenKind::Punct);
    i = j;
  }
  return tokens;
}

// Distant-supervision label: Positive iff the tweet has at least one happy
// emoticon and no sad one, Negative in the mirror case, nothing when there
// are no emoticons or both kinds appear.
inline std::optional<Polarity> emoticon_polarity(
    std::span<const Token> tokens,
    const EmoticonLexicon& lex = EmoticonLexicon::defaults()) {
  std::size_t happy = 0, sad = 0;
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::Emoticon) continue;
    auto p = lex.lookup(t.surface);
    if (!p) continue;
    (*p == Polarity::Positive ? happy : sad)++;
  }
  if (happy > 0 && sad == 0) return Polarity::Positive;
  if (sad > 0 && happy == 0) return Polarity::Negative;
  return std::nullopt;
}

// Drops Emoticon tokens, keeping the rest in order with their original
// position values.
inline std::vector<Token> strip_emoticons(std::span<const Token> tokens) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::Emoticon) out.push_back(t);
  }
  return out;
}

}  // namespace tweetsense

#endif  // TWEETSENSE_TEXT_HPP_
