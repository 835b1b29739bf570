#ifndef TWEETSENSE_CORPUS_HPP_
#define TWEETSENSE_CORPUS_HPP_

#include <cstddef>
#include <fstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "tweetsense/errors.hpp"

namespace tweetsense {

// One short text document.
struct Tweet {
  std::string id;
  std::string text;
  std::string corpus;
};

struct Corpus {
  std::string name;
  std::vector<Tweet> tweets;
};

// What load_corpus found besides the tweets themselves. Blank records are
// skipped silently into `skipped`; malformed records are skipped with a
// per-line message and loading continues.
struct LoadResult {
  Corpus corpus;
  std::size_t skipped = 0;
  std::vector<std::string> record_errors;
};

namespace detail {

inline bool is_blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline bool utf8_valid(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t len;
    unsigned min_cp;
    if (c < 0x80) {
      len = 1;
      min_cp = 0;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      min_cp = 0x80;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      min_cp = 0x800;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      min_cp = 0x10000;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    unsigned cp = c & (0xFF >> (len + 1));
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char cont = static_cast<unsigned char>(s[i + k]);
      if ((cont & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (len > 1 && cp < min_cp) return false;
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += len;
  }
  return true;
}

}  // namespace detail

// Loads a corpus file. Two layouts are accepted and auto-detected from the
// first non-blank line:
//   - plain text: one tweet per line, ids assigned "0", "1", ... in load order
//   - JSON lines: one object per line with fields "text" (string, required)
//     and "id" (string or integer, optional)
// Blank lines (and records with blank text) are skipped and counted.
inline LoadResult load_corpus(const std::string& path, const std::string& name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path);
  if (name.empty()) throw ConfigError("corpus name must be non-empty");

  LoadResult result;
  result.corpus.name = name;
  std::unordered_set<std::string> seen_ids;
  bool json_layout = false;
  bool layout_known = false;
  std::string line;
  std::size_t lineno = 0;

  auto record_error = [&](const std::string& msg) {
    result.record_errors.push_back(path + ":" + std::to_string(lineno) + ": " + msg);
  };
  auto add_tweet = [&](std::string id, std::string text) {
    if (!seen_ids.insert(id).second) {
      record_error("duplicate id '" + id + "'");
      return;
    }
    result.corpus.tweets.push_back(
        Tweet{std::move(id), std::move(text), name});
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (detail::is_blank(line)) {
      ++result.skipped;
      continue;
    }
    if (!detail::utf8_valid(line)) {
      record_error("invalid UTF-8");
      continue;
    }
    if (!layout_known) {
      layout_known = true;
      json_layout = line.front() == '{';
    }
    if (!json_layout) {
      add_tweet(std::to_string(result.corpus.tweets.size()), line);
      continue;
    }
    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object()) {
      record_error("malformed JSON record");
      continue;
    }
    if (!record.contains("text") || !record["text"].is_string()) {
      record_error("record has no string 'text' field");
      continue;
    }
    std::string text = record["text"].get<std::string>();
    if (detail::is_blank(text)) {
      ++result.skipped;
      continue;
    }
    std::string id;
    if (record.contains("id")) {
      const auto& idj = record["id"];
      if (idj.is_string())
        id = idj.get<std::string>();
      else if (idj.is_number_integer())
        id = std::to_string(idj.get<long long>());
      else {
        record_error("'id' must be a string or integer");
        continue;
      }
    } else {
      id = std::to_string(result.corpus.tweets.size());
    }
    add_tweet(std::move(id), std::move(text));
  }
  return result;
}

}  // namespace tweetsense

#endif  // TWEETSENSE_CORPUS_HPP_
