#ifndef TWEETSENSE_POS_TAGGER_HPP_
#define TWEETSENSE_POS_TAGGER_HPP_

#include <array>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tweetsense/default_tagger_lexicon.hpp"
#include "tweetsense/errors.hpp"
#include "tweetsense/text.hpp"

namespace tweetsense {

// Penn-style subset: the categories the extraction patterns consume, plus
// OTHER for everything else (non-word tokens always get OTHER).
enum class PosTag {
  JJ, JJR, JJS,
  NN, NNS, NNP, NNPS,
  RB, RBR, RBS,
  VB, VBD, VBN, VBG,
  Other
};

inline constexpr std::array<PosTag, 15> kAllPosTags = {
    PosTag::JJ,  PosTag::JJR, PosTag::JJS,  PosTag::NN,  PosTag::NNS,
    PosTag::NNP, PosTag::NNPS, PosTag::RB,  PosTag::RBR, PosTag::RBS,
    PosTag::VB,  PosTag::VBD, PosTag::VBN,  PosTag::VBG, PosTag::Other};

inline std::string_view to_string(PosTag tag) {
  switch (tag) {
    case PosTag::JJ: return "JJ";
    case PosTag::JJR: return "JJR";
    case PosTag::JJS: return "JJS";
    case PosTag::NN: return "NN";
    case PosTag::NNS: return "NNS";
    case PosTag::NNP: return "NNP";
    case PosTag::NNPS: return "NNPS";
    case PosTag::RB: return "RB";
    case PosTag::RBR: return "RBR";
    case PosTag::RBS: return "RBS";
    case PosTag::VB: return "VB";
    case PosTag::VBD: return "VBD";
    case PosTag::VBN: return "VBN";
    case PosTag::VBG: return "VBG";
    case PosTag::Other: return "OTHER";
  }
  return "OTHER";
}

inline std::optional<PosTag> pos_tag_from_string(std::string_view name) {
  for (PosTag t : kAllPosTags) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

struct SuffixRule {
  std::string suffix;
  PosTag tag = PosTag::Other;
};

// Word list plus ordered suffix fallbacks. Lookup order inside tag():
// lexicon entry, capitalization (non-sentence-initial), suffix rules in
// declared order, default NN.
class TaggerLexicon {
 public:
  TaggerLexicon() = default;

  void set(std::string word, PosTag tag) { entries_[std::move(word)] = tag; }

  void add_suffix_rule(std::string suffix, PosTag tag) {
    if (suffix.empty()) throw ConfigError("suffix rule must be non-empty");
    suffix_rules_.push_back(SuffixRule{std::move(suffix), tag});
  }

  std::optional<PosTag> lookup(std::string_view word) const {
    auto it = entries_.find(std::string(word));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  // First matching rule, requiring a stem of at least two characters.
  std::optional<PosTag> suffix_tag(std::string_view word) const {
    for (const SuffixRule& rule : suffix_rules_) {
      if (word.size() >= rule.suffix.size() + 2 &&
          word.substr(word.size() - rule.suffix.size()) == rule.suffix)
        return rule.tag;
    }
    return std::nullopt;
  }

  const std::vector<SuffixRule>& suffix_rules() const { return suffix_rules_; }
  const std::unordered_map<std::string, PosTag>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  static const TaggerLexicon& defaults();

 private:
  std::unordered_map<std::string, PosTag> entries_;
  std::vector<SuffixRule> suffix_rules_;
};

// Parses `word<TAB>tag` lines, then an optional `[suffix]` section of
// `suffix<TAB>tag` lines kept in file order. Blank lines and '#' comments
// are skipped.
inline TaggerLexicon parse_tagger_lexicon(std::istream& in, const std::string& source) {
  TaggerLexicon lex;
  std::string line;
  std::size_t lineno = 0;
  bool in_suffix = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line == "[suffix]") {
      in_suffix = true;
      continue;
    }
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw FormatError(source + ":" + std::to_string(lineno) +
                        ": expected word<TAB>tag");
    std::string word = line.substr(0, tab);
    auto tag = pos_tag_from_string(line.substr(tab + 1));
    if (!tag)
      throw FormatError(source + ":" + std::to_string(lineno) + ": unknown tag '" +
                        line.substr(tab + 1) + "'");
    if (in_suffix)
      lex.add_suffix_rule(std::move(word), *tag);
    else
      lex.set(std::move(word), *tag);
  }
  return lex;
}

inline TaggerLexicon load_tagger_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open tagger lexicon: " + path);
  return parse_tagger_lexicon(in, path);
}

inline const TaggerLexicon& TaggerLexicon::defaults() {
  static const TaggerLexicon lex = [] {
    std::istringstream in{std::string(kDefaultTaggerLexiconTsv)};
    return parse_tagger_lexicon(in, "<built-in>");
  }();
  return lex;
}

struct TaggedToken {
  Token token;
  PosTag tag = PosTag::Other;
};

namespace detail {

inline bool sentence_final_punct(std::string_view surface) {
  return surface.find_first_of(".!?") != std::string_view::npos;
}

}  // namespace detail

// Tags each token. Non-Word tokens are always OTHER. A capitalized word that
// does not open a sentence and is not in the lexicon is taken as a proper
// noun; sentence-initial capitals fall through to the suffix rules instead.
inline std::vector<TaggedToken> tag(
    std::span<const Token> tokens,
    const TaggerLexicon& lex = TaggerLexicon::defaults()) {
  std::vector<TaggedToken> out;
  out.reserve(tokens.size());
  bool sentence_start = true;
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::Word) {
      out.push_back(TaggedToken{t, PosTag::Other});
      if (t.kind == TokenKind::Punct && detail::sentence_final_punct(t.surface))
        sentence_start = true;
      continue;
    }
    PosTag tag = PosTag::NN;
    if (auto hit = lex.lookup(t.normalized)) {
      tag = *hit;
    } else if (!sentence_start && !t.surface.empty() && t.surface.front() >= 'A' &&
               t.surface.front() <= 'Z') {
      tag = PosTag::NNP;
    } else if (auto by_suffix = lex.suffix_tag(t.normalized)) {
      tag = *by_suffix;
    }
    out.push_back(TaggedToken{t, tag});
    sentence_start = false;
  }
  return out;
}

}  // namespace tweetsense

#endif  // TWEETSENSE_POS_TAGGER_HPP_
