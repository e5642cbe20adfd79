#ifndef RHETOR_TEXTSEG_HPP
#define RHETOR_TEXTSEG_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rhetor/strategy.hpp"

namespace rhetor {

// ---------------------------------------------------------------------------
// Character classes
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

/// Length in bytes of the UTF-8 sequence starting with `lead` (1 for invalid
/// lead bytes so scanning always makes progress).
inline std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

inline char32_t decode_utf8(std::string_view s, std::size_t pos, std::size_t len) {
  const auto b = [&](std::size_t i) { return static_cast<unsigned char>(s[pos + i]); };
  switch (len) {
    case 2: return static_cast<char32_t>(((b(0) & 0x1F) << 6) | (b(1) & 0x3F));
    case 3: return static_cast<char32_t>(((b(0) & 0x0F) << 12) | ((b(1) & 0x3F) << 6) | (b(2) & 0x3F));
    case 4:
      return static_cast<char32_t>(((b(0) & 0x07) << 18) | ((b(1) & 0x3F) << 12) |
                                   ((b(2) & 0x3F) << 6) | (b(3) & 0x3F));
    default: return static_cast<char32_t>(b(0));
  }
}

inline bool is_punct_codepoint(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) || (cp >= 0x5B && cp <= 0x60) ||
           (cp >= 0x7B && cp <= 0x7E);
  }
  switch (cp) {
    case 0xA1: case 0xA7: case 0xAB: case 0xB6: case 0xB7: case 0xBB: case 0xBF:
      return true;
    default:
      break;
  }
  return (cp >= 0x2010 && cp <= 0x2027) || (cp >= 0x2030 && cp <= 0x205E) ||
         (cp >= 0x3001 && cp <= 0x3003);
}

/// Closing quotes and brackets allowed between a terminal mark and the
/// whitespace that ends a sentence.
inline bool is_closer(char32_t cp) {
  return cp == '"' || cp == '\'' || cp == ')' || cp == ']' || cp == 0x2019 || cp == 0x201D ||
         cp == 0xBB;
}

inline bool is_terminal(char32_t cp) { return cp == '.' || cp == '!' || cp == '?'; }

struct Codepoint {
  std::size_t offset;
  std::size_t length;
  char32_t value;
};

inline std::vector<Codepoint> codepoints(std::string_view s) {
  std::vector<Codepoint> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    std::size_t len = utf8_length(static_cast<unsigned char>(s[i]));
    if (i + len > s.size()) len = 1;
    out.push_back({i, len, decode_utf8(s, i, len)});
    i += len;
  }
  return out;
}

}  // namespace detail

/// ASCII case folding; bytes outside ASCII are left untouched.
inline std::string to_lower(std::string_view s) {
  std::string out(s);
  for (auto &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tokens and sentences
// ---------------------------------------------------------------------------

struct Token {
  std::string surface;
  bool is_word = false;
  std::size_t char_offset = 0;  // byte offset into the source text

  friend bool operator==(const Token &, const Token &) = default;
};

struct Sentence {
  std::size_t index = 0;
  std::size_t begin = 0;  // byte offset of the first token
  std::string text;       // source span from the first to the last token
  std::vector<Token> tokens;

  std::vector<std::string_view> words() const {
    std::vector<std::string_view> out;
    for (const auto &t : tokens) {
      if (t.is_word) out.emplace_back(t.surface);
    }
    return out;
  }
};

namespace detail {

/// Splits one whitespace-free chunk into tokens: leading and trailing
/// punctuation characters become one token each, the remainder is a word.
inline void tokenize_chunk(std::string_view chunk, std::size_t offset, std::vector<Token> &out) {
  const auto cps = codepoints(chunk);
  std::size_t lo = 0;
  std::size_t hi = cps.size();
  while (lo < hi && is_punct_codepoint(cps[lo].value)) ++lo;
  while (hi > lo && is_punct_codepoint(cps[hi - 1].value)) --hi;

  for (std::size_t i = 0; i < lo; ++i) {
    out.push_back({std::string(chunk.substr(cps[i].offset, cps[i].length)), false, offset + cps[i].offset});
  }
  if (lo < hi) {
    const std::size_t b = cps[lo].offset;
    const std::size_t e = cps[hi - 1].offset + cps[hi - 1].length;
    out.push_back({std::string(chunk.substr(b, e - b)), true, offset + b});
  }
  for (std::size_t i = std::max(hi, lo); i < cps.size(); ++i) {
    out.push_back({std::string(chunk.substr(cps[i].offset, cps[i].length)), false, offset + cps[i].offset});
  }
}

inline bool ends_sentence(std::string_view chunk) {
  const auto cps = codepoints(chunk);
  std::size_t i = cps.size();
  while (i > 0 && is_closer(cps[i - 1].value)) --i;
  return i > 0 && is_terminal(cps[i - 1].value);
}

template <typename F>
void for_each_chunk(std::string_view text, F &&fn) {
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) fn(text.substr(start, i - start), start);
  }
}

}  // namespace detail

/// Splits on whitespace. Leading and trailing punctuation characters become
/// separate punctuation tokens; hyphens and apostrophes inside a word stay.
/// `base_offset` is added to every token's char_offset.
inline std::vector<Token> tokenize(std::string_view text, std::size_t base_offset = 0) {
  std::vector<Token> out;
  detail::for_each_chunk(text, [&](std::string_view chunk, std::size_t off) {
    detail::tokenize_chunk(chunk, base_offset + off, out);
  });
  return out;
}

/// Sentence boundaries fall after '.', '!' or '?' (optionally followed by
/// closing quotes or brackets) when whitespace or the end of input follows.
/// Abbreviations are not special-cased.
inline std::vector<Sentence> split_sentences(std::string_view text) {
  std::vector<Sentence> out;
  Sentence current;
  bool open = false;
  std::size_t last_end = 0;

  auto close = [&] {
    if (!open) return;
    current.index = out.size();
    current.text = std::string(text.substr(current.begin, last_end - current.begin));
    out.push_back(std::move(current));
    current = Sentence{};
    open = false;
  };

  detail::for_each_chunk(text, [&](std::string_view chunk, std::size_t off) {
    if (!open) {
      current.begin = off;
      open = true;
    }
    detail::tokenize_chunk(chunk, off, current.tokens);
    last_end = off + chunk.size();
    if (detail::ends_sentence(chunk)) close();
  });
  close();
  return out;
}

// ---------------------------------------------------------------------------
// Part-of-speech tagging
// ---------------------------------------------------------------------------

/// The 12-tag universal part-of-speech set.
enum class PosTag : std::uint8_t { NOUN, VERB, ADJ, ADV, PRON, DET, ADP, NUM, CONJ, PRT, PUNCT, X };

inline constexpr std::array<std::string_view, 12> kPosTagNames = {
    "NOUN", "VERB", "ADJ", "ADV", "PRON", "DET", "ADP", "NUM", "CONJ", "PRT", "PUNCT", "X"};

constexpr std::string_view tag_name(PosTag t) { return kPosTagNames[static_cast<std::size_t>(t)]; }

inline std::optional<PosTag> parse_tag(std::string_view name) {
  for (std::size_t i = 0; i < kPosTagNames.size(); ++i) {
    if (kPosTagNames[i] == name) return static_cast<PosTag>(i);
  }
  return std::nullopt;
}

struct TaggedToken {
  Token token;
  PosTag tag = PosTag::X;
};

/// Unigram tag lexicon: lowercased word -> most frequent tag.
/// Immutable once loaded; share it freely between threads.
class TagLexicon {
public:
  TagLexicon() = default;

  /// Reads `word<TAB>tag` lines. Duplicate words keep their first tag.
  static TagLexicon from_stream(std::istream &in) {
    TagLexicon lex;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      const auto tab = line.find('\t');
      if (tab == std::string::npos || tab == 0) {
        throw Error("tag lexicon line " + std::to_string(line_no) + ": expected word<TAB>tag");
      }
      const auto tag = parse_tag(std::string_view(line).substr(tab + 1));
      if (!tag) {
        throw Error("tag lexicon line " + std::to_string(line_no) + ": unknown tag '" +
                    line.substr(tab + 1) + "'");
      }
      lex.add(line.substr(0, tab), *tag);
    }
    return lex;
  }

  static TagLexicon load(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open tag lexicon: " + path);
    return from_stream(in);
  }

  /// Returns false when the word was already present.
  bool add(std::string_view word, PosTag tag) {
    return entries_.emplace(to_lower(word), tag).second;
  }

  std::optional<PosTag> lookup(std::string_view word) const {
    const auto it = entries_.find(to_lower(word));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  /// Word tokens get their lexicon tag (NOUN when unknown); everything else
  /// is PUNCT.
  PosTag tag_of(const Token &token) const {
    if (!token.is_word) return PosTag::PUNCT;
    return lookup(token.surface).value_or(PosTag::NOUN);
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

private:
  std::unordered_map<std::string, PosTag> entries_;
};

inline std::vector<TaggedToken> tag(std::span<const Token> tokens, const TagLexicon &lexicon) {
  std::vector<TaggedToken> out;
  out.reserve(tokens.size());
  for (const auto &t : tokens) out.push_back({t, lexicon.tag_of(t)});
  return out;
}

}  // namespace rhetor

#endif  // RHETOR_TEXTSEG_HPP
