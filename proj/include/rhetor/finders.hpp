#ifndef RHETOR_FINDERS_HPP
#define RHETOR_FINDERS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rhetor/strategy.hpp"
#include "rhetor/textseg.hpp"

namespace rhetor {

// ---------------------------------------------------------------------------
// Run counting
// ---------------------------------------------------------------------------

/// Number of maximal runs of >= 2 adjacent equal keys. An empty key never
/// matches anything, including another empty key.
template <typename Key>
std::size_t count_runs(std::span<const std::optional<Key>> keys) {
  std::size_t runs = 0;
  std::size_t i = 0;
  while (i < keys.size()) {
    std::size_t j = i + 1;
    if (keys[i]) {
      while (j < keys.size() && keys[j] && *keys[j] == *keys[i]) ++j;
      if (j - i >= 2) ++runs;
    }
    i = j;
  }
  return runs;
}

/// Flags every element belonging to a run of >= 2 adjacent equal keys.
template <typename Key>
std::vector<bool> run_members(std::span<const std::optional<Key>> keys) {
  std::vector<bool> member(keys.size(), false);
  for (std::size_t i = 0; i + 1 < keys.size(); ++i) {
    if (keys[i] && keys[i + 1] && *keys[i] == *keys[i + 1]) member[i] = member[i + 1] = true;
  }
  return member;
}

// ---------------------------------------------------------------------------
// Dash and semicolon
// ---------------------------------------------------------------------------

/// Left-to-right scan for " - ", "--" and the em dash. After a match the scan
/// resumes just past the dash characters, so the trailing space of " - " can
/// open the next match.
inline std::size_t count_dashes(std::string_view text) {
  static constexpr std::string_view kEmDash = "\xE2\x80\x94";
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto spaced = text.find(" - ", pos);
    const auto doubled = text.find("--", pos);
    const auto em = text.find(kEmDash, pos);
    const auto first = std::min({spaced, doubled, em});
    if (first == std::string_view::npos) break;
    ++count;
    pos = first + (first == em ? kEmDash.size() : 2);
  }
  return count;
}

inline std::size_t count_semicolons(std::string_view text) {
  std::size_t n = 0;
  for (char c : text) n += (c == ';');
  return n;
}

// ---------------------------------------------------------------------------
// Alliteration, anaphora, epistrophe
// ---------------------------------------------------------------------------

/// Key a word contributes to alliteration: its lowercased first letter. Words
/// starting with a digit never participate.
inline std::optional<char32_t> alliteration_key(std::string_view word) {
  for (const auto &cp : detail::codepoints(word)) {
    if (detail::is_punct_codepoint(cp.value)) continue;
    if (cp.value >= '0' && cp.value <= '9') return std::nullopt;
    if (cp.value >= 'A' && cp.value <= 'Z') return cp.value - 'A' + 'a';
    return cp.value;
  }
  return std::nullopt;
}

inline std::vector<std::optional<char32_t>> alliteration_keys(const Sentence &sentence) {
  std::vector<std::optional<char32_t>> keys;
  for (const auto &t : sentence.tokens) {
    if (t.is_word) keys.push_back(alliteration_key(t.surface));
  }
  return keys;
}

/// One instance per maximal run of consecutive words (within a sentence,
/// punctuation skipped) sharing a first letter.
inline std::size_t count_alliteration(std::span<const Sentence> sentences) {
  std::size_t n = 0;
  for (const auto &s : sentences) {
    const auto keys = alliteration_keys(s);
    n += count_runs<char32_t>(keys);
  }
  return n;
}

/// First (or last) word of each sentence, lowercased; empty for sentences
/// without words.
inline std::vector<std::optional<std::string>> edge_words(std::span<const Sentence> sentences,
                                                          bool last) {
  std::vector<std::optional<std::string>> keys;
  keys.reserve(sentences.size());
  for (const auto &s : sentences) {
    const auto words = s.words();
    if (words.empty()) {
      keys.emplace_back();
    } else {
      keys.emplace_back(to_lower(last ? words.back() : words.front()));
    }
  }
  return keys;
}

/// Maximal runs of consecutive sentences that open with the same word.
inline std::size_t count_anaphora(std::span<const Sentence> sentences) {
  const auto keys = edge_words(sentences, false);
  return count_runs<std::string>(keys);
}

/// Maximal runs of consecutive sentences that close with the same word.
inline std::size_t count_epistrophe(std::span<const Sentence> sentences) {
  const auto keys = edge_words(sentences, true);
  return count_runs<std::string>(keys);
}

// ---------------------------------------------------------------------------
// Parallelism
// ---------------------------------------------------------------------------

inline constexpr std::array<std::size_t, 4> kPhraseLengths = {4, 3, 2, 1};

/// Parallelism over one sentence's word tags (punctuation already removed).
///
/// For n = 4, 3, 2, 1 the tags are tiled left to right into n-grams: at the
/// first unconsumed position where two adjacent n-grams carry identical tag
/// sequences, the run is extended over every further matching n-gram, counted
/// once, and its positions are consumed. Positions consumed at a larger n are
/// unavailable to smaller n.
inline std::size_t count_parallelism_tags(std::span<const PosTag> tags) {
  const std::size_t len = tags.size();
  std::vector<bool> used(len, false);
  auto free_range = [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      if (used[i]) return false;
    }
    return true;
  };
  auto same_block = [&](std::size_t a, std::size_t b, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (tags[a + k] != tags[b + k]) return false;
    }
    return true;
  };

  std::size_t count = 0;
  for (std::size_t n : kPhraseLengths) {
    std::size_t i = 0;
    while (i + 2 * n <= len) {
      if (!free_range(i, i + 2 * n) || !same_block(i, i + n, n)) {
        ++i;
        continue;
      }
      std::size_t blocks = 2;
      while (i + (blocks + 1) * n <= len && free_range(i + blocks * n, i + (blocks + 1) * n) &&
             same_block(i, i + blocks * n, n)) {
        ++blocks;
      }
      for (std::size_t k = i; k < i + blocks * n; ++k) used[k] = true;
      ++count;
      i += blocks * n;
    }
  }
  return count;
}

inline std::vector<PosTag> word_tags(const Sentence &sentence, const TagLexicon &lexicon) {
  std::vector<PosTag> tags;
  for (const auto &t : sentence.tokens) {
    if (t.is_word) tags.push_back(lexicon.tag_of(t));
  }
  return tags;
}

inline std::size_t count_parallelism(std::span<const Sentence> sentences, const TagLexicon &lexicon) {
  std::size_t n = 0;
  for (const auto &s : sentences) {
    const auto tags = word_tags(s, lexicon);
    n += count_parallelism_tags(tags);
  }
  return n;
}

// ---------------------------------------------------------------------------
// All finders
// ---------------------------------------------------------------------------

inline StrategyCounts count_sentences(std::string_view text, std::span<const Sentence> sentences,
                                      const TagLexicon &lexicon) {
  StrategyCounts c;
  c[StrategyKind::Dash] = count_dashes(text);
  c[StrategyKind::Semicolon] = count_semicolons(text);
  c[StrategyKind::Alliteration] = count_alliteration(sentences);
  c[StrategyKind::Anaphora] = count_anaphora(sentences);
  c[StrategyKind::Epistrophe] = count_epistrophe(sentences);
  c[StrategyKind::Parallelism] = count_parallelism(sentences, lexicon);
  return c;
}

inline StrategyCounts count_all(std::string_view document, const TagLexicon &lexicon) {
  const auto sentences = split_sentences(document);
  return count_sentences(document, sentences, lexicon);
}

}  // namespace rhetor

#endif  // RHETOR_FINDERS_HPP
