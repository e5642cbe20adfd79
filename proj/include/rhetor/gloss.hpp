#ifndef RHETOR_GLOSS_HPP
#define RHETOR_GLOSS_HPP

#include <array>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rhetor/strategy.hpp"
#include "rhetor/textseg.hpp"

namespace rhetor {

namespace detail {

/// Splits a gloss word at marks the finders would count (";", "--", em dash)
/// so that chaining gloss words can never introduce them.
inline void split_marked(std::string_view word, std::vector<std::string> &out) {
  static constexpr std::array<std::string_view, 3> kMarks = {";", "--", "\xE2\x80\x94"};
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t mark = 0;
    for (auto m : kMarks) {
      if (word.substr(i, m.size()) == m) {
        mark = m.size();
        break;
      }
    }
    if (mark == 0) {
      ++i;
      continue;
    }
    if (i > start) out.emplace_back(word.substr(start, i - start));
    i += mark;
    start = i;
  }
  if (start < word.size()) out.emplace_back(word.substr(start));
}

}  // namespace detail

/// Word tokens of a gloss, punctuation removed.
inline std::vector<std::string> gloss_words(std::string_view text) {
  std::vector<std::string> words;
  for (const auto &t : tokenize(text)) {
    if (!t.is_word) continue;
    std::vector<std::string> pieces;
    detail::split_marked(t.surface, pieces);
    for (auto &p : pieces) {
      for (const auto &sub : tokenize(p)) {
        if (sub.is_word) words.push_back(sub.surface);
      }
    }
  }
  return words;
}

/// Lowercased lemma -> gloss word tokens. Every stored gloss is non-empty.
/// Immutable after loading.
class GlossLexicon {
public:
  GlossLexicon() = default;

  /// Returns false (and stores nothing) when the lemma exists already or the
  /// gloss has no words.
  bool add(std::string_view lemma, std::vector<std::string> gloss) {
    if (gloss.empty()) return false;
    return entries_.emplace(to_lower(lemma), std::move(gloss)).second;
  }

  /// Case-insensitive lookup; absent when the word has no gloss.
  const std::vector<std::string> *find(std::string_view word) const {
    const auto it = entries_.find(to_lower(word));
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Entries in lemma order.
  std::map<std::string, std::vector<std::string>> sorted() const {
    return {entries_.begin(), entries_.end()};
  }

  friend bool operator==(const GlossLexicon &, const GlossLexicon &) = default;

private:
  std::unordered_map<std::string, std::vector<std::string>> entries_;
};

inline std::optional<std::vector<std::string>> gloss_of(const GlossLexicon &lexicon, std::string_view word) {
  if (const auto *g = lexicon.find(word)) return *g;
  return std::nullopt;
}

struct GlossLoadResult {
  GlossLexicon lexicon;
  std::vector<std::string> warnings;
};

/// Reads `lemma<TAB>gloss text` lines. A line without a tab is an error; an
/// entry whose gloss has no words is skipped, and a repeated lemma keeps its
/// first gloss. Both cases are reported as warnings.
inline GlossLoadResult load_lexicon(std::istream &in, std::string_view source = "<stream>") {
  GlossLoadResult result;
  std::string line;
  std::size_t line_no = 0;
  auto where = [&] { return std::string(source) + ":" + std::to_string(line_no) + ": "; };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) throw Error(where() + "expected lemma<TAB>gloss");
    const std::string lemma = line.substr(0, tab);
    auto words = gloss_words(std::string_view(line).substr(tab + 1));
    if (words.empty()) {
      result.warnings.push_back(where() + "empty gloss for '" + lemma + "' skipped");
      continue;
    }
    if (!result.lexicon.add(lemma, std::move(words))) {
      result.warnings.push_back(where() + "duplicate lemma '" + lemma + "' ignored");
    }
  }
  return result;
}

inline GlossLoadResult load_lexicon(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open gloss lexicon: " + path.string());
  return load_lexicon(in, path.string());
}

/// Writes the lexicon back in the load format, one lemma per line, sorted.
inline void save_lexicon(const GlossLexicon &lexicon, std::ostream &out) {
  for (const auto &[lemma, words] : lexicon.sorted()) {
    out << lemma << '\t';
    for (std::size_t i = 0; i < words.size(); ++i) out << (i ? " " : "") << words[i];
    out << '\n';
  }
}

}  // namespace rhetor

#endif  // RHETOR_GLOSS_HPP
