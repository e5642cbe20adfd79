#ifndef RHETOR_TESTS_SUPPORT_HPP
#define RHETOR_TESTS_SUPPORT_HPP

#include <filesystem>
#include <string>

#include "rhetor/rhetor.hpp"

namespace rhetor::testdata {

inline std::filesystem::path data_dir() { return RHETOR_DATA_DIR; }
inline std::filesystem::path fixture_dir() { return RHETOR_FIXTURE_DIR; }

inline const TagLexicon &bundled_tags() {
  static const TagLexicon lex = TagLexicon::load((data_dir() / "tags.tsv").string());
  return lex;
}

inline const GlossLexicon &bundled_glosses() {
  static const GlossLexicon lex = load_lexicon(data_dir() / "glosses.tsv").lexicon;
  return lex;
}

inline std::string fixture(const std::string &relative) { return read_file(fixture_dir() / relative); }

/// Lexicon with explicit tags for a handful of words; everything else falls
/// back to NOUN.
inline TagLexicon small_lexicon(std::initializer_list<std::pair<const char *, PosTag>> entries) {
  TagLexicon lex;
  for (const auto &[w, t] : entries) lex.add(w, t);
  return lex;
}

}  // namespace rhetor::testdata

#endif  // RHETOR_TESTS_SUPPORT_HPP
