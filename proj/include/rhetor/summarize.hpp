#ifndef RHETOR_SUMMARIZE_HPP
#define RHETOR_SUMMARIZE_HPP

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rhetor/finders.hpp"
#include "rhetor/profile.hpp"
#include "rhetor/strategy.hpp"
#include "rhetor/textseg.hpp"

namespace rhetor {

/// Per-strategy weights used by the sentence score.
struct WeightTable {
  PerStrategy<double> weights;

  double operator[](StrategyKind s) const { return weights[s]; }

  double sum() const {
    double total = 0.0;
    for (double w : weights.values) total += w;
    return total;
  }

  static WeightTable defaults() {
    WeightTable t;
    t.weights.values = {0.05, 0.05, 0.1, 0.2, 0.2, 0.4};
    return t;
  }

  /// Starts from the defaults and overrides every `strategy<TAB>weight` line.
  static WeightTable load(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open weight table: " + path.string());
    WeightTable t = defaults();
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      const std::string where = path.string() + ":" + std::to_string(line_no) + ": ";
      const auto tab = line.find('\t');
      if (tab == std::string::npos) throw Error(where + "expected strategy<TAB>weight");
      const auto kind = parse_strategy(std::string_view(line).substr(0, tab));
      if (!kind) throw Error(where + "unknown strategy '" + line.substr(0, tab) + "'");
      const auto w = parse_double(std::string_view(line).substr(tab + 1));
      if (!w || *w < 0.0) throw Error(where + "bad weight '" + line.substr(tab + 1) + "'");
      t.weights[*kind] = *w;
    }
    return t;
  }
};

struct SentenceScore {
  std::size_t sentence_index = 0;
  StrategyCounts counts;
  std::size_t n_strategies = 0;
  PerStrategy<double> p_given_sentence;  // fractions in [0, 1]
  double score = 0.0;
};

/// S = (n / 6) * sum_s w_s * P(s | sentence), with P a fraction.
inline SentenceScore score_counts(std::size_t index, const StrategyCounts &counts, const WeightTable &weights) {
  SentenceScore out;
  out.sentence_index = index;
  out.counts = counts;
  out.n_strategies = counts.total();
  if (out.n_strategies == 0) return out;
  double weighted = 0.0;
  for (auto s : kAllStrategies) {
    out.p_given_sentence[s] = static_cast<double>(counts[s]) / static_cast<double>(out.n_strategies);
    weighted += weights[s] * out.p_given_sentence[s];
  }
  out.score = static_cast<double>(out.n_strategies) / static_cast<double>(kStrategyCount) * weighted;
  return out;
}

/// Scores sentence `index` of a document. Anaphora and epistrophe credit the
/// sentence once when it shares its first (last) word with a neighbour.
inline SentenceScore score_sentence(std::span<const Sentence> document, std::size_t index,
                                    const WeightTable &weights, const TagLexicon &lexicon) {
  if (index >= document.size()) throw Error("sentence index out of range");
  const Sentence &s = document[index];
  const auto one = document.subspan(index, 1);

  StrategyCounts c;
  c[StrategyKind::Dash] = count_dashes(s.text);
  c[StrategyKind::Semicolon] = count_semicolons(s.text);
  c[StrategyKind::Alliteration] = count_alliteration(one);
  c[StrategyKind::Parallelism] = count_parallelism(one, lexicon);

  const std::size_t lo = index > 0 ? index - 1 : 0;
  const std::size_t hi = std::min(document.size(), index + 2);
  const auto window = document.subspan(lo, hi - lo);
  const std::size_t at = index - lo;
  const auto firsts = edge_words(window, false);
  const auto lasts = edge_words(window, true);
  c[StrategyKind::Anaphora] = run_members<std::string>(firsts)[at] ? 1 : 0;
  c[StrategyKind::Epistrophe] = run_members<std::string>(lasts)[at] ? 1 : 0;
  return score_counts(index, c, weights);
}

struct SummaryItem {
  std::size_t index = 0;
  std::string text;
  double score = 0.0;
};

inline std::vector<SentenceScore> score_document(std::span<const Sentence> sentences, const WeightTable &weights,
                                                 const TagLexicon &lexicon) {
  std::vector<SentenceScore> scores;
  scores.reserve(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) scores.push_back(score_sentence(sentences, i, weights, lexicon));
  return scores;
}

/// The k highest-scoring sentences (earlier sentence wins a tie), returned in
/// document order.
inline std::vector<SummaryItem> summarize(std::string_view document, std::size_t k, const WeightTable &weights,
                                          const TagLexicon &lexicon) {
  if (k < 1) throw Error("summary length must be at least 1");
  const auto sentences = split_sentences(document);
  if (sentences.empty()) throw Error("document has no sentences");
  const auto scores = score_document(sentences, weights, lexicon);

  std::vector<std::size_t> order(sentences.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a].score > scores[b].score; });
  order.resize(std::min(k, order.size()));
  std::sort(order.begin(), order.end());

  std::vector<SummaryItem> out;
  out.reserve(order.size());
  for (auto i : order) out.push_back({i, sentences[i].text, scores[i].score});
  return out;
}

}  // namespace rhetor

#endif  // RHETOR_SUMMARIZE_HPP
