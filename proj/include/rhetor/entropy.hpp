#ifndef RHETOR_ENTROPY_HPP
#define RHETOR_ENTROPY_HPP

#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "rhetor/strategy.hpp"
#include "rhetor/textseg.hpp"

namespace rhetor {

using WordDistribution = std::map<std::string, double>;

/// Case-folded word frequencies of `text` (punctuation excluded), as
/// probabilities.
inline WordDistribution word_distribution(std::string_view text) {
  std::map<std::string, std::size_t> counts;
  std::size_t total = 0;
  for (const auto &t : tokenize(text)) {
    if (!t.is_word) continue;
    ++counts[to_lower(t.surface)];
    ++total;
  }
  WordDistribution dist;
  for (const auto &[word, n] : counts) {
    dist.emplace(word, static_cast<double>(n) / static_cast<double>(total));
  }
  return dist;
}

/// H = -sum p log2 p, in bits; 0 log 0 = 0 and an empty distribution has H = 0.
inline double shannon_entropy(const WordDistribution &dist) {
  double h = 0.0;
  double mass = 0.0;
  for (const auto &[word, p] : dist) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error("probability outside [0, 1] for '" + word + "'");
    mass += p;
    if (p > 0.0) h -= p * std::log2(p);
  }
  if (!dist.empty() && std::abs(mass - 1.0) > 1e-9) throw Error("probabilities do not sum to 1");
  return h;
}

struct EntropyReport {
  std::size_t total_words = 0;
  std::size_t distinct_words = 0;
  double entropy_bits = 0.0;
  double max_entropy_bits = 0.0;  // log2(distinct_words)
  double relative_entropy = 0.0;  // entropy / max entropy, 0 for one distinct word
};

/// H / log2(#distinct words), taken as 0 when only one distinct word exists.
inline double relative_entropy(const WordDistribution &dist) {
  if (dist.empty()) throw Error("no words");
  if (dist.size() == 1) return 0.0;
  return shannon_entropy(dist) / std::log2(static_cast<double>(dist.size()));
}

inline EntropyReport entropy_report(std::string_view text) {
  EntropyReport r;
  for (const auto &t : tokenize(text)) r.total_words += t.is_word;
  const auto dist = word_distribution(text);
  if (dist.empty()) throw Error("no words");
  r.distinct_words = dist.size();
  r.entropy_bits = shannon_entropy(dist);
  r.max_entropy_bits = std::log2(static_cast<double>(r.distinct_words));
  r.relative_entropy = relative_entropy(dist);
  return r;
}

}  // namespace rhetor

#endif  // RHETOR_ENTROPY_HPP
