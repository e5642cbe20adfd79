#ifndef RHETOR_GENERATE_HPP
#define RHETOR_GENERATE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rhetor/gloss.hpp"
#include "rhetor/strategy.hpp"

namespace rhetor {

/// Seeded random source. Draws are defined on top of mt19937_64 output only,
/// so a seed reproduces the same stream with any standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, n), n >= 1, by rejection sampling.
  std::size_t index(std::size_t n) {
    const auto bound = static_cast<std::uint64_t>(n);
    constexpr auto top = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = top - top % bound;
    std::uint64_t x = 0;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

private:
  std::mt19937_64 engine_;
};

enum class GenerationMode { Deterministic, Random };
enum class LengthDistribution { Fixed, Jittered };

struct GenerationSpec {
  std::string seed_word;
  std::size_t words_per_sentence = 10;
  std::size_t num_sentences = 5;
  double dash_percent = 0.0;       // share of sentences that receive a dash
  double semicolon_percent = 0.0;  // share of sentences that receive a semicolon
  GenerationMode mode = GenerationMode::Deterministic;
  std::uint64_t rng_seed = 0;
  LengthDistribution lengths = LengthDistribution::Fixed;

  std::size_t word_budget() const { return words_per_sentence * num_sentences; }
};

struct Injection {
  std::size_t sentence = 0;
  StrategyKind strategy = StrategyKind::Dash;
  std::size_t position = 0;  // the mark follows word `position` of the sentence

  friend bool operator==(const Injection &, const Injection &) = default;
};

struct GeneratedText {
  std::vector<std::string> sentences;
  std::vector<std::string> words;       // the chain, in order
  std::size_t total_words = 0;
  std::vector<Injection> injection_log;
  std::vector<std::size_t> fallbacks;   // chain positions that restarted from the seed

  std::string text() const {
    std::string out;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      if (i) out += ' ';
      out += sentences[i];
    }
    return out;
  }

  friend bool operator==(const GeneratedText &, const GeneratedText &) = default;
};

struct ChainStep {
  std::string word;
  bool fell_back = false;
};

/// Next word of the chain: the middle gloss word (index len/2) in
/// Deterministic mode, a uniformly drawn gloss word in Random mode. A word
/// without a gloss restarts from the seed word's gloss.
inline ChainStep next_word(std::string_view current, std::string_view seed, const GlossLexicon &lexicon,
                           GenerationMode mode, Rng &rng) {
  const auto *seed_gloss = lexicon.find(seed);
  if (seed_gloss == nullptr) throw Error("seed word has no gloss: " + std::string(seed));
  ChainStep step;
  const auto *gloss = lexicon.find(current);
  if (gloss == nullptr) {
    gloss = seed_gloss;
    step.fell_back = true;
  }
  const std::size_t i = mode == GenerationMode::Deterministic ? gloss->size() / 2 : rng.index(gloss->size());
  step.word = (*gloss)[i];
  return step;
}

namespace detail {

inline std::vector<std::size_t> sentence_lengths(const GenerationSpec &spec, Rng &rng) {
  std::vector<std::size_t> lengths(spec.num_sentences, spec.words_per_sentence);
  if (spec.lengths == LengthDistribution::Fixed) return lengths;

  // Draw from [wps-2, wps+2] (at least 1), then walk the total back to the
  // budget one word at a time.
  std::size_t sum = 0;
  for (auto &len : lengths) {
    const std::size_t lo = spec.words_per_sentence > 2 ? spec.words_per_sentence - 2 : 1;
    const std::size_t hi = spec.words_per_sentence + 2;
    len = lo + rng.index(hi - lo + 1);
    sum += len;
  }
  const std::size_t budget = spec.word_budget();
  while (sum > budget) {
    const std::size_t i = rng.index(lengths.size());
    if (lengths[i] > 1) {
      --lengths[i];
      --sum;
    }
  }
  while (sum < budget) {
    ++lengths[rng.index(lengths.size())];
    ++sum;
  }
  return lengths;
}

inline std::string capitalized(std::string word) {
  if (!word.empty() && word[0] >= 'a' && word[0] <= 'z') word[0] = static_cast<char>(word[0] - 'a' + 'A');
  return word;
}

}  // namespace detail

struct InjectedSentences {
  std::vector<std::string> sentences;
  std::vector<Injection> log;
};

/// Renders word lists as sentences (capitalized, '.'-terminated) after
/// placing dashes and semicolons. For each mark, round(p/100 * sentences)
/// sentences are drawn without replacement; each receives the mark at a
/// uniformly drawn boundary between two words (after the only word of a
/// one-word sentence). A semicolon attaches to the preceding word, a dash is
/// written as " - ".
inline InjectedSentences inject_punctuation(std::span<const std::vector<std::string>> sentences,
                                            double dash_percent, double semicolon_percent, Rng &rng) {
  for (double p : {dash_percent, semicolon_percent}) {
    if (!(p >= 0.0 && p <= 100.0)) throw Error("target percentage outside [0, 100]");
  }
  const std::size_t n = sentences.size();
  std::vector<std::vector<bool>> dash(n), semi(n);
  for (std::size_t i = 0; i < n; ++i) {
    dash[i].assign(sentences[i].size(), false);
    semi[i].assign(sentences[i].size(), false);
  }

  InjectedSentences out;
  const std::pair<StrategyKind, double> targets[] = {{StrategyKind::Dash, dash_percent},
                                                     {StrategyKind::Semicolon, semicolon_percent}};
  for (const auto &[kind, percent] : targets) {
    const auto k = static_cast<std::size_t>(std::llround(percent / 100.0 * static_cast<double>(n)));
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = 0; i < k; ++i) std::swap(order[i], order[i + rng.index(n - i)]);
    std::vector<std::size_t> chosen(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(chosen.begin(), chosen.end());
    for (auto s : chosen) {
      const std::size_t words = sentences[s].size();
      if (words == 0) continue;
      const std::size_t pos = words > 1 ? rng.index(words - 1) : 0;
      (kind == StrategyKind::Dash ? dash : semi)[s][pos] = true;
      out.log.push_back({s, kind, pos});
    }
  }

  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::string> pieces;
    for (std::size_t w = 0; w < sentences[s].size(); ++w) {
      std::string word = w == 0 ? detail::capitalized(sentences[s][w]) : sentences[s][w];
      if (semi[s][w]) word += ';';
      pieces.push_back(std::move(word));
      if (dash[s][w]) pieces.emplace_back("-");
    }
    std::string line;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (i) line += ' ';
      line += pieces[i];
    }
    line += (!pieces.empty() && pieces.back() == "-") ? " ." : ".";
    out.sentences.push_back(std::move(line));
  }
  return out;
}

/// Chains gloss words from the seed until exactly words_per_sentence *
/// num_sentences words exist, splits them into sentences and injects the
/// requested punctuation. The random stream is consumed in that order: word
/// choice, sentence lengths, then injection.
inline GeneratedText generate(const GenerationSpec &spec, const GlossLexicon &lexicon) {
  if (spec.words_per_sentence < 1 || spec.num_sentences < 1) {
    throw Error("words per sentence and number of sentences must be at least 1");
  }
  if (lexicon.empty()) throw Error("gloss lexicon is empty");
  if (lexicon.find(spec.seed_word) == nullptr) throw Error("seed word has no gloss: " + spec.seed_word);

  Rng rng(spec.rng_seed);
  GeneratedText out;
  const std::size_t budget = spec.word_budget();
  out.words.reserve(budget);
  out.words.push_back(spec.seed_word);
  while (out.words.size() < budget) {
    auto step = next_word(out.words.back(), spec.seed_word, lexicon, spec.mode, rng);
    if (step.fell_back) out.fallbacks.push_back(out.words.size());
    out.words.push_back(std::move(step.word));
  }
  out.total_words = out.words.size();

  const auto lengths = detail::sentence_lengths(spec, rng);
  std::vector<std::vector<std::string>> split;
  std::size_t at = 0;
  for (auto len : lengths) {
    split.emplace_back(out.words.begin() + static_cast<std::ptrdiff_t>(at),
                       out.words.begin() + static_cast<std::ptrdiff_t>(at + len));
    at += len;
  }

  auto injected = inject_punctuation(split, spec.dash_percent, spec.semicolon_percent, rng);
  out.sentences = std::move(injected.sentences);
  out.injection_log = std::move(injected.log);
  return out;
}

/// Probability of reaching the last word of `chain` when every step draws
/// uniformly from the previous word's gloss: 1 for the seed, then divided by
/// the gloss length at each step.
inline double markov_step_probability(std::span<const std::string> chain, const GlossLexicon &lexicon) {
  if (chain.empty()) throw Error("empty chain");
  double p = 1.0;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const auto *gloss = lexicon.find(chain[i - 1]);
    if (gloss == nullptr || std::find(gloss->begin(), gloss->end(), chain[i]) == gloss->end()) {
      throw Error("broken chain link: '" + chain[i - 1] + "' -> '" + chain[i] + "'");
    }
    p /= static_cast<double>(gloss->size());
  }
  return p;
}

}  // namespace rhetor

#endif  // RHETOR_GENERATE_HPP
