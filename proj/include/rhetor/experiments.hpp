#ifndef RHETOR_EXPERIMENTS_HPP
#define RHETOR_EXPERIMENTS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rhetor/classify.hpp"
#include "rhetor/entropy.hpp"
#include "rhetor/finders.hpp"
#include "rhetor/generate.hpp"
#include "rhetor/gloss.hpp"
#include "rhetor/profile.hpp"
#include "rhetor/strategy.hpp"
#include "rhetor/textseg.hpp"

namespace rhetor {

inline constexpr std::array<std::string_view, 6> kSeedWords = {"bird",   "generalization", "hand",
                                                              "hasty", "indeed",         "passion"};

inline std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Author corpus
// ---------------------------------------------------------------------------

struct CorpusText {
  std::string author;
  std::string name;  // file name within the author directory
  std::string text;
};

/// Reads `<dir>/<author>/*.txt`, authors and files in name order.
inline std::vector<CorpusText> load_corpus(const std::filesystem::path &dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error("corpus directory not found: " + dir.string());
  std::vector<fs::path> authors;
  for (const auto &e : fs::directory_iterator(dir)) {
    if (e.is_directory()) authors.push_back(e.path());
  }
  std::sort(authors.begin(), authors.end());
  std::vector<CorpusText> out;
  for (const auto &a : authors) {
    std::vector<fs::path> files;
    for (const auto &e : fs::directory_iterator(a)) {
      if (e.is_regular_file() && e.path().extension() == ".txt") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto &f : files) out.push_back({a.filename().string(), f.filename().string(), read_file(f)});
  }
  return out;
}

struct AttributionTrial {
  std::string author;
  std::string name;
  std::string predicted;  // empty when the held-out text has no strategies
  double rms = 0.0;
  bool correct = false;
};

struct AttributionResult {
  std::vector<AttributionTrial> trials;
  std::size_t correct = 0;

  double accuracy_percent() const {
    return trials.empty() ? 0.0 : 100.0 * static_cast<double>(correct) / static_cast<double>(trials.size());
  }
};

namespace detail {

/// Profiles per author from summed counts, skipping the text at `held_out`
/// and any author left without strategies.
inline std::vector<StrategyProfile> author_profiles(std::span<const CorpusText> corpus,
                                                    std::span<const StrategyCounts> counts,
                                                    std::size_t held_out) {
  std::map<std::string, StrategyCounts> merged;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (i != held_out) merged[corpus[i].author] += counts[i];
  }
  std::vector<StrategyProfile> out;
  for (const auto &[author, c] : merged) {
    if (c.total() > 0) out.push_back(to_profile(author, c));
  }
  return out;
}

inline AttributionTrial attribute(const CorpusText &text, const StrategyCounts &counts,
                                  std::span<const StrategyProfile> known) {
  AttributionTrial t{text.author, text.name, {}, 0.0, false};
  const auto query = to_profile(text.name, counts);
  if (query.degenerate || known.empty()) return t;
  const auto ranked = identify(query, known);
  t.predicted = ranked.front().label;
  t.rms = ranked.front().rms;
  t.correct = t.predicted == t.author;
  return t;
}

}  // namespace detail

inline std::vector<StrategyCounts> count_corpus(std::span<const CorpusText> corpus, const TagLexicon &tags) {
  std::vector<StrategyCounts> counts;
  counts.reserve(corpus.size());
  for (const auto &t : corpus) counts.push_back(count_all(t.text, tags));
  return counts;
}

/// Each text in turn is withheld and attributed against author profiles built
/// from every remaining text. Texts whose author has no other text are skipped.
inline AttributionResult leave_one_out(std::span<const CorpusText> corpus, const TagLexicon &tags) {
  const auto counts = count_corpus(corpus, tags);
  AttributionResult r;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto known = detail::author_profiles(corpus, counts, i);
    const bool author_remains = std::any_of(known.begin(), known.end(), [&](const StrategyProfile &p) {
      return p.label == corpus[i].author;
    });
    if (!author_remains) continue;
    r.trials.push_back(detail::attribute(corpus[i], counts[i], known));
    r.correct += r.trials.back().correct;
  }
  return r;
}

struct ExtraAuthorRow {
  std::size_t extra_authors = 0;
  std::size_t tests = 0;
  std::size_t correct = 0;

  double percent_correct() const {
    return tests == 0 ? 0.0 : 100.0 * static_cast<double>(correct) / static_cast<double>(tests);
  }
};

/// Leave-one-out with a growing candidate list: for e extra authors the
/// withheld text competes between its true author and the e authors that
/// follow it in name order (wrapping around).
inline std::vector<ExtraAuthorRow> extra_author_table(std::span<const CorpusText> corpus, const TagLexicon &tags) {
  const auto counts = count_corpus(corpus, tags);
  std::vector<ExtraAuthorRow> rows;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto all = detail::author_profiles(corpus, counts, i);
    const auto self = std::find_if(all.begin(), all.end(),
                                   [&](const StrategyProfile &p) { return p.label == corpus[i].author; });
    if (self == all.end()) continue;
    const std::size_t at = static_cast<std::size_t>(self - all.begin());
    for (std::size_t e = 1; e < all.size(); ++e) {
      std::vector<StrategyProfile> known{*self};
      for (std::size_t k = 1; k <= e; ++k) known.push_back(all[(at + k) % all.size()]);
      if (rows.size() < e) rows.resize(e);
      auto &row = rows[e - 1];
      row.extra_authors = e;
      ++row.tests;
      row.correct += detail::attribute(corpus[i], counts[i], known).correct;
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Generation experiments
// ---------------------------------------------------------------------------

/// Ten words per sentence, five sentences, every sentence carrying a semicolon.
inline GenerationSpec canonical_spec(std::string seed_word, GenerationMode mode, std::uint64_t rng_seed) {
  GenerationSpec spec;
  spec.seed_word = std::move(seed_word);
  spec.words_per_sentence = 10;
  spec.num_sentences = 5;
  spec.semicolon_percent = 100.0;
  spec.mode = mode;
  spec.rng_seed = rng_seed;
  return spec;
}

struct SimilarityRun {
  std::string seed_word;
  GenerationMode mode = GenerationMode::Random;
  std::uint64_t rng_seed = 0;
  double similarity = 0.0;  // 100 - normalized RMS against the reference
};

struct SimilaritySweep {
  std::vector<SimilarityRun> runs;

  double mean(std::optional<GenerationMode> mode = std::nullopt) const {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto &r : runs) {
      if (mode && r.mode != *mode) continue;
      sum += r.similarity;
      ++n;
    }
    return n == 0 ? 0.0 : sum / static_cast<double>(n);
  }

  std::size_t count_at_least(double threshold) const {
    return static_cast<std::size_t>(
        std::count_if(runs.begin(), runs.end(), [&](const SimilarityRun &r) { return r.similarity >= threshold; }));
  }
};

/// Similarity of one generated text to `reference`, normalized over the
/// candidate set (which must contain the reference label).
inline double style_similarity(std::string_view text, std::span<const StrategyProfile> candidates,
                               std::string_view reference, const TagLexicon &tags) {
  const auto profile = to_profile("generated", count_all(text, tags));
  for (const auto &n : normalized_rms(profile, candidates)) {
    if (n.label == reference) return similarity(n.percent);
  }
  throw Error("reference profile not among candidates: " + std::string(reference));
}

/// Canonical-spec runs for every seed word: one Deterministic run (the rng is
/// unused there) and one Random run per rng seed in [first_seed, first_seed + seeds).
inline SimilaritySweep similarity_sweep(const GlossLexicon &glosses, const TagLexicon &tags,
                                        std::span<const StrategyProfile> candidates, std::string_view reference,
                                        std::uint64_t first_seed, std::size_t seeds) {
  SimilaritySweep sweep;
  for (auto word : kSeedWords) {
    const auto det = generate(canonical_spec(std::string(word), GenerationMode::Deterministic, 0), glosses);
    sweep.runs.push_back({std::string(word), GenerationMode::Deterministic, 0,
                          style_similarity(det.text(), candidates, reference, tags)});
    for (std::uint64_t s = first_seed; s < first_seed + seeds; ++s) {
      const auto out = generate(canonical_spec(std::string(word), GenerationMode::Random, s), glosses);
      sweep.runs.push_back({std::string(word), GenerationMode::Random, s,
                            style_similarity(out.text(), candidates, reference, tags)});
    }
  }
  return sweep;
}

struct EntropyComparison {
  double mean_random = 0.0;
  double mean_deterministic = 0.0;
  std::size_t runs = 0;  // per mode
};

/// Mean relative entropy of Random and Deterministic output over every seed
/// word and rng seed, using the canonical geometry without punctuation.
inline EntropyComparison entropy_comparison(const GlossLexicon &glosses, std::uint64_t first_seed,
                                            std::size_t seeds) {
  EntropyComparison c;
  for (auto word : kSeedWords) {
    for (std::uint64_t s = first_seed; s < first_seed + seeds; ++s) {
      auto spec = canonical_spec(std::string(word), GenerationMode::Random, s);
      spec.semicolon_percent = 0.0;
      c.mean_random += entropy_report(generate(spec, glosses).text()).relative_entropy;
      spec.mode = GenerationMode::Deterministic;
      c.mean_deterministic += entropy_report(generate(spec, glosses).text()).relative_entropy;
      ++c.runs;
    }
  }
  if (c.runs > 0) {
    c.mean_random /= static_cast<double>(c.runs);
    c.mean_deterministic /= static_cast<double>(c.runs);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Re-election tables
// ---------------------------------------------------------------------------

struct ElectionRow {
  std::string label;
  bool won = false;  // row came from the winners table
  Prediction prediction;

  bool correct() const { return prediction.outcome == (won ? Outcome::Win : Outcome::Lose); }
};

struct ElectionStudy {
  CentroidPair centroids;
  CentroidSpread spread;
  std::vector<ElectionRow> rows;
  double mean_rms_deviation_population = 0.0;

  std::size_t correct() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ElectionRow &r) { return r.correct(); }));
  }
};

/// Builds both centroids and classifies every row of both tables against them.
inline ElectionStudy election_study(std::span<const StrategyProfile> winners, std::span<const StrategyProfile> losers) {
  ElectionStudy st;
  st.centroids = build_centroids(winners, losers);
  st.spread = centroid_spread(st.centroids);
  for (const auto *set : {&winners, &losers}) {
    for (const auto &p : *set) {
      st.rows.push_back({p.label, set == &winners, predict_reelection(p, st.centroids)});
      st.mean_rms_deviation_population += st.rows.back().prediction.deviation.population;
    }
  }
  st.mean_rms_deviation_population /= static_cast<double>(st.rows.size());
  return st;
}

}  // namespace rhetor

#endif  // RHETOR_EXPERIMENTS_HPP
