#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "support.hpp"

using namespace rhetor;

namespace {

GenerationSpec spec_for(const std::string &word, GenerationMode mode, std::uint64_t seed) {
  GenerationSpec s;
  s.seed_word = word;
  s.mode = mode;
  s.rng_seed = seed;
  return s;
}

std::size_t word_tokens(const std::string &text) {
  std::size_t n = 0;
  for (const auto &t : tokenize(text)) n += t.is_word;
  return n;
}

GlossLexicon tiny() {
  GlossLexicon lex;
  lex.add("start", {"a", "b", "c", "d"});
  lex.add("a", {"x", "y", "z", "w", "v"});
  lex.add("b", {"start"});
  return lex;
}

}  // namespace

TEST(Rng, IndexStaysInRangeAndIsReproducible) {
  Rng a(99), b(99);
  for (std::size_t n = 1; n < 300; ++n) {
    const auto x = a.index(n);
    EXPECT_LT(x, n);
    EXPECT_EQ(x, b.index(n));
  }
}

TEST(Rng, MatchesRejectionSamplingOnRawEngine) {
  // Independent restatement of the draw rule on the raw engine.
  Rng r(42);
  std::vector<std::size_t> got;
  for (int i = 0; i < 8; ++i) got.push_back(r.index(10));
  std::vector<std::size_t> oracle;
  std::mt19937_64 engine(42);
  for (int i = 0; i < 8; ++i) {
    std::uint64_t x;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % 10;
    do x = engine(); while (x >= limit);
    oracle.push_back(static_cast<std::size_t>(x % 10));
  }
  EXPECT_EQ(got, oracle);
}

TEST(Generate, DeterministicBirdChain) {
  const auto out = generate(spec_for("bird", GenerationMode::Deterministic, 0), testdata::bundled_glosses());
  ASSERT_EQ(out.sentences.size(), 5u);
  EXPECT_EQ(out.sentences[0], "Bird feathers forming an degree of feathers forming an degree.");
  EXPECT_EQ(out.words[1], "feathers");
  // "of" has no gloss, so the chain restarts from the seed right after it.
  EXPECT_EQ(out.fallbacks.front(), 6u);
}

TEST(Generate, WordBudgetIsExact) {
  const auto &lex = testdata::bundled_glosses();
  for (auto lengths : {LengthDistribution::Fixed, LengthDistribution::Jittered}) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      auto spec = spec_for("passion", GenerationMode::Random, seed);
      spec.lengths = lengths;
      spec.semicolon_percent = 60;
      spec.dash_percent = 40;
      const auto out = generate(spec, lex);
      EXPECT_EQ(out.total_words, 50u);
      EXPECT_EQ(out.words.size(), 50u);
      EXPECT_EQ(out.sentences.size(), 5u);
      EXPECT_EQ(word_tokens(out.text()), 50u);
    }
  }
}

TEST(Generate, SameSeedSameOutput) {
  const auto &lex = testdata::bundled_glosses();
  auto spec = spec_for("hand", GenerationMode::Random, 7);
  spec.dash_percent = 40;
  spec.semicolon_percent = 100;
  spec.lengths = LengthDistribution::Jittered;
  EXPECT_EQ(generate(spec, lex), generate(spec, lex));
  spec.rng_seed = 8;
  const auto other = generate(spec, lex);
  spec.rng_seed = 7;
  EXPECT_NE(generate(spec, lex).text(), other.text());
}

TEST(Generate, EverySentenceGetsASemicolonAtHundredPercent) {
  const auto out = generate(canonical_spec("indeed", GenerationMode::Random, 3), testdata::bundled_glosses());
  for (const auto &s : out.sentences) EXPECT_EQ(std::count(s.begin(), s.end(), ';'), 1) << s;
  EXPECT_EQ(count_semicolons(out.text()), 5u);
}

TEST(Generate, FortyPercentDashesMarksTwoSentences) {
  auto spec = spec_for("hasty", GenerationMode::Random, 11);
  spec.dash_percent = 40;
  const auto out = generate(spec, testdata::bundled_glosses());
  EXPECT_EQ(count_dashes(out.text()), 2u);
  std::size_t with_dash = 0;
  for (const auto &s : out.sentences) with_dash += count_dashes(s) > 0;
  EXPECT_EQ(with_dash, 2u);
  EXPECT_EQ(out.injection_log.size(), 2u);
}

TEST(Generate, ZeroPercentLeavesChainUntouched) {
  const auto out = generate(spec_for("bird", GenerationMode::Random, 5), testdata::bundled_glosses());
  EXPECT_TRUE(out.injection_log.empty());
  EXPECT_EQ(count_dashes(out.text()), 0u);
  EXPECT_EQ(count_semicolons(out.text()), 0u);
  std::string joined;
  for (std::size_t i = 0; i < out.words.size(); ++i) {
    std::string w = out.words[i];
    if (i % 10 == 0 && w[0] >= 'a' && w[0] <= 'z') w[0] = static_cast<char>(w[0] - 32);
    joined += (i ? " " : "") + w + (i % 10 == 9 ? "." : "");
  }
  EXPECT_EQ(out.text(), joined);
}

TEST(Generate, RandomWordsComeFromTheGloss) {
  const auto &lex = testdata::bundled_glosses();
  const auto out = generate(spec_for("generalization", GenerationMode::Random, 17), lex);
  for (std::size_t i = 1; i < out.words.size(); ++i) {
    const auto *g = lex.find(out.words[i - 1]);
    const bool fell_back = std::find(out.fallbacks.begin(), out.fallbacks.end(), i) != out.fallbacks.end();
    if (!g) {
      EXPECT_TRUE(fell_back);
      g = lex.find("generalization");
    }
    EXPECT_NE(std::find(g->begin(), g->end(), out.words[i]), g->end());
  }
}

TEST(Generate, Errors) {
  const auto &lex = testdata::bundled_glosses();
  EXPECT_THROW(generate(spec_for("qqqzzz", GenerationMode::Random, 1), lex), Error);
  auto spec = spec_for("bird", GenerationMode::Random, 1);
  spec.words_per_sentence = 0;
  EXPECT_THROW(generate(spec, lex), Error);
  spec.words_per_sentence = 10;
  spec.semicolon_percent = 101;
  EXPECT_THROW(generate(spec, lex), Error);
  EXPECT_THROW(generate(spec_for("bird", GenerationMode::Random, 1), GlossLexicon{}), Error);
}

TEST(InjectPunctuation, OneWordSentences) {
  const std::vector<std::vector<std::string>> s = {{"alpha"}, {"beta"}};
  Rng rng(1);
  const auto out = inject_punctuation(s, 100, 100, rng);
  EXPECT_EQ(out.sentences[0], "Alpha; - .");
  EXPECT_EQ(out.log.size(), 4u);
}

TEST(Markov, ChainProbabilities) {
  const auto lex = tiny();
  EXPECT_EQ(markov_step_probability(std::vector<std::string>{"start"}, lex), 1.0);
  EXPECT_DOUBLE_EQ(markov_step_probability(std::vector<std::string>{"start", "a"}, lex), 1.0 / 4.0);
  EXPECT_DOUBLE_EQ(markov_step_probability(std::vector<std::string>{"start", "a", "z"}, lex), 1.0 / 20.0);
  EXPECT_THROW(markov_step_probability(std::vector<std::string>{"start", "q"}, lex), Error);
  EXPECT_THROW(markov_step_probability(std::vector<std::string>{}, lex), Error);
}

TEST(Markov, EmpiricalSuccessorFrequencies) {
  // Successor distribution of "start" is uniform over its gloss, so the
  // probabilities of all one-step chains sum to 1.
  const auto lex = tiny();
  double total = 0.0;
  for (const auto &w : *lex.find("start")) total += markov_step_probability(std::vector<std::string>{"start", w}, lex);
  EXPECT_DOUBLE_EQ(total, 1.0);

  Rng rng(123);
  std::map<std::string, int> freq;
  const int draws = 40000;
  for (int i = 0; i < draws; ++i) ++freq[next_word("start", "start", lex, GenerationMode::Random, rng).word];
  for (const auto &[w, n] : freq) EXPECT_NEAR(n / double(draws), 0.25, 0.01) << w;
}

TEST(Markov, FallbackRestartsFromSeed) {
  const auto lex = tiny();
  Rng rng(0);
  const auto step = next_word("nowhere", "start", lex, GenerationMode::Deterministic, rng);
  EXPECT_TRUE(step.fell_back);
  EXPECT_EQ(step.word, "c");
  EXPECT_THROW(next_word("a", "nowhere", lex, GenerationMode::Deterministic, rng), Error);
}
