// rhetor: command-line front end for the rhetorical strategy toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rhetor/rhetor.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace rhetor;

namespace {

struct Options {
  std::string glosses;
  std::string tags;
  std::string format = "text";
  std::string store;
  std::optional<std::uint64_t> seed;
  std::size_t k = 4;
  std::string weights;
  std::vector<std::string> inputs;

  // profile
  std::string label;
  // predict
  std::string winners;
  std::string losers;
  // generate
  std::string seed_word;
  std::size_t words_per_sentence = 10;
  std::size_t sentences = 5;
  double dash_percent = 0.0;
  double semicolon_percent = 0.0;
  std::string mode = "deterministic";
  bool jitter = false;
  bool show_log = false;
  // experiment
  std::string experiment;
  std::string corpus;
  std::string reference = "Semi";
  std::size_t seeds = 20;
};

bool as_json(const Options &o) { return o.format == "json"; }

fs::path data_dir() {
  if (const char *env = std::getenv("RHETOR_DATA"); env && *env) return env;
  return RHETOR_DATA_DIR;
}

// Bundled tables and corpus used by `experiment`.
fs::path fixture_dir() {
  if (const char *env = std::getenv("RHETOR_FIXTURES"); env && *env) return env;
  return RHETOR_FIXTURE_DIR;
}

const TagLexicon &tag_lexicon(const Options &o) {
  static const TagLexicon lex = TagLexicon::load(o.tags.empty() ? (data_dir() / "tags.tsv").string() : o.tags);
  return lex;
}

const GlossLexicon &gloss_lexicon(const Options &o) {
  static const GlossLexicon lex = [&] {
    auto r = load_lexicon(o.glosses.empty() ? data_dir() / "glosses.tsv" : fs::path(o.glosses));
    for (const auto &w : r.warnings) std::cerr << "warning: " << w << '\n';
    return std::move(r.lexicon);
  }();
  return lex;
}

json counts_json(const StrategyCounts &c) {
  json j = json::object();
  for (auto s : kAllStrategies) j[std::string(strategy_name(s))] = c[s];
  return j;
}

json profile_json(const StrategyProfile &p) {
  json j = json::object();
  for (auto s : kAllStrategies) j[std::string(strategy_column(s))] = p[s];
  return j;
}

std::string counts_text(const StrategyCounts &c) {
  std::string out;
  for (auto s : kAllStrategies) {
    if (!out.empty()) out += '\t';
    out += std::string(strategy_name(s)) + "=" + std::to_string(c[s]);
  }
  return out;
}

struct Input {
  fs::path path;
  std::string error;  // set when the path cannot be used
};

/// Files in argument order; directories contribute their *.txt files,
/// recursively and in path order.
std::vector<Input> expand_inputs(const std::vector<std::string> &args) {
  std::vector<Input> out;
  for (const auto &a : args) {
    const fs::path p(a);
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<fs::path> files;
      for (const auto &e : fs::recursive_directory_iterator(p, ec)) {
        if (e.is_regular_file() && e.path().extension() == ".txt") files.push_back(e.path());
      }
      std::sort(files.begin(), files.end());
      for (auto &f : files) out.push_back({std::move(f), {}});
      if (ec) out.push_back({p, ec.message()});
    } else if (fs::is_regular_file(p, ec)) {
      out.push_back({p, {}});
    } else {
      out.push_back({p, "no such file"});
    }
  }
  return out;
}

void report_error(const std::string &where, const std::string &what) {
  std::cerr << "error: " << where << ": " << what << '\n';
}

// ---------------------------------------------------------------------------

int cmd_count(const Options &o) {
  const auto &tags = tag_lexicon(o);
  int status = 0;
  json rows = json::array();
  for (const auto &in : expand_inputs(o.inputs)) {
    json row{{"path", in.path.string()}};
    try {
      if (!in.error.empty()) throw Error(in.error);
      const auto c = count_all(read_file(in.path), tags);
      row["counts"] = counts_json(c);
      row["total"] = c.total();
      if (!as_json(o)) std::cout << in.path.string() << '\t' << counts_text(c) << '\n';
    } catch (const std::exception &e) {
      report_error(in.path.string(), e.what());
      row["error"] = e.what();
      status = 1;
    }
    rows.push_back(std::move(row));
  }
  if (as_json(o)) std::cout << json{{"files", rows}}.dump(2) << '\n';
  return status;
}

int cmd_profile(const Options &o) {
  const auto &tags = tag_lexicon(o);
  std::vector<ProfileStoreRecord> records;
  if (fs::exists(o.store)) records = store_load(o.store);
  for (const auto &r : records) {
    if (r.profile.label == o.label) throw Error("duplicate profile label in store: " + o.label);
  }
  StrategyCounts total;
  std::vector<std::string> sources;
  for (const auto &in : expand_inputs(o.inputs)) {
    if (!in.error.empty()) throw Error(in.path.string() + ": " + in.error);
    total += count_all(read_file(in.path), tags);
    sources.push_back(in.path.string());
  }
  if (sources.empty()) throw Error("no input files");
  records.push_back(make_record(o.label, total, sources));
  store_save(records, o.store);

  const auto &p = records.back().profile;
  if (as_json(o)) {
    std::cout << json{{"label", p.label},
                      {"counts", counts_json(total)},
                      {"profile", profile_json(p)},
                      {"degenerate", p.degenerate},
                      {"store", o.store}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << p.label;
    for (auto s : kAllStrategies) std::cout << '\t' << strategy_column(s) << '=' << format_double(p[s]);
    std::cout << '\n';
  }
  return 0;
}

int cmd_identify(const Options &o) {
  const auto known = profiles_of(store_load(o.store));
  const auto inputs = expand_inputs(o.inputs);
  if (inputs.size() != 1 || !inputs[0].error.empty()) throw Error("identify takes exactly one readable file");
  const auto query = to_profile(inputs[0].path.filename().string(),
                                count_all(read_file(inputs[0].path), tag_lexicon(o)));
  const auto ranked = identify(query, known);
  if (as_json(o)) {
    json rows = json::array();
    for (const auto &r : ranked) {
      json row{{"label", r.label}, {"rms", r.rms}};
      row["similarity_percent"] = r.similarity_percent ? json(*r.similarity_percent) : json(nullptr);
      rows.push_back(std::move(row));
    }
    std::cout << json{{"query", inputs[0].path.string()}, {"profile", profile_json(query)}, {"ranking", rows}}.dump(2)
              << '\n';
  } else {
    std::cout << "rank\tlabel\trms\tsimilarity\n";
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      const auto &r = ranked[i];
      std::cout << i + 1 << '\t' << r.label << '\t' << format_double(r.rms) << '\t'
                << (r.similarity_percent ? format_double(*r.similarity_percent) : "-") << '\n';
    }
  }
  return 0;
}

int cmd_predict(const Options &o) {
  const auto centroids = build_centroids(profiles_of(store_load(o.winners)), profiles_of(store_load(o.losers)));
  const auto &tags = tag_lexicon(o);
  int status = 0;
  json rows = json::array();
  for (const auto &in : expand_inputs(o.inputs)) {
    json row{{"path", in.path.string()}};
    try {
      if (!in.error.empty()) throw Error(in.error);
      const auto p = predict_reelection(to_profile(in.path.string(), count_all(read_file(in.path), tags)), centroids);
      row["outcome"] = outcome_name(p.outcome);
      row["rms_winners"] = p.rms_winners;
      row["rms_losers"] = p.rms_losers;
      row["margin"] = p.rms_losers - p.rms_winners;
      if (!as_json(o)) {
        std::cout << in.path.string() << '\t' << outcome_name(p.outcome) << "\trms_winners=" << format_double(p.rms_winners)
                  << "\trms_losers=" << format_double(p.rms_losers) << '\n';
      }
    } catch (const std::exception &e) {
      report_error(in.path.string(), e.what());
      row["error"] = e.what();
      status = 1;
    }
    rows.push_back(std::move(row));
  }
  if (as_json(o)) std::cout << json{{"addresses", rows}}.dump(2) << '\n';
  return status;
}

int cmd_generate(const Options &o) {
  GenerationSpec spec;
  spec.seed_word = o.seed_word;
  spec.words_per_sentence = o.words_per_sentence;
  spec.num_sentences = o.sentences;
  spec.dash_percent = o.dash_percent;
  spec.semicolon_percent = o.semicolon_percent;
  spec.mode = o.mode == "random" ? GenerationMode::Random : GenerationMode::Deterministic;
  spec.lengths = o.jitter ? LengthDistribution::Jittered : LengthDistribution::Fixed;
  const bool needs_rng = spec.mode == GenerationMode::Random || spec.lengths == LengthDistribution::Jittered ||
                         spec.dash_percent > 0.0 || spec.semicolon_percent > 0.0;
  if (needs_rng && !o.seed) throw Error("--seed is required for randomized generation");
  spec.rng_seed = o.seed.value_or(0);

  const auto out = generate(spec, gloss_lexicon(o));
  if (as_json(o)) {
    json log = json::array();
    for (const auto &i : out.injection_log) {
      log.push_back({{"sentence", i.sentence}, {"strategy", strategy_name(i.strategy)}, {"position", i.position}});
    }
    std::cout << json{{"seed_word", spec.seed_word},
                      {"mode", o.mode},
                      {"rng_seed", spec.rng_seed},
                      {"total_words", out.total_words},
                      {"sentences", out.sentences},
                      {"injections", log},
                      {"fallbacks", out.fallbacks}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << out.text() << '\n';
    if (o.show_log) {
      for (const auto &i : out.injection_log) {
        std::cerr << "inject\t" << i.sentence << '\t' << strategy_name(i.strategy) << '\t' << i.position << '\n';
      }
    }
  }
  return 0;
}

int cmd_entropy(const Options &o) {
  int status = 0;
  json rows = json::array();
  for (const auto &in : expand_inputs(o.inputs)) {
    json row{{"path", in.path.string()}};
    try {
      if (!in.error.empty()) throw Error(in.error);
      const auto r = entropy_report(read_file(in.path));
      row["total_words"] = r.total_words;
      row["distinct_words"] = r.distinct_words;
      row["entropy_bits"] = r.entropy_bits;
      row["max_entropy_bits"] = r.max_entropy_bits;
      row["relative_entropy"] = r.relative_entropy;
      if (!as_json(o)) {
        std::cout << "path=" << in.path.string() << "\ntotal_words=" << r.total_words
                  << "\ndistinct_words=" << r.distinct_words << "\nentropy_bits=" << format_double(r.entropy_bits)
                  << "\nmax_entropy_bits=" << format_double(r.max_entropy_bits)
                  << "\nrelative_entropy=" << format_double(r.relative_entropy) << "\n\n";
      }
    } catch (const std::exception &e) {
      report_error(in.path.string(), e.what());
      row["error"] = e.what();
      status = 1;
    }
    rows.push_back(std::move(row));
  }
  if (as_json(o)) std::cout << json{{"files", rows}}.dump(2) << '\n';
  return status;
}

int cmd_summarize(const Options &o) {
  const auto inputs = expand_inputs(o.inputs);
  if (inputs.size() != 1 || !inputs[0].error.empty()) throw Error("summarize takes exactly one readable file");
  const auto weights = o.weights.empty() ? WeightTable::defaults() : WeightTable::load(o.weights);
  const auto items = summarize(read_file(inputs[0].path), o.k, weights, tag_lexicon(o));
  if (as_json(o)) {
    json rows = json::array();
    for (const auto &i : items) rows.push_back({{"index", i.index}, {"score", i.score}, {"text", i.text}});
    std::cout << json{{"path", inputs[0].path.string()}, {"k", o.k}, {"sentences", rows}}.dump(2) << '\n';
  } else {
    for (const auto &i : items) std::cout << i.text << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------

std::vector<StrategyProfile> mix_candidates() {
  auto rows = profiles_of(store_load(fixture_dir() / "strategy_mixes.tsv"));
  std::erase_if(rows, [](const StrategyProfile &p) { return p.label == "Unknown"; });
  return rows;
}

int cmd_experiment(const Options &o) {
  const std::uint64_t first_seed = o.seed.value_or(1);
  json j{{"experiment", o.experiment}};

  if (o.experiment == "loo") {
    const auto corpus = load_corpus(o.corpus.empty() ? fixture_dir() / "corpus" : fs::path(o.corpus));
    const auto r = leave_one_out(corpus, tag_lexicon(o));
    json trials = json::array();
    for (const auto &t : r.trials) {
      trials.push_back({{"author", t.author}, {"text", t.name}, {"predicted", t.predicted}, {"rms", t.rms},
                        {"correct", t.correct}});
    }
    j["trials"] = trials;
    j["correct"] = r.correct;
    j["accuracy_percent"] = r.accuracy_percent();
    if (!as_json(o)) {
      std::cout << "author\ttext\tpredicted\trms\tcorrect\n";
      for (const auto &t : r.trials) {
        std::cout << t.author << '\t' << t.name << '\t' << t.predicted << '\t' << format_double(t.rms) << '\t'
                  << (t.correct ? "yes" : "no") << '\n';
      }
      std::cout << "Average: " << format_double(r.accuracy_percent()) << '\n';
    }
  } else if (o.experiment == "extra-authors") {
    const auto corpus = load_corpus(o.corpus.empty() ? fixture_dir() / "corpus" : fs::path(o.corpus));
    const auto rows = extra_author_table(corpus, tag_lexicon(o));
    json table = json::array();
    double sum = 0.0;
    for (const auto &r : rows) {
      table.push_back({{"extra_authors", r.extra_authors}, {"tests", r.tests}, {"percent_correct", r.percent_correct()}});
      sum += r.percent_correct();
    }
    const double avg = rows.empty() ? 0.0 : sum / static_cast<double>(rows.size());
    j["rows"] = table;
    j["average"] = avg;
    if (!as_json(o)) {
      std::cout << "# Extra Authors\t# Tests Ran\t% Tests Correct\n";
      for (const auto &r : rows) {
        std::cout << r.extra_authors << '\t' << r.tests << '\t' << format_double(r.percent_correct()) << '\n';
      }
      std::cout << "Average:\t\t" << format_double(avg) << '\n';
    }
  } else if (o.experiment == "nlg-similarity") {
    const auto cands = mix_candidates();
    const auto sweep = similarity_sweep(gloss_lexicon(o), tag_lexicon(o), cands, o.reference, first_seed, o.seeds);
    json runs = json::array();
    for (const auto &r : sweep.runs) {
      runs.push_back({{"seed_word", r.seed_word},
                      {"mode", r.mode == GenerationMode::Random ? "random" : "deterministic"},
                      {"rng_seed", r.rng_seed},
                      {"similarity", r.similarity}});
    }
    j["reference"] = o.reference;
    j["runs"] = runs;
    j["mean"] = sweep.mean();
    j["mean_random"] = sweep.mean(GenerationMode::Random);
    j["mean_deterministic"] = sweep.mean(GenerationMode::Deterministic);
    j["runs_at_least_75"] = sweep.count_at_least(75.0);
    if (!as_json(o)) {
      std::cout << "seed word\tmode\trng seed\tsimilarity\n";
      for (const auto &r : sweep.runs) {
        std::cout << r.seed_word << '\t' << (r.mode == GenerationMode::Random ? "random" : "deterministic") << '\t'
                  << r.rng_seed << '\t' << format_double(r.similarity) << '\n';
      }
      std::cout << "mean\t" << format_double(sweep.mean()) << "\nruns >= 75\t" << sweep.count_at_least(75.0) << '/'
                << sweep.runs.size() << '\n';
    }
  } else if (o.experiment == "entropy-ordering") {
    const auto c = entropy_comparison(gloss_lexicon(o), first_seed, o.seeds);
    j["runs_per_mode"] = c.runs;
    j["mean_random"] = c.mean_random;
    j["mean_deterministic"] = c.mean_deterministic;
    j["random_exceeds_deterministic"] = c.mean_random > c.mean_deterministic;
    if (!as_json(o)) {
      std::cout << "mode\tmean relative entropy\nrandom\t" << format_double(c.mean_random) << "\ndeterministic\t"
                << format_double(c.mean_deterministic) << '\n';
    }
  } else if (o.experiment == "election") {
    const auto w = profiles_of(store_load(o.winners.empty() ? fixture_dir() / "inaugural_winners.tsv" : fs::path(o.winners)));
    const auto l = profiles_of(store_load(o.losers.empty() ? fixture_dir() / "inaugural_losers.tsv" : fs::path(o.losers)));
    const auto st = election_study(w, l);
    json rows = json::array();
    for (const auto &r : st.rows) {
      rows.push_back({{"label", r.label},
                      {"won", r.won},
                      {"prediction", outcome_name(r.prediction.outcome)},
                      {"rms_winners", r.prediction.rms_winners},
                      {"rms_losers", r.prediction.rms_losers}});
    }
    j["winners_average"] = profile_json(st.centroids.winners_avg);
    j["losers_average"] = profile_json(st.centroids.losers_avg);
    j["spread_population"] = st.spread.mean_population;
    j["spread_sample"] = st.spread.mean_sample;
    j["rows"] = rows;
    j["correct"] = st.correct();
    if (!as_json(o)) {
      std::cout << "label\twon\tprediction\trms_winners\trms_losers\n";
      for (const auto &r : st.rows) {
        std::cout << r.label << '\t' << (r.won ? "yes" : "no") << '\t' << outcome_name(r.prediction.outcome) << '\t'
                  << format_double(r.prediction.rms_winners) << '\t' << format_double(r.prediction.rms_losers) << '\n';
      }
      std::cout << "spread (population)\t" << format_double(st.spread.mean_population) << "\nspread (sample)\t"
                << format_double(st.spread.mean_sample) << "\ncorrect\t" << st.correct() << '/' << st.rows.size()
                << '\n';
    }
  } else {
    throw Error("unknown experiment: " + o.experiment);
  }
  if (as_json(o)) std::cout << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Count, profile and generate text by rhetorical strategy"};
  app.require_subcommand(1);
  Options o;

  app.add_option("--lexicon", o.glosses, "gloss lexicon (lemma<TAB>gloss)");
  app.add_option("--tags", o.tags, "tag lexicon (word<TAB>TAG)");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto *count = app.add_subcommand("count", "count strategies per file");
  count->add_option("paths", o.inputs, "files or directories")->required();

  auto *profile = app.add_subcommand("profile", "append an author profile to a store");
  profile->add_option("--label", o.label, "author label")->required();
  profile->add_option("--store", o.store, "profile store (TSV)")->required();
  profile->add_option("paths", o.inputs, "files or directories")->required();

  auto *ident = app.add_subcommand("identify", "rank stored authors for an unknown text");
  ident->add_option("--store", o.store, "profile store (TSV)")->required();
  ident->add_option("path", o.inputs, "unknown text")->required();

  auto *predict = app.add_subcommand("predict", "re-election outcome for addresses");
  predict->add_option("--winners", o.winners, "winners profile store")->required();
  predict->add_option("--losers", o.losers, "losers profile store")->required();
  predict->add_option("paths", o.inputs, "address files")->required();

  auto *gen = app.add_subcommand("generate", "generate text from a seed word");
  gen->add_option("--word", o.seed_word, "seed word")->required();
  gen->add_option("--wps", o.words_per_sentence, "words per sentence")->check(CLI::PositiveNumber);
  gen->add_option("--sentences", o.sentences, "number of sentences")->check(CLI::PositiveNumber);
  gen->add_option("--dash", o.dash_percent, "percent of sentences with a dash")->check(CLI::Range(0.0, 100.0));
  gen->add_option("--semicolon", o.semicolon_percent, "percent of sentences with a semicolon")
      ->check(CLI::Range(0.0, 100.0));
  gen->add_option("--mode", o.mode, "word choice")->check(CLI::IsMember({"deterministic", "random"}));
  gen->add_option("--seed", o.seed, "rng seed");
  gen->add_flag("--jitter", o.jitter, "vary sentence lengths around --wps");
  gen->add_flag("--log", o.show_log, "print the injection log to stderr");

  auto *ent = app.add_subcommand("entropy", "word entropy per file");
  ent->add_option("paths", o.inputs, "files or directories")->required();

  auto *summ = app.add_subcommand("summarize", "extractive summary by strategy score");
  summ->add_option("--k", o.k, "sentences to keep")->check(CLI::PositiveNumber);
  summ->add_option("--weights", o.weights, "weight table (strategy<TAB>weight)");
  summ->add_option("path", o.inputs, "document")->required();

  auto *exp = app.add_subcommand("experiment", "run a bundled experiment");
  exp->add_option("name", o.experiment, "experiment")
      ->required()
      ->check(CLI::IsMember({"loo", "extra-authors", "nlg-similarity", "entropy-ordering", "election"}));
  exp->add_option("--corpus", o.corpus, "corpus directory (<author>/<text>.txt)");
  exp->add_option("--seed", o.seed, "first rng seed");
  exp->add_option("--seeds", o.seeds, "rng seeds per seed word");
  exp->add_option("--reference", o.reference, "reference profile label");
  exp->add_option("--winners", o.winners, "winners profile store");
  exp->add_option("--losers", o.losers, "losers profile store");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count) return cmd_count(o);
    if (*profile) return cmd_profile(o);
    if (*ident) return cmd_identify(o);
    if (*predict) return cmd_predict(o);
    if (*gen) return cmd_generate(o);
    if (*ent) return cmd_entropy(o);
    if (*summ) return cmd_summarize(o);
    if (*exp) return cmd_experiment(o);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
