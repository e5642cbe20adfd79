#ifndef RHETOR_CLASSIFY_HPP
#define RHETOR_CLASSIFY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rhetor/profile.hpp"
#include "rhetor/strategy.hpp"

namespace rhetor {

// ---------------------------------------------------------------------------
// Authorship attribution
// ---------------------------------------------------------------------------

struct RankedMatch {
  std::string label;
  double rms = 0.0;
  std::optional<double> similarity_percent;  // needs at least two known profiles
};

/// Ranks every known profile by RMS distance to `unknown`, closest first.
/// Equal distances are ordered by label.
inline std::vector<RankedMatch> identify(const StrategyProfile &unknown,
                                         std::span<const StrategyProfile> known) {
  if (known.empty()) throw Error("no known profiles to rank");
  if (unknown.degenerate) throw Error("no strategies detected in query text");

  std::vector<RankedMatch> out;
  out.reserve(known.size());
  if (known.size() >= 2) {
    for (auto &n : normalized_rms(unknown, known)) {
      out.push_back({std::move(n.label), n.rms, similarity(n.percent)});
    }
  } else {
    out.push_back({known.front().label, rms(unknown, known.front()), std::nullopt});
  }
  std::stable_sort(out.begin(), out.end(), [](const RankedMatch &a, const RankedMatch &b) {
    if (a.rms != b.rms) return a.rms < b.rms;
    return a.label < b.label;
  });
  return out;
}

/// Sums the counts of several texts by the same author. Merging happens on
/// counts, not on profiles.
inline StrategyCounts merge_counts(std::span<const StrategyCounts> parts) {
  StrategyCounts total;
  for (const auto &c : parts) total += c;
  return total;
}

// ---------------------------------------------------------------------------
// Re-election prediction
// ---------------------------------------------------------------------------

/// Per-strategy arithmetic mean of a set of profiles.
inline StrategyProfile centroid(std::string label, std::span<const StrategyProfile> members) {
  if (members.empty()) throw Error("cannot average an empty profile set");
  StrategyProfile avg{std::move(label), {}, false};
  for (const auto &m : members) {
    for (std::size_t i = 0; i < kStrategyCount; ++i) avg.p.values[i] += m.p.values[i];
  }
  for (auto &v : avg.p.values) v /= static_cast<double>(members.size());
  avg.degenerate = avg.sum() == 0.0;
  return avg;
}

struct CentroidPair {
  StrategyProfile winners_avg;
  StrategyProfile losers_avg;
};

inline CentroidPair build_centroids(std::span<const StrategyProfile> winners,
                                    std::span<const StrategyProfile> losers) {
  if (winners.empty()) throw Error("winners set is empty");
  if (losers.empty()) throw Error("losers set is empty");
  return {centroid("winnersAverage", winners), centroid("losersAverage", losers)};
}

/// Standard deviation of a two-element set {a, b}, in both conventions.
struct PairDeviation {
  double population = 0.0;  // divide by 2
  double sample = 0.0;      // divide by 1
};

inline PairDeviation pair_deviation(double a, double b) {
  const double half = std::abs(a - b) / 2.0;
  // Each point sits `half` away from the mean.
  return {half, std::sqrt(2.0 * half * half)};
}

/// How far apart the two centroids are, strategy by strategy.
struct CentroidSpread {
  PerStrategy<PairDeviation> per_strategy;
  double mean_population = 0.0;
  double mean_sample = 0.0;
};

inline CentroidSpread centroid_spread(const CentroidPair &c) {
  CentroidSpread out;
  for (auto s : kAllStrategies) {
    out.per_strategy[s] = pair_deviation(c.winners_avg[s], c.losers_avg[s]);
    out.mean_population += out.per_strategy[s].population;
    out.mean_sample += out.per_strategy[s].sample;
  }
  out.mean_population /= static_cast<double>(kStrategyCount);
  out.mean_sample /= static_cast<double>(kStrategyCount);
  return out;
}

enum class Outcome { Win, Lose, Tie };

constexpr std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Win: return "Win";
    case Outcome::Lose: return "Lose";
    case Outcome::Tie: return "Tie";
  }
  return "?";
}

inline constexpr double kTieTolerance = 1e-12;

struct Prediction {
  Outcome outcome = Outcome::Tie;
  double rms_winners = 0.0;
  double rms_losers = 0.0;
  PairDeviation deviation;  // of {rms_winners, rms_losers}
};

/// Win when the address is closer to the winners' centroid, Lose when closer
/// to the losers', Tie when the two distances agree within 1e-12.
inline Prediction predict_reelection(const StrategyProfile &address, const CentroidPair &centroids) {
  if (address.degenerate) throw Error("no strategies detected in address");
  Prediction p;
  p.rms_winners = rms(address, centroids.winners_avg);
  p.rms_losers = rms(address, centroids.losers_avg);
  p.deviation = pair_deviation(p.rms_winners, p.rms_losers);
  if (std::abs(p.rms_winners - p.rms_losers) <= kTieTolerance) {
    p.outcome = Outcome::Tie;
  } else {
    p.outcome = p.rms_winners < p.rms_losers ? Outcome::Win : Outcome::Lose;
  }
  return p;
}

}  // namespace rhetor

#endif  // RHETOR_CLASSIFY_HPP
