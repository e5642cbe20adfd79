#ifndef RHETOR_STRATEGY_HPP
#define RHETOR_STRATEGY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rhetor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The six counted rhetorical strategies. The ordinal order is the column
/// order used by every profile table (pDash .. pPara).
enum class StrategyKind : std::uint8_t {
  Dash,
  Semicolon,
  Alliteration,
  Anaphora,
  Epistrophe,
  Parallelism,
};

inline constexpr std::size_t kStrategyCount = 6;

inline constexpr std::array<StrategyKind, kStrategyCount> kAllStrategies = {
    StrategyKind::Dash,       StrategyKind::Semicolon,  StrategyKind::Alliteration,
    StrategyKind::Anaphora,   StrategyKind::Epistrophe, StrategyKind::Parallelism,
};

constexpr std::size_t index_of(StrategyKind s) { return static_cast<std::size_t>(s); }

constexpr std::string_view strategy_name(StrategyKind s) {
  constexpr std::array<std::string_view, kStrategyCount> names = {
      "Dash", "Semicolon", "Alliteration", "Anaphora", "Epistrophe", "Parallelism"};
  return names[index_of(s)];
}

/// Column header used in profile store files.
constexpr std::string_view strategy_column(StrategyKind s) {
  constexpr std::array<std::string_view, kStrategyCount> names = {
      "pDash", "pSemi", "pAllit", "pAna", "pEpi", "pPara"};
  return names[index_of(s)];
}

/// Accepts the long name, the profile column name or the column name without
/// its leading 'p', case-insensitively.
inline std::optional<StrategyKind> parse_strategy(std::string_view text) {
  auto lower = [](std::string_view v) {
    std::string out(v);
    for (auto &c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
  };
  const std::string key = lower(text);
  for (auto s : kAllStrategies) {
    const auto column = strategy_column(s);
    if (key == lower(strategy_name(s)) || key == lower(column) || key == lower(column.substr(1))) {
      return s;
    }
  }
  return std::nullopt;
}

/// Per-strategy values indexed by StrategyKind.
template <typename T>
struct PerStrategy {
  std::array<T, kStrategyCount> values{};

  constexpr T &operator[](StrategyKind s) { return values[index_of(s)]; }
  constexpr const T &operator[](StrategyKind s) const { return values[index_of(s)]; }

  friend constexpr bool operator==(const PerStrategy &, const PerStrategy &) = default;
};

/// Integer tally of strategy instances found in one text.
struct StrategyCounts {
  PerStrategy<std::size_t> by_kind;

  std::size_t &operator[](StrategyKind s) { return by_kind[s]; }
  std::size_t operator[](StrategyKind s) const { return by_kind[s]; }

  std::size_t total() const {
    std::size_t sum = 0;
    for (auto v : by_kind.values) sum += v;
    return sum;
  }

  StrategyCounts &operator+=(const StrategyCounts &other) {
    for (std::size_t i = 0; i < kStrategyCount; ++i) by_kind.values[i] += other.by_kind.values[i];
    return *this;
  }

  friend bool operator==(const StrategyCounts &, const StrategyCounts &) = default;
};

inline StrategyCounts make_counts(std::size_t dash, std::size_t semi, std::size_t allit,
                                  std::size_t ana, std::size_t epi, std::size_t para) {
  StrategyCounts c;
  c.by_kind.values = {dash, semi, allit, ana, epi, para};
  return c;
}

}  // namespace rhetor

#endif  // RHETOR_STRATEGY_HPP
