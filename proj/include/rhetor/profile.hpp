#ifndef RHETOR_PROFILE_HPP
#define RHETOR_PROFILE_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "rhetor/strategy.hpp"

namespace rhetor {

/// Labeled vector of strategy percentages (0-100). A text with no detected
/// strategies yields an all-zero profile flagged as degenerate.
struct StrategyProfile {
  std::string label;
  PerStrategy<double> p;
  bool degenerate = false;

  double operator[](StrategyKind s) const { return p[s]; }

  double sum() const {
    double total = 0.0;
    for (double v : p.values) total += v;
    return total;
  }

  friend bool operator==(const StrategyProfile &, const StrategyProfile &) = default;
};

inline StrategyProfile make_profile(std::string label, double dash, double semi, double allit,
                                    double ana, double epi, double para) {
  StrategyProfile prof{std::move(label), {}, false};
  prof.p.values = {dash, semi, allit, ana, epi, para};
  prof.degenerate = prof.sum() == 0.0;
  return prof;
}

/// p[s] = 100 * counts[s] / total.
inline StrategyProfile to_profile(std::string label, const StrategyCounts &counts) {
  StrategyProfile prof{std::move(label), {}, false};
  const std::size_t total = counts.total();
  if (total == 0) {
    prof.degenerate = true;
    return prof;
  }
  for (auto s : kAllStrategies) {
    prof.p[s] = 100.0 * static_cast<double>(counts[s]) / static_cast<double>(total);
  }
  return prof;
}

/// Root-mean-square difference over the six strategies.
inline double rms(const StrategyProfile &a, const StrategyProfile &b) {
  double acc = 0.0;
  for (auto s : kAllStrategies) {
    const double d = a[s] - b[s];
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(kStrategyCount));
}

struct NormalizedDistance {
  std::string label;
  double rms = 0.0;
  double percent = 0.0;  // rms / (max rms - min rms) * 100
};

/// Each candidate's RMS to `target` divided by the spread (max - min) of RMS
/// values over the candidate set, as a percent. Not bounded by 100. When every
/// candidate is equidistant all values are 0.
inline std::vector<NormalizedDistance> normalized_rms(const StrategyProfile &target,
                                                      std::span<const StrategyProfile> candidates) {
  if (candidates.size() < 2) throw Error("insufficient candidates for normalization");
  std::vector<NormalizedDistance> out;
  out.reserve(candidates.size());
  double lo = 0.0;
  double hi = 0.0;
  for (const auto &c : candidates) {
    const double d = rms(target, c);
    if (out.empty()) {
      lo = hi = d;
    } else {
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    out.push_back({c.label, d, 0.0});
  }
  const double spread = hi - lo;
  if (spread > 0.0) {
    for (auto &n : out) n.percent = 100.0 * n.rms / spread;
  }
  return out;
}

/// 100 minus a normalized RMS percent; negative when the input exceeds 100.
constexpr double similarity(double normalized_rms_percent) { return 100.0 - normalized_rms_percent; }

// ---------------------------------------------------------------------------
// Profile store
// ---------------------------------------------------------------------------

struct ProfileStoreRecord {
  StrategyProfile profile;
  std::optional<StrategyCounts> counts;
  std::vector<std::string> source_files;

  friend bool operator==(const ProfileStoreRecord &, const ProfileStoreRecord &) = default;
};

inline ProfileStoreRecord make_record(std::string label, const StrategyCounts &counts,
                                      std::vector<std::string> sources = {}) {
  return {to_profile(std::move(label), counts), counts, std::move(sources)};
}

/// Shortest decimal text that parses back to exactly `v`.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::optional<double> parse_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

namespace detail {

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

inline std::string profile_header() {
  std::string h = "label";
  for (auto s : kAllStrategies) {
    h += '\t';
    h += strategy_column(s);
  }
  return h;
}

inline std::string counts_header() {
  std::string h = "label";
  for (auto s : kAllStrategies) {
    h += "\tn";
    h += strategy_column(s).substr(1);
  }
  return h + "\tsources";
}

inline std::string line_error(const std::string &path, std::size_t line_no, const std::string &what) {
  return path + ":" + std::to_string(line_no) + ": " + what;
}

}  // namespace detail

/// Path of the counts file written next to a profile store.
inline std::filesystem::path counts_sidecar(const std::filesystem::path &store) {
  auto p = store;
  p += ".counts";
  return p;
}

/// Writes `label pDash .. pPara` rows and, when any record carries counts, a
/// `<path>.counts` sidecar with the raw tallies and source files.
inline void store_save(std::span<const ProfileStoreRecord> records, const std::filesystem::path &path) {
  std::unordered_set<std::string> labels;
  for (const auto &r : records) {
    if (!labels.insert(r.profile.label).second) throw Error("duplicate profile label: " + r.profile.label);
    if (r.profile.label.find_first_of("\t\n") != std::string::npos) {
      throw Error("profile label contains a tab or newline: " + r.profile.label);
    }
  }

  std::ofstream out(path);
  if (!out) throw Error("cannot write profile store: " + path.string());
  out << detail::profile_header() << '\n';
  bool any_counts = false;
  for (const auto &r : records) {
    out << r.profile.label;
    for (double v : r.profile.p.values) out << '\t' << format_double(v);
    out << '\n';
    any_counts = any_counts || r.counts.has_value();
  }
  if (!out) throw Error("failed writing profile store: " + path.string());

  const auto sidecar = counts_sidecar(path);
  if (!any_counts) {
    std::error_code ec;
    std::filesystem::remove(sidecar, ec);
    return;
  }
  std::ofstream cs(sidecar);
  if (!cs) throw Error("cannot write counts file: " + sidecar.string());
  cs << detail::counts_header() << '\n';
  for (const auto &r : records) {
    if (!r.counts) continue;
    cs << r.profile.label;
    for (auto v : r.counts->by_kind.values) cs << '\t' << v;
    for (const auto &src : r.source_files) cs << '\t' << src;
    cs << '\n';
  }
}

inline std::vector<ProfileStoreRecord> store_load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open profile store: " + path.string());
  const std::string name = path.string();

  std::vector<ProfileStoreRecord> records;
  std::unordered_set<std::string> labels;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = detail::split_tabs(line);
    if (!header_seen) {
      if (line != detail::profile_header()) {
        throw Error(detail::line_error(name, line_no, "expected header '" + detail::profile_header() + "'"));
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != kStrategyCount + 1) {
      throw Error(detail::line_error(name, line_no,
                                     "expected " + std::to_string(kStrategyCount + 1) + " columns, got " +
                                         std::to_string(fields.size())));
    }
    ProfileStoreRecord rec;
    rec.profile.label = std::string(fields[0]);
    if (rec.profile.label.empty()) throw Error(detail::line_error(name, line_no, "empty label"));
    for (std::size_t i = 0; i < kStrategyCount; ++i) {
      const auto v = parse_double(fields[i + 1]);
      if (!v || *v < 0.0 || *v > 100.0) {
        throw Error(detail::line_error(name, line_no, "bad percentage '" + std::string(fields[i + 1]) + "'"));
      }
      rec.profile.p.values[i] = *v;
    }
    rec.profile.degenerate = rec.profile.sum() == 0.0;
    if (!labels.insert(rec.profile.label).second) {
      throw Error(detail::line_error(name, line_no, "duplicate profile label '" + rec.profile.label + "'"));
    }
    records.push_back(std::move(rec));
  }
  if (!header_seen) throw Error(name + ": empty profile store");

  const auto sidecar = counts_sidecar(path);
  if (!std::filesystem::exists(sidecar)) return records;

  std::ifstream cs(sidecar);
  if (!cs) throw Error("cannot open counts file: " + sidecar.string());
  const std::string cs_name = sidecar.string();
  line_no = 0;
  header_seen = false;
  while (std::getline(cs, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != detail::counts_header()) {
        throw Error(detail::line_error(cs_name, line_no, "expected header '" + detail::counts_header() + "'"));
      }
      header_seen = true;
      continue;
    }
    const auto fields = detail::split_tabs(line);
    if (fields.size() < kStrategyCount + 1) {
      throw Error(detail::line_error(cs_name, line_no, "too few columns"));
    }
    auto it = std::find_if(records.begin(), records.end(),
                           [&](const ProfileStoreRecord &r) { return r.profile.label == fields[0]; });
    if (it == records.end()) {
      throw Error(detail::line_error(cs_name, line_no, "no profile for label '" + std::string(fields[0]) + "'"));
    }
    if (it->counts) {
      throw Error(detail::line_error(cs_name, line_no, "duplicate profile label '" + std::string(fields[0]) + "'"));
    }
    StrategyCounts counts;
    for (std::size_t i = 0; i < kStrategyCount; ++i) {
      std::size_t v = 0;
      const auto f = fields[i + 1];
      const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
      if (res.ec != std::errc() || res.ptr != f.data() + f.size()) {
        throw Error(detail::line_error(cs_name, line_no, "bad count '" + std::string(f) + "'"));
      }
      counts.by_kind.values[i] = v;
    }
    const auto recomputed = to_profile(it->profile.label, counts);
    for (auto s : kAllStrategies) {
      if (std::abs(recomputed[s] - it->profile[s]) > 1e-9) {
        throw Error(detail::line_error(cs_name, line_no, "counts disagree with stored profile"));
      }
    }
    it->counts = counts;
    for (std::size_t i = kStrategyCount + 1; i < fields.size(); ++i) it->source_files.emplace_back(fields[i]);
  }
  return records;
}

inline std::vector<StrategyProfile> profiles_of(std::span<const ProfileStoreRecord> records) {
  std::vector<StrategyProfile> out;
  out.reserve(records.size());
  for (const auto &r : records) out.push_back(r.profile);
  return out;
}

}  // namespace rhetor

#endif  // RHETOR_PROFILE_HPP
