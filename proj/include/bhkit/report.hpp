#ifndef BHKIT_REPORT_HPP
#define BHKIT_REPORT_HPP

#include <json.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace bhkit {

inline constexpr const char* kVersion = "1.0.0";

struct ResultRecord {
  std::string name;
  double computed = 0.0;
  std::optional<double> paper;
  std::optional<double> tolerance;  // absolute; applies when `paper` is set
  bool pass = true;

  std::optional<double> diff() const {
    if (!paper) return std::nullopt;
    return std::fabs(computed - *paper);
  }
};

/// Compared against a published value within an absolute tolerance.
inline ResultRecord compared(std::string name, double computed, double paper, double tol) {
  ResultRecord r{std::move(name), computed, paper, tol, false};
  r.pass = std::isfinite(computed) && std::fabs(computed - paper) <= tol;
  return r;
}

/// Compared within a tolerance relative to the published value.
inline ResultRecord compared_relative(std::string name, double computed, double paper, double rel) {
  return compared(std::move(name), computed, paper, rel * std::fabs(paper));
}

/// A computed value with a pass flag decided by the caller.
inline ResultRecord checked(std::string name, double computed, bool pass) {
  return {std::move(name), computed, std::nullopt, std::nullopt, pass};
}

struct RunReport {
  std::string command;
  std::vector<ResultRecord> results;
  double wall_ms = 0.0;

  bool pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }

  void add(ResultRecord r) { results.push_back(std::move(r)); }
  void append(const RunReport& other) {
    results.insert(results.end(), other.results.begin(), other.results.end());
  }
};

inline nlohmann::ordered_json to_json(const RunReport& report, bool with_timing = true) {
  nlohmann::ordered_json j;
  j["command"] = report.command;
  j["version"] = kVersion;
  auto& results = j["results"] = nlohmann::ordered_json::array();
  for (const auto& r : report.results) {
    nlohmann::ordered_json row;
    row["name"] = r.name;
    row["computed"] = r.computed;
    row["paper"] = r.paper ? nlohmann::ordered_json(*r.paper) : nlohmann::ordered_json(nullptr);
    const auto d = r.diff();
    row["diff"] = d ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(nullptr);
    row["pass"] = r.pass;
    results.push_back(std::move(row));
  }
  if (with_timing) j["wall_ms"] = report.wall_ms;
  return j;
}

}  // namespace bhkit

#endif  // BHKIT_REPORT_HPP
