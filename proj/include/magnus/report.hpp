#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace magnus {

inline constexpr std::string_view kVersion = "0.1.0";

struct WitnessReport {
  std::size_t variable = 0;
  std::string phi;
  std::vector<std::string> remainder;  // "c ; p ; j ; q" lines

  friend bool operator==(const WitnessReport&, const WitnessReport&) = default;
};

struct OracleReport {
  std::string search;  // "dependency" or "generation"
  std::size_t max_degree = 0;
  std::string outcome;  // "FOUND" or "NONE"
  std::optional<std::string> phi;
  std::optional<bool> exact;
  std::optional<bool> predicted_none;
  std::vector<WitnessReport> witness;
  std::string note;

  friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

struct MemberReport {
  std::string element;       // s, over the rewriting alphabet
  std::string min_monomial;  // m(s)
  std::vector<std::string> relation_letters;
  std::vector<std::string> presentation;
  std::size_t steps = 0;
  std::size_t step_bound = 0;
  bool relabeled = false;

  friend bool operator==(const MemberReport&, const MemberReport&) = default;
};

/// Machine-readable result of one CLI command. Every field except timings
/// is a deterministic function of the inputs.
struct Report {
  std::string command;
  std::string verdict;
  std::optional<std::size_t> rank;
  std::optional<std::size_t> dimension;
  std::vector<std::vector<std::string>> alpha;
  std::vector<std::vector<std::string>> beta;
  std::vector<std::string> phi_candidates;
  std::vector<std::string> phi_relations;
  std::vector<std::string> tau_trace;
  std::optional<OracleReport> oracle;
  std::optional<MemberReport> member;
  std::optional<bool> eq3;
  std::vector<std::string> assumptions;
  std::string reason;
  std::map<std::string, double> timings;
  std::string version{kVersion};
  int exit_code = 0;

  friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const WitnessReport& r);
void from_json(const nlohmann::json& j, WitnessReport& r);
void to_json(nlohmann::json& j, const OracleReport& r);
void from_json(const nlohmann::json& j, OracleReport& r);
void to_json(nlohmann::json& j, const MemberReport& r);
void from_json(const nlohmann::json& j, MemberReport& r);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

/// Human-readable rendering.
std::string render_text(const Report& report);

}  // namespace magnus
