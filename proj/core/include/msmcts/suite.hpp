#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "msmcts/mcts.hpp"
#include "msmcts/orchestrator.hpp"
#include "msmcts/scene.hpp"

namespace msmcts {

enum class Difficulty { kEasy, kMedium, kHard, kAll };

Difficulty difficulty_from_string(std::string_view s);
std::string_view to_string(Difficulty d);

/// Object counts drawn per level: easy {4}, medium {5, 6}, hard {7, 8}.
std::vector<std::size_t> level_object_counts(Difficulty level);

struct SuiteConfig {
  Difficulty difficulty = Difficulty::kAll;
  std::size_t cases_per_level = 80;
  std::uint64_t base_seed = 0;
  /// Per-case timeout in seconds; overrides budget.wall_clock_limit.
  double timeout = 30.0;
  SearchBudget budget;
  SceneConfig scene;  // n_objects and rng_seed are set per case
  std::size_t threads = 1;
};

struct CaseSpec {
  std::string level;
  std::size_t index = 0;
  std::size_t n_objects = 0;
  std::uint64_t seed = 0;
};

struct CaseRecord {
  CaseSpec spec;
  Scene scene;
  PlanReport report;
};

struct MetricsRow {
  std::string level;
  std::size_t cases = 0;
  double success_rate = 0.0;  // percent
  // Step and displacement statistics cover successful cases only.
  double mean_steps = 0.0;
  double std_steps = 0.0;
  double mean_dist = 0.0;
  double std_dist = 0.0;
  double mean_time_s = 0.0;
};

struct SuiteResult {
  std::vector<MetricsRow> rows;
  std::vector<CaseRecord> records;
};

/// Case i of the suite (counting across levels) uses seed base_seed + i.
std::vector<CaseSpec> suite_cases(const SuiteConfig& cfg);

/// Generates and plans every case; records come back in input order no
/// matter how many worker threads ran them.
std::vector<CaseRecord> run_cases(std::span<const CaseSpec> cases, const SuiteConfig& cfg);

MetricsRow aggregate(std::string level, std::span<const CaseRecord> records);

/// Rows per level, per object count ("n4" ... "n8") and, when both are
/// present, an "easy+medium" row.
SuiteResult run_suite(const SuiteConfig& cfg);

std::vector<MetricsRow> summarize(std::span<const CaseRecord> records);

inline constexpr const char* kMetricsCsvHeader =
    "level,cases,success_rate,mean_steps,std_steps,mean_dist,std_dist,mean_time_s";

std::string metrics_csv(std::span<const MetricsRow> rows);

nlohmann::json case_record_json(const CaseRecord& record);

}  // namespace msmcts
