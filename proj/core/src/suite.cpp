#include "msmcts/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "msmcts/error.hpp"
#include "msmcts/io.hpp"

namespace msmcts {

Difficulty difficulty_from_string(std::string_view s) {
  if (s == "easy") return Difficulty::kEasy;
  if (s == "medium") return Difficulty::kMedium;
  if (s == "hard") return Difficulty::kHard;
  if (s == "all") return Difficulty::kAll;
  throw Error(ErrorCode::kInvalidArgument, "unknown difficulty '" + std::string(s) + "'");
}

std::string_view to_string(Difficulty d) {
  switch (d) {
    case Difficulty::kEasy: return "easy";
    case Difficulty::kMedium: return "medium";
    case Difficulty::kHard: return "hard";
    case Difficulty::kAll: return "all";
  }
  return "unknown";
}

std::vector<std::size_t> level_object_counts(Difficulty level) {
  switch (level) {
    case Difficulty::kEasy: return {4};
    case Difficulty::kMedium: return {5, 6};
    case Difficulty::kHard: return {7, 8};
    case Difficulty::kAll: return {4, 5, 6, 7, 8};
  }
  return {};
}

std::vector<CaseSpec> suite_cases(const SuiteConfig& cfg) {
  if (cfg.cases_per_level < 1) {
    throw Error(ErrorCode::kInvalidArgument, "cases_per_level must be at least 1");
  }
  std::vector<Difficulty> levels;
  if (cfg.difficulty == Difficulty::kAll) {
    levels = {Difficulty::kEasy, Difficulty::kMedium, Difficulty::kHard};
  } else {
    levels = {cfg.difficulty};
  }
  std::vector<CaseSpec> out;
  for (Difficulty level : levels) {
    const auto counts = level_object_counts(level);
    for (std::size_t i = 0; i < cfg.cases_per_level; ++i) {
      const std::size_t index = out.size();
      out.push_back({std::string(to_string(level)), index, counts[i % counts.size()],
                     cfg.base_seed + index});
    }
  }
  return out;
}

namespace {

CaseRecord run_one(const CaseSpec& spec, const SuiteConfig& cfg) {
  SceneConfig sc = cfg.scene;
  sc.n_objects = spec.n_objects;
  sc.rng_seed = spec.seed;
  CaseRecord rec{spec, generate_scene(sc), {}};
  SearchBudget budget = cfg.budget;
  budget.wall_clock_limit = cfg.timeout > 0.0 ? cfg.timeout : SearchBudget::kNoTimeout;
  budget.rng_seed = spec.seed;
  rec.report = plan(rec.scene, budget);
  return rec;
}

}  // namespace

std::vector<CaseRecord> run_cases(std::span<const CaseSpec> cases, const SuiteConfig& cfg) {
  std::vector<CaseRecord> records(cases.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  const auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        records[i] = run_one(cases[i], cfg);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(cfg.threads, 1, std::max<std::size_t>(cases.size(), 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

namespace {

std::pair<double, double> mean_std(const std::vector<double>& xs) {
  if (xs.empty()) return {0.0, 0.0};
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / static_cast<double>(xs.size());
  if (xs.size() < 2) return {mean, 0.0};
  double sq = 0.0;
  for (double x : xs) sq += (x - mean) * (x - mean);
  return {mean, std::sqrt(sq / static_cast<double>(xs.size() - 1))};
}

}  // namespace

MetricsRow aggregate(std::string level, std::span<const CaseRecord> records) {
  MetricsRow row;
  row.level = std::move(level);
  row.cases = records.size();
  std::vector<double> steps, dist;
  double time_sum = 0.0;
  for (const CaseRecord& r : records) {
    time_sum += r.report.wall_time;
    if (r.report.success && r.report.plan) {
      steps.push_back(static_cast<double>(r.report.plan->steps));
      dist.push_back(r.report.plan->total_displacement);
    }
  }
  if (!records.empty()) {
    row.success_rate = 100.0 * static_cast<double>(steps.size()) / static_cast<double>(records.size());
    row.mean_time_s = time_sum / static_cast<double>(records.size());
  }
  std::tie(row.mean_steps, row.std_steps) = mean_std(steps);
  std::tie(row.mean_dist, row.std_dist) = mean_std(dist);
  return row;
}

std::vector<MetricsRow> summarize(std::span<const CaseRecord> records) {
  std::vector<MetricsRow> rows;
  const auto group = [&](const std::string& name, auto&& keep) {
    std::vector<CaseRecord> subset;
    for (const CaseRecord& r : records) {
      if (keep(r)) subset.push_back(r);
    }
    if (!subset.empty()) rows.push_back(aggregate(name, subset));
  };
  for (const char* level : {"easy", "medium", "hard"}) {
    group(level, [&](const CaseRecord& r) { return r.spec.level == level; });
  }
  const bool has_easy = std::any_of(records.begin(), records.end(),
                                    [](const CaseRecord& r) { return r.spec.level == "easy"; });
  const bool has_medium = std::any_of(records.begin(), records.end(),
                                      [](const CaseRecord& r) { return r.spec.level == "medium"; });
  if (has_easy && has_medium) {
    group("easy+medium", [](const CaseRecord& r) {
      return r.spec.level == "easy" || r.spec.level == "medium";
    });
  }
  std::map<std::size_t, bool> counts;
  for (const CaseRecord& r : records) counts[r.spec.n_objects] = true;
  for (const auto& [n, unused] : counts) {
    group("n" + std::to_string(n), [n](const CaseRecord& r) { return r.spec.n_objects == n; });
  }
  return rows;
}

SuiteResult run_suite(const SuiteConfig& cfg) {
  const std::vector<CaseSpec> cases = suite_cases(cfg);
  SuiteResult result;
  result.records = run_cases(cases, cfg);
  result.rows = summarize(result.records);
  return result;
}

std::string metrics_csv(std::span<const MetricsRow> rows) {
  std::ostringstream out;
  out.precision(17);
  out << kMetricsCsvHeader << '\n';
  for (const MetricsRow& r : rows) {
    out << r.level << ',' << r.cases << ',' << r.success_rate << ',' << r.mean_steps << ','
        << r.std_steps << ',' << r.mean_dist << ',' << r.std_dist << ',' << r.mean_time_s
        << '\n';
  }
  return out.str();
}

nlohmann::json case_record_json(const CaseRecord& record) {
  nlohmann::json j{{"level", record.spec.level},
                   {"index", record.spec.index},
                   {"n_objects", record.spec.n_objects},
                   {"seed", record.spec.seed},
                   {"success", record.report.success},
                   {"wall_time", record.report.wall_time},
                   {"scene", scene_to_json(record.scene)}};
  if (record.report.failure_kind) {
    j["failure_kind"] = std::string(to_string(*record.report.failure_kind));
  }
  if (record.report.plan) j["plan"] = plan_to_json(*record.report.plan, record.report.wall_time);
  return j;
}

}  // namespace msmcts
