// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "msmcts/geometry.hpp"
#include "msmcts/io.hpp"
#include "msmcts/orchestrator.hpp"
#include "msmcts/suite.hpp"
#include "oracles/bfs_oracle.hpp"
#include "oracles/sampling_oracle.hpp"
#include "test_util.hpp"

namespace {

using namespace msmcts;

int failures = 0;

void report(bool ok, const char* name, const std::string& detail) {
  std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

MetricsRow run_level(const char* level, std::vector<std::size_t> counts, std::uint64_t base_seed) {
  SuiteConfig cfg;
  cfg.timeout = 30.0;
  std::vector<CaseSpec> cases;
  for (std::size_t i = 0; i < 80; ++i) {
    cases.push_back({level, i, counts[i % counts.size()], base_seed + i});
  }
  const auto records = run_cases(cases, cfg);
  return aggregate(level, records);
}

void easy_medium() {
  const MetricsRow r = run_level("easy+medium", {4, 5, 6}, 0);
  report(r.success_rate >= 95.0 && r.mean_steps <= 12.0 && r.mean_dist <= 100.0,
         "easy-medium-suite",
         fmt("80 cases, 4-6 objects: success %.2f%% (>=95), steps %.2f +- %.2f (<=12), "
             "displacement %.2f +- %.2f (<=100), mean time %.3fs",
             r.success_rate, r.mean_steps, r.std_steps, r.mean_dist, r.std_dist, r.mean_time_s));
}

void hard() {
  const MetricsRow r = run_level("hard", {7, 8}, 10000);
  report(r.success_rate >= 85.0 && r.mean_steps <= 22.0 && r.mean_dist <= 180.0, "hard-suite",
         fmt("80 cases, 7-8 objects: success %.2f%% (>=85), steps %.2f +- %.2f (<=22), "
             "displacement %.2f +- %.2f (<=180), mean time %.3fs",
             r.success_rate, r.mean_steps, r.std_steps, r.mean_dist, r.std_dist, r.mean_time_s));
}

void flip() {
  const Scene s = testing::make_scene({{7, 5}, {13, 5}, {7, 11}, {13, 11}},
                                      {{7, 11}, {13, 11}, {7, 5}, {13, 5}});
  SearchBudget b;
  b.wall_clock_limit = 30.0;
  const PlanReport r = plan(s, b);
  const bool ok = r.success && validate_plan(s, *r.plan).valid && r.plan->steps <= 12;
  report(ok, "flip-case",
         r.success ? fmt("mirrored front/back swap solved in %zu steps (<=12), displacement %.2f",
                         r.plan->steps, r.plan->total_displacement)
                   : std::string("not solved: ") + std::string(to_string(*r.failure_kind)));
}

void plan_validity() {
  std::size_t solved = 0, attempted = 0, violations = 0;
  for (std::uint64_t seed = 0; solved < 1000 && attempted < 1500; ++seed) {
    SceneConfig cfg;
    cfg.n_objects = 2 + seed % 7;
    cfg.rng_seed = 500000 + seed;
    const Scene s = generate_scene(cfg);
    SearchBudget b;
    b.rng_seed = seed;
    ++attempted;
    const PlanReport r = plan(s, b);
    if (!r.success) continue;
    ++solved;
    // Reload through JSON so the check sees exactly what would be written out.
    const Plan reloaded = plan_from_json(nlohmann::json::parse(plan_to_json(*r.plan).dump()));
    violations += !validate_plan(s, reloaded).valid;
  }
  report(solved >= 1000 && violations == 0, "plan-validity",
         fmt("%zu solved of %zu attempted (2-8 objects), %zu invalid plans", solved, attempted,
             violations));
}

void geometry_oracle() {
  constexpr double kPitch = 0.025;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coord(-5, 25), len(0.5, 25), wid(0.5, 6),
      ang(-std::numbers::pi, std::numbers::pi), rad(0.2, 2.0), unit(0, 1);
  std::size_t compared = 0, agree = 0, hits = 0;
  while (compared < 10000) {
    const Tunnel t(Point{coord(rng), coord(rng)}, len(rng), wid(rng), ang(rng));
    const double r = rad(rng);
    const double along = (unit(rng) * 1.4 - 0.2) * t.length();
    const double across = (unit(rng) - 0.5) * (t.width() + 4 * r);
    const Point c = t.anchor() + t.axis() * along + t.normal() * across;
    const oracle::Rect rect{t.anchor().x, t.anchor().y, t.length(), t.width(), t.angle()};
    if (std::abs(oracle::signed_clearance(rect, c.x, c.y, r)) <= kPitch) continue;
    const bool expected = oracle::sampled_intersection(rect, c.x, c.y, r, kPitch);
    ++compared;
    hits += expected;
    agree += tunnel_intersects_disc(t, Disc{c, r}) == expected;
  }
  report(agree == compared, "geometry-oracle",
         fmt("%zu/%zu pairs agree with %.3f-pitch sampling (%zu intersecting)", agree, compared,
             kPitch, hits));
}

void small_optimality() {
  std::size_t instances = 0, matched = 0, over_by_more = 0, failed = 0;
  std::uint64_t seed = 0;
  while (instances < 100) {
    SceneConfig cfg;
    cfg.n_objects = 2;
    cfg.grid_resolution = 4.5;
    cfg.rng_seed = 700000 + seed++;
    const Scene s = generate_scene(cfg);
    const auto best = oracle::bfs_min_steps(s, 8);
    if (!best) continue;  // unsolvable on the grid within the depth bound
    ++instances;
    SearchBudget b;
    b.wall_clock_limit = 30.0;
    b.rng_seed = seed;
    const PlanReport r = plan(s, b);
    if (!r.success) {
      ++failed;
      continue;
    }
    matched += r.plan->steps == *best;
    over_by_more += r.plan->steps > *best + 1;
  }
  report(matched >= 90 && over_by_more == 0 && failed == 0, "small-instance-optimality",
         fmt("%zu/%zu match BFS (>=90), %zu exceed BFS+1, %zu unsolved", matched, instances,
             over_by_more, failed));
}

void optimization_passes() {
  std::size_t plans = 0, worse = 0, broken = 0, shortened = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto [s, p] = testing::random_walk_plan(900000 + seed, 2 + seed % 7, 2 + seed % 40);
    const Plan q = optimize_plan(p, s);
    ++plans;
    worse += q.steps > p.steps || q.total_displacement > p.total_displacement + 1e-9;
    broken += !validate_plan(s, q).valid;
    shortened += q.steps < p.steps;
  }
  report(worse == 0 && broken == 0, "optimization-passes",
         fmt("%zu random plans: %zu got worse, %zu invalid after optimizing, %zu shortened", plans,
             worse, broken, shortened));
}

void determinism() {
  std::size_t scenes = 0, identical = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SceneConfig cfg;
    cfg.n_objects = 4 + seed % 5;
    cfg.rng_seed = 800000 + seed;
    const Scene s = generate_scene(cfg);
    SearchBudget b;
    b.wall_clock_limit = SearchBudget::kNoTimeout;
    b.rng_seed = seed;
    const PlanReport r1 = plan(s, b);
    const PlanReport r2 = plan(s, b);
    ++scenes;
    if (r1.success != r2.success) continue;
    if (!r1.success) {
      identical += r1.failure_kind == r2.failure_kind;
      continue;
    }
    identical += plan_to_json(*r1.plan).dump() == plan_to_json(*r2.plan).dump();
  }
  report(identical == scenes, "determinism",
         fmt("%zu/%zu scenes gave byte-identical plan JSON across two runs", identical, scenes));
}

}  // namespace

int main() {
  geometry_oracle();
  flip();
  determinism();
  optimization_passes();
  small_optimality();
  easy_medium();
  hard();
  plan_validity();
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
