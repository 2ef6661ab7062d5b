// msmcts: scene generation, planning, benchmarking and plan validation.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "msmcts/error.hpp"
#include "msmcts/io.hpp"
#include "msmcts/orchestrator.hpp"
#include "msmcts/scene.hpp"
#include "msmcts/suite.hpp"
#include "msmcts/svg.hpp"

namespace {

using namespace msmcts;

struct PlannerFlags {
  double timeout_s = 30.0;
  std::size_t expansion_width = 5;
  double ucb_c = 1.414;
  std::size_t max_iterations = SearchBudget{}.max_iterations;

  void attach(CLI::App* app) {
    app->add_option("--timeout-s", timeout_s, "Wall-clock limit per case in seconds (0 disables)")
        ->capture_default_str();
    app->add_option("--expansion-width", expansion_width, "Regions proposed per relocated object")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app->add_option("--ucb-c", ucb_c, "UCB exploration constant")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app->add_option("--max-iterations", max_iterations, "MCTS iterations per stage")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }

  SearchBudget budget(std::uint64_t seed) const {
    SearchBudget b;
    b.wall_clock_limit = timeout_s > 0.0 ? timeout_s : SearchBudget::kNoTimeout;
    b.expansion_width = expansion_width;
    b.exploration_constant = ucb_c;
    b.max_iterations = max_iterations;
    b.rng_seed = seed;
    return b;
  }
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-stage MCTS rearrangement planner for confined workspaces"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random scene as JSON");
  SceneConfig gen_cfg;
  std::string gen_out;
  gen->add_option("--seed", gen_cfg.rng_seed, "RNG seed")->capture_default_str();
  gen->add_option("--objects", gen_cfg.n_objects, "Number of objects")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("--grid-res", gen_cfg.grid_resolution, "Candidate grid pitch")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  // plan
  auto* plan_cmd = app.add_subcommand("plan", "Plan a scene; writes plan JSON");
  std::string plan_scene, plan_out, plan_svg;
  std::uint64_t plan_seed = 0;
  double plan_grid_res = 0.0;
  PlannerFlags plan_flags;
  plan_cmd->add_option("scene", plan_scene, "Scene JSON file")->required();
  plan_cmd->add_option("--seed", plan_seed, "Search RNG seed")->capture_default_str();
  plan_cmd->add_option("--grid-res", plan_grid_res, "Override the scene's candidate grid pitch");
  plan_cmd->add_option("--out", plan_out, "Plan JSON output (default stdout)");
  plan_cmd->add_option("--svg", plan_svg, "Also write an SVG trace here");
  plan_flags.attach(plan_cmd);

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite; writes CSV + JSONL");
  SuiteConfig suite;
  std::string bench_difficulty = "all";
  std::string bench_out = "bench_out";
  PlannerFlags bench_flags;
  bench->add_option("--difficulty", bench_difficulty, "easy|medium|hard|all")
      ->check(CLI::IsMember({"easy", "medium", "hard", "all"}))
      ->capture_default_str();
  bench->add_option("--cases", suite.cases_per_level, "Cases per difficulty level")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--seed", suite.base_seed, "Base seed; case i uses base + i")
      ->capture_default_str();
  bench->add_option("--grid-res", suite.scene.grid_resolution, "Candidate grid pitch")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--threads", suite.threads, "Worker threads")->capture_default_str();
  bench->add_option("--out", bench_out, "Output directory")->capture_default_str();
  bench_flags.attach(bench);

  // validate
  auto* validate = app.add_subcommand("validate", "Check a plan against a scene");
  std::string val_scene, val_plan;
  validate->add_option("scene", val_scene, "Scene JSON file")->required();
  validate->add_option("plan", val_plan, "Plan JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      emit(gen_out, scene_to_json(generate_scene(gen_cfg)).dump(2) + "\n");
      return 0;
    }

    if (*plan_cmd) {
      Scene scene = scene_from_json(nlohmann::json::parse(read_file(plan_scene)));
      if (plan_grid_res > 0.0) {
        scene.grid_resolution = plan_grid_res;
        scene.candidates = candidate_grid(scene.workspace, scene.object_radius, plan_grid_res);
      }
      check_scene(scene);
      const PlanReport report = plan(scene, plan_flags.budget(plan_seed));
      if (!report.success) {
        std::cerr << "planning failed: " << to_string(*report.failure_kind) << " after "
                  << report.wall_time << " s\n";
        return 2;
      }
      emit(plan_out, plan_to_json(*report.plan, report.wall_time).dump(2) + "\n");
      if (!plan_svg.empty()) write_file(plan_svg, render_svg(scene, *report.plan));
      return 0;
    }

    if (*bench) {
      suite.difficulty = difficulty_from_string(bench_difficulty);
      suite.timeout = bench_flags.timeout_s;
      suite.budget = bench_flags.budget(0);
      std::filesystem::create_directories(bench_out);
      const SuiteResult result = run_suite(suite);

      std::string jsonl;
      for (const CaseRecord& rec : result.records) jsonl += case_record_json(rec).dump() + "\n";
      write_file((std::filesystem::path(bench_out) / "cases.jsonl").string(), jsonl);
      const std::string csv = metrics_csv(result.rows);
      write_file((std::filesystem::path(bench_out) / "metrics.csv").string(), csv);
      std::cout << csv;
      return 0;
    }

    if (*validate) {
      const Scene scene = scene_from_json(nlohmann::json::parse(read_file(val_scene)));
      const Plan p = plan_from_json(nlohmann::json::parse(read_file(val_plan)));
      const ValidationReport report = validate_plan(scene, p);
      if (report.valid) {
        std::cout << "valid: " << p.steps << " steps, displacement " << p.total_displacement
                  << "\n";
        return 0;
      }
      std::cout << "invalid at step " << report.first_failing_step.value_or(0) << ": "
                << report.reason << "\n";
      return 1;
    }
  } catch (const msmcts::Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error (json): " << e.what() << "\n";
    return 3;
  }
  return 0;
}
