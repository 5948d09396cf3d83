// Copyright 2026 The rfg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rfg/construct.hpp"
#include "rfg/coordinator.hpp"
#include "rfg/evolution.hpp"
#include "rfg/textio.hpp"

namespace {

// Exit codes: 0 success, 1 negative analysis verdict, 2 input/usage error.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    rfg::fail(rfg::Errc::parse_error, "cannot write " + path);
  }
  out << content;
}

int cmd_analyze(const std::string& game_path, const rfg::ReportOptions& options) {
  const rfg::LoadedGame loaded = rfg::load_game_file(game_path);
  std::cout << rfg::analyze_report(loaded.game, options);
  return kOk;
}

int cmd_check(const std::string& game_path,
              const std::vector<std::string>& reaction_paths,
              const std::string& expect, const rfg::ReportOptions& options) {
  const rfg::LoadedGame loaded = rfg::load_game_file(game_path);
  std::vector<rfg::ReactionFunction> reactions;
  reactions.reserve(reaction_paths.size());
  for (const std::string& path : reaction_paths) {
    reactions.push_back(rfg::load_reaction_file(loaded.game, path));
  }
  const rfg::Profile profile(loaded.game, std::move(reactions));
  const rfg::RfeVerdict verdict = rfg::is_rfe(loaded.game, profile);
  const rfg::FixedPointReport report =
      rfg::fixed_point_report(loaded.game, profile);
  std::cout << rfg::check_report(loaded.game, profile, verdict, report,
                                 options);
  if (expect == "rfe" && !verdict.ok()) return kNegative;
  return kOk;
}

int cmd_construct(const std::string& game_path, const std::string& method,
                  const std::vector<std::string>& target_labels,
                  const std::vector<std::string>& order_labels,
                  const std::string& out_dir) {
  const rfg::LoadedGame loaded = rfg::load_game_file(game_path);
  const rfg::StrategicGame& game = loaded.game;

  std::optional<rfg::Profile> profile;
  if (method == "sequential") {
    std::vector<int> order;
    if (order_labels.empty()) {
      for (int i = 0; i < game.num_players(); ++i) order.push_back(i);
    } else {
      for (const std::string& label : order_labels) {
        order.push_back(game.player_index(label));
      }
    }
    profile = rfg::construct_sequential(game, order);
  } else {
    if (target_labels.size() != static_cast<std::size_t>(game.num_players())) {
      rfg::fail(rfg::Errc::parse_error,
                "--target needs one action per player");
    }
    std::vector<int> target(game.num_players());
    for (int i = 0; i < game.num_players(); ++i) {
      target[i] = game.action_index(i, target_labels[i]);
    }
    const std::size_t outcome = game.outcome_index(target);
    if (method == "promise-threat") {
      profile = rfg::construct_promise_threat(game, outcome);
    } else if (method == "isolation") {
      profile = rfg::construct_isolation(game, outcome);
    } else {
      rfg::fail(rfg::Errc::parse_error, "unknown method '" + method + "'");
    }
  }

  for (int i = 0; i < game.num_players(); ++i) {
    const std::string path =
        out_dir + "/reaction-" + game.player_name(i) + ".txt";
    write_file(path, rfg::serialize_reaction_file(game, profile->of(i)));
    std::cout << path << '\n';
  }
  return kOk;
}

int cmd_coordinate(const std::string& script_path,
                   const std::string& trace_path) {
  const rfg::Coordinator coordinator =
      rfg::run_event_script_file(script_path);
  std::cout << coordinator.dump();
  if (!trace_path.empty()) {
    write_file(trace_path, coordinator.trace_csv());
  }
  return kOk;
}

int cmd_digest(const std::string& reaction_path,
               const std::vector<std::string>& players, int max_level,
               const std::string& salt_hex) {
  // Parse against the investment grid implied by the roster and level cap.
  std::vector<std::string> levels;
  for (int a = 0; a <= max_level; ++a) levels.push_back(std::to_string(a));
  std::size_t outcomes = 1;
  for (std::size_t i = 0; i < players.size(); ++i) outcomes *= levels.size();
  const rfg::StrategicGame grid(
      players,
      std::vector<std::vector<std::string>>(players.size(), levels),
      std::vector<rfg::Rat>(outcomes * players.size(), rfg::Rat(0)));

  const rfg::ReactionFunction r =
      rfg::load_reaction_file(grid, reaction_path);
  const std::vector<std::uint8_t> salt_bytes = rfg::from_hex(salt_hex);
  if (salt_bytes.size() != 32) {
    rfg::fail(rfg::Errc::parse_error, "salt must be 32 bytes of hex");
  }
  rfg::Salt salt{};
  std::copy(salt_bytes.begin(), salt_bytes.end(), salt.begin());
  std::cout << rfg::to_hex(rfg::Coordinator::reaction_digest(
                   grid.player_name(r.owner), max_level, r.table, salt))
            << '\n';
  return kOk;
}

int cmd_evolve(const std::string& config_path, std::uint64_t seed,
               const std::string& out_path, int precision) {
  rfg::EvolutionConfig config =
      rfg::load_evolution_config_file(config_path);
  config.seed = seed;
  const rfg::EvolveResult result = rfg::evolve(config);
  const std::vector<rfg::SummaryRow> rows =
      rfg::summarize(result.pools, config.n, config.levels);
  const std::string csv = rfg::summary_csv(rows, precision);
  if (out_path.empty() || out_path == "-") {
    std::cout << csv;
  } else {
    write_file(out_path, csv);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reaction-function game analysis and simulation"};
  app.require_subcommand(1);

  rfg::ReportOptions options;

  auto* analyze = app.add_subcommand("analyze",
                                     "Nash set, maxmin values, Pareto frontier");
  std::string analyze_game;
  analyze->add_option("game", analyze_game, "game file")->required();
  analyze->add_flag("--csv", options.csv, "machine-readable output");
  analyze->add_option("--precision", options.precision,
                      "decimal digits in CSV output");

  auto* check = app.add_subcommand("check",
                                   "equilibrium verdict for a reaction profile");
  std::string check_game;
  std::vector<std::string> check_reactions;
  std::string expect;
  check->add_option("game", check_game, "game file")->required();
  check->add_option("reactions", check_reactions,
                    "one reaction file per player")
      ->required();
  check->add_option("--expect", expect,
                    "exit 1 unless the verdict matches (rfe)");
  check->add_flag("--csv", options.csv, "machine-readable output");
  check->add_option("--precision", options.precision, "decimal digits");

  auto* construct = app.add_subcommand("construct",
                                       "build an equilibrium profile");
  std::string construct_game, method, out_dir = ".";
  std::vector<std::string> target_labels, order_labels;
  construct->add_option("game", construct_game, "game file")->required();
  construct->add_option("--method", method,
                        "sequential | promise-threat | isolation")
      ->required();
  construct->add_option("--target", target_labels,
                        "target outcome (one action per player)");
  construct->add_option("--order", order_labels,
                        "move order for the sequential method");
  construct->add_option("--out", out_dir, "output directory");

  auto* coordinate = app.add_subcommand("coordinate",
                                        "run a coordinator event script");
  std::string script_path, trace_path;
  coordinate->add_option("script", script_path, "event script")->required();
  coordinate->add_option("--trace", trace_path, "write the search trace CSV");

  auto* digest = app.add_subcommand(
      "digest", "commitment digest of a reaction over the investment grid");
  std::string digest_reaction, salt_hex;
  std::vector<std::string> digest_players;
  int digest_levels = 0;
  digest->add_option("reaction", digest_reaction, "reaction file")->required();
  digest->add_option("--players", digest_players, "roster ids")->required();
  digest->add_option("--max-level", digest_levels, "investment cap")
      ->required();
  digest->add_option("--salt", salt_hex, "32-byte hex salt")->required();

  auto* evolve = app.add_subcommand("evolve",
                                    "evolutionary selection study");
  std::string config_path, out_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int precision = 6;
  evolve->add_option("config", config_path, "configuration file")->required();
  evolve->add_option("--seed", seed, "run seed (required)")
      ->each([&](const std::string&) { seed_set = true; });
  evolve->add_option("--out", out_path, "summary CSV path ('-' for stdout)");
  evolve->add_option("--precision", precision, "decimal digits");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(analyze_game, options);
    if (check->parsed()) {
      return cmd_check(check_game, check_reactions, expect, options);
    }
    if (construct->parsed()) {
      return cmd_construct(construct_game, method, target_labels,
                           order_labels, out_dir);
    }
    if (coordinate->parsed()) return cmd_coordinate(script_path, trace_path);
    if (digest->parsed()) {
      return cmd_digest(digest_reaction, digest_players, digest_levels,
                        salt_hex);
    }
    if (evolve->parsed()) {
      if (!seed_set) {
        std::cerr << "evolve: --seed is required (reproducibility contract)\n";
        return kInputError;
      }
      return cmd_evolve(config_path, seed, out_path, precision);
    }
  } catch (const rfg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
