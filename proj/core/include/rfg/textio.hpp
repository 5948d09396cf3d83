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

#ifndef RFG_TEXTIO_HPP_
#define RFG_TEXTIO_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rfg/coordinator.hpp"
#include "rfg/evolution.hpp"
#include "rfg/game.hpp"
#include "rfg/investment.hpp"
#include "rfg/reaction.hpp"

namespace rfg {

// Line-oriented text formats. Parse errors carry "<source>:<line>:" prefixes
// and the parse_error code. '#' starts a comment; blank lines are ignored.

// Explicit games:
//   players <id>...
//   actions <player-id> <label>...
//   payoffs
//   <label per player> : <rational per player>
// Investment games:
//   kind weakest-link|public-good <n> <H> <lambda>
struct LoadedGame {
  StrategicGame game;
  std::optional<InvestmentGame> investment;
};

LoadedGame parse_game(std::string_view text, std::string_view source = "game");
LoadedGame load_game_file(const std::string& path);
std::string serialize_game(const LoadedGame& game);

// Reactions:
//   owner <player-id>
//   builtin br | rstar | match-min | constant <label> | promise-threat <label per player>
// or explicit lines
//   <others labels in player order, owner skipped> -> <own label>
ReactionFunction parse_reaction(const StrategicGame& game,
                                std::string_view text,
                                std::string_view source = "reaction");
ReactionFunction load_reaction_file(const StrategicGame& game,
                                    const std::string& path);
std::string serialize_reaction_file(const StrategicGame& game,
                                    const ReactionFunction& r);

// Coordinator event scripts:
//   players <id>...
//   max-level <H>
//   deadline <ticks>
//   commit <player> <digest hex>
//   connect <player> <reaction-file> <salt hex> <max> <deposit>
//   tick
//   search               (search and settle)
// Relative reaction-file paths resolve against `directory`.
Coordinator run_event_script(std::string_view text, std::string_view source,
                             const std::string& directory);
Coordinator run_event_script_file(const std::string& path);

// Evolution configs (key value per line): runs, batches, games-per-batch,
// pool, players, max-investment, lambda, k0, i0, rho, sigma, seed.
EvolutionConfig parse_evolution_config(std::string_view text,
                                       std::string_view source = "config");
EvolutionConfig load_evolution_config_file(const std::string& path);

struct ReportOptions {
  bool csv = false;
  int precision = 6;
};

std::string render_rational(const Rat& value, const ReportOptions& options);

// Nash set, per-player maxmin, Pareto frontier.
std::string analyze_report(const StrategicGame& game,
                           const ReportOptions& options = {});

// Equilibrium verdict plus fixed-point report.
std::string check_report(const StrategicGame& game, const Profile& profile,
                         const RfeVerdict& verdict,
                         const FixedPointReport& report,
                         const ReportOptions& options = {});

}  // namespace rfg

#endif  // RFG_TEXTIO_HPP_
