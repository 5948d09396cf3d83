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

#ifndef RFG_GAME_HPP_
#define RFG_GAME_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rfg/error.hpp"
#include "rfg/rational.hpp"

namespace rfg {

// A finite strategic game: ordered players, per-player ordered action
// labels, and a total payoff table with exact rational entries.
//
// Outcomes are addressed by a row-major index over the declared player
// order (last player varies fastest). "Others profiles" -- one action per
// player except a designated one -- use the same row-major scheme with the
// designated player's coordinate removed. Both indexings are the canonical
// serialization order for tables and profiles.
class StrategicGame {
 public:
  // `payoffs` is outcome-major: payoffs[outcome * n + player].
  StrategicGame(std::vector<std::string> players,
                std::vector<std::vector<std::string>> actions,
                std::vector<Rat> payoffs);

  int num_players() const { return static_cast<int>(players_.size()); }
  int num_actions(int player) const {
    return static_cast<int>(actions_[player].size());
  }
  std::size_t num_outcomes() const { return num_outcomes_; }

  const std::string& player_name(int player) const { return players_[player]; }
  const std::string& action_name(int player, int action) const {
    return actions_[player][action];
  }
  const std::vector<std::string>& player_names() const { return players_; }

  // Throws unknown_player / parse_error for unknown labels.
  int player_index(std::string_view name) const;
  int action_index(int player, std::string_view name) const;

  const Rat& payoff(int player, std::size_t outcome) const {
    return payoffs_[outcome * players_.size() + player];
  }

  // Outcome index <-> per-player action vector.
  std::size_t outcome_index(std::span<const int> actions) const;
  std::vector<int> outcome_actions(std::size_t outcome) const;
  int outcome_action(std::size_t outcome, int player) const {
    return static_cast<int>(outcome / strides_[player]) % num_actions(player);
  }

  // Others-profile indexing for a designated player.
  std::size_t num_others(int player) const { return num_others_[player]; }
  std::size_t others_index(int player, std::size_t outcome) const;
  std::size_t others_index_of(int player, std::span<const int> others) const;
  std::vector<int> others_actions(int player, std::size_t others) const;
  // Stride of player `j`'s coordinate inside `player`'s others index.
  std::size_t others_stride(int player, int j) const {
    return others_strides_[player][j];
  }

  // Outcome composed of `action` for `player` and `others` for the rest.
  std::size_t outcome_with(int player, int action, std::size_t others) const;

  // "(C,D)" style label, players in declared order.
  std::string outcome_label(std::size_t outcome) const;

 private:
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> actions_;
  std::vector<Rat> payoffs_;
  std::size_t num_outcomes_ = 1;
  std::vector<std::size_t> strides_;                      // per player
  std::vector<std::size_t> num_others_;                   // per player
  std::vector<std::vector<std::size_t>> others_strides_;  // [player][j]
};

struct MaxminResult {
  Rat value;
  std::vector<int> safe_actions;  // non-empty, ascending action indices
};

// Outcomes where no player has a strictly improving unilateral action.
// May be empty; mixed strategies are out of scope.
std::vector<std::size_t> nash_equilibria(const StrategicGame& game);

bool is_nash_equilibrium(const StrategicGame& game, std::size_t outcome);

// max over own actions of the worst payoff across others' profiles.
MaxminResult maxmin(const StrategicGame& game, int player);

// Non-empty argmax set of u_player(., others). Ascending action indices.
std::vector<int> best_replies(const StrategicGame& game, int player,
                              std::size_t others);

// Weak dominance: every player at least as well off at `a` as at `b`.
bool pareto_dominates(const StrategicGame& game, std::size_t a, std::size_t b);

// True when `b` weakly dominates `a` and someone is strictly better off.
bool pareto_improves(const StrategicGame& game, std::size_t b, std::size_t a);

// Subset of `outcomes` not strictly improved upon by any member.
std::vector<std::size_t> pareto_frontier(const StrategicGame& game,
                                         std::span<const std::size_t> outcomes);

}  // namespace rfg

#endif  // RFG_GAME_HPP_
