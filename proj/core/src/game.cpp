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

#include "rfg/game.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "rfg/error.hpp"

namespace rfg {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_game: return "INVALID_GAME";
    case Errc::unknown_player: return "UNKNOWN_PLAYER";
    case Errc::incomplete_others: return "INCOMPLETE_OTHERS";
    case Errc::budget_exceeded: return "BUDGET_EXCEEDED";
    case Errc::non_monotone_profile: return "NON_MONOTONE_PROFILE";
    case Errc::target_below_maxmin: return "TARGET_BELOW_MAXMIN";
    case Errc::not_two_player: return "NOT_TWO_PLAYER";
    case Errc::unsupported_dimensions: return "UNSUPPORTED_DIMENSIONS";
    case Errc::not_safe_rfe: return "NOT_SAFE_RFE";
    case Errc::not_improvement: return "NOT_IMPROVEMENT";
    case Errc::parameter_out_of_range: return "PARAMETER_OUT_OF_RANGE";
    case Errc::wrong_kind: return "WRONG_KIND";
    case Errc::empty_pools: return "EMPTY_POOLS";
    case Errc::duplicate_commit: return "DUPLICATE_COMMIT";
    case Errc::duplicate_connection: return "DUPLICATE_CONNECTION";
    case Errc::wrong_phase: return "WRONG_PHASE";
    case Errc::commitment_mismatch: return "COMMITMENT_MISMATCH";
    case Errc::insufficient_deposit: return "INSUFFICIENT_DEPOSIT";
    case Errc::parse_error: return "PARSE_ERROR";
  }
  return "UNKNOWN_ERROR";
}

StrategicGame::StrategicGame(std::vector<std::string> players,
                             std::vector<std::vector<std::string>> actions,
                             std::vector<Rat> payoffs)
    : players_(std::move(players)),
      actions_(std::move(actions)),
      payoffs_(std::move(payoffs)) {
  const std::size_t n = players_.size();
  if (n < 2) {
    fail(Errc::invalid_game, "need at least two players");
  }
  if (actions_.size() != n) {
    fail(Errc::invalid_game, "one action list per player required");
  }
  std::unordered_set<std::string> seen;
  for (const auto& p : players_) {
    if (p.empty() || !seen.insert(p).second) {
      fail(Errc::invalid_game, "player names must be distinct and non-empty");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (actions_[i].size() < 2) {
      fail(Errc::invalid_game,
           "player " + players_[i] + " needs at least two actions");
    }
    std::unordered_set<std::string> labels;
    for (const auto& a : actions_[i]) {
      if (a.empty() || !labels.insert(a).second) {
        fail(Errc::invalid_game,
             "duplicate or empty action label for player " + players_[i]);
      }
    }
  }

  strides_.assign(n, 1);
  for (std::size_t i = n; i-- > 1;) {
    strides_[i - 1] = strides_[i] * actions_[i].size();
  }
  num_outcomes_ = strides_[0] * actions_[0].size();
  if (payoffs_.size() != num_outcomes_ * n) {
    fail(Errc::invalid_game, "payoff table is not total: expected " +
                                 std::to_string(num_outcomes_ * n) +
                                 " entries, got " +
                                 std::to_string(payoffs_.size()));
  }

  num_others_.assign(n, 1);
  others_strides_.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t stride = 1;
    for (std::size_t j = n; j-- > 0;) {
      if (j == i) continue;
      others_strides_[i][j] = stride;
      stride *= actions_[j].size();
    }
    num_others_[i] = stride;
  }
}

int StrategicGame::player_index(std::string_view name) const {
  for (std::size_t i = 0; i < players_.size(); ++i) {
    if (players_[i] == name) return static_cast<int>(i);
  }
  fail(Errc::unknown_player, std::string(name));
}

int StrategicGame::action_index(int player, std::string_view name) const {
  const auto& list = actions_[player];
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (list[k] == name) return static_cast<int>(k);
  }
  fail(Errc::parse_error, "unknown action '" + std::string(name) +
                              "' for player " + players_[player]);
}

std::size_t StrategicGame::outcome_index(std::span<const int> actions) const {
  if (actions.size() != players_.size()) {
    fail(Errc::incomplete_others, "outcome needs one action per player");
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    idx += static_cast<std::size_t>(actions[i]) * strides_[i];
  }
  return idx;
}

std::vector<int> StrategicGame::outcome_actions(std::size_t outcome) const {
  std::vector<int> out(players_.size());
  for (std::size_t i = 0; i < players_.size(); ++i) {
    out[i] = static_cast<int>(outcome / strides_[i] % actions_[i].size());
  }
  return out;
}

std::size_t StrategicGame::others_index(int player, std::size_t outcome) const {
  std::size_t idx = 0;
  for (int j = 0; j < num_players(); ++j) {
    if (j == player) continue;
    idx += outcome / strides_[j] % actions_[j].size() *
           others_strides_[player][j];
  }
  return idx;
}

std::size_t StrategicGame::others_index_of(int player,
                                           std::span<const int> others) const {
  if (others.size() + 1 != players_.size()) {
    fail(Errc::incomplete_others, "others profile must cover every other player");
  }
  std::size_t idx = 0;
  std::size_t pos = 0;
  for (int j = 0; j < num_players(); ++j) {
    if (j == player) continue;
    idx += static_cast<std::size_t>(others[pos++]) * others_strides_[player][j];
  }
  return idx;
}

std::vector<int> StrategicGame::others_actions(int player,
                                               std::size_t others) const {
  std::vector<int> out;
  out.reserve(players_.size() - 1);
  for (int j = 0; j < num_players(); ++j) {
    if (j == player) continue;
    out.push_back(static_cast<int>(others / others_strides_[player][j] %
                                   actions_[j].size()));
  }
  return out;
}

std::size_t StrategicGame::outcome_with(int player, int action,
                                        std::size_t others) const {
  std::size_t idx = static_cast<std::size_t>(action) * strides_[player];
  for (int j = 0; j < num_players(); ++j) {
    if (j == player) continue;
    idx += others / others_strides_[player][j] % actions_[j].size() *
           strides_[j];
  }
  return idx;
}

std::string StrategicGame::outcome_label(std::size_t outcome) const {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < num_players(); ++i) {
    if (i > 0) out << ',';
    out << actions_[i][outcome_action(outcome, i)];
  }
  out << ')';
  return out.str();
}

bool is_nash_equilibrium(const StrategicGame& game, std::size_t outcome) {
  for (int i = 0; i < game.num_players(); ++i) {
    const std::size_t others = game.others_index(i, outcome);
    const Rat& here = game.payoff(i, outcome);
    for (int a = 0; a < game.num_actions(i); ++a) {
      if (game.payoff(i, game.outcome_with(i, a, others)) > here) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> nash_equilibria(const StrategicGame& game) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < game.num_outcomes(); ++a) {
    if (is_nash_equilibrium(game, a)) out.push_back(a);
  }
  return out;
}

MaxminResult maxmin(const StrategicGame& game, int player) {
  if (player < 0 || player >= game.num_players()) {
    fail(Errc::unknown_player, "player index " + std::to_string(player));
  }
  MaxminResult result;
  bool first = true;
  for (int a = 0; a < game.num_actions(player); ++a) {
    Rat worst;
    bool worst_set = false;
    for (std::size_t o = 0; o < game.num_others(player); ++o) {
      const Rat& u = game.payoff(player, game.outcome_with(player, a, o));
      if (!worst_set || u < worst) {
        worst = u;
        worst_set = true;
      }
    }
    if (first || worst > result.value) {
      result.value = worst;
      result.safe_actions.assign(1, a);
      first = false;
    } else if (worst == result.value) {
      result.safe_actions.push_back(a);
    }
  }
  return result;
}

std::vector<int> best_replies(const StrategicGame& game, int player,
                              std::size_t others) {
  std::vector<int> out;
  Rat best;
  for (int a = 0; a < game.num_actions(player); ++a) {
    const Rat& u = game.payoff(player, game.outcome_with(player, a, others));
    if (out.empty() || u > best) {
      best = u;
      out.assign(1, a);
    } else if (u == best) {
      out.push_back(a);
    }
  }
  return out;
}

bool pareto_dominates(const StrategicGame& game, std::size_t a,
                      std::size_t b) {
  for (int i = 0; i < game.num_players(); ++i) {
    if (game.payoff(i, a) < game.payoff(i, b)) return false;
  }
  return true;
}

bool pareto_improves(const StrategicGame& game, std::size_t b, std::size_t a) {
  bool strict = false;
  for (int i = 0; i < game.num_players(); ++i) {
    if (game.payoff(i, b) < game.payoff(i, a)) return false;
    if (game.payoff(i, b) > game.payoff(i, a)) strict = true;
  }
  return strict;
}

std::vector<std::size_t> pareto_frontier(
    const StrategicGame& game, std::span<const std::size_t> outcomes) {
  std::vector<std::size_t> out;
  for (std::size_t a : outcomes) {
    bool dominated = false;
    for (std::size_t b : outcomes) {
      if (pareto_improves(game, b, a)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(a);
  }
  return out;
}

}  // namespace rfg
