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

#ifndef RFG_TESTS_UTIL_HPP_
#define RFG_TESTS_UTIL_HPP_

#include <random>
#include <string>
#include <vector>

#include "rfg/construct.hpp"
#include "rfg/game.hpp"
#include "rfg/reaction.hpp"

namespace rfg::testutil {

// Two-player game from row-major (row player first) payoff pairs.
inline StrategicGame make_game2(const std::vector<std::string>& actions1,
                                const std::vector<std::string>& actions2,
                                const std::vector<std::pair<int, int>>& table) {
  std::vector<Rat> payoffs;
  payoffs.reserve(table.size() * 2);
  for (const auto& [u1, u2] : table) {
    payoffs.emplace_back(u1);
    payoffs.emplace_back(u2);
  }
  return StrategicGame({"1", "2"}, {actions1, actions2}, std::move(payoffs));
}

inline StrategicGame prisoners_dilemma() {
  return make_game2({"C", "D"}, {"C", "D"},
                    {{2, 2}, {0, 3}, {3, 0}, {1, 1}});
}

inline StrategicGame matching_pennies() {
  return make_game2({"H", "T"}, {"H", "T"},
                    {{1, -1}, {-1, 1}, {-1, 1}, {1, -1}});
}

inline StrategicGame battle_of_sexes() {
  return make_game2({"x", "y"}, {"x", "y"},
                    {{1, 2}, {0, 0}, {0, 0}, {2, 1}});
}

inline StrategicGame stag_hunt() {
  return make_game2({"x", "y"}, {"x", "y"},
                    {{3, 3}, {0, 2}, {2, 0}, {2, 2}});
}

// Best replies are (a,x); the column player still prefers to commit to the
// dominated column.
inline StrategicGame dominated_commitment_game() {
  return make_game2({"a", "b"}, {"x", "y"},
                    {{1, 1}, {0, 0}, {0, 3}, {1, 2}});
}

// 3x3 game without any safe equilibrium profile.
inline StrategicGame no_safe_equilibrium_game() {
  return make_game2({"x", "y", "z"}, {"x", "y", "z"},
                    {{1, 1}, {1, 0}, {1, 3},
                     {0, 1}, {2, 2}, {0, 1},
                     {3, 1}, {1, 0}, {0, 0}});
}

// Both players reacting with the other's action (2-player, equal-size
// action sets).
inline Profile match_other_profile(const StrategicGame& game) {
  std::vector<ReactionFunction> reactions;
  for (int i = 0; i < 2; ++i) {
    ReactionFunction r{i, std::vector<int>(game.num_others(i))};
    for (std::size_t o = 0; o < game.num_others(i); ++o) {
      r.table[o] = static_cast<int>(o);
    }
    reactions.push_back(std::move(r));
  }
  return Profile(game, std::move(reactions));
}

inline std::size_t outcome_of(const StrategicGame& game,
                              const std::vector<std::string>& labels) {
  std::vector<int> actions(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    actions[i] = game.action_index(static_cast<int>(i), labels[i]);
  }
  return game.outcome_index(actions);
}

// Random game with integer payoffs in [lo, hi].
inline StrategicGame random_game(std::mt19937_64& rng,
                                 const std::vector<int>& shape, int lo,
                                 int hi) {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> actions;
  std::size_t outcomes = 1;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    players.push_back(std::to_string(i + 1));
    std::vector<std::string> labels;
    for (int a = 0; a < shape[i]; ++a) labels.push_back(std::to_string(a));
    actions.push_back(std::move(labels));
    outcomes *= shape[i];
  }
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Rat> payoffs;
  payoffs.reserve(outcomes * shape.size());
  for (std::size_t k = 0; k < outcomes * shape.size(); ++k) {
    payoffs.emplace_back(dist(rng));
  }
  return StrategicGame(std::move(players), std::move(actions),
                       std::move(payoffs));
}

// Random game with payoffs p/q, p in [-5,5], q in [1,4].
inline StrategicGame random_rational_game(std::mt19937_64& rng,
                                          const std::vector<int>& shape) {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> actions;
  std::size_t outcomes = 1;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    players.push_back(std::to_string(i + 1));
    std::vector<std::string> labels;
    for (int a = 0; a < shape[i]; ++a) labels.push_back(std::to_string(a));
    actions.push_back(std::move(labels));
    outcomes *= shape[i];
  }
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rat> payoffs;
  payoffs.reserve(outcomes * shape.size());
  for (std::size_t k = 0; k < outcomes * shape.size(); ++k) {
    payoffs.push_back(Rat(num(rng), den(rng)));
  }
  return StrategicGame(std::move(players), std::move(actions),
                       std::move(payoffs));
}

inline ReactionFunction random_reaction(std::mt19937_64& rng,
                                        const StrategicGame& game,
                                        int player) {
  ReactionFunction r{player, std::vector<int>(game.num_others(player))};
  std::uniform_int_distribution<int> dist(0, game.num_actions(player) - 1);
  for (auto& entry : r.table) entry = dist(rng);
  return r;
}

inline Profile random_profile(std::mt19937_64& rng,
                              const StrategicGame& game) {
  std::vector<ReactionFunction> reactions;
  for (int i = 0; i < game.num_players(); ++i) {
    reactions.push_back(random_reaction(rng, game, i));
  }
  return Profile(game, std::move(reactions));
}

// --- independent oracles -----------------------------------------------------

// Equilibrium check with the deviation search over the full reaction space
// instead of constants only.
inline RfeVerdict oracle_rfe_full_deviations(const StrategicGame& game,
                                             const Profile& profile) {
  const FixedPointReport report = fixed_point_report(game, profile);
  if (!report.unambiguous) {
    return RfeVerdict{RfeVerdict::Kind::not_unambiguous, -1, -1};
  }
  for (int i = 0; i < game.num_players(); ++i) {
    for (const ReactionFunction& deviation : all_reactions(game, i)) {
      std::vector<ReactionFunction> reactions;
      for (int j = 0; j < game.num_players(); ++j) {
        reactions.push_back(j == i ? deviation : profile.of(j));
      }
      const ProfileValue value =
          profile_value(game, Profile(game, std::move(reactions)), i);
      if (value > report.values[i]) {
        return RfeVerdict{RfeVerdict::Kind::deviation, i, -1};
      }
    }
  }
  return RfeVerdict{RfeVerdict::Kind::rfe, -1, -1};
}

// Outcomes granting every player at least their maxmin payoff.
inline std::vector<std::size_t> oracle_maxmin_floor_set(
    const StrategicGame& game) {
  std::vector<Rat> floors;
  for (int i = 0; i < game.num_players(); ++i) {
    floors.push_back(maxmin(game, i).value);
  }
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < game.num_outcomes(); ++a) {
    bool ok = true;
    for (int i = 0; i < game.num_players(); ++i) {
      if (game.payoff(i, a) < floors[i]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(a);
  }
  return out;
}

}  // namespace rfg::testutil

#endif  // RFG_TESTS_UTIL_HPP_
