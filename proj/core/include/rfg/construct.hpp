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

#ifndef RFG_CONSTRUCT_HPP_
#define RFG_CONSTRUCT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rfg/game.hpp"
#include "rfg/reaction.hpp"

namespace rfg {

// Backward induction on the sequential-move form induced by `order`: each
// player's reaction replays their equilibrium strategy as a function of the
// predecessors' actions and is constant in successors' actions. The result
// has an acyclic dependency graph and is an equilibrium. Ties at equal
// continuation payoffs resolve to the action earliest in declared order.
Profile construct_sequential(const StrategicGame& game,
                             std::span<const int> order);

// Two-player promise-and-threat profile supporting `target`: each player
// matches the target on the target path and otherwise minimizes the
// opponent's payoff (earliest action on ties). Requires both players to get
// at least their maxmin payoff at the target.
Profile construct_promise_threat(const StrategicGame& game,
                                 std::size_t target);

// A profile whose fixed-point set is exactly {target}, and remains within
// {target} under every unilateral deviation. Needs n >= 4, or n == 3 with
// at least three actions per player. Payoff-independent.
Profile construct_isolation(const StrategicGame& game, std::size_t target);

struct SafetyReport {
  bool safe = true;
  std::optional<std::size_t> witness_others;  // others index violating safety
};

// A reaction is safe when following it yields at least the player's maxmin
// payoff against every others-profile.
SafetyReport is_safe_reaction(const StrategicGame& game, int player,
                              const ReactionFunction& r);

bool is_safe_profile(const StrategicGame& game, const Profile& profile);

// All safe reaction tables of one player.
std::vector<ReactionFunction> safe_reactions(const StrategicGame& game,
                                             int player,
                                             const SearchBudget& budget = {});

// Given a safe equilibrium profile and an outcome weakly dominating its
// supported outcome, redirects each reaction at `better` to produce a safe
// equilibrium supporting `better`. Errors: not_safe_rfe, not_improvement.
Profile pareto_improve_safe_rfe(const StrategicGame& game,
                                const Profile& profile, std::size_t better);

// Applies pareto_improve_safe_rfe until the supported outcome is
// Pareto-efficient.
Profile pareto_efficient_safe_rfe(const StrategicGame& game,
                                  const Profile& profile);

}  // namespace rfg

#endif  // RFG_CONSTRUCT_HPP_
