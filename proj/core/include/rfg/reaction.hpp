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

#ifndef RFG_REACTION_HPP_
#define RFG_REACTION_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rfg/game.hpp"

namespace rfg {

// A total map from others' action profiles to an own action. The table is
// indexed by the owner's others-profile index (see StrategicGame).
struct ReactionFunction {
  int owner = 0;
  std::vector<int> table;

  friend bool operator==(const ReactionFunction&,
                         const ReactionFunction&) = default;
};

ReactionFunction constant_reaction(const StrategicGame& game, int owner,
                                   int action);
ReactionFunction best_reply_reaction(const StrategicGame& game, int owner);

// Validates the reaction against the game: table totality and image range.
void validate_reaction(const StrategicGame& game, const ReactionFunction& r);

// One reaction function per player, owners covering the player set in order.
class Profile {
 public:
  Profile(const StrategicGame& game, std::vector<ReactionFunction> reactions);

  const ReactionFunction& of(int player) const { return reactions_[player]; }
  ReactionFunction& of(int player) { return reactions_[player]; }
  int num_players() const { return static_cast<int>(reactions_.size()); }

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<ReactionFunction> reactions_;
};

// Component i of the result is player i's reaction to the rest of `outcome`.
std::size_t evaluate(const StrategicGame& game, const Profile& profile,
                     std::size_t outcome);

// Exhaustion guards. Exceeding a cap raises budget_exceeded; never silent.
struct SearchBudget {
  std::size_t max_outcomes = 1'000'000;
  std::size_t max_profiles = 10'000'000;
};

struct FixedPointReport {
  std::vector<std::size_t> fixed_points;  // ascending outcome indices
  std::vector<ProfileValue> values;       // per player; nullopt = no fixed point
  bool unambiguous = false;
  std::optional<std::size_t> top;  // weakly dominant fixed point, if any
};

FixedPointReport fixed_point_report(const StrategicGame& game,
                                    const Profile& profile,
                                    const SearchBudget& budget = {});

// i -> j whenever i's reaction is non-constant in j's action.
struct DependencyGraph {
  int n = 0;
  std::vector<std::vector<bool>> edge;

  bool acyclic() const;
};

DependencyGraph dependency_graph(const StrategicGame& game,
                                 const Profile& profile);

// Acyclic dependencies guarantee a unique fixed point.
bool has_unique_fixed_point_guarantee(const StrategicGame& game,
                                      const Profile& profile);

bool is_monotone_reaction(const StrategicGame& game, const ReactionFunction& r);
bool is_monotone_profile(const StrategicGame& game, const Profile& profile);

enum class Extreme { top, bottom };

// Iterates the profile from the all-max (or all-min) outcome. Requires every
// reaction monotone (non_monotone_profile otherwise); the iteration is then
// a monotone chain that reaches a fixed point within sum_i(|A_i|-1) steps.
// From the top this is the greatest fixed point reachable by iteration.
std::size_t monotone_fixed_point(const StrategicGame& game,
                                 const Profile& profile, Extreme from,
                                 std::size_t* steps_taken = nullptr);

struct RfeVerdict {
  enum class Kind { rfe, not_unambiguous, deviation };
  Kind kind = Kind::rfe;
  int player = -1;   // witness, when kind == deviation
  int action = -1;   // constant deviation witness

  bool ok() const { return kind == Kind::rfe; }
};

// Equilibrium test. A profile qualifies when it is unambiguous and no player
// gains from any unilateral reaction change; constant deviations are exact
// for falsification, so only they are enumerated.
RfeVerdict is_rfe(const StrategicGame& game, const Profile& profile,
                  const SearchBudget& budget = {});

// Best payoff for `player` among the profile's fixed points, nullopt when
// there are none.
ProfileValue profile_value(const StrategicGame& game, const Profile& profile,
                           int player, const SearchBudget& budget = {});

// profile_value of (constant `action`, rest of `profile`) for `player`,
// without materializing the deviated profile.
ProfileValue constant_deviation_value(const StrategicGame& game,
                                      const Profile& profile, int player,
                                      int action);

// `outcome` is the supported outcome of `profile`: the profile is an
// equilibrium, the outcome is one of its fixed points, and it weakly
// dominates every fixed point.
bool is_supported(const StrategicGame& game, std::size_t outcome,
                  const Profile& profile, const SearchBudget& budget = {});

// Ground-truth oracle: enumerates every reaction-function profile and
// collects all supported outcomes. Only viable on tiny games.
std::vector<std::size_t> brute_force_supported_set(
    const StrategicGame& game, const SearchBudget& budget = {});

// Enumerates profiles drawn from explicit per-player candidate sets (used to
// restrict the search, e.g. to safe reactions). Stops early when the visitor
// returns false.
void for_each_profile(
    const StrategicGame& game,
    std::span<const std::vector<ReactionFunction>> candidates,
    const std::function<bool(const Profile&)>& visit,
    const SearchBudget& budget = {});

// All reaction tables of one player, in canonical (odometer) order.
std::vector<ReactionFunction> all_reactions(const StrategicGame& game,
                                            int player,
                                            const SearchBudget& budget = {});

// Canonical byte strings; the reaction serialization is the commitment
// preimage used by the coordinator.
std::string serialize_reaction_table(std::string_view owner,
                                     std::span<const std::string> entries);
std::string serialize_reaction(const StrategicGame& game,
                               const ReactionFunction& r);
std::string serialize_profile(const StrategicGame& game,
                              const Profile& profile);

}  // namespace rfg

#endif  // RFG_REACTION_HPP_
