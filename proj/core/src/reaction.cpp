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

#include "rfg/reaction.hpp"

#include <algorithm>
#include <sstream>

#include "rfg/error.hpp"

namespace rfg {

ReactionFunction constant_reaction(const StrategicGame& game, int owner,
                                   int action) {
  return ReactionFunction{
      owner, std::vector<int>(game.num_others(owner), action)};
}

ReactionFunction best_reply_reaction(const StrategicGame& game, int owner) {
  ReactionFunction r{owner, std::vector<int>(game.num_others(owner))};
  for (std::size_t o = 0; o < game.num_others(owner); ++o) {
    r.table[o] = best_replies(game, owner, o).front();
  }
  return r;
}

void validate_reaction(const StrategicGame& game, const ReactionFunction& r) {
  if (r.owner < 0 || r.owner >= game.num_players()) {
    fail(Errc::unknown_player, "reaction owner " + std::to_string(r.owner));
  }
  if (r.table.size() != game.num_others(r.owner)) {
    fail(Errc::invalid_game,
         "reaction table for " + game.player_name(r.owner) + " has " +
             std::to_string(r.table.size()) + " entries, expected " +
             std::to_string(game.num_others(r.owner)));
  }
  for (int a : r.table) {
    if (a < 0 || a >= game.num_actions(r.owner)) {
      fail(Errc::invalid_game, "reaction image out of range for player " +
                                   game.player_name(r.owner));
    }
  }
}

Profile::Profile(const StrategicGame& game,
                 std::vector<ReactionFunction> reactions)
    : reactions_(std::move(reactions)) {
  if (static_cast<int>(reactions_.size()) != game.num_players()) {
    fail(Errc::invalid_game, "profile needs one reaction per player");
  }
  // Owners may arrive in any order; store by owner.
  std::sort(reactions_.begin(), reactions_.end(),
            [](const ReactionFunction& a, const ReactionFunction& b) {
              return a.owner < b.owner;
            });
  for (int i = 0; i < game.num_players(); ++i) {
    if (reactions_[i].owner != i) {
      fail(Errc::invalid_game, "profile owners must cover every player once");
    }
    validate_reaction(game, reactions_[i]);
  }
}

std::size_t evaluate(const StrategicGame& game, const Profile& profile,
                     std::size_t outcome) {
  std::vector<int> next(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    next[i] = profile.of(i).table[game.others_index(i, outcome)];
  }
  return game.outcome_index(next);
}

FixedPointReport fixed_point_report(const StrategicGame& game,
                                    const Profile& profile,
                                    const SearchBudget& budget) {
  if (game.num_outcomes() > budget.max_outcomes) {
    fail(Errc::budget_exceeded,
         "outcome scan of " + std::to_string(game.num_outcomes()) +
             " exceeds cap " + std::to_string(budget.max_outcomes));
  }
  FixedPointReport report;
  for (std::size_t a = 0; a < game.num_outcomes(); ++a) {
    bool fixed = true;
    for (int i = 0; i < game.num_players(); ++i) {
      if (profile.of(i).table[game.others_index(i, a)] !=
          game.outcome_action(a, i)) {
        fixed = false;
        break;
      }
    }
    if (fixed) report.fixed_points.push_back(a);
  }

  report.values.assign(game.num_players(), std::nullopt);
  if (!report.fixed_points.empty()) {
    for (int i = 0; i < game.num_players(); ++i) {
      Rat best = game.payoff(i, report.fixed_points.front());
      for (std::size_t a : report.fixed_points) {
        best = std::max(best, game.payoff(i, a));
      }
      report.values[i] = std::move(best);
    }
    // A weakly dominant fixed point attains every per-player maximum.
    for (std::size_t a : report.fixed_points) {
      bool dominant = true;
      for (int i = 0; i < game.num_players(); ++i) {
        if (game.payoff(i, a) != *report.values[i]) {
          dominant = false;
          break;
        }
      }
      if (dominant) {
        report.unambiguous = true;
        report.top = a;
        break;
      }
    }
  }
  return report;
}

bool DependencyGraph::acyclic() const {
  // Kahn's algorithm on the tiny player graph.
  std::vector<int> indegree(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (edge[i][j]) ++indegree[j];
    }
  }
  std::vector<int> queue;
  for (int i = 0; i < n; ++i) {
    if (indegree[i] == 0) queue.push_back(i);
  }
  int removed = 0;
  while (!queue.empty()) {
    int i = queue.back();
    queue.pop_back();
    ++removed;
    for (int j = 0; j < n; ++j) {
      if (edge[i][j] && --indegree[j] == 0) queue.push_back(j);
    }
  }
  return removed == n;
}

DependencyGraph dependency_graph(const StrategicGame& game,
                                 const Profile& profile) {
  const int n = game.num_players();
  DependencyGraph graph{n, std::vector<std::vector<bool>>(
                               n, std::vector<bool>(n, false))};
  for (int i = 0; i < n; ++i) {
    const auto& table = profile.of(i).table;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const std::size_t stride = game.others_stride(i, j);
      const int mj = game.num_actions(j);
      bool depends = false;
      for (std::size_t o = 0; o < game.num_others(i) && !depends; ++o) {
        // Compare along j's axis: o and its successor differ only at j.
        if (static_cast<int>(o / stride % mj) + 1 < mj &&
            table[o] != table[o + stride]) {
          depends = true;
        }
      }
      graph.edge[i][j] = depends;
    }
  }
  return graph;
}

bool has_unique_fixed_point_guarantee(const StrategicGame& game,
                                      const Profile& profile) {
  return dependency_graph(game, profile).acyclic();
}

bool is_monotone_reaction(const StrategicGame& game,
                          const ReactionFunction& r) {
  const int i = r.owner;
  for (int j = 0; j < game.num_players(); ++j) {
    if (j == i) continue;
    const std::size_t stride = game.others_stride(i, j);
    const int mj = game.num_actions(j);
    for (std::size_t o = 0; o < game.num_others(i); ++o) {
      if (static_cast<int>(o / stride % mj) + 1 < mj &&
          r.table[o] > r.table[o + stride]) {
        return false;
      }
    }
  }
  return true;
}

bool is_monotone_profile(const StrategicGame& game, const Profile& profile) {
  for (int i = 0; i < game.num_players(); ++i) {
    if (!is_monotone_reaction(game, profile.of(i))) return false;
  }
  return true;
}

std::size_t monotone_fixed_point(const StrategicGame& game,
                                 const Profile& profile, Extreme from,
                                 std::size_t* steps_taken) {
  if (!is_monotone_profile(game, profile)) {
    fail(Errc::non_monotone_profile,
         "monotone iteration requires monotone reactions");
  }
  std::vector<int> start(game.num_players());
  std::size_t max_steps = 0;
  for (int i = 0; i < game.num_players(); ++i) {
    start[i] = from == Extreme::top ? game.num_actions(i) - 1 : 0;
    max_steps += game.num_actions(i) - 1;
  }
  std::size_t current = game.outcome_index(start);
  std::size_t steps = 0;
  while (true) {
    const std::size_t next = evaluate(game, profile, current);
    if (next == current) break;
    current = next;
    // Monotone iteration moves one direction; this cannot trip.
    if (++steps > max_steps) {
      fail(Errc::non_monotone_profile, "iteration failed to converge");
    }
  }
  if (steps_taken != nullptr) *steps_taken = steps;
  return current;
}

ProfileValue profile_value(const StrategicGame& game, const Profile& profile,
                           int player, const SearchBudget& budget) {
  if (game.num_outcomes() > budget.max_outcomes) {
    fail(Errc::budget_exceeded, "outcome scan exceeds cap");
  }
  ProfileValue best;
  for (std::size_t a = 0; a < game.num_outcomes(); ++a) {
    bool fixed = true;
    for (int i = 0; i < game.num_players(); ++i) {
      if (profile.of(i).table[game.others_index(i, a)] !=
          game.outcome_action(a, i)) {
        fixed = false;
        break;
      }
    }
    if (fixed) {
      const Rat& u = game.payoff(player, a);
      if (!best || u > *best) best = u;
    }
  }
  return best;
}

ProfileValue constant_deviation_value(const StrategicGame& game,
                                      const Profile& profile, int player,
                                      int action) {
  ProfileValue best;
  for (std::size_t o = 0; o < game.num_others(player); ++o) {
    const std::size_t a = game.outcome_with(player, action, o);
    bool fixed = true;
    for (int j = 0; j < game.num_players(); ++j) {
      if (j == player) continue;
      if (profile.of(j).table[game.others_index(j, a)] !=
          game.outcome_action(a, j)) {
        fixed = false;
        break;
      }
    }
    if (fixed) {
      const Rat& u = game.payoff(player, a);
      if (!best || u > *best) best = u;
    }
  }
  return best;
}

RfeVerdict is_rfe(const StrategicGame& game, const Profile& profile,
                  const SearchBudget& budget) {
  const FixedPointReport report = fixed_point_report(game, profile, budget);
  if (!report.unambiguous) {
    return RfeVerdict{RfeVerdict::Kind::not_unambiguous, -1, -1};
  }
  for (int i = 0; i < game.num_players(); ++i) {
    const Rat& base = *report.values[i];
    for (int a = 0; a < game.num_actions(i); ++a) {
      const ProfileValue dev = constant_deviation_value(game, profile, i, a);
      if (dev && *dev > base) {
        return RfeVerdict{RfeVerdict::Kind::deviation, i, a};
      }
    }
  }
  return RfeVerdict{RfeVerdict::Kind::rfe, -1, -1};
}

bool is_supported(const StrategicGame& game, std::size_t outcome,
                  const Profile& profile, const SearchBudget& budget) {
  const FixedPointReport report = fixed_point_report(game, profile, budget);
  if (std::find(report.fixed_points.begin(), report.fixed_points.end(),
                outcome) == report.fixed_points.end()) {
    return false;
  }
  for (std::size_t a : report.fixed_points) {
    if (!pareto_dominates(game, outcome, a)) return false;
  }
  return is_rfe(game, profile, budget).ok();
}

void for_each_profile(
    const StrategicGame& game,
    std::span<const std::vector<ReactionFunction>> candidates,
    const std::function<bool(const Profile&)>& visit,
    const SearchBudget& budget) {
  const int n = game.num_players();
  if (static_cast<int>(candidates.size()) != n) {
    fail(Errc::invalid_game, "one candidate list per player required");
  }
  std::size_t total = 1;
  for (const auto& list : candidates) {
    if (list.empty()) return;
    if (list.size() > budget.max_profiles / total) {
      fail(Errc::budget_exceeded, "profile enumeration exceeds cap " +
                                      std::to_string(budget.max_profiles));
    }
    total *= list.size();
  }
  std::vector<std::size_t> pick(n, 0);
  std::vector<ReactionFunction> current(n);
  for (int i = 0; i < n; ++i) current[i] = candidates[i][0];
  while (true) {
    if (!visit(Profile(game, current))) return;
    int i = n - 1;
    while (i >= 0 && pick[i] + 1 == candidates[i].size()) {
      pick[i] = 0;
      current[i] = candidates[i][0];
      --i;
    }
    if (i < 0) return;
    ++pick[i];
    current[i] = candidates[i][pick[i]];
  }
}

std::vector<ReactionFunction> all_reactions(const StrategicGame& game,
                                            int player,
                                            const SearchBudget& budget) {
  const std::size_t domain = game.num_others(player);
  const std::size_t m = game.num_actions(player);
  std::size_t count = 1;
  for (std::size_t k = 0; k < domain; ++k) {
    if (count > budget.max_profiles / m) {
      fail(Errc::budget_exceeded, "reaction enumeration exceeds cap");
    }
    count *= m;
  }
  std::vector<ReactionFunction> out;
  out.reserve(count);
  ReactionFunction r{player, std::vector<int>(domain, 0)};
  while (true) {
    out.push_back(r);
    std::size_t k = domain;
    while (k > 0 && r.table[k - 1] + 1 == static_cast<int>(m)) {
      r.table[k - 1] = 0;
      --k;
    }
    if (k == 0) return out;
    ++r.table[k - 1];
  }
}

std::vector<std::size_t> brute_force_supported_set(const StrategicGame& game,
                                                   const SearchBudget& budget) {
  std::vector<std::vector<ReactionFunction>> candidates;
  candidates.reserve(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    candidates.push_back(all_reactions(game, i, budget));
  }
  std::vector<bool> supported(game.num_outcomes(), false);
  for_each_profile(
      game, candidates,
      [&](const Profile& profile) {
        const FixedPointReport report =
            fixed_point_report(game, profile, budget);
        if (!report.unambiguous) return true;
        if (!is_rfe(game, profile, budget).ok()) return true;
        // Every fixed point attaining all per-player maxima is supported.
        for (std::size_t a : report.fixed_points) {
          bool dominant = true;
          for (int i = 0; i < game.num_players(); ++i) {
            if (game.payoff(i, a) != *report.values[i]) {
              dominant = false;
              break;
            }
          }
          if (dominant) supported[a] = true;
        }
        return true;
      },
      budget);
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < supported.size(); ++a) {
    if (supported[a]) out.push_back(a);
  }
  return out;
}

std::string serialize_reaction_table(std::string_view owner,
                                     std::span<const std::string> entries) {
  std::string out = "reaction ";
  out += owner;
  out += '\n';
  for (const auto& entry : entries) {
    out += entry;
    out += '\n';
  }
  return out;
}

std::string serialize_reaction(const StrategicGame& game,
                               const ReactionFunction& r) {
  std::vector<std::string> entries;
  entries.reserve(r.table.size());
  for (int a : r.table) {
    entries.push_back(game.action_name(r.owner, a));
  }
  return serialize_reaction_table(game.player_name(r.owner), entries);
}

std::string serialize_profile(const StrategicGame& game,
                              const Profile& profile) {
  std::string out;
  for (int i = 0; i < game.num_players(); ++i) {
    out += serialize_reaction(game, profile.of(i));
  }
  return out;
}

}  // namespace rfg
