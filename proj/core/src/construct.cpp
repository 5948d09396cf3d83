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

#include "rfg/construct.hpp"

#include <algorithm>

#include "rfg/error.hpp"

namespace rfg {

namespace {

// Backward-induction solver over the move order. Position k sees the actions
// chosen at positions 0..k-1 (row-major prefix index) and plays the
// continuation-optimal action, earliest action on ties.
class SequentialSolver {
 public:
  SequentialSolver(const StrategicGame& game, std::span<const int> order)
      : game_(game), order_(order.begin(), order.end()) {
    const int n = game.num_players();
    prefix_sizes_.assign(n + 1, 1);
    for (int k = 0; k < n; ++k) {
      prefix_sizes_[k + 1] = prefix_sizes_[k] * game.num_actions(order_[k]);
    }
    choice_.resize(n);
    outcome_.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
      if (k < n) choice_[k].assign(prefix_sizes_[k], -1);
      outcome_[k].assign(prefix_sizes_[k], 0);
    }
    // Leaves first: position n holds complete outcomes.
    std::vector<int> actions(n);
    for (std::size_t p = 0; p < prefix_sizes_[n]; ++p) {
      std::size_t rest = p;
      for (int k = n; k-- > 0;) {
        actions[order_[k]] = static_cast<int>(rest % game.num_actions(order_[k]));
        rest /= game.num_actions(order_[k]);
      }
      outcome_[n][p] = game.outcome_index(actions);
    }
    for (int k = n; k-- > 0;) {
      const int player = order_[k];
      for (std::size_t p = 0; p < prefix_sizes_[k]; ++p) {
        int best_action = 0;
        std::size_t best_outcome = outcome_[k + 1][p * game.num_actions(player)];
        for (int a = 1; a < game.num_actions(player); ++a) {
          const std::size_t candidate =
              outcome_[k + 1][p * game.num_actions(player) + a];
          if (game.payoff(player, candidate) >
              game.payoff(player, best_outcome)) {
            best_outcome = candidate;
            best_action = a;
          }
        }
        choice_[k][p] = best_action;
        outcome_[k][p] = best_outcome;
      }
    }
  }

  int strategy(int position, std::size_t prefix) const {
    return choice_[position][prefix];
  }

  // Prefix index of the predecessors' actions inside an others-profile.
  std::size_t prefix_of_others(int position, std::size_t others) const {
    const int player = order_[position];
    std::size_t prefix = 0;
    for (int k = 0; k < position; ++k) {
      const int j = order_[k];
      const int aj = static_cast<int>(others / game_.others_stride(player, j) %
                                      game_.num_actions(j));
      prefix = prefix * game_.num_actions(j) + aj;
    }
    return prefix;
  }

 private:
  const StrategicGame& game_;
  std::vector<int> order_;
  std::vector<std::size_t> prefix_sizes_;
  std::vector<std::vector<int>> choice_;
  std::vector<std::vector<std::size_t>> outcome_;
};

}  // namespace

Profile construct_sequential(const StrategicGame& game,
                             std::span<const int> order) {
  const int n = game.num_players();
  if (static_cast<int>(order.size()) != n) {
    fail(Errc::invalid_game, "move order must cover every player");
  }
  std::vector<bool> seen(n, false);
  for (int p : order) {
    if (p < 0 || p >= n || seen[p]) {
      fail(Errc::invalid_game, "move order must be a permutation of players");
    }
    seen[p] = true;
  }

  SequentialSolver solver(game, order);
  std::vector<ReactionFunction> reactions(n);
  for (int k = 0; k < n; ++k) {
    const int player = order[k];
    ReactionFunction r{player, std::vector<int>(game.num_others(player))};
    for (std::size_t o = 0; o < game.num_others(player); ++o) {
      r.table[o] = solver.strategy(k, solver.prefix_of_others(k, o));
    }
    reactions[player] = std::move(r);
  }
  return Profile(game, std::move(reactions));
}

Profile construct_promise_threat(const StrategicGame& game,
                                 std::size_t target) {
  if (game.num_players() != 2) {
    fail(Errc::not_two_player, "promise-and-threat needs exactly two players");
  }
  for (int i = 0; i < 2; ++i) {
    if (game.payoff(i, target) < maxmin(game, i).value) {
      fail(Errc::target_below_maxmin,
           "player " + game.player_name(i) + " gets less than maxmin at " +
               game.outcome_label(target));
    }
  }
  std::vector<ReactionFunction> reactions;
  for (int i = 0; i < 2; ++i) {
    const int other = 1 - i;
    ReactionFunction r{i, std::vector<int>(game.num_others(i))};
    const std::size_t target_others = game.others_index(i, target);
    for (std::size_t o = 0; o < game.num_others(i); ++o) {
      if (o == target_others) {
        r.table[o] = game.outcome_action(target, i);
        continue;
      }
      int punish = 0;
      for (int a = 1; a < game.num_actions(i); ++a) {
        if (game.payoff(other, game.outcome_with(i, a, o)) <
            game.payoff(other, game.outcome_with(i, punish, o))) {
          punish = a;
        }
      }
      r.table[o] = punish;
    }
    reactions.push_back(std::move(r));
  }
  return Profile(game, std::move(reactions));
}

Profile construct_isolation(const StrategicGame& game, std::size_t target) {
  const int n = game.num_players();
  const bool three_player_case = n == 3;
  if (n < 3) {
    fail(Errc::unsupported_dimensions, "need at least three players");
  }
  if (three_player_case) {
    for (int i = 0; i < n; ++i) {
      if (game.num_actions(i) < 3) {
        fail(Errc::unsupported_dimensions,
             "three players need at least three actions each");
      }
    }
  }

  // Relabel so the target maps to all-zero: the target action becomes 0 and
  // the rest keep their declared order shifted up by one.
  std::vector<std::vector<int>> relabel(n);
  std::vector<std::vector<int>> original(n);
  for (int i = 0; i < n; ++i) {
    const int target_action = game.outcome_action(target, i);
    relabel[i].assign(game.num_actions(i), 0);
    original[i].assign(game.num_actions(i), 0);
    int next = 1;
    for (int a = 0; a < game.num_actions(i); ++a) {
      const int v = a == target_action ? 0 : next++;
      relabel[i][a] = v;
      original[i][v] = a;
    }
  }

  std::vector<ReactionFunction> reactions;
  for (int i = 0; i < n; ++i) {
    ReactionFunction r{i, std::vector<int>(game.num_others(i))};
    for (std::size_t o = 0; o < game.num_others(i); ++o) {
      const std::vector<int> others = game.others_actions(i, o);
      int relabeled;
      if (three_player_case) {
        int sum = 0;
        bool all_zero = true;
        int pos = 0;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          const int v = relabel[j][others[pos++]];
          sum += v;
          if (v != 0) all_zero = false;
        }
        relabeled = all_zero ? 0 : ((i - sum) % 3 + 3) % 3;
      } else {
        // Ring rule: react to the predecessor resting at the target while
        // the successor has left it.
        const int prev = (i + n - 1) % n;
        const int next = (i + 1) % n;
        int prev_value = 0;
        int next_value = 0;
        int pos = 0;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          if (j == prev) prev_value = relabel[j][others[pos]];
          if (j == next) next_value = relabel[j][others[pos]];
          ++pos;
        }
        relabeled = prev_value == 0 && next_value != 0 ? 1 : 0;
      }
      r.table[o] = original[i][relabeled];
    }
    reactions.push_back(std::move(r));
  }
  return Profile(game, std::move(reactions));
}

SafetyReport is_safe_reaction(const StrategicGame& game, int player,
                              const ReactionFunction& r) {
  validate_reaction(game, r);
  const Rat floor = maxmin(game, player).value;
  for (std::size_t o = 0; o < game.num_others(player); ++o) {
    if (game.payoff(player, game.outcome_with(player, r.table[o], o)) <
        floor) {
      return SafetyReport{false, o};
    }
  }
  return SafetyReport{true, std::nullopt};
}

bool is_safe_profile(const StrategicGame& game, const Profile& profile) {
  for (int i = 0; i < game.num_players(); ++i) {
    if (!is_safe_reaction(game, i, profile.of(i)).safe) return false;
  }
  return true;
}

std::vector<ReactionFunction> safe_reactions(const StrategicGame& game,
                                             int player,
                                             const SearchBudget& budget) {
  const Rat floor = maxmin(game, player).value;
  // Per others-profile, the admissible own actions; any combination is safe.
  std::vector<std::vector<int>> admissible(game.num_others(player));
  std::size_t count = 1;
  for (std::size_t o = 0; o < game.num_others(player); ++o) {
    for (int a = 0; a < game.num_actions(player); ++a) {
      if (game.payoff(player, game.outcome_with(player, a, o)) >= floor) {
        admissible[o].push_back(a);
      }
    }
    if (admissible[o].empty()) return {};
    if (count > budget.max_profiles / admissible[o].size()) {
      fail(Errc::budget_exceeded, "safe-reaction enumeration exceeds cap");
    }
    count *= admissible[o].size();
  }
  std::vector<ReactionFunction> out;
  out.reserve(count);
  std::vector<std::size_t> pick(game.num_others(player), 0);
  while (true) {
    ReactionFunction r{player, std::vector<int>(game.num_others(player))};
    for (std::size_t o = 0; o < pick.size(); ++o) {
      r.table[o] = admissible[o][pick[o]];
    }
    out.push_back(std::move(r));
    std::size_t o = pick.size();
    while (o > 0 && pick[o - 1] + 1 == admissible[o - 1].size()) {
      pick[o - 1] = 0;
      --o;
    }
    if (o == 0) return out;
    ++pick[o - 1];
  }
}

Profile pareto_improve_safe_rfe(const StrategicGame& game,
                                const Profile& profile, std::size_t better) {
  if (!is_safe_profile(game, profile)) {
    fail(Errc::not_safe_rfe, "profile contains unsafe reactions");
  }
  const FixedPointReport report = fixed_point_report(game, profile);
  if (!is_rfe(game, profile).ok()) {
    fail(Errc::not_safe_rfe, "profile is not an equilibrium");
  }
  const std::size_t supported = *report.top;
  if (!pareto_dominates(game, better, supported)) {
    fail(Errc::not_improvement,
         game.outcome_label(better) + " does not weakly dominate " +
             game.outcome_label(supported));
  }
  std::vector<ReactionFunction> reactions;
  reactions.reserve(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    ReactionFunction r = profile.of(i);
    r.table[game.others_index(i, better)] = game.outcome_action(better, i);
    reactions.push_back(std::move(r));
  }
  return Profile(game, std::move(reactions));
}

Profile pareto_efficient_safe_rfe(const StrategicGame& game,
                                  const Profile& profile) {
  Profile current = profile;
  while (true) {
    const FixedPointReport report = fixed_point_report(game, current);
    if (!report.top) {
      fail(Errc::not_safe_rfe, "profile has no supported outcome");
    }
    const std::size_t supported = *report.top;
    std::size_t better = supported;
    for (std::size_t a = 0; a < game.num_outcomes(); ++a) {
      if (pareto_improves(game, a, supported)) {
        better = a;
        break;
      }
    }
    if (better == supported) return current;
    current = pareto_improve_safe_rfe(game, current, better);
  }
}

}  // namespace rfg
