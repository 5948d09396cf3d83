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

#include "rfg/investment.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rfg/construct.hpp"
#include "rfg/error.hpp"

namespace rfg {

namespace {

Rat named_value(InvestKind kind, const Rat& lambda,
                std::span<const int> outcome) {
  if (kind == InvestKind::weakest_link) {
    return lambda * *std::min_element(outcome.begin(), outcome.end());
  }
  return lambda * std::accumulate(outcome.begin(), outcome.end(), 0);
}

StrategicGame build_grid_game(int n, int levels,
                              const InvestmentGame::ValueFn& value) {
  std::vector<std::string> players;
  players.reserve(n);
  for (int i = 1; i <= n; ++i) players.push_back(std::to_string(i));
  std::vector<std::string> level_labels;
  level_labels.reserve(levels + 1);
  for (int a = 0; a <= levels; ++a) level_labels.push_back(std::to_string(a));
  std::vector<std::vector<std::string>> actions(n, level_labels);

  std::size_t num_outcomes = 1;
  for (int i = 0; i < n; ++i) num_outcomes *= levels + 1;
  std::vector<Rat> payoffs;
  payoffs.reserve(num_outcomes * n);

  std::vector<int> a(n, 0);
  for (std::size_t idx = 0; idx < num_outcomes; ++idx) {
    const Rat v = value(a);
    for (int i = 0; i < n; ++i) payoffs.push_back(v - a[i]);
    int k = n;
    while (k > 0 && a[k - 1] == levels) a[--k] = 0;
    if (k > 0) ++a[k - 1];
  }
  return StrategicGame(std::move(players), std::move(actions),
                       std::move(payoffs));
}

void check_dimensions(int n, int levels) {
  if (n < 2) {
    fail(Errc::parameter_out_of_range, "need at least two players");
  }
  if (levels < 1) {
    fail(Errc::parameter_out_of_range, "maximum investment must be positive");
  }
}

}  // namespace

InvestmentGame::InvestmentGame(InvestKind kind, int n, int levels, Rat lambda,
                               StrategicGame game)
    : kind_(kind),
      n_(n),
      levels_(levels),
      lambda_(std::move(lambda)),
      game_(std::move(game)) {}

InvestmentGame InvestmentGame::weakest_link(int n, int levels,
                                            const Rat& lambda) {
  check_dimensions(n, levels);
  if (lambda <= 1) {
    fail(Errc::parameter_out_of_range,
         "weakest-link needs lambda > 1, got " + to_ratio_string(lambda));
  }
  auto value = [lambda](std::span<const int> a) {
    return named_value(InvestKind::weakest_link, lambda, a);
  };
  return InvestmentGame(InvestKind::weakest_link, n, levels, lambda,
                        build_grid_game(n, levels, value));
}

InvestmentGame InvestmentGame::public_good(int n, int levels,
                                           const Rat& lambda) {
  check_dimensions(n, levels);
  if (lambda * n <= 1 || lambda >= 1) {
    fail(Errc::parameter_out_of_range,
         "public-good needs 1/n < lambda < 1, got " + to_ratio_string(lambda));
  }
  auto value = [lambda](std::span<const int> a) {
    return named_value(InvestKind::public_good, lambda, a);
  };
  return InvestmentGame(InvestKind::public_good, n, levels, lambda,
                        build_grid_game(n, levels, value));
}

InvestmentGame InvestmentGame::custom(int n, int levels, ValueFn value) {
  check_dimensions(n, levels);
  InvestmentGame inv(InvestKind::custom, n, levels, Rat(0),
                     build_grid_game(n, levels, value));
  const StrategicGame& game = inv.game();
  // v must be symmetric, non-decreasing per coordinate, and
  // diagonal-increasing net of own cost.
  std::vector<int> a(n);
  for (std::size_t idx = 0; idx < game.num_outcomes(); ++idx) {
    for (int i = 0; i < n; ++i) a[i] = game.outcome_action(idx, i);
    std::vector<int> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    if (value(a) != value(sorted)) {
      fail(Errc::parameter_out_of_range, "common value is not symmetric");
    }
    for (int i = 0; i < n; ++i) {
      if (a[i] + 1 <= levels) {
        std::vector<int> up = a;
        ++up[i];
        if (value(up) < value(a)) {
          fail(Errc::parameter_out_of_range, "common value is decreasing");
        }
      }
    }
  }
  for (int alpha = 0; alpha < levels; ++alpha) {
    const std::vector<int> lo(n, alpha), hi(n, alpha + 1);
    if (value(hi) - (alpha + 1) <= value(lo) - alpha) {
      fail(Errc::parameter_out_of_range,
           "coordinated payoffs must increase with the level");
    }
  }
  inv.value_ = std::move(value);
  return inv;
}

Rat InvestmentGame::value(std::span<const int> outcome) const {
  if (kind_ == InvestKind::custom) return value_(outcome);
  return named_value(kind_, lambda_, outcome);
}

bool InvestmentGame::is_high_risk() const {
  switch (kind_) {
    case InvestKind::weakest_link:
      return lambda_ * (levels_ - 1) < levels_;
    case InvestKind::public_good:
      return lambda_ * (static_cast<long long>(n_) * levels_ - 1) < levels_;
    case InvestKind::custom:
      fail(Errc::wrong_kind, "high-risk is defined for the named kinds only");
  }
  return false;
}

ReactionFunction br_reaction(const InvestmentGame& inv, int player) {
  return best_reply_reaction(inv.game(), player);
}

ReactionFunction rstar_reaction(const InvestmentGame& inv, int player) {
  if (inv.kind() != InvestKind::public_good) {
    fail(Errc::wrong_kind, "the rounded-average reaction is for public-good games");
  }
  const StrategicGame& game = inv.game();
  ReactionFunction r{player, std::vector<int>(game.num_others(player))};
  for (std::size_t o = 0; o < game.num_others(player); ++o) {
    const std::vector<int> others = game.others_actions(player, o);
    const int total = std::accumulate(others.begin(), others.end(), 0);
    r.table[o] = total / (inv.num_players() - 1);
  }
  return r;
}

// --- classification ----------------------------------------------------------

MultisetSpace::MultisetSpace(int n, int levels) : n_(n), levels_(levels) {
  std::vector<int> rep(n - 1, 0);
  while (true) {
    reps_.push_back(rep);
    int k = n - 1;
    while (k > 0 && rep[k - 1] == levels) --k;
    if (k == 0) break;
    // Next non-decreasing tuple in lexicographic order.
    const int v = ++rep[k - 1];
    for (int t = k; t < n - 1; ++t) rep[t] = v;
  }
}

std::size_t MultisetSpace::rank_of(std::span<const int> others) const {
  std::vector<int> key(others.begin(), others.end());
  std::sort(key.begin(), key.end());
  const auto it = std::lower_bound(reps_.begin(), reps_.end(), key);
  if (it == reps_.end() || *it != key) {
    fail(Errc::parameter_out_of_range, "profile outside the multiset space");
  }
  return static_cast<std::size_t>(it - reps_.begin());
}

ReactionFunction SymmetricReaction::expand(const InvestmentGame& inv,
                                           int owner,
                                           const MultisetSpace& space) const {
  const StrategicGame& game = inv.game();
  ReactionFunction r{owner, std::vector<int>(game.num_others(owner))};
  for (std::size_t o = 0; o < game.num_others(owner); ++o) {
    r.table[o] = values[space.rank_of(game.others_actions(owner, o))];
  }
  return r;
}

std::vector<SymmetricReaction> enumerate_symmetric_monotone(
    const MultisetSpace& space, std::size_t budget) {
  const std::size_t m = space.size();
  // Sorted-tuple dominance; every predecessor precedes in lex order, so one
  // left-to-right pass knows each slot's lower bound.
  std::vector<std::vector<std::size_t>> below(m);
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t s = 0; s < t; ++s) {
      bool leq = true;
      for (int k = 0; k < space.n() - 1; ++k) {
        if (space.rep(s)[k] > space.rep(t)[k]) {
          leq = false;
          break;
        }
      }
      if (leq) below[t].push_back(s);
    }
  }

  std::vector<SymmetricReaction> out;
  std::vector<int> values(m, 0);
  std::size_t t = 0;
  std::vector<int> lower(m, 0);
  while (true) {
    if (t == m) {
      if (out.size() >= budget) {
        fail(Errc::budget_exceeded, "norm enumeration exceeds cap");
      }
      out.push_back(SymmetricReaction{values});
      --t;
      ++values[t];
    } else {
      lower[t] = 0;
      for (std::size_t s : below[t]) lower[t] = std::max(lower[t], values[s]);
      if (values[t] < lower[t]) values[t] = lower[t];
    }
    while (values[t] > space.max_level()) {
      if (t == 0) return out;
      values[t] = 0;
      --t;
      ++values[t];
    }
    ++t;
  }
}

std::vector<ReactionFunction> enumerate_monotone_reactions(
    const StrategicGame& game, int player, std::size_t budget) {
  const std::size_t domain = game.num_others(player);
  const int m = game.num_actions(player);
  // Direct predecessors along each coordinate axis bound each slot below.
  std::vector<std::vector<std::size_t>> below(domain);
  for (std::size_t o = 0; o < domain; ++o) {
    for (int j = 0; j < game.num_players(); ++j) {
      if (j == player) continue;
      const std::size_t stride = game.others_stride(player, j);
      if (o / stride % game.num_actions(j) > 0) {
        below[o].push_back(o - stride);
      }
    }
  }
  std::vector<ReactionFunction> out;
  std::vector<int> values(domain, 0);
  std::size_t t = 0;
  while (true) {
    if (t == domain) {
      if (out.size() >= budget) {
        fail(Errc::budget_exceeded, "monotone-reaction enumeration exceeds cap");
      }
      out.push_back(ReactionFunction{player, values});
      --t;
      ++values[t];
    } else {
      int lower = 0;
      for (std::size_t s : below[t]) lower = std::max(lower, values[s]);
      if (values[t] < lower) values[t] = lower;
    }
    while (values[t] >= m) {
      if (t == 0) return out;
      values[t] = 0;
      --t;
      ++values[t];
    }
    ++t;
  }
}

namespace {

std::vector<Rat> payoff_slice(const InvestmentGame& inv, int player,
                              std::size_t others) {
  const StrategicGame& game = inv.game();
  std::vector<Rat> slice;
  slice.reserve(inv.max_level() + 1);
  for (int a = 0; a <= inv.max_level(); ++a) {
    slice.push_back(game.payoff(player, game.outcome_with(player, a, others)));
  }
  return slice;
}

ClassFlag check_symmetric(const InvestmentGame& inv, int player,
                          const ReactionFunction& r,
                          const MultisetSpace& space) {
  const StrategicGame& game = inv.game();
  std::vector<std::optional<std::size_t>> first(space.size());
  for (std::size_t o = 0; o < game.num_others(player); ++o) {
    const std::size_t rank = space.rank_of(game.others_actions(player, o));
    if (!first[rank]) {
      first[rank] = o;
    } else if (r.table[o] != r.table[*first[rank]]) {
      return ClassFlag{false, game.others_actions(player, *first[rank]),
                       game.others_actions(player, o)};
    }
  }
  return {};
}

ClassFlag check_payoff_consistent(const InvestmentGame& inv, int player,
                                  const ReactionFunction& r) {
  const StrategicGame& game = inv.game();
  std::map<std::vector<Rat>, std::size_t> first_by_class;
  for (std::size_t o = 0; o < game.num_others(player); ++o) {
    // The slice of own payoffs across own actions is the definitional key;
    // for the named kinds it collapses to the min/sum of the others.
    auto [it, inserted] = first_by_class.try_emplace(
        payoff_slice(inv, player, o), o);
    if (!inserted && r.table[o] != r.table[it->second]) {
      return ClassFlag{false, game.others_actions(player, it->second),
                       game.others_actions(player, o)};
    }
  }
  return {};
}

ClassFlag check_conditional_collaboration(const InvestmentGame& inv,
                                          int player,
                                          const ReactionFunction& r,
                                          bool include_zero) {
  const StrategicGame& game = inv.game();
  for (std::size_t o = 0; o < game.num_others(player); ++o) {
    const std::vector<int> others = game.others_actions(player, o);
    const auto [lo_it, hi_it] = std::minmax_element(others.begin(), others.end());
    const int lo = *lo_it;
    const int hi = *hi_it;
    const int reaction = r.table[o];
    if (lo == hi) {
      if ((lo >= 1 || include_zero) && reaction != lo) {
        return ClassFlag{false, others, {}};
      }
    } else if (reaction < lo || reaction >= hi) {
      return ClassFlag{false, others, {}};
    }
  }
  return {};
}

ClassFlag check_monotone(const InvestmentGame& inv, int player,
                         const ReactionFunction& r) {
  const StrategicGame& game = inv.game();
  for (int j = 0; j < game.num_players(); ++j) {
    if (j == player) continue;
    const std::size_t stride = game.others_stride(player, j);
    for (std::size_t o = 0; o < game.num_others(player); ++o) {
      if (static_cast<int>(o / stride) % game.num_actions(j) + 1 <
              game.num_actions(j) &&
          r.table[o] > r.table[o + stride]) {
        return ClassFlag{false, game.others_actions(player, o),
                         game.others_actions(player, o + stride)};
      }
    }
  }
  return {};
}

}  // namespace

ReactionClassReport classify_reaction(const InvestmentGame& inv, int player,
                                      const ReactionFunction& r,
                                      const ClassifyOptions& options) {
  const StrategicGame& game = inv.game();
  validate_reaction(game, r);
  const MultisetSpace space(inv.num_players(), inv.max_level());

  ReactionClassReport report;
  report.monotone = check_monotone(inv, player, r);
  report.symmetric = check_symmetric(inv, player, r, space);
  report.payoff_consistent = check_payoff_consistent(inv, player, r);
  report.conditional_collaboration = check_conditional_collaboration(
      inv, player, r, options.cc_includes_zero);
  if (const SafetyReport safety = is_safe_reaction(game, player, r);
      !safety.safe) {
    report.safe = ClassFlag{
        false, game.others_actions(player, *safety.witness_others), {}};
  }

  // A shared norm must leave the player no worse off than conforming to it.
  const std::vector<SymmetricReaction> norms =
      enumerate_symmetric_monotone(space, options.norm_budget);
  for (const SymmetricReaction& norm : norms) {
    std::vector<ReactionFunction> conforming;
    conforming.reserve(game.num_players());
    for (int j = 0; j < game.num_players(); ++j) {
      conforming.push_back(norm.expand(inv, j, space));
    }
    const Profile norm_profile(game, conforming);
    conforming[player] = r;
    const Profile deviating(game, std::move(conforming));
    if (profile_value(game, deviating, player) <
        profile_value(game, norm_profile, player)) {
      report.norm_proof = NormProofFlag{false, norm.values};
      break;
    }
  }
  return report;
}

DominanceResult is_weakly_dominant_vs_monotone(const InvestmentGame& inv,
                                               int player,
                                               const ReactionFunction& r,
                                               const SearchBudget& budget) {
  const StrategicGame& game = inv.game();
  validate_reaction(game, r);
  std::vector<std::vector<ReactionFunction>> opponents(game.num_players());
  std::size_t combos = 1;
  for (int j = 0; j < game.num_players(); ++j) {
    if (j == player) {
      opponents[j].push_back(r);
      continue;
    }
    opponents[j] = enumerate_monotone_reactions(game, j, budget.max_profiles);
    if (opponents[j].size() > budget.max_profiles / combos) {
      fail(Errc::budget_exceeded, "monotone-opponent enumeration exceeds cap");
    }
    combos *= opponents[j].size();
  }

  DominanceResult result;
  for_each_profile(
      game, opponents,
      [&](const Profile& profile) {
        const ProfileValue base = profile_value(game, profile, player);
        for (int a = 0; a < game.num_actions(player); ++a) {
          const ProfileValue dev =
              constant_deviation_value(game, profile, player, a);
          if (dev > base) {
            DominanceWitness witness;
            for (int j = 0; j < game.num_players(); ++j) {
              if (j != player) witness.others.push_back(profile.of(j));
            }
            witness.deviation_action = a;
            result = DominanceResult{false, std::move(witness)};
            return false;
          }
        }
        return true;
      },
      budget);
  return result;
}

ReactionFunction welfare_safe_reaction(const InvestmentGame& inv, int player) {
  const StrategicGame& game = inv.game();
  const Rat floor = maxmin(game, player).value;
  ReactionFunction r{player, std::vector<int>(game.num_others(player))};
  for (std::size_t o = 0; o < game.num_others(player); ++o) {
    int best_action = -1;
    Rat best_welfare;
    for (int a = 0; a <= inv.max_level(); ++a) {
      const std::size_t outcome = game.outcome_with(player, a, o);
      if (game.payoff(player, outcome) < floor) continue;
      Rat welfare(0);
      for (int j = 0; j < game.num_players(); ++j) {
        welfare += game.payoff(j, outcome);
      }
      // Ties resolve to the larger investment.
      if (best_action < 0 || welfare >= best_welfare) {
        best_action = a;
        best_welfare = std::move(welfare);
      }
    }
    // The maxmin action is always admissible, so a choice exists.
    r.table[o] = best_action;
  }
  return r;
}

bool is_welfare_max_conditional_safe(const InvestmentGame& inv, int player,
                                     const ReactionFunction& r) {
  return r.table == welfare_safe_reaction(inv, player).table;
}

std::array<bool, 3> general_dominance_conditions(const InvestmentGame& inv,
                                                 int player) {
  const StrategicGame& game = inv.game();
  std::array<bool, 3> conditions{true, true, true};

  // (a) own payoff non-decreasing in every other player's action.
  for (int j = 0; j < game.num_players() && conditions[0]; ++j) {
    if (j == player) continue;
    for (std::size_t o = 0; o < game.num_others(player); ++o) {
      const std::vector<int> others = game.others_actions(player, o);
      // Step the j-coordinate of the others profile.
      std::size_t pos = 0;
      for (int k = 0; k < game.num_players(); ++k) {
        if (k == player) continue;
        if (k == j) break;
        ++pos;
      }
      if (others[pos] + 1 > inv.max_level()) continue;
      const std::size_t up = o + game.others_stride(player, j);
      for (int a = 0; a <= inv.max_level(); ++a) {
        if (game.payoff(player, game.outcome_with(player, a, up)) <
            game.payoff(player, game.outcome_with(player, a, o))) {
          conditions[0] = false;
          break;
        }
      }
      if (!conditions[0]) break;
    }
  }

  const ReactionFunction br = br_reaction(inv, player);
  conditions[1] = is_monotone_reaction(game, br);

  // (c) overshooting the best reply is never better than all-zero.
  const Rat at_zero = game.payoff(player, 0);
  for (std::size_t o = 0; o < game.num_others(player) && conditions[2]; ++o) {
    for (int a = br.table[o] + 1; a <= inv.max_level(); ++a) {
      if (game.payoff(player, game.outcome_with(player, a, o)) > at_zero) {
        conditions[2] = false;
        break;
      }
    }
  }
  return conditions;
}

}  // namespace rfg
