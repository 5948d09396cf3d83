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

#include <doctest.h>

#include <algorithm>

#include "rfg/construct.hpp"
#include "rfg/investment.hpp"
#include "util.hpp"

using namespace rfg;
using namespace rfg::testutil;

TEST_CASE("profile validation") {
  const StrategicGame pd = prisoners_dilemma();
  CHECK_THROWS_AS(Profile(pd, {constant_reaction(pd, 0, 0)}), Error);
  CHECK_THROWS_AS(
      Profile(pd, {constant_reaction(pd, 0, 0), constant_reaction(pd, 0, 0)}),
      Error);
  CHECK_THROWS_AS(
      Profile(pd, {ReactionFunction{0, {0}},  // not total
                   constant_reaction(pd, 1, 0)}),
      Error);
}

TEST_CASE("evaluate applies each reaction to the rest of the outcome") {
  const StrategicGame pd = prisoners_dilemma();
  const Profile constants(
      pd, {constant_reaction(pd, 0, 1), constant_reaction(pd, 1, 0)});
  for (std::size_t a = 0; a < pd.num_outcomes(); ++a) {
    CHECK(evaluate(pd, constants, a) == outcome_of(pd, {"D", "C"}));
  }
}

TEST_CASE("fixed points of the match-other profile in the dilemma") {
  const StrategicGame pd = prisoners_dilemma();
  const Profile match = match_other_profile(pd);
  const FixedPointReport report = fixed_point_report(pd, match);
  CHECK(report.fixed_points ==
        std::vector<std::size_t>{outcome_of(pd, {"C", "C"}),
                                 outcome_of(pd, {"D", "D"})});
  CHECK(report.unambiguous);
  CHECK(report.top == outcome_of(pd, {"C", "C"}));
  CHECK(*report.values[0] == Rat(2));
  CHECK(*report.values[1] == Rat(2));
}

TEST_CASE("mutual best replies can erase every fixed point") {
  const StrategicGame mp = matching_pennies();
  const Profile br(
      mp, {best_reply_reaction(mp, 0), best_reply_reaction(mp, 1)});
  const FixedPointReport report = fixed_point_report(mp, br);
  CHECK(report.fixed_points.empty());
  CHECK(!report.unambiguous);
  CHECK(!report.values[0]);
  CHECK(!report.values[1]);
}

TEST_CASE("coordination games are ambiguous under match-other") {
  const StrategicGame bos = battle_of_sexes();
  const FixedPointReport report =
      fixed_point_report(bos, match_other_profile(bos));
  CHECK(report.fixed_points.size() == 2);
  CHECK(!report.unambiguous);
  CHECK(!report.top);
}

TEST_CASE("missing value compares below every payoff") {
  const ProfileValue none;
  CHECK(none < ProfileValue(Rat(-1000000)));
  CHECK(none < ProfileValue(Rat(-1, 1000000)));
  CHECK(!(none < none));
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 9);
  for (int t = 0; t < 1000; ++t) {
    CHECK(none < ProfileValue(Rat(num(rng), den(rng))));
  }
}

TEST_CASE("outcome scans respect the budget") {
  const StrategicGame pd = prisoners_dilemma();
  SearchBudget tiny;
  tiny.max_outcomes = 3;
  CHECK_THROWS_AS(fixed_point_report(pd, match_other_profile(pd), tiny),
                  Error);
}

TEST_CASE("dependency graph") {
  const StrategicGame pd = prisoners_dilemma();

  const Profile constants(
      pd, {constant_reaction(pd, 0, 0), constant_reaction(pd, 1, 1)});
  const DependencyGraph no_edges = dependency_graph(pd, constants);
  CHECK(!no_edges.edge[0][1]);
  CHECK(!no_edges.edge[1][0]);
  CHECK(has_unique_fixed_point_guarantee(pd, constants));

  const Profile match = match_other_profile(pd);
  const DependencyGraph cycle = dependency_graph(pd, match);
  CHECK(cycle.edge[0][1]);
  CHECK(cycle.edge[1][0]);
  CHECK(!has_unique_fixed_point_guarantee(pd, match));

  const Profile sequential = construct_sequential(pd, std::vector<int>{0, 1});
  CHECK(has_unique_fixed_point_guarantee(pd, sequential));
}

TEST_CASE("acyclic dependencies imply a unique fixed point") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const StrategicGame game = random_game(rng, {2, 2, 3}, 0, 4);
    // Build reactions that read only lower-numbered players.
    std::vector<ReactionFunction> reactions;
    for (int i = 0; i < game.num_players(); ++i) {
      ReactionFunction r{i, std::vector<int>(game.num_others(i))};
      std::vector<int> image(game.num_others(i));
      for (auto& v : image) {
        v = static_cast<int>(rng() % game.num_actions(i));
      }
      for (std::size_t o = 0; o < game.num_others(i); ++o) {
        // Collapse the others index onto the predecessors only.
        std::size_t key = 0;
        const std::vector<int> others = game.others_actions(i, o);
        for (int j = 0; j < i; ++j) {
          key = key * game.num_actions(j) + others[j];
        }
        r.table[o] = image[key];
      }
      reactions.push_back(std::move(r));
    }
    const Profile profile(game, std::move(reactions));
    if (has_unique_fixed_point_guarantee(game, profile)) {
      CHECK(fixed_point_report(game, profile).fixed_points.size() == 1);
    }
  }
}

TEST_CASE("monotone iteration from the extremes") {
  const InvestmentGame wl = InvestmentGame::weakest_link(3, 4, Rat(2));
  const StrategicGame& game = wl.game();

  const Profile br(game, {br_reaction(wl, 0), br_reaction(wl, 1),
                          br_reaction(wl, 2)});
  std::size_t steps = 0;
  CHECK(monotone_fixed_point(game, br, Extreme::top, &steps) ==
        game.outcome_index(std::vector<int>{4, 4, 4}));
  CHECK(steps == 0);
  CHECK(monotone_fixed_point(game, br, Extreme::bottom) ==
        game.outcome_index(std::vector<int>{0, 0, 0}));

  // Best replies capped at (2,3,4).
  const std::vector<int> caps{2, 3, 4};
  std::vector<ReactionFunction> capped;
  for (int i = 0; i < 3; ++i) {
    ReactionFunction r = br_reaction(wl, i);
    for (auto& v : r.table) v = std::min(v, caps[i]);
    capped.push_back(std::move(r));
  }
  const Profile capped_profile(game, std::move(capped));
  const std::size_t fp =
      monotone_fixed_point(game, capped_profile, Extreme::top, &steps);
  CHECK(fp == game.outcome_index(std::vector<int>{2, 2, 2}));
  const FixedPointReport report = fixed_point_report(game, capped_profile);
  CHECK(std::find(report.fixed_points.begin(), report.fixed_points.end(),
                  fp) != report.fixed_points.end());

  const InvestmentGame pg = InvestmentGame::public_good(3, 4, Rat(2, 5));
  const Profile rstar(pg.game(), {rstar_reaction(pg, 0), rstar_reaction(pg, 1),
                                  rstar_reaction(pg, 2)});
  CHECK(monotone_fixed_point(pg.game(), rstar, Extreme::top) ==
        pg.game().outcome_index(std::vector<int>{4, 4, 4}));

  const StrategicGame mp = matching_pennies();
  const Profile mp_br(
      mp, {best_reply_reaction(mp, 0), best_reply_reaction(mp, 1)});
  CHECK_THROWS_AS(monotone_fixed_point(mp, mp_br, Extreme::top), Error);
}

TEST_CASE("monotone iteration stays within the step bound") {
  std::mt19937_64 rng(31);
  const InvestmentGame wl = InvestmentGame::weakest_link(2, 4, Rat(3, 2));
  const StrategicGame& game = wl.game();
  const auto monotone0 = enumerate_monotone_reactions(game, 0);
  const auto monotone1 = enumerate_monotone_reactions(game, 1);
  std::size_t bound = 0;
  for (int i = 0; i < game.num_players(); ++i) {
    bound += game.num_actions(i) - 1;
  }
  for (int trial = 0; trial < 500; ++trial) {
    const Profile profile(game, {monotone0[rng() % monotone0.size()],
                                 monotone1[rng() % monotone1.size()]});
    std::size_t steps = 0;
    const std::size_t fp =
        monotone_fixed_point(game, profile, Extreme::top, &steps);
    CHECK(steps <= bound);
    CHECK(evaluate(game, profile, fp) == fp);
  }
}

TEST_CASE("equilibrium verdicts on the worked examples") {
  const StrategicGame pd = prisoners_dilemma();
  CHECK(is_rfe(pd, match_other_profile(pd)).ok());

  // Best replies lose to committing to the dominated column.
  const StrategicGame ex1 = dominated_commitment_game();
  const Profile br(
      ex1, {best_reply_reaction(ex1, 0), best_reply_reaction(ex1, 1)});
  const RfeVerdict verdict = is_rfe(ex1, br);
  CHECK(verdict.kind == RfeVerdict::Kind::deviation);
  CHECK(verdict.player == 1);
  CHECK(verdict.action == ex1.action_index(1, "y"));

  // One constant and one best reply support miscoordination.
  const StrategicGame mp = matching_pennies();
  const Profile commit(
      mp, {constant_reaction(mp, 0, mp.action_index(0, "H")),
           best_reply_reaction(mp, 1)});
  CHECK(is_rfe(mp, commit).ok());
  const FixedPointReport report = fixed_point_report(mp, commit);
  CHECK(report.fixed_points ==
        std::vector<std::size_t>{outcome_of(mp, {"H", "T"})});
}

TEST_CASE("constant deviations falsify exactly like full deviation search") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 150; ++trial) {
    const StrategicGame game =
        random_game(rng, trial % 2 == 0 ? std::vector<int>{3, 3}
                                        : std::vector<int>{2, 2, 2},
                    0, 4);
    const Profile profile = random_profile(rng, game);
    CHECK(is_rfe(game, profile).ok() ==
          oracle_rfe_full_deviations(game, profile).ok());
  }
}

TEST_CASE("constant profiles are equilibria exactly at nash outcomes") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const StrategicGame game = random_game(rng, {2, 3}, 0, 4);
    for (std::size_t a = 0; a < game.num_outcomes(); ++a) {
      std::vector<ReactionFunction> reactions;
      for (int i = 0; i < game.num_players(); ++i) {
        reactions.push_back(
            constant_reaction(game, i, game.outcome_action(a, i)));
      }
      const Profile constants(game, std::move(reactions));
      const FixedPointReport report = fixed_point_report(game, constants);
      REQUIRE(report.fixed_points == std::vector<std::size_t>{a});
      CHECK(is_rfe(game, constants).ok() == is_nash_equilibrium(game, a));
    }
  }
}

TEST_CASE("supported outcomes of the dilemma by brute force") {
  const StrategicGame pd = prisoners_dilemma();
  CHECK(brute_force_supported_set(pd) ==
        std::vector<std::size_t>{outcome_of(pd, {"C", "C"}),
                                 outcome_of(pd, {"D", "D"})});
  CHECK(is_supported(pd, outcome_of(pd, {"C", "C"}), match_other_profile(pd)));
  CHECK(!is_supported(pd, outcome_of(pd, {"D", "D"}), match_other_profile(pd)));
}

TEST_CASE("worst replies support miscoordination") {
  const StrategicGame bos = battle_of_sexes();
  const std::vector<std::size_t> supported = brute_force_supported_set(bos);
  CHECK(std::find(supported.begin(), supported.end(),
                  outcome_of(bos, {"x", "y"})) != supported.end());
}

TEST_CASE("a uniquely worst outcome is unsupported with three players") {
  // u_i is 1 everywhere except the all-1 corner, which pays 0 to everyone.
  std::vector<Rat> payoffs(8 * 3, Rat(1));
  const std::size_t corner = 7;  // (1,1,1)
  for (int i = 0; i < 3; ++i) payoffs[corner * 3 + i] = Rat(0);
  const StrategicGame game({"1", "2", "3"},
                           {{"0", "1"}, {"0", "1"}, {"0", "1"}},
                           std::move(payoffs));
  const std::vector<std::size_t> supported = brute_force_supported_set(game);
  CHECK(std::find(supported.begin(), supported.end(), corner) ==
        supported.end());
  CHECK(!supported.empty());
}

TEST_CASE("profile enumeration respects the budget") {
  const StrategicGame pd = prisoners_dilemma();
  SearchBudget tiny;
  tiny.max_profiles = 8;
  CHECK_THROWS_AS(brute_force_supported_set(pd, tiny), Error);
}

TEST_CASE("canonical serialization is stable and injective") {
  const StrategicGame pd = prisoners_dilemma();
  const Profile match = match_other_profile(pd);
  CHECK(serialize_profile(pd, match) ==
        "reaction 1\nC\nD\nreaction 2\nC\nD\n");
  const Profile flipped(
      pd, {ReactionFunction{0, {1, 0}}, ReactionFunction{1, {1, 0}}});
  CHECK(serialize_profile(pd, match) != serialize_profile(pd, flipped));
}
