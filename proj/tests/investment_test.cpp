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

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "rfg/construct.hpp"
#include "util.hpp"

using namespace rfg;
using namespace rfg::testutil;

namespace {

// Test-side conditional-collaboration predicate (independent of the
// classifier): match positive coordinated profiles, stay within
// [min, max) elsewhere; `include_zero` also pins the all-zero profile.
bool cc_predicate(const StrategicGame& game, int player,
                  const ReactionFunction& r, bool include_zero) {
  for (std::size_t o = 0; o < game.num_others(player); ++o) {
    const std::vector<int> others = game.others_actions(player, o);
    const int lo = *std::min_element(others.begin(), others.end());
    const int hi = *std::max_element(others.begin(), others.end());
    if (lo == hi) {
      if ((lo >= 1 || include_zero) && r.table[o] != lo) return false;
    } else if (r.table[o] < lo || r.table[o] >= hi) {
      return false;
    }
  }
  return true;
}

Profile shared_profile(const InvestmentGame& inv, const SymmetricReaction& s,
                       const MultisetSpace& space) {
  std::vector<ReactionFunction> reactions;
  for (int i = 0; i < inv.num_players(); ++i) {
    reactions.push_back(s.expand(inv, i, space));
  }
  return Profile(inv.game(), std::move(reactions));
}

}  // namespace

TEST_CASE("named kinds materialize the advertised payoffs") {
  const InvestmentGame wl = InvestmentGame::weakest_link(3, 6, Rat(2));
  const std::size_t all6 = wl.game().outcome_index(std::vector<int>{6, 6, 6});
  for (int i = 0; i < 3; ++i) CHECK(wl.game().payoff(i, all6) == Rat(6));
  CHECK(!wl.is_high_risk());  // 2 >= 6/5

  const InvestmentGame pg = InvestmentGame::public_good(4, 20, Rat(2, 5));
  const std::size_t all20 =
      pg.game().outcome_index(std::vector<int>{20, 20, 20, 20});
  for (int i = 0; i < 4; ++i) CHECK(pg.game().payoff(i, all20) == Rat(12));
  CHECK(pg.value(std::vector<int>{20, 20, 20, 20}) == Rat(32));
  CHECK(!pg.is_high_risk());  // 2/5 >= 20/79

  CHECK(InvestmentGame::weakest_link(2, 3, Rat(11, 10)).is_high_risk());
  CHECK(InvestmentGame::public_good(3, 4, Rat(7, 20)).is_high_risk());
}

TEST_CASE("parameter ranges are enforced") {
  CHECK_THROWS_AS(InvestmentGame::public_good(3, 4, Rat(1)), Error);
  CHECK_THROWS_AS(InvestmentGame::public_good(3, 4, Rat(1, 3)), Error);
  CHECK_THROWS_AS(InvestmentGame::weakest_link(3, 4, Rat(1)), Error);
  CHECK_THROWS_AS(InvestmentGame::weakest_link(1, 4, Rat(2)), Error);
  try {
    InvestmentGame::public_good(3, 4, Rat(1));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parameter_out_of_range);
  }
}

TEST_CASE("custom games validate symmetry and monotonicity") {
  // v = 2*max is symmetric, non-decreasing, diagonal-increasing.
  const auto two_max = [](std::span<const int> a) {
    return Rat(2 * *std::max_element(a.begin(), a.end()));
  };
  CHECK_NOTHROW(InvestmentGame::custom(2, 2, two_max));

  const auto asymmetric = [](std::span<const int> a) {
    return Rat(a[0]);
  };
  CHECK_THROWS_AS(InvestmentGame::custom(2, 2, asymmetric), Error);

  const auto flat = [](std::span<const int>) { return Rat(1); };
  CHECK_THROWS_AS(InvestmentGame::custom(2, 2, flat), Error);
}

TEST_CASE("matching the minimum passes every class test") {
  const InvestmentGame wl = InvestmentGame::weakest_link(3, 2, Rat(3, 2));
  const ReactionFunction br = br_reaction(wl, 0);
  for (std::size_t o = 0; o < wl.game().num_others(0); ++o) {
    const std::vector<int> others = wl.game().others_actions(0, o);
    CHECK(br.table[o] == *std::min_element(others.begin(), others.end()));
  }
  ClassifyOptions strict;
  strict.cc_includes_zero = true;
  const ReactionClassReport report = classify_reaction(wl, 0, br, strict);
  CHECK(report.monotone.ok);
  CHECK(report.symmetric.ok);
  CHECK(report.payoff_consistent.ok);
  CHECK(report.conditional_collaboration.ok);
  CHECK(report.safe.ok);
  CHECK(report.norm_proof.ok);
}

TEST_CASE("rounding the average down is payoff consistent") {
  const InvestmentGame pg = InvestmentGame::public_good(3, 2, Rat(2, 5));
  const ReactionFunction rstar = rstar_reaction(pg, 0);
  const std::size_t o02 =
      pg.game().others_index_of(0, std::vector<int>{0, 2});
  const std::size_t o12 =
      pg.game().others_index_of(0, std::vector<int>{1, 2});
  CHECK(rstar.table[o02] == 1);
  CHECK(rstar.table[o12] == 1);
  CHECK(classify_reaction(pg, 0, rstar).payoff_consistent.ok);
}

TEST_CASE("rounding the average up undercuts nothing") {
  const InvestmentGame pg = InvestmentGame::public_good(3, 2, Rat(2, 5));
  ReactionFunction round_up{0, std::vector<int>(pg.game().num_others(0))};
  for (std::size_t o = 0; o < round_up.table.size(); ++o) {
    const std::vector<int> others = pg.game().others_actions(0, o);
    const int total = std::accumulate(others.begin(), others.end(), 0);
    round_up.table[o] = (total + 1) / 2;
  }
  const ReactionClassReport report = classify_reaction(pg, 0, round_up);
  CHECK(!report.conditional_collaboration.ok);
  CHECK(report.conditional_collaboration.witness_a == std::vector<int>{0, 1});
}

TEST_CASE("best replies by kind") {
  const InvestmentGame wl = InvestmentGame::weakest_link(3, 4, Rat(3, 2));
  const std::size_t o34 = wl.game().others_index_of(0, std::vector<int>{3, 4});
  CHECK(br_reaction(wl, 0).table[o34] == 3);
  const std::size_t o00 = wl.game().others_index_of(0, std::vector<int>{0, 0});
  CHECK(br_reaction(wl, 0).table[o00] == 0);

  // Free riding dominates in public-good play.
  const InvestmentGame pg = InvestmentGame::public_good(3, 4, Rat(2, 5));
  const ReactionFunction pg_br = br_reaction(pg, 1);
  CHECK(std::all_of(pg_br.table.begin(), pg_br.table.end(),
                    [](int a) { return a == 0; }));
}

TEST_CASE("rounded-average reaction values") {
  const InvestmentGame pg4 = InvestmentGame::public_good(4, 20, Rat(2, 5));
  const std::size_t o_all20 =
      pg4.game().others_index_of(0, std::vector<int>{20, 20, 20});
  CHECK(rstar_reaction(pg4, 0).table[o_all20] == 20);

  const InvestmentGame pg3 = InvestmentGame::public_good(3, 2, Rat(2, 5));
  const std::size_t o12 = pg3.game().others_index_of(0, std::vector<int>{1, 2});
  CHECK(rstar_reaction(pg3, 0).table[o12] == 1);

  const InvestmentGame wl = InvestmentGame::weakest_link(3, 2, Rat(3, 2));
  CHECK_THROWS_AS(rstar_reaction(wl, 0), Error);
}

namespace {

// Matches every coordinated others-profile, the zero one included.
bool anchors_coordination(const StrategicGame& game, int player,
                          const ReactionFunction& r, int levels) {
  for (int alpha = 0; alpha <= levels; ++alpha) {
    const std::vector<int> diag(game.num_players() - 1, alpha);
    if (r.table[game.others_index_of(player, diag)] != alpha) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("conditional collaborators are norm-proof") {
  const std::vector<InvestmentGame> cases = {
      InvestmentGame::weakest_link(3, 2, Rat(3, 2)),
      InvestmentGame::public_good(3, 2, Rat(2, 5)),
      InvestmentGame::weakest_link(2, 3, Rat(11, 10)),
      InvestmentGame::public_good(2, 3, Rat(3, 5)),
  };
  for (const InvestmentGame& inv : cases) {
    for (const ReactionFunction& r :
         enumerate_monotone_reactions(inv.game(), 0)) {
      if (cc_predicate(inv.game(), 0, r, /*include_zero=*/true)) {
        CHECK(classify_reaction(inv, 0, r).norm_proof.ok);
      }
    }
  }
}

TEST_CASE("norm proofness is exactly coordination anchoring") {
  // Against shared norms, a monotone reaction survives every norm if and
  // only if it matches each coordinated profile: its own coordinated fixed
  // points then replicate the norm's, and the per-level norms plus the
  // all-zero norm force each diagonal in turn.
  const std::vector<InvestmentGame> cases = {
      InvestmentGame::weakest_link(3, 2, Rat(3, 2)),
      InvestmentGame::public_good(3, 2, Rat(2, 5)),
      InvestmentGame::weakest_link(2, 3, Rat(11, 10)),
      InvestmentGame::public_good(2, 3, Rat(3, 5)),
  };
  for (const InvestmentGame& inv : cases) {
    for (const ReactionFunction& r :
         enumerate_monotone_reactions(inv.game(), 0)) {
      CHECK(classify_reaction(inv, 0, r).norm_proof.ok ==
            anchors_coordination(inv.game(), 0, r, inv.max_level()));
    }
  }
}

TEST_CASE("norm proofness and conditional collaboration split at the max boundary") {
  // Reacting AT the others' maximum (instead of strictly below it) never
  // hurts against a shared norm, so the reaction below is norm-proof while
  // failing the undercut requirement. With two players the gap closes:
  // every others-profile is coordinated and the two classes coincide.
  const InvestmentGame pg = InvestmentGame::public_good(3, 2, Rat(2, 5));
  ReactionFunction at_max{0, std::vector<int>(pg.game().num_others(0))};
  for (std::size_t o = 0; o < at_max.table.size(); ++o) {
    const std::vector<int> others = pg.game().others_actions(0, o);
    const int total = std::accumulate(others.begin(), others.end(), 0);
    at_max.table[o] = total / 2 + (total % 2);  // round the average up
  }
  // Rounded-up average anchors every diagonal but overshoots at (0,1).
  REQUIRE(anchors_coordination(pg.game(), 0, at_max, 2));
  REQUIRE(!cc_predicate(pg.game(), 0, at_max, true));
  const ReactionClassReport report = classify_reaction(pg, 0, at_max);
  CHECK(report.norm_proof.ok);
  CHECK(!report.conditional_collaboration.ok);

  const InvestmentGame pg2 = InvestmentGame::public_good(2, 3, Rat(3, 5));
  for (const ReactionFunction& r :
       enumerate_monotone_reactions(pg2.game(), 0)) {
    CHECK(classify_reaction(pg2, 0, r).norm_proof.ok ==
          cc_predicate(pg2.game(), 0, r, /*include_zero=*/true));
  }
}

TEST_CASE("the unconstrained zero slot admits non norm-proof reactions") {
  // With the zero profile left free, a reaction may collaborate
  // conditionally yet lose to the all-zero norm.
  const InvestmentGame wl = InvestmentGame::weakest_link(2, 3, Rat(11, 10));
  ReactionFunction r{0, {1, 1, 2, 3}};  // identity except r(0) = 1
  const ReactionClassReport report = classify_reaction(wl, 0, r);
  CHECK(report.conditional_collaboration.ok);  // default: zero slot free
  CHECK(!report.norm_proof.ok);

  ClassifyOptions strict;
  strict.cc_includes_zero = true;
  CHECK(!classify_reaction(wl, 0, r, strict).conditional_collaboration.ok);
}

TEST_CASE("conditional collaborators support full investment") {
  // Every profile of zero-anchored conditional collaborators has exactly
  // the coordinated outcomes as fixed points and is an equilibrium with
  // the full-investment outcome on top.
  const std::vector<InvestmentGame> cases = {
      InvestmentGame::weakest_link(3, 2, Rat(3, 2)),
      InvestmentGame::public_good(3, 2, Rat(2, 5)),
  };
  for (const InvestmentGame& inv : cases) {
    const StrategicGame& game = inv.game();
    std::vector<std::vector<ReactionFunction>> collaborators(3);
    for (int i = 0; i < 3; ++i) {
      for (const ReactionFunction& r : all_reactions(game, i)) {
        if (cc_predicate(game, i, r, /*include_zero=*/true)) {
          collaborators[i].push_back(r);
        }
      }
      CHECK(collaborators[i].size() == 4);
    }
    std::vector<std::size_t> coordinated;
    for (int a = 0; a <= 2; ++a) {
      coordinated.push_back(game.outcome_index(std::vector<int>{a, a, a}));
    }
    std::sort(coordinated.begin(), coordinated.end());
    const std::size_t top = game.outcome_index(std::vector<int>{2, 2, 2});

    for_each_profile(game, collaborators, [&](const Profile& profile) {
      const FixedPointReport report = fixed_point_report(game, profile);
      CHECK(report.fixed_points == coordinated);
      CHECK(report.unambiguous);
      CHECK(report.top == top);
      CHECK(is_rfe(game, profile).ok());
      return true;
    });
  }
}

TEST_CASE("a free zero slot can break the full-investment support") {
  // Junk fixed points like (2,0,0) appear once the zero profile is
  // unconstrained, and with low public-good returns they beat the
  // coordinated top for the free riders.
  const InvestmentGame pg = InvestmentGame::public_good(3, 2, Rat(2, 5));
  const StrategicGame& game = pg.game();
  std::vector<ReactionFunction> reactions;
  for (int i = 0; i < 3; ++i) {
    ReactionFunction r{i, std::vector<int>(game.num_others(i))};
    for (std::size_t o = 0; o < game.num_others(i); ++o) {
      const std::vector<int> others = game.others_actions(i, o);
      const int lo = *std::min_element(others.begin(), others.end());
      const int hi = *std::max_element(others.begin(), others.end());
      if (lo == hi) {
        r.table[o] = (lo == 0 && i == 0) ? 2 : lo;  // junk slot for player 1
      } else {
        r.table[o] = lo;
      }
    }
    CHECK(cc_predicate(game, i, r, /*include_zero=*/false));
    reactions.push_back(std::move(r));
  }
  const Profile profile(game, std::move(reactions));
  const FixedPointReport report = fixed_point_report(game, profile);
  const std::size_t junk = game.outcome_index(std::vector<int>{2, 0, 0});
  CHECK(std::find(report.fixed_points.begin(), report.fixed_points.end(),
                  junk) != report.fixed_points.end());
  CHECK(!report.unambiguous);
}

TEST_CASE("the minimum-matching reaction is the unique consistent collaborator") {
  // Weakest-link: within monotone reactions, payoff consistency plus
  // conditional collaboration leaves only the best reply.
  for (const InvestmentGame& wl : {InvestmentGame::weakest_link(3, 2, Rat(3, 2)),
                                   InvestmentGame::weakest_link(2, 3, Rat(11, 10))}) {
    ClassifyOptions strict;
    strict.cc_includes_zero = true;
    const ReactionFunction br = br_reaction(wl, 0);
    std::vector<ReactionFunction> found;
    for (const ReactionFunction& r :
         enumerate_monotone_reactions(wl.game(), 0)) {
      const ReactionClassReport report = classify_reaction(wl, 0, r, strict);
      if (report.payoff_consistent.ok && report.conditional_collaboration.ok) {
        found.push_back(r);
      }
      // Payoff consistency ties the off-minimum slots to the anchored
      // diagonals here, so the norm-proof route gives the same answer.
      CHECK((report.payoff_consistent.ok && report.norm_proof.ok) ==
            (r.table == br.table));
    }
    REQUIRE(found.size() == 1);
    CHECK(found.front().table == br.table);
  }
}

TEST_CASE("the rounded average is the unique consistent collaborator") {
  for (const InvestmentGame& pg : {InvestmentGame::public_good(3, 2, Rat(2, 5)),
                                   InvestmentGame::public_good(2, 3, Rat(3, 5))}) {
    ClassifyOptions strict;
    strict.cc_includes_zero = true;
    const ReactionFunction rstar = rstar_reaction(pg, 0);
    std::vector<ReactionFunction> found;
    for (const ReactionFunction& r :
         enumerate_monotone_reactions(pg.game(), 0)) {
      const ReactionClassReport report = classify_reaction(pg, 0, r, strict);
      if (report.payoff_consistent.ok && report.conditional_collaboration.ok) {
        found.push_back(r);
      }
    }
    REQUIRE(found.size() == 1);
    CHECK(found.front().table == rstar.table);
  }
}

TEST_CASE("norm proofness with consistency narrows to anchored sum rules") {
  // The norm-proof route keeps the off-diagonal sums free between the
  // anchored diagonals, so with three players it admits the rounded
  // average alongside its boundary variants; the collaboration route above
  // is what pins the rounded average uniquely.
  const InvestmentGame pg = InvestmentGame::public_good(3, 2, Rat(2, 5));
  std::vector<std::vector<int>> found;  // reactions as sum tables
  for (const ReactionFunction& r :
       enumerate_monotone_reactions(pg.game(), 0)) {
    const ReactionClassReport report = classify_reaction(pg, 0, r);
    if (report.payoff_consistent.ok && report.norm_proof.ok) {
      std::vector<int> by_sum(5);
      for (int total = 0; total <= 4; ++total) {
        const std::vector<int> others{std::min(total, 2),
                                      total - std::min(total, 2)};
        by_sum[total] = r.table[pg.game().others_index_of(0, others)];
      }
      found.push_back(std::move(by_sum));
    }
  }
  // Anchored: f(0)=0, f(2)=1, f(4)=2; free: f(1) in {0,1}, f(3) in {1,2}.
  const std::vector<std::vector<int>> expected{
      {0, 0, 1, 1, 2}, {0, 0, 1, 2, 2}, {0, 1, 1, 1, 2}, {0, 1, 1, 2, 2}};
  std::sort(found.begin(), found.end());
  CHECK(found == expected);
}

TEST_CASE("dominance against monotone opponents in high-risk weakest-link") {
  const InvestmentGame wl = InvestmentGame::weakest_link(2, 3, Rat(11, 10));
  REQUIRE(wl.is_high_risk());
  CHECK(is_weakly_dominant_vs_monotone(wl, 0, br_reaction(wl, 0)).dominant);

  const DominanceResult max_out =
      is_weakly_dominant_vs_monotone(wl, 0, constant_reaction(wl.game(), 0, 3));
  CHECK(!max_out.dominant);
  REQUIRE(max_out.witness.has_value());
  // Verify the witness by direct evaluation.
  std::vector<ReactionFunction> reactions = max_out.witness->others;
  reactions.push_back(constant_reaction(wl.game(), 0, 3));
  const Profile at_witness(wl.game(), std::move(reactions));
  CHECK(constant_deviation_value(wl.game(), at_witness, 0,
                                 max_out.witness->deviation_action) >
        profile_value(wl.game(), at_witness, 0));
}

TEST_CASE("only the best reply dominates monotone play") {
  const InvestmentGame wl = InvestmentGame::weakest_link(2, 2, Rat(5, 4));
  REQUIRE(wl.is_high_risk());
  const ReactionFunction br = br_reaction(wl, 0);
  for (const ReactionFunction& r : all_reactions(wl.game(), 0)) {
    CHECK(is_weakly_dominant_vs_monotone(wl, 0, r).dominant ==
          (r.table == br.table));
  }
}

TEST_CASE("no reaction dominates unrestricted play") {
  // Two opposing opponents: always-max, and the spiteful trigger that
  // rewards only near-max investment.
  const InvestmentGame wl = InvestmentGame::weakest_link(2, 3, Rat(11, 10));
  const StrategicGame& game = wl.game();
  const int levels = wl.max_level();
  const ReactionFunction always_max = constant_reaction(game, 1, levels);
  ReactionFunction trigger{1, std::vector<int>(game.num_others(1), 0)};
  trigger.table[levels - 1] = levels;

  auto value_against = [&](const ReactionFunction& own,
                           const ReactionFunction& opponent) {
    return profile_value(game, Profile(game, {own, opponent}), 0);
  };
  auto best_against = [&](const ReactionFunction& opponent) {
    ProfileValue best;
    for (int c = 0; c <= levels; ++c) {
      best = std::max(best,
                      value_against(constant_reaction(game, 0, c), opponent));
    }
    return best;
  };
  const ProfileValue best_vs_max = best_against(always_max);
  const ProfileValue best_vs_trigger = best_against(trigger);
  for (const ReactionFunction& r : all_reactions(game, 0)) {
    const bool optimal_everywhere =
        value_against(r, always_max) >= best_vs_max &&
        value_against(r, trigger) >= best_vs_trigger;
    CHECK(!optimal_everywhere);
  }
}

TEST_CASE("safe weakest-link reactions never exceed the minimum") {
  for (const InvestmentGame& wl :
       {InvestmentGame::weakest_link(2, 3, Rat(11, 10)),
        InvestmentGame::weakest_link(3, 2, Rat(5, 4))}) {
    REQUIRE(wl.is_high_risk());
    const StrategicGame& game = wl.game();
    for (const ReactionFunction& r : all_reactions(game, 0)) {
      bool below_min = true;
      for (std::size_t o = 0; o < game.num_others(0); ++o) {
        const std::vector<int> others = game.others_actions(0, o);
        if (r.table[o] > *std::min_element(others.begin(), others.end())) {
          below_min = false;
          break;
        }
      }
      CHECK(is_safe_reaction(game, 0, r).safe == below_min);
    }
  }
}

TEST_CASE("shared monotone norms only fix coordinated outcomes") {
  const InvestmentGame pg = InvestmentGame::public_good(3, 2, Rat(2, 5));
  const MultisetSpace space(3, 2);
  for (const SymmetricReaction& norm : enumerate_symmetric_monotone(space)) {
    const Profile profile = shared_profile(pg, norm, space);
    for (std::size_t a : fixed_point_report(pg.game(), profile).fixed_points) {
      const std::vector<int> actions = pg.game().outcome_actions(a);
      CHECK(std::equal(actions.begin() + 1, actions.end(), actions.begin()));
    }
  }
}

TEST_CASE("welfare-maximizing safe reactions") {
  const InvestmentGame pg = InvestmentGame::public_good(3, 4, Rat(7, 20));
  REQUIRE(pg.is_high_risk());
  CHECK(welfare_safe_reaction(pg, 0).table == rstar_reaction(pg, 0).table);
  CHECK(is_welfare_max_conditional_safe(pg, 0, rstar_reaction(pg, 0)));

  const InvestmentGame wl = InvestmentGame::weakest_link(3, 3, Rat(6, 5));
  CHECK(welfare_safe_reaction(wl, 0).table == br_reaction(wl, 0).table);

  // Against all-zero others, investing anything is unsafe.
  const std::size_t zeros =
      pg.game().others_index_of(0, std::vector<int>{0, 0});
  CHECK(welfare_safe_reaction(pg, 0).table[zeros] == 0);
}

TEST_CASE("dominance conditions across game families") {
  const InvestmentGame high_risk = InvestmentGame::weakest_link(2, 3, Rat(11, 10));
  CHECK(general_dominance_conditions(high_risk, 0) ==
        std::array<bool, 3>{true, true, true});

  const InvestmentGame easy = InvestmentGame::weakest_link(3, 6, Rat(2));
  CHECK(general_dominance_conditions(easy, 0) ==
        std::array<bool, 3>{true, true, false});

  const InvestmentGame pg = InvestmentGame::public_good(3, 2, Rat(2, 5));
  CHECK(general_dominance_conditions(pg, 0) ==
        std::array<bool, 3>{true, true, false});
}

TEST_CASE("payoff equivalence keys by the minimum and the sum") {
  // The slice-based consistency check must coincide with the closed-form
  // equivalence classes of the named kinds.
  std::mt19937_64 rng(151);
  const InvestmentGame wl = InvestmentGame::weakest_link(3, 3, Rat(7, 5));
  const InvestmentGame pg = InvestmentGame::public_good(3, 3, Rat(2, 5));
  for (int trial = 0; trial < 150; ++trial) {
    for (const InvestmentGame* inv : {&wl, &pg}) {
      const StrategicGame& game = inv->game();
      const ReactionFunction r = random_reaction(rng, game, 0);
      auto key = [&](std::size_t o) {
        const std::vector<int> others = game.others_actions(0, o);
        return inv->kind() == InvestKind::weakest_link
                   ? *std::min_element(others.begin(), others.end())
                   : std::accumulate(others.begin(), others.end(), 0);
      };
      bool consistent = true;
      for (std::size_t a = 0; a < game.num_others(0) && consistent; ++a) {
        for (std::size_t b = a + 1; b < game.num_others(0); ++b) {
          if (key(a) == key(b) && r.table[a] != r.table[b]) {
            consistent = false;
            break;
          }
        }
      }
      CHECK(classify_reaction(*inv, 0, r).payoff_consistent.ok == consistent);
    }
  }
}

TEST_CASE("custom common values classify and play consistently") {
  // v = 2 * max: symmetric, non-decreasing, diagonal-increasing. Payoff
  // equivalence degenerates to equal maxima.
  const auto two_max = [](std::span<const int> a) {
    return Rat(2 * *std::max_element(a.begin(), a.end()));
  };
  const InvestmentGame inv = InvestmentGame::custom(3, 2, two_max);
  const StrategicGame& game = inv.game();
  CHECK(inv.value(std::vector<int>{0, 2, 1}) == Rat(4));
  CHECK(game.payoff(0, game.outcome_index(std::vector<int>{1, 2, 0})) ==
        Rat(3));

  // Equal-max others-profiles force equal reactions under consistency.
  ReactionFunction split{0, std::vector<int>(game.num_others(0), 0)};
  split.table[game.others_index_of(0, std::vector<int>{1, 2})] = 1;
  split.table[game.others_index_of(0, std::vector<int>{2, 2})] = 0;
  const ReactionClassReport report = classify_reaction(inv, 0, split);
  CHECK(!report.payoff_consistent.ok);

  // The welfare-safe reaction stays admissible everywhere.
  const Rat floor = maxmin(game, 0).value;
  const ReactionFunction ws = welfare_safe_reaction(inv, 0);
  for (std::size_t o = 0; o < game.num_others(0); ++o) {
    CHECK(game.payoff(0, game.outcome_with(0, ws.table[o], o)) >= floor);
  }

  // High risk is a named-kind notion.
  CHECK_THROWS_AS(inv.is_high_risk(), Error);
  CHECK_THROWS_AS(rstar_reaction(inv, 0), Error);
}

TEST_CASE("classification witnesses falsify their predicates") {
  std::mt19937_64 rng(61);
  const InvestmentGame pg = InvestmentGame::public_good(3, 2, Rat(2, 5));
  const StrategicGame& game = pg.game();
  const MultisetSpace space(3, 2);
  for (int trial = 0; trial < 120; ++trial) {
    const ReactionFunction r = random_reaction(rng, game, 0);
    const ReactionClassReport report = classify_reaction(pg, 0, r);
    if (!report.monotone.ok) {
      const std::size_t a = game.others_index_of(0, report.monotone.witness_a);
      const std::size_t b = game.others_index_of(0, report.monotone.witness_b);
      CHECK(r.table[a] > r.table[b]);
    }
    if (!report.symmetric.ok) {
      const std::size_t a = game.others_index_of(0, report.symmetric.witness_a);
      const std::size_t b = game.others_index_of(0, report.symmetric.witness_b);
      CHECK(space.rank_of(report.symmetric.witness_a) ==
            space.rank_of(report.symmetric.witness_b));
      CHECK(r.table[a] != r.table[b]);
    }
    if (!report.payoff_consistent.ok) {
      const std::size_t a =
          game.others_index_of(0, report.payoff_consistent.witness_a);
      const std::size_t b =
          game.others_index_of(0, report.payoff_consistent.witness_b);
      for (int c = 0; c <= pg.max_level(); ++c) {
        CHECK(game.payoff(0, game.outcome_with(0, c, a)) ==
              game.payoff(0, game.outcome_with(0, c, b)));
      }
      CHECK(r.table[a] != r.table[b]);
    }
    if (!report.safe.ok) {
      const std::size_t o = game.others_index_of(0, report.safe.witness_a);
      CHECK(game.payoff(0, game.outcome_with(0, r.table[o], o)) <
            maxmin(game, 0).value);
    }
    if (!report.norm_proof.ok) {
      const SymmetricReaction norm{report.norm_proof.witness_norm};
      const Profile conforming = shared_profile(pg, norm, space);
      std::vector<ReactionFunction> mixed{r, conforming.of(1),
                                          conforming.of(2)};
      CHECK(profile_value(game, Profile(game, std::move(mixed)), 0) <
            profile_value(game, conforming, 0));
    }
  }
}
