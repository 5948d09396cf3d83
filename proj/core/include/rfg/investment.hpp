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

#ifndef RFG_INVESTMENT_HPP_
#define RFG_INVESTMENT_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rfg/game.hpp"
#include "rfg/reaction.hpp"

namespace rfg {

enum class InvestKind { weakest_link, public_good, custom };

// Symmetric n-player investment game with integer investment levels 0..H and
// payoffs u_i(a) = v(a) - a_i for a symmetric, coordinate-wise non-decreasing
// common value v whose diagonal v(x,..,x) - x is strictly increasing.
//   weakest-link: v = lambda * min_j a_j,  lambda > 1
//   public-good:  v = lambda * sum_j a_j,  1/n < lambda < 1
class InvestmentGame {
 public:
  using ValueFn = std::function<Rat(std::span<const int>)>;

  static InvestmentGame weakest_link(int n, int levels, const Rat& lambda);
  static InvestmentGame public_good(int n, int levels, const Rat& lambda);
  static InvestmentGame custom(int n, int levels, ValueFn value);

  const StrategicGame& game() const { return game_; }
  InvestKind kind() const { return kind_; }
  int num_players() const { return n_; }
  int max_level() const { return levels_; }  // H
  const Rat& lambda() const { return lambda_; }

  Rat value(std::span<const int> outcome) const;  // v(a)

  // Coordination gains too small relative to overinvestment risk:
  //   weakest-link: lambda < H/(H-1); public-good: lambda < H/(nH-1).
  bool is_high_risk() const;

 private:
  InvestmentGame(InvestKind kind, int n, int levels, Rat lambda,
                 StrategicGame game);

  InvestKind kind_;
  int n_;
  int levels_;
  Rat lambda_;
  StrategicGame game_;
  ValueFn value_;  // custom kind only
};

// A predicate result with an optional falsifying witness. The witness
// vectors hold others-profile action values; meaning depends on the flag.
struct ClassFlag {
  bool ok = true;
  std::vector<int> witness_a;
  std::vector<int> witness_b;
};

struct NormProofFlag {
  bool ok = true;
  // Violating shared norm, as values over sorted others-multisets.
  std::vector<int> witness_norm;
};

struct ReactionClassReport {
  ClassFlag monotone;
  ClassFlag symmetric;
  ClassFlag payoff_consistent;
  ClassFlag conditional_collaboration;
  ClassFlag safe;
  NormProofFlag norm_proof;
};

struct ClassifyOptions {
  // The conditional-collaboration definition pins reactions on positive
  // coordinated profiles only; with this set, coordination at zero is
  // required as well.
  bool cc_includes_zero = false;
  std::size_t norm_budget = 1'000'000;
};

ReactionClassReport classify_reaction(const InvestmentGame& inv, int player,
                                      const ReactionFunction& r,
                                      const ClassifyOptions& options = {});

// Best reply with lowest-action tie-break: matches the minimum investment in
// weakest-link games; constantly zero in public-good games.
ReactionFunction br_reaction(const InvestmentGame& inv, int player);

// Public-good only: invest the average of the others, rounded down.
ReactionFunction rstar_reaction(const InvestmentGame& inv, int player);

struct DominanceWitness {
  std::vector<ReactionFunction> others;  // monotone opponents, by player
  int deviation_action = -1;             // improving constant deviation
};

struct DominanceResult {
  bool dominant = true;
  std::optional<DominanceWitness> witness;
};

// True when no reaction change improves on `r` against any profile of
// monotone opponents. Constant deviations are falsification-exact. The
// opponent enumeration must fit the budget.
DominanceResult is_weakly_dominant_vs_monotone(const InvestmentGame& inv,
                                               int player,
                                               const ReactionFunction& r,
                                               const SearchBudget& budget = {});

// For each others-profile, the largest own investment that keeps the player
// at or above the maxmin payoff while maximizing total payoff.
ReactionFunction welfare_safe_reaction(const InvestmentGame& inv, int player);

bool is_welfare_max_conditional_safe(const InvestmentGame& inv, int player,
                                     const ReactionFunction& r);

// Sufficient conditions for the best reply to dominate monotone play:
// (a) u_i non-decreasing in others' actions, (b) best reply monotone,
// (c) overshooting the best reply never beats coordinating at zero.
std::array<bool, 3> general_dominance_conditions(const InvestmentGame& inv,
                                                 int player);

// --- symmetric reactions on sorted multisets --------------------------------

// Shared domain for symmetric reactions: sorted (n-1)-tuples over 0..H in
// lexicographic order.
class MultisetSpace {
 public:
  MultisetSpace(int n, int levels);

  int n() const { return n_; }
  int max_level() const { return levels_; }
  std::size_t size() const { return reps_.size(); }
  const std::vector<int>& rep(std::size_t rank) const { return reps_[rank]; }
  std::size_t rank_of(std::span<const int> others) const;  // sorts its input

 private:
  int n_;
  int levels_;
  std::vector<std::vector<int>> reps_;
};

// A symmetric reaction stored compactly on multiset representatives.
struct SymmetricReaction {
  std::vector<int> values;  // by multiset rank

  ReactionFunction expand(const InvestmentGame& inv, int owner,
                          const MultisetSpace& space) const;
};

// All monotone symmetric reactions -- the candidate norms.
std::vector<SymmetricReaction> enumerate_symmetric_monotone(
    const MultisetSpace& space, std::size_t budget = 1'000'000);

// All monotone reaction tables of one player (dense domain).
std::vector<ReactionFunction> enumerate_monotone_reactions(
    const StrategicGame& game, int player, std::size_t budget = 1'000'000);

}  // namespace rfg

#endif  // RFG_INVESTMENT_HPP_
