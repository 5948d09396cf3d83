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

#ifndef RFG_EVOLUTION_HPP_
#define RFG_EVOLUTION_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "rfg/rational.hpp"

namespace rfg {

// Monotone reaction keyed by the others' total investment alpha in
// 0..(n-1)*H. This compact form is the payoff-consistent representation for
// public-good play: only the others' sum matters.
struct CompactReaction {
  std::vector<int> values;  // non-decreasing, each within 0..H

  friend bool operator==(const CompactReaction&,
                         const CompactReaction&) = default;
};

bool is_valid_compact(const CompactReaction& r, int n, int levels);

// Selection study configuration. Payoffs are the endowment form
//   u_i(a) = H - a_i + lambda * sum_j a_j
// computed exactly with lambda = p/q (payoffs scaled by q internally).
//
// Replacement and mutation decay exponentially: after batch t the
// ceil(k0 * rho^t) worst performers are replaced by copies of random
// top-decile members mutated with intensity i0 * sigma^t. When rho or sigma
// is zero it is derived so the schedule reaches its floor at 80% of the
// batches (k ~ 1, intensity ~ i0/k0).
struct EvolutionConfig {
  int runs = 1;
  int batches = 0;
  int games_per_batch = 0;
  int pool_size = 2;
  int n = 4;
  int levels = 20;  // H
  Rat lambda = Rat(2) / 5;
  double k0 = 50.0;
  double i0 = 0.5;
  double rho = 0.0;    // 0 = derive from batches
  double sigma = 0.0;  // 0 = derive from batches
  std::uint64_t seed = 0;

  void validate() const;  // parameter_out_of_range on violation
  double rho_or_default() const;
  double sigma_or_default() const;
};

struct PoolMember {
  CompactReaction reaction;
  // Most recent batch average, as an exact fraction of scaled payoff units.
  std::int64_t payoff_sum = 0;  // scaled by the lambda denominator
  std::int64_t plays = 0;       // 0 together with sum 0 means "average 0"
};

struct PoolState {
  std::vector<PoolMember> members;
};

struct GameResult {
  std::vector<int> outcome;                // greatest fixed point
  std::vector<std::int64_t> scaled_payoffs;  // u_i * denominator(lambda)
};

// Plays one game among `reactions` (size n): finds the greatest fixed point
// by downward iteration from (H,..,H) and returns exact scaled payoffs.
GameResult play_game(std::span<const CompactReaction* const> reactions, int n,
                     int levels, const Rat& lambda);

std::vector<Rat> unscaled_payoffs(const GameResult& result, const Rat& lambda);

// Uniform draw below `bound` without modulo bias; byte-for-byte
// deterministic for a given engine state.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound);

// Independently per alpha: with probability `intensity` adds +/-1, then
// restores monotonicity with a running-max or running-min sweep (direction
// chosen by coin flip, keeping the noise centered) and clamps to 0..H.
CompactReaction mutate(const CompactReaction& r, double intensity, int levels,
                       std::mt19937_64& rng);

// Plays games_per_batch games with members drawn uniformly with replacement;
// members sampled in the batch get their batch average recorded, others keep
// their previous one.
void run_batch(PoolState& pool, const EvolutionConfig& config,
               std::mt19937_64& rng);

struct EvolveResult {
  std::vector<PoolState> pools;  // one final pool per run
};

// Per-run streams are derived from (seed, run); results are independent of
// scheduling and identical for identical seeds.
EvolveResult evolve(const EvolutionConfig& config);

struct SummaryRow {
  int alpha = 0;
  Rat match_average;  // alpha / (n-1)
  int rstar = 0;      // floor(alpha / (n-1))
  Rat mean;           // across all final reactions
  int median = 0;     // lower median
};

std::vector<SummaryRow> summarize(std::span<const PoolState> pools, int n,
                                  int levels);

// "alpha,match_average,rstar,mean,median" with LF endings and fixed-point
// decimals at `precision` digits.
std::string summary_csv(std::span<const SummaryRow> rows, int precision = 6);

}  // namespace rfg

#endif  // RFG_EVOLUTION_HPP_
