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

#include <benchmark/benchmark.h>

#include <random>

#include "rfg/construct.hpp"
#include "rfg/evolution.hpp"
#include "rfg/investment.hpp"
#include "rfg/reaction.hpp"

namespace {

rfg::StrategicGame random_game(std::mt19937_64& rng,
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
  std::vector<rfg::Rat> payoffs;
  for (std::size_t k = 0; k < outcomes * shape.size(); ++k) {
    payoffs.emplace_back(static_cast<int>(rng() % 11));
  }
  return rfg::StrategicGame(players, actions, payoffs);
}

rfg::Profile random_profile(std::mt19937_64& rng,
                            const rfg::StrategicGame& game) {
  std::vector<rfg::ReactionFunction> reactions;
  for (int i = 0; i < game.num_players(); ++i) {
    rfg::ReactionFunction r{i, std::vector<int>(game.num_others(i))};
    for (auto& v : r.table) v = static_cast<int>(rng() % game.num_actions(i));
    reactions.push_back(std::move(r));
  }
  return rfg::Profile(game, std::move(reactions));
}

void BM_FixedPointReport(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const rfg::StrategicGame game = random_game(rng, {3, 3, 3});
  const rfg::Profile profile = random_profile(rng, game);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rfg::fixed_point_report(game, profile));
  }
}
BENCHMARK(BM_FixedPointReport);

void BM_IsRfe(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const rfg::StrategicGame game = random_game(rng, {3, 3});
  const rfg::Profile profile = random_profile(rng, game);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rfg::is_rfe(game, profile));
  }
}
BENCHMARK(BM_IsRfe);

void BM_BruteForceSupport(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const rfg::StrategicGame game = random_game(rng, {3, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(rfg::brute_force_supported_set(game));
  }
}
BENCHMARK(BM_BruteForceSupport);

void BM_DominanceCheck(benchmark::State& state) {
  const rfg::InvestmentGame wl =
      rfg::InvestmentGame::weakest_link(2, 3, rfg::Rat(11, 10));
  const rfg::ReactionFunction br = rfg::br_reaction(wl, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rfg::is_weakly_dominant_vs_monotone(wl, 0, br));
  }
}
BENCHMARK(BM_DominanceCheck);

void BM_EvolutionBatch(benchmark::State& state) {
  rfg::EvolutionConfig config;
  config.runs = 1;
  config.batches = 1;
  config.games_per_batch = static_cast<int>(state.range(0));
  config.pool_size = 100;
  config.n = 4;
  config.levels = 20;
  config.lambda = rfg::Rat(2, 5);
  config.seed = 4;
  rfg::PoolState pool;
  pool.members.assign(
      config.pool_size,
      rfg::PoolMember{
          rfg::CompactReaction{std::vector<int>(61, 0)}, 0, 0});
  std::mt19937_64 rng(config.seed);
  for (auto _ : state) {
    rfg::run_batch(pool, config, rng);
  }
  state.SetItemsProcessed(state.iterations() * config.games_per_batch);
}
BENCHMARK(BM_EvolutionBatch)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
