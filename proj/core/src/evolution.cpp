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

#include "rfg/evolution.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include "rfg/error.hpp"

namespace rfg {

bool is_valid_compact(const CompactReaction& r, int n, int levels) {
  if (r.values.size() != static_cast<std::size_t>((n - 1) * levels + 1)) {
    return false;
  }
  int previous = 0;
  for (int v : r.values) {
    if (v < previous || v < 0 || v > levels) return false;
    previous = v;
  }
  return true;
}

void EvolutionConfig::validate() const {
  if (runs < 1) fail(Errc::parameter_out_of_range, "runs must be positive");
  if (batches < 0 || games_per_batch < 0) {
    fail(Errc::parameter_out_of_range, "batches and games must be >= 0");
  }
  if (n < 2) fail(Errc::parameter_out_of_range, "need at least two players");
  if (levels < 1) {
    fail(Errc::parameter_out_of_range, "maximum investment must be positive");
  }
  if (pool_size < n) {
    fail(Errc::parameter_out_of_range, "pool must hold at least n members");
  }
  if (lambda * n <= 1 || lambda >= 1) {
    fail(Errc::parameter_out_of_range, "lambda must satisfy 1/n < lambda < 1");
  }
  if (k0 < 0 || i0 < 0 || i0 > 1) {
    fail(Errc::parameter_out_of_range, "k0 must be >= 0 and i0 within [0,1]");
  }
  if (rho < 0 || rho > 1 || sigma < 0 || sigma > 1) {
    fail(Errc::parameter_out_of_range, "decay factors must lie in [0,1]");
  }
}

namespace {

// Decay reaching 1/k0 of the initial level at 80% of the batches.
double derived_decay(double k0, int batches) {
  if (k0 <= 1.0 || batches <= 0) return 1.0;
  return std::pow(1.0 / k0, 1.0 / (0.8 * batches));
}

}  // namespace

double EvolutionConfig::rho_or_default() const {
  return rho > 0 ? rho : derived_decay(k0, batches);
}

double EvolutionConfig::sigma_or_default() const {
  return sigma > 0 ? sigma : derived_decay(k0, batches);
}

GameResult play_game(std::span<const CompactReaction* const> reactions, int n,
                     int levels, const Rat& lambda) {
  const std::int64_t p = static_cast<std::int64_t>(numerator(lambda));
  const std::int64_t q = static_cast<std::int64_t>(denominator(lambda));

  // Downward iteration from full investment: with monotone reactions the
  // sequence decreases coordinatewise, so the first repeat is the greatest
  // fixed point.
  std::vector<int> current(n, levels);
  int total = n * levels;
  for (int step = 0;; ++step) {
    if (step > n * levels + 1) {
      fail(Errc::parameter_out_of_range, "reactions are not monotone");
    }
    bool fixed = true;
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) {
      next[i] = reactions[i]->values[total - current[i]];
      if (next[i] != current[i]) fixed = false;
    }
    if (fixed) break;
    current = std::move(next);
    total = std::accumulate(current.begin(), current.end(), 0);
  }

  GameResult result;
  result.scaled_payoffs.resize(n);
  for (int i = 0; i < n; ++i) {
    result.scaled_payoffs[i] = q * (levels - current[i]) + p * total;
  }
  result.outcome = std::move(current);
  return result;
}

std::vector<Rat> unscaled_payoffs(const GameResult& result, const Rat& lambda) {
  std::vector<Rat> out;
  out.reserve(result.scaled_payoffs.size());
  for (std::int64_t scaled : result.scaled_payoffs) {
    out.push_back(Rat(scaled) / Rat(denominator(lambda)));
  }
  return out;
}

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased and the stream deterministic.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

CompactReaction mutate(const CompactReaction& r, double intensity, int levels,
                       std::mt19937_64& rng) {
  const double clamped = std::clamp(intensity, 0.0, 1.0);
  const std::uint64_t threshold = static_cast<std::uint64_t>(
      std::min(clamped, std::nextafter(1.0, 0.0)) *
      18446744073709551616.0);  // 2^64
  CompactReaction out = r;
  bool dirty = false;
  for (int& v : out.values) {
    const bool perturb =
        clamped >= 1.0 || (clamped > 0.0 && rng() < threshold);
    if (perturb) {
      v += (rng() & 1) ? 1 : -1;
      dirty = true;
    }
  }
  // Monotone repair. A one-directional pass is biased: a running max
  // erases -1 steps and smears +1 steps across flat stretches, which
  // ratchets unselected slots upward over many generations. Flipping a
  // coin between the two sweep directions keeps the noise centered.
  if (dirty) {
    if (rng() & 1) {
      int running = 0;
      for (int& v : out.values) {
        running = std::max(running, v);
        v = std::clamp(running, 0, levels);
      }
    } else {
      int running = levels;
      for (auto it = out.values.rbegin(); it != out.values.rend(); ++it) {
        running = std::min(running, *it);
        *it = std::clamp(running, 0, levels);
      }
    }
  }
  return out;
}

void run_batch(PoolState& pool, const EvolutionConfig& config,
               std::mt19937_64& rng) {
  const int n = config.n;
  std::vector<std::int64_t> sums(pool.members.size(), 0);
  std::vector<std::int64_t> plays(pool.members.size(), 0);
  std::vector<int> picks(n);
  std::vector<const CompactReaction*> seats(n);
  for (int g = 0; g < config.games_per_batch; ++g) {
    for (int s = 0; s < n; ++s) {
      picks[s] = static_cast<int>(rand_below(rng, pool.members.size()));
      seats[s] = &pool.members[picks[s]].reaction;
    }
    const GameResult result =
        play_game(seats, n, config.levels, config.lambda);
    for (int s = 0; s < n; ++s) {
      sums[picks[s]] += result.scaled_payoffs[s];
      ++plays[picks[s]];
    }
  }
  for (std::size_t i = 0; i < pool.members.size(); ++i) {
    if (plays[i] > 0) {
      pool.members[i].payoff_sum = sums[i];
      pool.members[i].plays = plays[i];
    }
  }
}

namespace {

// avg(a) > avg(b), treating 0 plays as average zero.
bool average_greater(const PoolMember& a, const PoolMember& b) {
  const __int128 lhs = static_cast<__int128>(a.payoff_sum) *
                       std::max<std::int64_t>(b.plays, 1);
  const __int128 rhs = static_cast<__int128>(b.payoff_sum) *
                       std::max<std::int64_t>(a.plays, 1);
  return lhs > rhs;
}

// splitmix64 finalizer; spreads (seed, run) into independent streams.
std::uint64_t mix_seed(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

PoolState run_one(const EvolutionConfig& config, int run) {
  std::mt19937_64 rng(mix_seed(
      config.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(run)));

  const int alpha_range = (config.n - 1) * config.levels + 1;
  PoolState pool;
  pool.members.assign(
      config.pool_size,
      PoolMember{CompactReaction{std::vector<int>(alpha_range, 0)}, 0, 0});

  const double rho = config.rho_or_default();
  const double sigma = config.sigma_or_default();
  const int decile = (config.pool_size + 9) / 10;

  std::vector<int> order(config.pool_size);
  for (int t = 0; t < config.batches; ++t) {
    run_batch(pool, config, rng);
    if (config.games_per_batch == 0) continue;

    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return average_greater(pool.members[a], pool.members[b]);
    });

    int replace = static_cast<int>(std::ceil(config.k0 * std::pow(rho, t)));
    replace = std::clamp(replace, 0, config.pool_size - decile);
    const double intensity = config.i0 * std::pow(sigma, t);

    // Worst first; sources drawn uniformly from the top decile.
    for (int k = 0; k < replace; ++k) {
      const int victim = order[config.pool_size - 1 - k];
      const int source = order[rand_below(rng, decile)];
      pool.members[victim] = PoolMember{
          mutate(pool.members[source].reaction, intensity, config.levels, rng),
          0, 0};
    }
  }
  return pool;
}

}  // namespace

EvolveResult evolve(const EvolutionConfig& config) {
  config.validate();
  EvolveResult result;
  result.pools.resize(config.runs);

  std::atomic<int> next_run{0};
  auto worker = [&] {
    while (true) {
      const int run = next_run.fetch_add(1);
      if (run >= config.runs) return;
      result.pools[run] = run_one(config, run);
    }
  };
  const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      std::min<unsigned>(hardware, static_cast<unsigned>(config.runs));
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker);
  for (auto& thread : threads) thread.join();
  return result;
}

std::vector<SummaryRow> summarize(std::span<const PoolState> pools, int n,
                                  int levels) {
  std::size_t total = 0;
  for (const PoolState& pool : pools) total += pool.members.size();
  if (total == 0) {
    fail(Errc::empty_pools, "no reactions to summarize");
  }
  const int alpha_range = (n - 1) * levels + 1;
  std::vector<SummaryRow> rows;
  rows.reserve(alpha_range);
  std::vector<int> column;
  column.reserve(total);
  for (int alpha = 0; alpha < alpha_range; ++alpha) {
    column.clear();
    long long sum = 0;
    for (const PoolState& pool : pools) {
      for (const PoolMember& member : pool.members) {
        const int v = member.reaction.values[alpha];
        column.push_back(v);
        sum += v;
      }
    }
    std::sort(column.begin(), column.end());
    SummaryRow row;
    row.alpha = alpha;
    row.match_average = Rat(alpha) / (n - 1);
    row.rstar = alpha / (n - 1);
    row.mean = Rat(sum) / static_cast<long long>(total);
    row.median = column[(column.size() - 1) / 2];  // lower median
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string summary_csv(std::span<const SummaryRow> rows, int precision) {
  std::ostringstream out;
  out << "alpha,match_average,rstar,mean,median\n";
  for (const SummaryRow& row : rows) {
    out << row.alpha << ',' << to_decimal_string(row.match_average, precision)
        << ',' << row.rstar << ',' << to_decimal_string(row.mean, precision)
        << ',' << row.median << '\n';
  }
  return out.str();
}

}  // namespace rfg
