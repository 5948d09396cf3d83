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

#ifndef RFG_COORDINATOR_HPP_
#define RFG_COORDINATOR_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rfg/error.hpp"

namespace rfg {

using Digest = std::array<std::uint8_t, 32>;
using Salt = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::uint8_t> data);
std::string to_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> from_hex(std::string_view hex);

// Deterministic in-process simulation of the coordinating contract.
//
// Lifecycle: every player commits a digest of their reaction, then reveals
// the reaction with a deposit covering their maximum investment, then the
// coordinator iterates the revealed reactions downward from the deposit
// profile until it finds a fixed point (a cycle settles as all-zero), and
// finally investments are withdrawn and surpluses refunded. Deadlines in the
// two collection phases refund everything so funds cannot get stuck.
class Coordinator {
 public:
  enum class Phase { commit, connect, search, settled, refunded };

  struct Connection {
    std::vector<int> reaction;  // row-major others table over levels 0..H
    int max_investment = 0;
    std::int64_t deposit = 0;
  };

  struct LedgerEntry {
    std::int64_t invested = 0;
    std::int64_t refunded = 0;
  };

  Coordinator(std::vector<std::string> roster, int max_level,
              std::int64_t deadline);

  // Records a commitment; advances to the reveal phase once all are in.
  void commit(std::string_view player, const Digest& digest);

  // Verifies digest(serialized reaction || salt) against the commitment and
  // that the deposit covers the declared maximum investment.
  void connect(std::string_view player, std::vector<int> reaction,
               const Salt& salt, int max_investment, std::int64_t deposit);

  // Iterates a^{k+1} = clamp(R(a^k)) from the maximum-investment profile,
  // recording every visited profile. Stops at a fixed point, or on a cycle
  // with the all-zero fallback result.
  void run_search();

  // Withdraws the result investments and refunds deposit surpluses.
  void settle();

  // Advances the logical clock; past the deadline while still collecting,
  // refunds every deposit in full.
  void tick();

  Phase phase() const { return phase_; }
  std::int64_t clock() const { return clock_; }
  std::int64_t deadline() const { return deadline_; }
  int max_level() const { return max_level_; }
  const std::vector<std::string>& roster() const { return roster_; }
  bool cycle_detected() const { return cycle_detected_; }
  const std::vector<std::vector<int>>& trace() const { return trace_; }
  const std::optional<std::vector<int>>& result() const { return result_; }
  const std::vector<LedgerEntry>& ledger() const { return ledger_; }
  const std::optional<Connection>& connection(int player) const {
    return connections_[player];
  }

  int player_index(std::string_view player) const;

  // Commitment preimage digest for a reaction table.
  static Digest reaction_digest(std::string_view owner, int max_level,
                                std::span<const int> reaction,
                                const Salt& salt);

  // Canonical text rendering of the full state.
  std::string dump() const;

  // "step,a_1,..,a_n" CSV of the search trace. LF line endings.
  std::string trace_csv() const;

  static std::string phase_name(Phase phase);

 private:
  std::size_t others_table_size() const;
  std::size_t others_rank(int player, std::span<const int> levels) const;
  void refund_all();

  std::vector<std::string> roster_;
  int max_level_;
  std::int64_t deadline_;
  std::int64_t clock_ = 0;
  Phase phase_ = Phase::commit;
  std::vector<std::optional<Digest>> commitments_;
  std::vector<std::optional<Connection>> connections_;
  std::vector<std::vector<int>> trace_;
  std::optional<std::vector<int>> result_;
  bool cycle_detected_ = false;
  std::vector<LedgerEntry> ledger_;
};

}  // namespace rfg

#endif  // RFG_COORDINATOR_HPP_
