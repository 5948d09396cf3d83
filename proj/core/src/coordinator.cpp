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

#include "rfg/coordinator.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <map>
#include <sstream>

#include "rfg/reaction.hpp"

namespace rfg {

Digest sha256(std::span<const std::uint8_t> data) {
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(),
                 nullptr) != 1 ||
      len != out.size()) {
    fail(Errc::parameter_out_of_range, "digest computation failed");
  }
  return out;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 0xf]);
  }
  return out;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
  auto nibble = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    fail(Errc::parse_error, "bad hex digit in '" + std::string(hex) + "'");
  };
  if (hex.size() % 2 != 0) {
    fail(Errc::parse_error, "hex string must have even length");
  }
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 |
                                       nibble(hex[2 * i + 1]));
  }
  return out;
}

Coordinator::Coordinator(std::vector<std::string> roster, int max_level,
                         std::int64_t deadline)
    : roster_(std::move(roster)), max_level_(max_level), deadline_(deadline) {
  if (roster_.size() < 2) {
    fail(Errc::parameter_out_of_range, "need at least two players");
  }
  if (max_level_ < 1) {
    fail(Errc::parameter_out_of_range, "maximum level must be positive");
  }
  if (deadline_ < 1) {
    fail(Errc::parameter_out_of_range, "deadline must be positive");
  }
  std::map<std::string_view, int> seen;
  for (std::size_t i = 0; i < roster_.size(); ++i) {
    if (roster_[i].empty() || !seen.emplace(roster_[i], i).second) {
      fail(Errc::parameter_out_of_range, "player ids must be distinct");
    }
  }
  commitments_.resize(roster_.size());
  connections_.resize(roster_.size());
  ledger_.resize(roster_.size());
}

int Coordinator::player_index(std::string_view player) const {
  for (std::size_t i = 0; i < roster_.size(); ++i) {
    if (roster_[i] == player) return static_cast<int>(i);
  }
  fail(Errc::unknown_player, std::string(player));
}

std::size_t Coordinator::others_table_size() const {
  std::size_t size = 1;
  for (std::size_t j = 1; j < roster_.size(); ++j) size *= max_level_ + 1;
  return size;
}

std::size_t Coordinator::others_rank(int player,
                                     std::span<const int> levels) const {
  std::size_t rank = 0;
  for (std::size_t j = 0; j < roster_.size(); ++j) {
    if (static_cast<int>(j) == player) continue;
    rank = rank * (max_level_ + 1) + levels[j];
  }
  return rank;
}

Digest Coordinator::reaction_digest(std::string_view owner, int max_level,
                                    std::span<const int> reaction,
                                    const Salt& salt) {
  std::vector<std::string> entries;
  entries.reserve(reaction.size());
  for (int level : reaction) {
    if (level < 0 || level > max_level) {
      fail(Errc::parameter_out_of_range, "reaction level out of range");
    }
    entries.push_back(std::to_string(level));
  }
  const std::string serialized = serialize_reaction_table(owner, entries);
  std::vector<std::uint8_t> preimage(serialized.begin(), serialized.end());
  preimage.insert(preimage.end(), salt.begin(), salt.end());
  return sha256(preimage);
}

void Coordinator::commit(std::string_view player, const Digest& digest) {
  if (phase_ != Phase::commit) {
    fail(Errc::wrong_phase, "commitments are closed");
  }
  const int i = player_index(player);
  if (commitments_[i]) {
    fail(Errc::duplicate_commit, std::string(player) + " already committed");
  }
  commitments_[i] = digest;
  if (std::all_of(commitments_.begin(), commitments_.end(),
                  [](const auto& c) { return c.has_value(); })) {
    phase_ = Phase::connect;
  }
}

void Coordinator::connect(std::string_view player, std::vector<int> reaction,
                          const Salt& salt, int max_investment,
                          std::int64_t deposit) {
  if (phase_ != Phase::connect) {
    fail(Errc::wrong_phase, "not collecting connections");
  }
  const int i = player_index(player);
  if (connections_[i]) {
    fail(Errc::duplicate_connection, std::string(player) + " already connected");
  }
  if (reaction.size() != others_table_size()) {
    fail(Errc::parameter_out_of_range,
         "reaction table must have " + std::to_string(others_table_size()) +
             " entries");
  }
  if (max_investment < 0 || max_investment > max_level_) {
    fail(Errc::parameter_out_of_range, "maximum investment out of range");
  }
  if (deposit < max_investment) {
    fail(Errc::insufficient_deposit,
         "deposit " + std::to_string(deposit) + " below maximum investment " +
             std::to_string(max_investment));
  }
  const Digest digest = reaction_digest(player, max_level_, reaction, salt);
  if (digest != *commitments_[i]) {
    fail(Errc::commitment_mismatch,
         "revealed reaction does not match " + std::string(player) +
             "'s commitment");
  }
  connections_[i] = Connection{std::move(reaction), max_investment, deposit};
  if (std::all_of(connections_.begin(), connections_.end(),
                  [](const auto& c) { return c.has_value(); })) {
    phase_ = Phase::search;
  }
}

void Coordinator::run_search() {
  if (phase_ != Phase::search || result_) {
    fail(Errc::wrong_phase, "search is not pending");
  }
  const int n = static_cast<int>(roster_.size());
  std::vector<int> current(n);
  for (int i = 0; i < n; ++i) current[i] = connections_[i]->max_investment;

  std::vector<std::vector<int>> visited;
  trace_.push_back(current);
  visited.push_back(current);
  while (true) {
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) {
      const int reaction = connections_[i]->reaction[others_rank(i, current)];
      // Deposits bound feasible play; the coordinator caps, not the player.
      next[i] = std::min(reaction, connections_[i]->max_investment);
    }
    if (next == current) {
      result_ = current;
      return;
    }
    if (std::find(visited.begin(), visited.end(), next) != visited.end()) {
      // Revisit means a cycle: settle as if nobody invests.
      cycle_detected_ = true;
      result_ = std::vector<int>(n, 0);
      return;
    }
    trace_.push_back(next);
    visited.push_back(next);
    current = std::move(next);
  }
}

void Coordinator::settle() {
  if (phase_ != Phase::search || !result_) {
    fail(Errc::wrong_phase, "no search result to settle");
  }
  for (std::size_t i = 0; i < roster_.size(); ++i) {
    ledger_[i].invested = (*result_)[i];
    ledger_[i].refunded = connections_[i]->deposit - (*result_)[i];
  }
  phase_ = Phase::settled;
}

void Coordinator::refund_all() {
  for (std::size_t i = 0; i < roster_.size(); ++i) {
    ledger_[i].invested = 0;
    ledger_[i].refunded = connections_[i] ? connections_[i]->deposit : 0;
  }
  phase_ = Phase::refunded;
}

void Coordinator::tick() {
  ++clock_;
  if ((phase_ == Phase::commit || phase_ == Phase::connect) &&
      clock_ >= deadline_) {
    refund_all();
  }
}

std::string Coordinator::phase_name(Phase phase) {
  switch (phase) {
    case Phase::commit: return "COMMIT";
    case Phase::connect: return "CONNECT";
    case Phase::search: return "SEARCH";
    case Phase::settled: return "SETTLED";
    case Phase::refunded: return "REFUNDED";
  }
  return "?";
}

std::string Coordinator::dump() const {
  std::ostringstream out;
  out << "phase " << phase_name(phase_) << '\n';
  out << "clock " << clock_ << '\n';
  out << "deadline " << deadline_ << '\n';
  out << "max-level " << max_level_ << '\n';
  for (std::size_t i = 0; i < roster_.size(); ++i) {
    out << "player " << roster_[i];
    out << " committed " << (commitments_[i] ? "yes" : "no");
    if (connections_[i]) {
      out << " max " << connections_[i]->max_investment << " deposit "
          << connections_[i]->deposit;
    } else {
      out << " unconnected";
    }
    if (phase_ == Phase::settled || phase_ == Phase::refunded) {
      out << " invested " << ledger_[i].invested << " refunded "
          << ledger_[i].refunded;
    }
    out << '\n';
  }
  if (result_) {
    out << "result";
    for (int level : *result_) out << ' ' << level;
    out << '\n';
    out << "cycle " << (cycle_detected_ ? "yes" : "no") << '\n';
  }
  out << "steps " << trace_.size() << '\n';
  return out.str();
}

std::string Coordinator::trace_csv() const {
  std::ostringstream out;
  out << "step";
  for (std::size_t i = 1; i <= roster_.size(); ++i) out << ",a_" << i;
  out << '\n';
  for (std::size_t step = 0; step < trace_.size(); ++step) {
    out << step;
    for (int level : trace_[step]) out << ',' << level;
    out << '\n';
  }
  return out.str();
}

}  // namespace rfg
