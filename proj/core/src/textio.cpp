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

#include "rfg/textio.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "rfg/construct.hpp"
#include "rfg/error.hpp"

namespace rfg {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail_at(std::string_view source, int line,
                          const std::string& what) {
  fail(Errc::parse_error,
       std::string(source) + ":" + std::to_string(line) + ": " + what);
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::istringstream stream{std::string(raw)};
    std::string token;
    while (stream >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(Errc::parse_error, "cannot open " + path);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int parse_int(std::string_view source, int line, const std::string& token) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    fail_at(source, line, "expected an integer, got '" + token + "'");
  }
}

std::int64_t parse_int64(std::string_view source, int line,
                         const std::string& token) {
  try {
    std::size_t used = 0;
    const std::int64_t value = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    fail_at(source, line, "expected an integer, got '" + token + "'");
  }
}

Rat parse_rational_at(std::string_view source, int line,
                      const std::string& token) {
  try {
    return parse_rational(token);
  } catch (const Error&) {
    fail_at(source, line, "bad rational '" + token + "'");
  }
}

LoadedGame parse_kind_line(const Line& line, std::string_view source) {
  if (line.tokens.size() != 5) {
    fail_at(source, line.number,
            "expected: kind weakest-link|public-good <n> <H> <lambda>");
  }
  const std::string& kind = line.tokens[1];
  const int n = parse_int(source, line.number, line.tokens[2]);
  const int levels = parse_int(source, line.number, line.tokens[3]);
  const Rat lambda = parse_rational_at(source, line.number, line.tokens[4]);
  if (kind == "weakest-link") {
    InvestmentGame inv = InvestmentGame::weakest_link(n, levels, lambda);
    StrategicGame game = inv.game();
    return LoadedGame{std::move(game), std::move(inv)};
  }
  if (kind == "public-good") {
    InvestmentGame inv = InvestmentGame::public_good(n, levels, lambda);
    StrategicGame game = inv.game();
    return LoadedGame{std::move(game), std::move(inv)};
  }
  fail_at(source, line.number, "unknown kind '" + kind + "'");
}

}  // namespace

LoadedGame parse_game(std::string_view text, std::string_view source) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) {
    fail(Errc::parse_error, std::string(source) + ": empty game file");
  }
  if (lines.front().tokens.front() == "kind") {
    if (lines.size() > 1) {
      fail_at(source, lines[1].number, "kind games take a single line");
    }
    return parse_kind_line(lines.front(), source);
  }

  std::vector<std::string> players;
  std::vector<std::vector<std::string>> actions;
  std::size_t at = 0;
  if (lines[at].tokens.front() != "players" || lines[at].tokens.size() < 3) {
    fail_at(source, lines[at].number, "expected: players <id> <id>...");
  }
  players.assign(lines[at].tokens.begin() + 1, lines[at].tokens.end());
  actions.resize(players.size());
  ++at;

  auto player_of = [&](const Line& line, const std::string& token) {
    for (std::size_t i = 0; i < players.size(); ++i) {
      if (players[i] == token) return i;
    }
    fail_at(source, line.number, "unknown player '" + token + "'");
  };

  while (at < lines.size() && lines[at].tokens.front() == "actions") {
    const Line& line = lines[at];
    if (line.tokens.size() < 4) {
      fail_at(source, line.number, "expected: actions <player> <label>...");
    }
    const std::size_t i = player_of(line, line.tokens[1]);
    if (!actions[i].empty()) {
      fail_at(source, line.number, "duplicate actions for " + players[i]);
    }
    actions[i].assign(line.tokens.begin() + 2, line.tokens.end());
    ++at;
  }
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (actions[i].empty()) {
      fail_at(source, lines.empty() ? 1 : lines.back().number,
              "missing actions for player " + players[i]);
    }
  }
  if (at >= lines.size() || lines[at].tokens != std::vector<std::string>{"payoffs"}) {
    fail_at(source, at < lines.size() ? lines[at].number : lines.back().number,
            "expected a 'payoffs' line");
  }
  ++at;

  // Assemble the table; every outcome must appear exactly once.
  std::vector<std::size_t> strides(players.size(), 1);
  for (std::size_t i = players.size(); i-- > 1;) {
    strides[i - 1] = strides[i] * actions[i].size();
  }
  const std::size_t num_outcomes = strides[0] * actions[0].size();
  std::vector<Rat> payoffs(num_outcomes * players.size());
  std::vector<bool> seen(num_outcomes, false);
  for (; at < lines.size(); ++at) {
    const Line& line = lines[at];
    if (line.tokens.size() != 2 * players.size() + 1 ||
        line.tokens[players.size()] != ":") {
      fail_at(source, line.number,
              "expected: <action per player> : <payoff per player>");
    }
    std::size_t outcome = 0;
    for (std::size_t i = 0; i < players.size(); ++i) {
      const auto& list = actions[i];
      const auto it = std::find(list.begin(), list.end(), line.tokens[i]);
      if (it == list.end()) {
        fail_at(source, line.number,
                "unknown action '" + line.tokens[i] + "' for player " +
                    players[i]);
      }
      outcome += static_cast<std::size_t>(it - list.begin()) * strides[i];
    }
    if (seen[outcome]) {
      fail_at(source, line.number, "duplicate payoff line");
    }
    seen[outcome] = true;
    for (std::size_t i = 0; i < players.size(); ++i) {
      payoffs[outcome * players.size() + i] = parse_rational_at(
          source, line.number, line.tokens[players.size() + 1 + i]);
    }
  }
  if (const auto missing = std::find(seen.begin(), seen.end(), false);
      missing != seen.end()) {
    fail(Errc::parse_error,
         std::string(source) + ": payoff table is not total (" +
             std::to_string(std::count(seen.begin(), seen.end(), true)) +
             " of " + std::to_string(num_outcomes) + " outcomes)");
  }
  return LoadedGame{
      StrategicGame(std::move(players), std::move(actions), std::move(payoffs)),
      std::nullopt};
}

LoadedGame load_game_file(const std::string& path) {
  return parse_game(read_file(path), path);
}

std::string serialize_game(const LoadedGame& loaded) {
  const StrategicGame& game = loaded.game;
  std::ostringstream out;
  if (loaded.investment) {
    const InvestmentGame& inv = *loaded.investment;
    out << "kind "
        << (inv.kind() == InvestKind::weakest_link ? "weakest-link"
                                                   : "public-good")
        << ' ' << inv.num_players() << ' ' << inv.max_level() << ' '
        << to_ratio_string(inv.lambda()) << '\n';
    return out.str();
  }
  out << "players";
  for (const auto& p : game.player_names()) out << ' ' << p;
  out << '\n';
  for (int i = 0; i < game.num_players(); ++i) {
    out << "actions " << game.player_name(i);
    for (int a = 0; a < game.num_actions(i); ++a) {
      out << ' ' << game.action_name(i, a);
    }
    out << '\n';
  }
  out << "payoffs\n";
  for (std::size_t o = 0; o < game.num_outcomes(); ++o) {
    for (int i = 0; i < game.num_players(); ++i) {
      out << game.action_name(i, game.outcome_action(o, i)) << ' ';
    }
    out << ':';
    for (int i = 0; i < game.num_players(); ++i) {
      out << ' ' << to_ratio_string(game.payoff(i, o));
    }
    out << '\n';
  }
  return out.str();
}

namespace {

ReactionFunction builtin_reaction(const StrategicGame& game, int owner,
                                  const Line& line, std::string_view source,
                                  bool allow_payoff_builtins) {
  const std::string& name = line.tokens[1];
  if (name == "br" || name == "promise-threat") {
    if (!allow_payoff_builtins) {
      fail_at(source, line.number,
              "builtin '" + name + "' needs a game with payoffs");
    }
  }
  if (name == "br") {
    return best_reply_reaction(game, owner);
  }
  if (name == "constant") {
    if (line.tokens.size() != 3) {
      fail_at(source, line.number, "expected: builtin constant <action>");
    }
    return constant_reaction(game, owner,
                             game.action_index(owner, line.tokens[2]));
  }
  if (name == "match-min" || name == "rstar") {
    ReactionFunction r{owner, std::vector<int>(game.num_others(owner))};
    for (std::size_t o = 0; o < game.num_others(owner); ++o) {
      const std::vector<int> others = game.others_actions(owner, o);
      int image;
      if (name == "match-min") {
        image = *std::min_element(others.begin(), others.end());
      } else {
        image = std::accumulate(others.begin(), others.end(), 0) /
                static_cast<int>(others.size());
      }
      if (image >= game.num_actions(owner)) {
        fail_at(source, line.number,
                "builtin '" + name + "' falls outside the owner's actions");
      }
      r.table[o] = image;
    }
    return r;
  }
  if (name == "promise-threat") {
    if (line.tokens.size() !=
        static_cast<std::size_t>(game.num_players()) + 2) {
      fail_at(source, line.number,
              "expected: builtin promise-threat <action per player>");
    }
    std::vector<int> target(game.num_players());
    for (int i = 0; i < game.num_players(); ++i) {
      target[i] = game.action_index(i, line.tokens[2 + i]);
    }
    return construct_promise_threat(game, game.outcome_index(target)).of(owner);
  }
  fail_at(source, line.number, "unknown builtin '" + name + "'");
}

ReactionFunction parse_reaction_impl(const StrategicGame& game,
                                     std::string_view text,
                                     std::string_view source,
                                     bool allow_payoff_builtins) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty() || lines.front().tokens.size() != 2 ||
      lines.front().tokens.front() != "owner") {
    fail(Errc::parse_error,
         std::string(source) + ": reaction files start with 'owner <player>'");
  }
  const int owner = game.player_index(lines.front().tokens[1]);

  if (lines.size() == 2 && lines[1].tokens.front() == "builtin") {
    if (lines[1].tokens.size() < 2) {
      fail_at(source, lines[1].number, "expected: builtin <name> [args]");
    }
    return builtin_reaction(game, owner, lines[1], source,
                            allow_payoff_builtins);
  }

  ReactionFunction r{owner, std::vector<int>(game.num_others(owner), -1)};
  const std::size_t arity = game.num_players() - 1;
  for (std::size_t at = 1; at < lines.size(); ++at) {
    const Line& line = lines[at];
    if (line.tokens.size() != arity + 2 || line.tokens[arity] != "->") {
      fail_at(source, line.number,
              "expected: <action per other player> -> <own action>");
    }
    std::vector<int> others(arity);
    std::size_t pos = 0;
    for (int j = 0; j < game.num_players(); ++j) {
      if (j == owner) continue;
      others[pos] = game.action_index(j, line.tokens[pos]);
      ++pos;
    }
    const std::size_t o = game.others_index_of(owner, others);
    if (r.table[o] != -1) {
      fail_at(source, line.number, "duplicate reaction line");
    }
    r.table[o] = game.action_index(owner, line.tokens[arity + 1]);
  }
  if (std::find(r.table.begin(), r.table.end(), -1) != r.table.end()) {
    fail(Errc::parse_error,
         std::string(source) + ": reaction table is not total");
  }
  return r;
}

}  // namespace

ReactionFunction parse_reaction(const StrategicGame& game,
                                std::string_view text,
                                std::string_view source) {
  return parse_reaction_impl(game, text, source, true);
}

ReactionFunction load_reaction_file(const StrategicGame& game,
                                    const std::string& path) {
  return parse_reaction(game, read_file(path), path);
}

std::string serialize_reaction_file(const StrategicGame& game,
                                    const ReactionFunction& r) {
  std::ostringstream out;
  out << "owner " << game.player_name(r.owner) << '\n';
  for (std::size_t o = 0; o < game.num_others(r.owner); ++o) {
    const std::vector<int> others = game.others_actions(r.owner, o);
    std::size_t pos = 0;
    for (int j = 0; j < game.num_players(); ++j) {
      if (j == r.owner) continue;
      out << game.action_name(j, others[pos++]) << ' ';
    }
    out << "-> " << game.action_name(r.owner, r.table[o]) << '\n';
  }
  return out.str();
}

namespace {

// (continued parsing helpers)
Salt parse_salt(std::string_view source, int line, const std::string& token) {
  const std::vector<std::uint8_t> bytes = from_hex(token);
  if (bytes.size() != 32) {
    fail_at(source, line, "salt must be 32 bytes of hex");
  }
  Salt salt{};
  std::copy(bytes.begin(), bytes.end(), salt.begin());
  return salt;
}

Digest parse_digest(std::string_view source, int line,
                    const std::string& token) {
  const std::vector<std::uint8_t> bytes = from_hex(token);
  if (bytes.size() != 32) {
    fail_at(source, line, "digest must be 32 bytes of hex");
  }
  Digest digest{};
  std::copy(bytes.begin(), bytes.end(), digest.begin());
  return digest;
}

std::string resolve_path(const std::string& directory,
                         const std::string& path) {
  if (path.empty() || path.front() == '/' || directory.empty()) return path;
  return directory + "/" + path;
}

}  // namespace

Coordinator run_event_script(std::string_view text, std::string_view source,
                             const std::string& directory) {
  const std::vector<Line> lines = tokenize(text);
  std::vector<std::string> roster;
  int max_level = -1;
  std::int64_t deadline = -1;

  std::size_t at = 0;
  for (; at < lines.size(); ++at) {
    const Line& line = lines[at];
    const std::string& key = line.tokens.front();
    if (key == "players") {
      roster.assign(line.tokens.begin() + 1, line.tokens.end());
    } else if (key == "max-level" && line.tokens.size() == 2) {
      max_level = parse_int(source, line.number, line.tokens[1]);
    } else if (key == "deadline" && line.tokens.size() == 2) {
      deadline = parse_int64(source, line.number, line.tokens[1]);
    } else {
      break;
    }
  }
  if (roster.empty() || max_level < 0 || deadline < 0) {
    fail(Errc::parse_error,
         std::string(source) +
             ": script header needs players, max-level and deadline");
  }

  Coordinator coordinator(roster, max_level, deadline);
  // The grid for parsing reaction files: one action per level, no payoffs.
  std::optional<StrategicGame> grid;
  auto grid_game = [&]() -> const StrategicGame& {
    if (!grid) {
      std::vector<std::string> levels;
      for (int a = 0; a <= max_level; ++a) levels.push_back(std::to_string(a));
      std::size_t outcomes = 1;
      for (std::size_t i = 0; i < roster.size(); ++i) outcomes *= levels.size();
      grid.emplace(roster,
                   std::vector<std::vector<std::string>>(roster.size(), levels),
                   std::vector<Rat>(outcomes * roster.size(), Rat(0)));
    }
    return *grid;
  };

  for (; at < lines.size(); ++at) {
    const Line& line = lines[at];
    const std::string& event = line.tokens.front();
    if (event == "commit") {
      if (line.tokens.size() != 3) {
        fail_at(source, line.number, "expected: commit <player> <digest>");
      }
      coordinator.commit(line.tokens[1],
                         parse_digest(source, line.number, line.tokens[2]));
    } else if (event == "connect") {
      if (line.tokens.size() != 6) {
        fail_at(source, line.number,
                "expected: connect <player> <reaction-file> <salt> <max> "
                "<deposit>");
      }
      const StrategicGame& game = grid_game();
      const std::string path = resolve_path(directory, line.tokens[2]);
      ReactionFunction r = parse_reaction_impl(game, read_file(path), path,
                                               /*allow_payoff_builtins=*/false);
      if (r.owner != game.player_index(line.tokens[1])) {
        fail_at(source, line.number,
                "reaction file owner does not match the connecting player");
      }
      coordinator.connect(line.tokens[1], std::move(r.table),
                          parse_salt(source, line.number, line.tokens[3]),
                          parse_int(source, line.number, line.tokens[4]),
                          parse_int64(source, line.number, line.tokens[5]));
    } else if (event == "tick") {
      coordinator.tick();
    } else if (event == "search") {
      coordinator.run_search();
      coordinator.settle();
    } else {
      fail_at(source, line.number, "unknown event '" + event + "'");
    }
  }
  return coordinator;
}

Coordinator run_event_script_file(const std::string& path) {
  std::string directory;
  if (const auto slash = path.find_last_of('/'); slash != std::string::npos) {
    directory = path.substr(0, slash);
  }
  return run_event_script(read_file(path), path, directory);
}

EvolutionConfig parse_evolution_config(std::string_view text,
                                       std::string_view source) {
  EvolutionConfig config;
  for (const Line& line : tokenize(text)) {
    if (line.tokens.size() != 2) {
      fail_at(source, line.number, "expected: <key> <value>");
    }
    const std::string& key = line.tokens.front();
    const std::string& value = line.tokens[1];
    if (key == "runs") {
      config.runs = parse_int(source, line.number, value);
    } else if (key == "batches") {
      config.batches = parse_int(source, line.number, value);
    } else if (key == "games-per-batch") {
      config.games_per_batch = parse_int(source, line.number, value);
    } else if (key == "pool") {
      config.pool_size = parse_int(source, line.number, value);
    } else if (key == "players") {
      config.n = parse_int(source, line.number, value);
    } else if (key == "max-investment") {
      config.levels = parse_int(source, line.number, value);
    } else if (key == "lambda") {
      config.lambda = parse_rational_at(source, line.number, value);
    } else if (key == "k0" || key == "i0" || key == "rho" || key == "sigma") {
      double parsed = 0;
      try {
        parsed = std::stod(value);
      } catch (const std::exception&) {
        fail_at(source, line.number, "bad number '" + value + "'");
      }
      if (key == "k0") config.k0 = parsed;
      if (key == "i0") config.i0 = parsed;
      if (key == "rho") config.rho = parsed;
      if (key == "sigma") config.sigma = parsed;
    } else if (key == "seed") {
      try {
        config.seed = std::stoull(value);
      } catch (const std::exception&) {
        fail_at(source, line.number, "bad seed '" + value + "'");
      }
    } else {
      fail_at(source, line.number, "unknown key '" + key + "'");
    }
  }
  config.validate();
  return config;
}

EvolutionConfig load_evolution_config_file(const std::string& path) {
  return parse_evolution_config(read_file(path), path);
}

std::string render_rational(const Rat& value, const ReportOptions& options) {
  return options.csv ? to_decimal_string(value, options.precision)
                     : to_ratio_string(value);
}

std::string analyze_report(const StrategicGame& game,
                           const ReportOptions& options) {
  std::ostringstream out;
  const std::vector<std::size_t> nash = nash_equilibria(game);
  std::vector<std::size_t> all(game.num_outcomes());
  for (std::size_t o = 0; o < all.size(); ++o) all[o] = o;
  const std::vector<std::size_t> frontier = pareto_frontier(game, all);

  if (options.csv) {
    out << "section,player,value,outcome\n";
    for (std::size_t o : nash) {
      out << "nash,,," << game.outcome_label(o) << '\n';
    }
    for (int i = 0; i < game.num_players(); ++i) {
      const MaxminResult m = maxmin(game, i);
      out << "maxmin," << game.player_name(i) << ','
          << render_rational(m.value, options) << ',';
      for (std::size_t k = 0; k < m.safe_actions.size(); ++k) {
        if (k > 0) out << ' ';
        out << game.action_name(i, m.safe_actions[k]);
      }
      out << '\n';
    }
    for (std::size_t o : frontier) {
      out << "frontier,,," << game.outcome_label(o) << '\n';
    }
    return out.str();
  }

  out << "players:";
  for (const auto& p : game.player_names()) out << ' ' << p;
  out << '\n';
  out << "nash:";
  if (nash.empty()) out << " (none)";
  for (std::size_t o : nash) out << ' ' << game.outcome_label(o);
  out << '\n';
  for (int i = 0; i < game.num_players(); ++i) {
    const MaxminResult m = maxmin(game, i);
    out << "maxmin " << game.player_name(i) << ": value "
        << render_rational(m.value, options) << " safe";
    for (int a : m.safe_actions) out << ' ' << game.action_name(i, a);
    out << '\n';
  }
  out << "pareto-frontier:";
  for (std::size_t o : frontier) out << ' ' << game.outcome_label(o);
  out << '\n';
  return out.str();
}

std::string check_report(const StrategicGame& game, const Profile& profile,
                         const RfeVerdict& verdict,
                         const FixedPointReport& report,
                         const ReportOptions& options) {
  (void)profile;
  std::ostringstream out;
  const char sep = options.csv ? ',' : ' ';
  out << "verdict" << (options.csv ? "," : ": ");
  switch (verdict.kind) {
    case RfeVerdict::Kind::rfe:
      out << "RFE";
      break;
    case RfeVerdict::Kind::not_unambiguous:
      out << "NOT_UNAMBIGUOUS";
      break;
    case RfeVerdict::Kind::deviation:
      out << "DEVIATION" << sep << game.player_name(verdict.player) << sep
          << game.action_name(verdict.player, verdict.action);
      break;
  }
  out << '\n';
  out << "fixed-points" << (options.csv ? "," : ":");
  if (report.fixed_points.empty() && !options.csv) out << " (none)";
  for (std::size_t o : report.fixed_points) {
    out << ' ' << game.outcome_label(o);
  }
  out << '\n';
  for (int i = 0; i < game.num_players(); ++i) {
    out << "value" << sep << game.player_name(i) << (options.csv ? "," : ": ");
    if (report.values[i]) {
      out << render_rational(*report.values[i], options);
    } else {
      out << "NO_FIXED_POINT";
    }
    out << '\n';
  }
  out << "unambiguous" << (options.csv ? "," : ": ")
      << (report.unambiguous ? "yes" : "no") << '\n';
  if (report.top) {
    out << "top" << (options.csv ? "," : ": ") << game.outcome_label(*report.top)
        << '\n';
  }
  return out.str();
}

}  // namespace rfg
