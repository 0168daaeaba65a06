// Copyright 2026 The isrgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isr/tu_game.hpp"

#include <utility>

#include "isr/errors.hpp"

namespace isr {

namespace {

void validate_players(const std::vector<PlayerId>& players) {
  if (players.empty()) throw Error("a game needs at least one player");
  if (players.size() > static_cast<std::size_t>(TUGame::kMaxPlayers)) {
    throw GameTooLarge(static_cast<int>(players.size()), TUGame::kMaxPlayers,
                       "dense storage");
  }
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (players[i].index != static_cast<int>(i)) {
      throw Error("player indices must be 0..n-1 in order, got index " +
                  std::to_string(players[i].index) + " at position " +
                  std::to_string(i));
    }
  }
}

// Label of a coalition over an arbitrary player list (usable before a
// TUGame exists).
std::string label_of(Coalition s, const std::vector<PlayerId>& players) {
  std::string out = "{";
  bool first = true;
  for (const PlayerId& p : players) {
    if (!s.contains(p.index)) continue;
    if (!first) out += ",";
    out += p.label.empty() ? "#" + std::to_string(p.index) : p.label;
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace

TUGame::TUGame(std::vector<PlayerId> players, std::vector<Util> dense_costs)
    : players_(std::move(players)), costs_(std::move(dense_costs)) {
  validate_players(players_);
  const std::size_t expected = std::size_t{1} << players_.size();
  if (costs_.size() != expected) {
    throw Error("dense cost table has " + std::to_string(costs_.size()) +
                " entries, expected " + std::to_string(expected));
  }
  if (costs_[0] != 0) throw NonzeroEmptyCost(costs_[0]);
  for (std::size_t m = 1; m < costs_.size(); ++m) {
    if (costs_[m] < 0) {
      throw NegativeCost("coalition " +
                             label_of(Coalition(static_cast<std::uint32_t>(m)),
                                      players_),
                         costs_[m]);
    }
  }
}

std::string TUGame::coalition_label(Coalition s) const {
  return label_of(s, players_);
}

TUGame make_game(std::vector<PlayerId> players,
                 const std::map<Coalition, Util>& cost) {
  validate_players(players);
  const std::uint32_t full = Coalition::full(static_cast<int>(players.size())).bits();

  for (const auto& [coalition, value] : cost) {
    if ((coalition.bits() & ~full) != 0) {
      throw Error("coalition " + std::to_string(coalition.bits()) +
                  " has members outside the player set");
    }
    (void)value;
  }

  std::vector<Util> dense(std::size_t{1} << players.size());
  for (std::uint32_t m = 0; m <= full; ++m) {
    const auto it = cost.find(Coalition(m));
    if (it == cost.end()) {
      throw MissingCoalition(m, label_of(Coalition(m), players));
    }
    dense[m] = it->second;
  }
  return TUGame(std::move(players), std::move(dense));
}

TUGame add_games(const TUGame& g1, const TUGame& g2) {
  if (g1.player_count() != g2.player_count()) throw PlayerSetMismatch();
  for (int i = 0; i < g1.player_count(); ++i) {
    if (g1.players()[i].label != g2.players()[i].label) {
      throw PlayerSetMismatch();
    }
  }

  std::vector<Util> dense(g1.coalition_count());
  for (std::size_t m = 0; m < dense.size(); ++m) {
    dense[m] = g1.costs()[m] + g2.costs()[m];
  }
  return TUGame(g1.players(), std::move(dense));
}

}  // namespace isr
