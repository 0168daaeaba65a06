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

#ifndef ISR_TU_GAME_HPP
#define ISR_TU_GAME_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isr/rational.hpp"

namespace isr {

struct PlayerId {
  int index = 0;
  std::string label;
};

// Subset of players, encoded as a bitmask over player indices. Index i of
// the owning game corresponds to bit i.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint32_t bits) : bits_(bits) {}

  static Coalition of(std::initializer_list<int> players) {
    std::uint32_t bits = 0;
    for (int p : players) bits |= std::uint32_t{1} << p;
    return Coalition(bits);
  }
  static constexpr Coalition empty() { return Coalition(); }
  static constexpr Coalition full(int player_count) {
    return Coalition((std::uint32_t{1} << player_count) - 1);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int player) const { return (bits_ >> player) & 1u; }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr Coalition united(Coalition other) const {
    return Coalition(bits_ | other.bits_);
  }
  constexpr Coalition intersected(Coalition other) const {
    return Coalition(bits_ & other.bits_);
  }
  constexpr Coalition with(int player) const {
    return Coalition(bits_ | (std::uint32_t{1} << player));
  }
  constexpr bool disjoint_with(Coalition other) const {
    return (bits_ & other.bits_) == 0;
  }
  constexpr bool subset_of(Coalition other) const {
    return (bits_ & other.bits_) == bits_;
  }

  auto operator<=>(const Coalition&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

// Cooperative cost game over n players. The characteristic cost function is
// stored densely: costs()[m] is the cost of the coalition with bitmask m, so
// all 2^n coalitions are covered by construction. Construction enforces
// cost(empty) = 0 and cost(S) >= 0 for every S. Instances are immutable and
// safe to share across threads.
class TUGame {
 public:
  // Dense storage keeps the type usable; the exhaustive checks bound their
  // own enumeration sizes separately (see checks.hpp).
  static constexpr int kMaxPlayers = 16;

  TUGame(std::vector<PlayerId> players, std::vector<Util> dense_costs);

  int player_count() const { return static_cast<int>(players_.size()); }
  const std::vector<PlayerId>& players() const { return players_; }
  Coalition grand_coalition() const { return Coalition::full(player_count()); }
  std::size_t coalition_count() const { return costs_.size(); }

  const Util& cost(Coalition s) const { return costs_[s.bits()]; }
  const Util& cost_by_mask(std::uint32_t mask) const { return costs_[mask]; }
  const std::vector<Util>& costs() const { return costs_; }

  // Display form of a coalition using player labels, e.g. "{A,B}".
  std::string coalition_label(Coalition s) const;

 private:
  std::vector<PlayerId> players_;
  std::vector<Util> costs_;
};

// Builds a validated game from an explicit coalition -> cost map. The map
// must assign a value to every subset of the player set.
//
// Throws MissingCoalition, NegativeCost, NonzeroEmptyCost, or Error for
// malformed player lists / stray coalitions.
TUGame make_game(std::vector<PlayerId> players,
                 const std::map<Coalition, Util>& cost);

// Pointwise sum of two games over the same player set. Throws
// PlayerSetMismatch when the player sets differ.
TUGame add_games(const TUGame& g1, const TUGame& g2);

// Violating pair found by one of the exhaustive pairwise checks, with the
// four cost values of the failed inequality.
struct PairCounterexample {
  Coalition s;
  Coalition t;
  Util cost_s;
  Util cost_t;
  Util cost_union;
  Util cost_intersection;
};

struct PropertyWitness {
  bool holds = true;
  std::optional<PairCounterexample> counterexample;
};

// Core-membership violation found by the allocation oracle.
struct CoreViolation {
  enum class Kind {
    NonNegative,           // a player's share is below zero
    Efficiency,            // shares do not sum to cost(N)
    CoalitionRationality,  // some coalition pays more than its own cost
  };
  Kind kind;
  Coalition coalition;
  Util allocated;  // sum of shares over `coalition`
  Util bound;      // the cost the coalition can secure on its own
};

struct CoreWitness {
  bool holds = true;
  std::optional<CoreViolation> violation;
};

}  // namespace isr

#endif  // ISR_TU_GAME_HPP
