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
//
// Single-threaded reference implementations of the exhaustive scans. These
// short-circuit at the first violation; the parallel kernels in
// checks_parallel.cpp must report exactly the same witness.

#include <algorithm>
#include <numeric>

#include "isr/checks.hpp"
#include "isr/errors.hpp"

namespace isr {

namespace {

PairCounterexample make_pair_witness(const TUGame& game, std::uint32_t s,
                                     std::uint32_t t) {
  return PairCounterexample{Coalition(s),
                            Coalition(t),
                            game.cost_by_mask(s),
                            game.cost_by_mask(t),
                            game.cost_by_mask(s | t),
                            game.cost_by_mask(s & t)};
}

void require_pairwise_size(const TUGame& game, const char* op) {
  if (game.player_count() > kMaxPairwisePlayers) {
    throw GameTooLarge(game.player_count(), kMaxPairwisePlayers, op);
  }
}

}  // namespace

namespace reference {

PropertyWitness is_subadditive(const TUGame& game) {
  require_pairwise_size(game, "is_subadditive");
  const std::uint32_t count = std::uint32_t{1} << game.player_count();
  for (std::uint32_t s = 0; s < count; ++s) {
    for (std::uint32_t t = 0; t < count; ++t) {
      if ((s & t) != 0) continue;
      if (game.cost_by_mask(s) + game.cost_by_mask(t) <
          game.cost_by_mask(s | t)) {
        return PropertyWitness{false, make_pair_witness(game, s, t)};
      }
    }
  }
  return PropertyWitness{true, std::nullopt};
}

PropertyWitness is_submodular(const TUGame& game) {
  require_pairwise_size(game, "is_submodular");
  const std::uint32_t count = std::uint32_t{1} << game.player_count();
  for (std::uint32_t s = 0; s < count; ++s) {
    for (std::uint32_t t = 0; t < count; ++t) {
      if (game.cost_by_mask(s) + game.cost_by_mask(t) <
          game.cost_by_mask(s | t) + game.cost_by_mask(s & t)) {
        return PropertyWitness{false, make_pair_witness(game, s, t)};
      }
    }
  }
  return PropertyWitness{true, std::nullopt};
}

std::vector<Util> shapley_oracle(const TUGame& game) {
  const int n = game.player_count();
  if (n > kMaxPermutationPlayers) {
    throw GameTooLarge(n, kMaxPermutationPlayers, "shapley_oracle");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);

  std::vector<Util> sums(n);
  std::uint64_t permutations = 0;
  do {
    std::uint32_t preceding = 0;
    for (const int player : order) {
      const std::uint32_t with = preceding | (std::uint32_t{1} << player);
      sums[player] += game.cost_by_mask(with) - game.cost_by_mask(preceding);
      preceding = with;
    }
    ++permutations;
  } while (std::next_permutation(order.begin(), order.end()));

  for (Util& s : sums) s /= permutations;
  return sums;
}

}  // namespace reference

CoreWitness in_core_oracle(const TUGame& game,
                           const std::vector<Util>& allocation) {
  const int n = game.player_count();
  if (n > kMaxPairwisePlayers) {
    throw GameTooLarge(n, kMaxPairwisePlayers, "in_core_oracle");
  }
  if (allocation.size() != static_cast<std::size_t>(n)) {
    throw LengthMismatch(allocation.size(), static_cast<std::size_t>(n));
  }

  for (int i = 0; i < n; ++i) {
    if (allocation[i] < 0) {
      return CoreWitness{
          false, CoreViolation{CoreViolation::Kind::NonNegative,
                               Coalition::of({i}), allocation[i], Util(0)}};
    }
  }

  const std::uint32_t full = game.grand_coalition().bits();
  Util total = 0;
  for (int i = 0; i < n; ++i) total += allocation[i];
  if (total != game.cost_by_mask(full)) {
    return CoreWitness{false,
                       CoreViolation{CoreViolation::Kind::Efficiency,
                                     game.grand_coalition(), total,
                                     game.cost_by_mask(full)}};
  }

  // Prefix sums over masks would not pay off at this size; recompute per
  // coalition.
  for (std::uint32_t m = 1; m <= full; ++m) {
    Util paid = 0;
    for (int i = 0; i < n; ++i) {
      if ((m >> i) & 1u) paid += allocation[i];
    }
    if (paid > game.cost_by_mask(m)) {
      return CoreWitness{
          false, CoreViolation{CoreViolation::Kind::CoalitionRationality,
                               Coalition(m), paid, game.cost_by_mask(m)}};
    }
  }
  return CoreWitness{true, std::nullopt};
}

}  // namespace isr
