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
// OpenMP kernels for the exhaustive scans. A pair scan flattens (S, T) into
// one index k = (S << n) | T and min-reduces the first violating k, so the
// reported counterexample is the lexicographically first one, identical to
// the serial reference. The public entry points route small games to the
// reference path, where short-circuiting wins.

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "isr/checks.hpp"
#include "isr/errors.hpp"

namespace isr {

namespace {

// Pair scans below this size are not worth a thread team.
constexpr std::int64_t kPairScanGrain = std::int64_t{1} << 16;
constexpr std::int64_t kPermutationGrain = 5040;

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Permutation with the given rank in lexicographic order (factorial number
// system decode).
void unrank_permutation(std::uint64_t rank, int n, std::vector<int>& out) {
  std::vector<int> remaining(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) remaining[static_cast<std::size_t>(i)] = i;
  out.clear();
  for (int i = 0; i < n; ++i) {
    const std::uint64_t f = factorial(n - 1 - i);
    const auto pick = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(remaining[pick]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
  }
}

enum class PairCheck { Subadditive, Submodular };

// Scans all ordered coalition pairs for a violation; returns the smallest
// flattened index, or `total` when the property holds everywhere.
std::int64_t scan_pairs(const TUGame& game, PairCheck check) {
  const int n = game.player_count();
  const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
  const std::int64_t total = std::int64_t{1} << (2 * n);
  std::int64_t best = total;

#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::int64_t k = 0; k < total; ++k) {
    const auto s = static_cast<std::uint32_t>(k >> n);
    const auto t = static_cast<std::uint32_t>(k) & mask;
    bool violated;
    if (check == PairCheck::Subadditive) {
      if ((s & t) != 0) continue;
      violated = game.cost_by_mask(s) + game.cost_by_mask(t) <
                 game.cost_by_mask(s | t);
    } else {
      violated = game.cost_by_mask(s) + game.cost_by_mask(t) <
                 game.cost_by_mask(s | t) + game.cost_by_mask(s & t);
    }
    if (violated && k < best) best = k;
  }
  return best;
}

PropertyWitness witness_from_index(const TUGame& game, std::int64_t k,
                                   std::int64_t total) {
  if (k >= total) return PropertyWitness{true, std::nullopt};
  const int n = game.player_count();
  const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
  const auto s = static_cast<std::uint32_t>(k >> n);
  const auto t = static_cast<std::uint32_t>(k) & mask;
  return PropertyWitness{
      false,
      PairCounterexample{Coalition(s), Coalition(t), game.cost_by_mask(s),
                         game.cost_by_mask(t), game.cost_by_mask(s | t),
                         game.cost_by_mask(s & t)}};
}

void require_pairwise_size(const TUGame& game, const char* op) {
  if (game.player_count() > kMaxPairwisePlayers) {
    throw GameTooLarge(game.player_count(), kMaxPairwisePlayers, op);
  }
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

bool pair_scan_pays_off(const TUGame& game) {
  const std::int64_t total = std::int64_t{1} << (2 * game.player_count());
  return total >= kPairScanGrain && max_threads() > 1;
}

}  // namespace

namespace parallel {

PropertyWitness is_subadditive(const TUGame& game) {
  require_pairwise_size(game, "is_subadditive");
  const std::int64_t total = std::int64_t{1} << (2 * game.player_count());
  return witness_from_index(game, scan_pairs(game, PairCheck::Subadditive),
                            total);
}

PropertyWitness is_submodular(const TUGame& game) {
  require_pairwise_size(game, "is_submodular");
  const std::int64_t total = std::int64_t{1} << (2 * game.player_count());
  return witness_from_index(game, scan_pairs(game, PairCheck::Submodular),
                            total);
}

std::vector<Util> shapley_oracle(const TUGame& game) {
  const int n = game.player_count();
  if (n > kMaxPermutationPlayers) {
    throw GameTooLarge(n, kMaxPermutationPlayers, "shapley_oracle");
  }
  const auto permutations = static_cast<std::int64_t>(factorial(n));

  std::vector<std::vector<Util>> partial(
      static_cast<std::size_t>(max_threads()),
      std::vector<Util>(static_cast<std::size_t>(n)));

#pragma omp parallel
  {
#ifdef _OPENMP
    auto& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#else
    auto& mine = partial[0];
#endif
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));

#pragma omp for schedule(static)
    for (std::int64_t rank = 0; rank < permutations; ++rank) {
      unrank_permutation(static_cast<std::uint64_t>(rank), n, order);
      std::uint32_t preceding = 0;
      for (const int player : order) {
        const std::uint32_t with = preceding | (std::uint32_t{1} << player);
        mine[static_cast<std::size_t>(player)] +=
            game.cost_by_mask(with) - game.cost_by_mask(preceding);
        preceding = with;
      }
    }
  }

  // Rational addition is exact and commutative, so the combine order does
  // not affect the result.
  std::vector<Util> sums(static_cast<std::size_t>(n));
  for (const auto& part : partial) {
    for (int i = 0; i < n; ++i) {
      sums[static_cast<std::size_t>(i)] += part[static_cast<std::size_t>(i)];
    }
  }
  for (Util& s : sums) s /= permutations;
  return sums;
}

}  // namespace parallel

PropertyWitness is_subadditive(const TUGame& game) {
  require_pairwise_size(game, "is_subadditive");
  return pair_scan_pays_off(game) ? parallel::is_subadditive(game)
                                  : reference::is_subadditive(game);
}

PropertyWitness is_submodular(const TUGame& game) {
  require_pairwise_size(game, "is_submodular");
  return pair_scan_pays_off(game) ? parallel::is_submodular(game)
                                  : reference::is_submodular(game);
}

std::vector<Util> shapley_oracle(const TUGame& game) {
  const int n = game.player_count();
  if (n > kMaxPermutationPlayers) {
    throw GameTooLarge(n, kMaxPermutationPlayers, "shapley_oracle");
  }
  const auto permutations = static_cast<std::int64_t>(factorial(n));
  if (permutations >= kPermutationGrain && max_threads() > 1) {
    return parallel::shapley_oracle(game);
  }
  return reference::shapley_oracle(game);
}

}  // namespace isr
