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

#ifndef ISR_CHECKS_HPP
#define ISR_CHECKS_HPP

#include <vector>

#include "isr/tu_game.hpp"

namespace isr {

// Enumeration bounds for the exhaustive checks. The pairwise scans cover
// 4^n ordered coalition pairs, the permutation oracle n! orderings; both
// are desk-scale oracles, not production n-player solvers.
inline constexpr int kMaxPairwisePlayers = 12;
inline constexpr int kMaxPermutationPlayers = 8;

// Exhaustive subadditivity check: cost(S) + cost(T) >= cost(S u T) for every
// ordered pair of disjoint coalitions. On failure the witness carries the
// first violating pair in lexicographic (S, T) bitmask order. The scan is
// OpenMP-parallel for large games. Throws GameTooLarge above
// kMaxPairwisePlayers.
PropertyWitness is_subadditive(const TUGame& game);

// Exhaustive submodularity check: cost(S) + cost(T) >= cost(S u T) +
// cost(S n T) for every ordered pair of coalitions. Same witness order,
// parallelism, and bound as is_subadditive.
PropertyWitness is_submodular(const TUGame& game);

// Brute-force Shapley allocation: player i receives the average over all n!
// player orderings of its marginal cost. Exact rational result; the shares
// sum to cost(N) by construction. Throws GameTooLarge above
// kMaxPermutationPlayers.
std::vector<Util> shapley_oracle(const TUGame& game);

// Core membership test: shares sum to cost(N), every share is >= 0, and no
// coalition pays more in total than its own cost. Violations are reported
// in a fixed order: non-negativity by player index, then efficiency, then
// coalition rationality by ascending bitmask. Throws LengthMismatch or
// GameTooLarge (above kMaxPairwisePlayers).
CoreWitness in_core_oracle(const TUGame& game,
                           const std::vector<Util>& allocation);

// Single-threaded versions of the scans above, kept as the reference the
// parallel kernels are tested and benchmarked against. Results, including
// the reported counterexample, are identical to the parallel path.
namespace reference {
PropertyWitness is_subadditive(const TUGame& game);
PropertyWitness is_submodular(const TUGame& game);
std::vector<Util> shapley_oracle(const TUGame& game);
}  // namespace reference

// The OpenMP kernels themselves, runnable regardless of the size gate in
// the public entry points. A pair scan covers the whole index space (no
// short-circuit) and min-reduces the first violating pair.
namespace parallel {
PropertyWitness is_subadditive(const TUGame& game);
PropertyWitness is_submodular(const TUGame& game);
std::vector<Util> shapley_oracle(const TUGame& game);
}  // namespace parallel

}  // namespace isr

#endif  // ISR_CHECKS_HPP
