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
// Times the exhaustive scans: single-threaded reference vs the OpenMP entry
// points. Uses games on which the checked property holds, so both paths do
// the full scan and the comparison is like for like.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "isr/checks.hpp"
#include "isr/tu_game.hpp"

namespace {

using isr::Coalition;
using isr::PlayerId;
using isr::TUGame;
using isr::Util;

// Additive weights plus a concave size term: submodular (and subadditive)
// by construction, so no scan short-circuits.
TUGame make_bench_game(int players, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numerator(1, 400);
  std::uniform_int_distribution<int> denominator(1, 16);

  std::vector<Util> weights;
  std::vector<Util> size_increments;
  for (int i = 0; i < players; ++i) {
    weights.emplace_back(numerator(rng), denominator(rng));
    size_increments.emplace_back(numerator(rng), denominator(rng));
  }
  std::sort(size_increments.begin(), size_increments.end(),
            std::greater<Util>());

  std::vector<Util> concave(static_cast<std::size_t>(players) + 1);
  for (int k = 1; k <= players; ++k) {
    concave[k] = concave[k - 1] + size_increments[k - 1];
  }

  const std::size_t count = std::size_t{1} << players;
  std::vector<Util> costs(count);
  for (std::size_t m = 1; m < count; ++m) {
    Util c = concave[static_cast<std::size_t>(std::popcount(m))];
    for (int i = 0; i < players; ++i) {
      if ((m >> i) & 1u) c += weights[static_cast<std::size_t>(i)];
    }
    costs[m] = std::move(c);
  }

  std::vector<PlayerId> ids;
  for (int i = 0; i < players; ++i) {
    ids.push_back({i, "p" + std::to_string(i)});
  }
  return TUGame(std::move(ids), std::move(costs));
}

double time_ms(const std::function<void()>& fn, int repeat) {
  double best = 1e300;
  for (int r = 0; r < repeat; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    best = std::min(
        best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-22s %12.2f %12.2f %10.2fx\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  int pair_players = 10;
  int shapley_players = 8;
  int repeat = 3;
  std::uint64_t seed = 42;

  CLI::App app{"Benchmark the exhaustive-scan kernels (reference vs OpenMP)"};
  app.add_option("--players", pair_players,
                 "player count for the pairwise scans (<= 12)")
      ->check(CLI::Range(1, isr::kMaxPairwisePlayers))
      ->capture_default_str();
  app.add_option("--shapley-players", shapley_players,
                 "player count for the permutation oracle (<= 8)")
      ->check(CLI::Range(1, isr::kMaxPermutationPlayers))
      ->capture_default_str();
  app.add_option("--repeat", repeat, "take the best of this many runs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", seed, "rng seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("openmp: enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not compiled in (parallel column runs serially)\n");
#endif
  std::printf("pair scans: n=%d (%lld ordered pairs), shapley: n=%d\n\n",
              pair_players, 1ll << (2 * pair_players), shapley_players);
  std::printf("%-22s %12s %12s %10s\n", "kernel", "serial ms", "parallel ms",
              "speedup");

  const TUGame pair_game = make_bench_game(pair_players, seed);
  const TUGame perm_game = make_bench_game(shapley_players, seed + 1);

  // sanity: both paths must agree before timing
  if (isr::parallel::is_subadditive(pair_game).holds !=
          isr::reference::is_subadditive(pair_game).holds ||
      isr::parallel::is_submodular(pair_game).holds !=
          isr::reference::is_submodular(pair_game).holds ||
      isr::parallel::shapley_oracle(perm_game) !=
          isr::reference::shapley_oracle(perm_game)) {
    std::fprintf(stderr, "kernel results diverge; refusing to benchmark\n");
    return 1;
  }

  report("subadditivity scan",
         time_ms([&] { (void)isr::reference::is_subadditive(pair_game); },
                 repeat),
         time_ms([&] { (void)isr::parallel::is_subadditive(pair_game); },
                 repeat));
  report("submodularity scan",
         time_ms([&] { (void)isr::reference::is_submodular(pair_game); },
                 repeat),
         time_ms([&] { (void)isr::parallel::is_submodular(pair_game); },
                 repeat));
  report("shapley permutations",
         time_ms([&] { (void)isr::reference::shapley_oracle(perm_game); },
                 repeat),
         time_ms([&] { (void)isr::parallel::shapley_oracle(perm_game); },
                 repeat));
  return 0;
}
