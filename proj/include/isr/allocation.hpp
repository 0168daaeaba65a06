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

#ifndef ISR_ALLOCATION_HPP
#define ISR_ALLOCATION_HPP

#include <optional>
#include <vector>

#include "isr/isr_game.hpp"

namespace isr {

// A proposed split of the operational total. Shares may be negative here so
// that verdicts can describe pathological proposals instead of rejecting
// them.
struct Allocation {
  Util provider_share;
  Util receiver_share;

  bool operator==(const Allocation&) const = default;
};

// The segment of stable allocations in the (provider share, receiver share)
// plane. alpha is the endpoint where the provider pays its stable minimum,
// beta where it pays its stable maximum; both endpoints sum to the
// operational total. clamp_active reports that a sign clamp moved an
// endpoint onto an axis (the unclamped bound would have been negative).
struct CoreSegment {
  Allocation alpha;
  Allocation beta;
  Util provider_lower;
  Util provider_upper;
  bool clamp_active = false;
};

struct ViolatedCondition {
  enum class Kind {
    NonNegativity,          // a share is below zero; amount = deficit
    Efficiency,             // amount = (share sum) - (operational total)
    IndividualRationality,  // amount = excess over the firm's stand-alone cost
  };
  Kind kind;
  std::optional<FirmSide> firm;  // empty for Efficiency
  Util amount;
};

// Stability and fairness verdict for one proposal. stable is true iff
// violations is empty; fair is true iff shapley_distance is zero.
struct Verdict {
  bool stable = false;
  bool fair = false;
  std::vector<ViolatedCondition> violations;
  Util shapley_distance;  // L1 distance of the proposal from the Shapley point
};

// Lowest cost `firm` can be stably allocated: the operational total minus
// the other firm's traditional cost. May be negative.
Util u_bound(const IsrGame& game, FirmSide firm);

// Closed-form stable segment. The provider share ranges over
// [max(0, u_bound(provider)), min(total, traditional_provider)]; never empty
// for a constructible game.
CoreSegment core_segment(const IsrGame& game);

// Closed-form Shapley split: each firm pays half of (operational total +
// own traditional cost - other firm's traditional cost). Shares sum to the
// operational total exactly.
Allocation shapley(const IsrGame& game);

// Checks the three stability conditions (non-negative shares, efficiency,
// individual rationality) and lists each violation with its magnitude.
Verdict is_stable(const IsrGame& game, const Allocation& proposal);

// Fairness is exact equality with the Shapley split; the verdict reports the
// L1 distance either way.
Verdict is_fair(const IsrGame& game, const Allocation& proposal);

// Combined stability + fairness verdict.
Verdict classify(const IsrGame& game, const Allocation& proposal);

}  // namespace isr

#endif  // ISR_ALLOCATION_HPP
