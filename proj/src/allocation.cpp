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

#include "isr/allocation.hpp"

#include <algorithm>

namespace isr {

namespace {

Util abs_util(const Util& v) { return v < 0 ? Util(-v) : v; }

}  // namespace

Util u_bound(const IsrGame& game, FirmSide firm) {
  const Util& other = firm == FirmSide::Provider
                          ? game.traditional_receiver()
                          : game.traditional_provider();
  return game.operational_total() - other;
}

CoreSegment core_segment(const IsrGame& game) {
  const Util& total = game.operational_total();
  const Util floor_provider = u_bound(game, FirmSide::Provider);
  const Util floor_receiver = u_bound(game, FirmSide::Receiver);

  CoreSegment segment;
  segment.clamp_active = floor_provider < 0 || floor_receiver < 0;
  segment.provider_lower = std::max(Util(0), floor_provider);
  segment.provider_upper = std::min(total, game.traditional_provider());
  segment.alpha = Allocation{segment.provider_lower,
                             total - segment.provider_lower};
  segment.beta = Allocation{segment.provider_upper,
                            total - segment.provider_upper};
  return segment;
}

Allocation shapley(const IsrGame& game) {
  const Util& total = game.operational_total();
  Allocation out;
  out.provider_share = (total + game.traditional_provider() -
                        game.traditional_receiver()) /
                       2;
  out.receiver_share = (total + game.traditional_receiver() -
                        game.traditional_provider()) /
                       2;
  return out;
}

Verdict classify(const IsrGame& game, const Allocation& proposal) {
  Verdict verdict;

  if (proposal.provider_share < 0) {
    verdict.violations.push_back({ViolatedCondition::Kind::NonNegativity,
                                  FirmSide::Provider,
                                  -proposal.provider_share});
  }
  if (proposal.receiver_share < 0) {
    verdict.violations.push_back({ViolatedCondition::Kind::NonNegativity,
                                  FirmSide::Receiver,
                                  -proposal.receiver_share});
  }

  const Util gap = proposal.provider_share + proposal.receiver_share -
                   game.operational_total();
  if (gap != 0) {
    verdict.violations.push_back(
        {ViolatedCondition::Kind::Efficiency, std::nullopt, gap});
  }

  if (proposal.provider_share > game.traditional_provider()) {
    verdict.violations.push_back(
        {ViolatedCondition::Kind::IndividualRationality, FirmSide::Provider,
         proposal.provider_share - game.traditional_provider()});
  }
  if (proposal.receiver_share > game.traditional_receiver()) {
    verdict.violations.push_back(
        {ViolatedCondition::Kind::IndividualRationality, FirmSide::Receiver,
         proposal.receiver_share - game.traditional_receiver()});
  }

  verdict.stable = verdict.violations.empty();

  const Allocation fair_point = shapley(game);
  verdict.shapley_distance =
      abs_util(proposal.provider_share - fair_point.provider_share) +
      abs_util(proposal.receiver_share - fair_point.receiver_share);
  verdict.fair = verdict.shapley_distance == 0;
  return verdict;
}

Verdict is_stable(const IsrGame& game, const Allocation& proposal) {
  return classify(game, proposal);
}

Verdict is_fair(const IsrGame& game, const Allocation& proposal) {
  return classify(game, proposal);
}

}  // namespace isr
