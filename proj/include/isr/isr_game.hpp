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

#ifndef ISR_ISR_GAME_HPP
#define ISR_ISR_GAME_HPP

#include <optional>
#include <string>

#include "isr/tu_game.hpp"

namespace isr {

// The two sides of a bilateral symbiotic relation: the provider ships its
// excess resource, the receiver uses it in place of a purchased input.
enum class FirmSide { Provider, Receiver };

std::string to_string(FirmSide side);

struct FirmRole {
  FirmSide side = FirmSide::Provider;
  std::string label;
};

// Itemized operational cost of running the relation.
struct OperationalBreakdown {
  Util treatment;
  Util transportation;
  Util transaction;

  Util total() const { return treatment + transportation + transaction; }
};

// Stand-alone costs without the relation: the provider pays to discharge its
// excess resource, the receiver pays to purchase its input.
struct TraditionalCosts {
  Util discharge;
  Util purchasing;
};

// A validated bilateral cost game. Invariants, enforced at construction:
// all totals are >= 0, the pooled operational total never exceeds the
// combined traditional costs (feasibility), and a stored breakdown sums to
// the operational total exactly. Immutable; safe to share across threads.
class IsrGame {
 public:
  const FirmRole& provider() const { return provider_; }
  const FirmRole& receiver() const { return receiver_; }
  const Util& operational_total() const { return operational_total_; }
  const Util& traditional_provider() const { return traditional_provider_; }
  const Util& traditional_receiver() const { return traditional_receiver_; }
  const Util& traditional(FirmSide side) const {
    return side == FirmSide::Provider ? traditional_provider_
                                      : traditional_receiver_;
  }
  const std::optional<OperationalBreakdown>& breakdown() const {
    return breakdown_;
  }

 private:
  friend IsrGame build_isr_game(FirmRole, FirmRole, TraditionalCosts, Util);
  friend IsrGame build_isr_game(FirmRole, FirmRole, TraditionalCosts,
                                OperationalBreakdown);
  IsrGame(FirmRole provider, FirmRole receiver, Util operational_total,
          Util traditional_provider, Util traditional_receiver,
          std::optional<OperationalBreakdown> breakdown)
      : provider_(std::move(provider)),
        receiver_(std::move(receiver)),
        operational_total_(std::move(operational_total)),
        traditional_provider_(std::move(traditional_provider)),
        traditional_receiver_(std::move(traditional_receiver)),
        breakdown_(std::move(breakdown)) {}

  FirmRole provider_;
  FirmRole receiver_;
  Util operational_total_;
  Util traditional_provider_;
  Util traditional_receiver_;
  std::optional<OperationalBreakdown> breakdown_;
};

// Builds a validated relation from a pooled operational total. Throws
// NegativeCost or InfeasibleIsr; the latter reports both totals so a caller
// can explain the rejection.
IsrGame build_isr_game(FirmRole provider, FirmRole receiver,
                       TraditionalCosts traditional, Util operational_total);

// Same, from an itemized operational breakdown (total = component sum).
IsrGame build_isr_game(FirmRole provider, FirmRole receiver,
                       TraditionalCosts traditional,
                       OperationalBreakdown operational);

// The relation as a two-player cost game: player 0 is the provider, player 1
// the receiver; singleton costs are the traditional costs and the grand
// coalition pays the operational total.
TUGame to_tu_game(const IsrGame& game);

// Combined traditional cost minus the operational total; >= 0 for every
// constructible game.
Util total_saving(const IsrGame& game);

}  // namespace isr

#endif  // ISR_ISR_GAME_HPP
