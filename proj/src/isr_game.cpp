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

#include "isr/isr_game.hpp"

#include <utility>

#include "isr/errors.hpp"

namespace isr {

std::string to_string(FirmSide side) {
  return side == FirmSide::Provider ? "provider" : "receiver";
}

namespace {

void require_non_negative(const Util& value, const char* what) {
  if (value < 0) throw NegativeCost(what, value);
}

void validate(const FirmRole& provider, const FirmRole& receiver,
              const TraditionalCosts& traditional,
              const Util& operational_total) {
  if (provider.side != FirmSide::Provider ||
      receiver.side != FirmSide::Receiver) {
    throw Error("a relation needs exactly one provider and one receiver");
  }
  require_non_negative(traditional.discharge, "traditional discharge");
  require_non_negative(traditional.purchasing, "traditional purchasing");
  require_non_negative(operational_total, "operational total");

  const Util combined = traditional.discharge + traditional.purchasing;
  if (operational_total > combined) {
    throw InfeasibleIsr(operational_total, combined);
  }
}

}  // namespace

IsrGame build_isr_game(FirmRole provider, FirmRole receiver,
                       TraditionalCosts traditional, Util operational_total) {
  validate(provider, receiver, traditional, operational_total);
  return IsrGame(std::move(provider), std::move(receiver),
                 std::move(operational_total), std::move(traditional.discharge),
                 std::move(traditional.purchasing), std::nullopt);
}

IsrGame build_isr_game(FirmRole provider, FirmRole receiver,
                       TraditionalCosts traditional,
                       OperationalBreakdown operational) {
  require_non_negative(operational.treatment, "operational treatment");
  require_non_negative(operational.transportation, "operational transportation");
  require_non_negative(operational.transaction, "operational transaction");
  Util total = operational.total();
  validate(provider, receiver, traditional, total);
  return IsrGame(std::move(provider), std::move(receiver), std::move(total),
                 std::move(traditional.discharge),
                 std::move(traditional.purchasing), std::move(operational));
}

TUGame to_tu_game(const IsrGame& game) {
  std::vector<PlayerId> players{{0, game.provider().label},
                                {1, game.receiver().label}};
  // masks: 0 = {}, 1 = {provider}, 2 = {receiver}, 3 = both
  std::vector<Util> costs{Util(0), game.traditional_provider(),
                          game.traditional_receiver(),
                          game.operational_total()};
  return TUGame(std::move(players), std::move(costs));
}

Util total_saving(const IsrGame& game) {
  return game.traditional_provider() + game.traditional_receiver() -
         game.operational_total();
}

}  // namespace isr
