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

#ifndef ISR_SVG_PLOT_HPP
#define ISR_SVG_PLOT_HPP

#include <string>

#include "isr/allocation.hpp"
#include "isr/isr_game.hpp"

namespace isr {

// Renders the allocation diagram as SVG 1.1: provider share on the
// horizontal axis, receiver share on the vertical axis, the efficiency line
// from (0, total) to (total, 0), the stable segment with endpoints labeled
// alpha and beta, the Shapley point labeled gamma, and dashed guides at each
// firm's traditional cost and stable floor. All geometry is computed in
// rationals and quantized to 1/1000 of a viewBox unit, so identical inputs
// give byte-identical output.
//
// Throws MismatchedInputs when the segment or the point does not lie on the
// game's efficiency line.
std::string render_core_plot(const CoreSegment& segment,
                             const Allocation& shapley_point,
                             const IsrGame& game);

}  // namespace isr

#endif  // ISR_SVG_PLOT_HPP
