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

#include "isr/svg_plot.hpp"

#include <algorithm>
#include <sstream>

#include "isr/errors.hpp"

namespace isr {

namespace {

constexpr int kSize = 640;    // viewBox is kSize x kSize
constexpr int kMargin = 70;   // plot area inset
constexpr int kSpan = kSize - 2 * kMargin;

// Rounds to the nearest 1/1000 viewBox unit (ties away from zero) and prints
// the result without trailing zeros. All geometry stays rational until here.
std::string quant(const Util& v) {
  const Util scaled = v * 1000;
  const BigInt num = numerator(scaled);
  const BigInt den = denominator(scaled);
  const BigInt milli = (2 * num + (num >= 0 ? den : -den)) / (2 * den);

  const BigInt whole = milli / 1000;
  const BigInt frac = abs(milli % 1000);
  std::string out;
  if (milli < 0 && whole == 0) out += '-';
  out += whole.str();
  if (frac != 0) {
    std::string digits = frac.str();
    digits.insert(digits.begin(), 3 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += '.';
    out += digits;
  }
  return out;
}

struct Frame {
  Util scale;  // viewBox units per util

  Util x(const Util& v) const { return kMargin + v * scale; }
  Util y(const Util& v) const { return kSize - kMargin - v * scale; }
};

void check_on_efficiency_line(const Allocation& a, const Util& total,
                              const char* what) {
  if (a.provider_share + a.receiver_share != total) {
    throw MismatchedInputs(std::string(what) +
                           " does not lie on the efficiency line of the game");
  }
}

void line(std::ostream& out, const std::string& id, const Util& x1,
          const Util& y1, const Util& x2, const Util& y2,
          const std::string& style) {
  out << "  <line";
  if (!id.empty()) out << " id=\"" << id << "\"";
  out << " x1=\"" << quant(x1) << "\" y1=\"" << quant(y1) << "\" x2=\""
      << quant(x2) << "\" y2=\"" << quant(y2) << "\" " << style << "/>\n";
}

void text(std::ostream& out, const Util& x, const Util& y,
          const std::string& anchor, const std::string& content) {
  out << "  <text x=\"" << quant(x) << "\" y=\"" << quant(y)
      << "\" text-anchor=\"" << anchor << "\">" << content << "</text>\n";
}

void marker(std::ostream& out, const std::string& id, const Util& x,
            const Util& y, const std::string& style) {
  out << "  <circle id=\"" << id << "\" cx=\"" << quant(x) << "\" cy=\""
      << quant(y) << "\" " << style << "/>\n";
}

}  // namespace

std::string render_core_plot(const CoreSegment& segment,
                             const Allocation& shapley_point,
                             const IsrGame& game) {
  const Util& total = game.operational_total();
  check_on_efficiency_line(segment.alpha, total, "segment endpoint alpha");
  check_on_efficiency_line(segment.beta, total, "segment endpoint beta");
  check_on_efficiency_line(shapley_point, total, "the shapley point");

  Util axis_max = std::max(
      {total, game.traditional_provider(), game.traditional_receiver(),
       Util(1)});
  axis_max = axis_max * 11 / 10;
  const Frame f{Util(kSpan) / axis_max};

  static const std::string kDash =
      "stroke=\"#b5b5b5\" stroke-width=\"1\" stroke-dasharray=\"6 4\"";

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kSize
      << " " << kSize
      << "\" font-family=\"sans-serif\" font-size=\"13\">\n";
  out << "  <title>stable allocation segment and shapley point</title>\n";

  // axes
  line(out, "axis-x", Util(kMargin), f.y(0), Util(kSize - kMargin / 2), f.y(0),
       "stroke=\"#333333\" stroke-width=\"1.5\"");
  line(out, "axis-y", f.x(0), Util(kMargin / 2), f.x(0), Util(kSize - kMargin),
       "stroke=\"#333333\" stroke-width=\"1.5\"");
  text(out, Util(kSize - kMargin / 2), f.y(0) + 34, "end", "provider share");
  text(out, f.x(0) - 8, Util(kMargin / 2 - 8), "start", "receiver share");
  text(out, f.x(0) - 8, f.y(0) + 18, "end", "0");

  // efficiency line: every split of the operational total
  line(out, "efficiency-line", f.x(0), f.y(total), f.x(total), f.y(0),
       "stroke=\"#999999\" stroke-width=\"1\"");
  if (total > 0) {
    text(out, f.x(total), f.y(0) + 18, "middle", format_util(total));
    text(out, f.x(0) - 8, f.y(total) + 4, "end", format_util(total));
  }

  // dashed guides: each firm's stand-alone cost cap and stable floor
  struct Guide {
    const char* id;
    Util value;      // provider-axis or receiver-axis coordinate
    bool vertical;   // vertical guides mark provider values
    const char* tag;
  };
  const Guide guides[] = {
      {"guide-provider-cap", game.traditional_provider(), true, "cap"},
      {"guide-provider-floor", u_bound(game, FirmSide::Provider), true,
       "floor"},
      {"guide-receiver-cap", game.traditional_receiver(), false, "cap"},
      {"guide-receiver-floor", u_bound(game, FirmSide::Receiver), false,
       "floor"},
  };
  for (const Guide& g : guides) {
    if (g.value < 0 || g.value > total) continue;  // off the plotted triangle
    const Util reach = total - g.value;  // efficiency-line height at the guide
    if (g.vertical) {
      line(out, g.id, f.x(g.value), f.y(0), f.x(g.value), f.y(reach), kDash);
      text(out, f.x(g.value), f.y(0) + 18, "middle", format_util(g.value));
    } else {
      line(out, g.id, f.x(0), f.y(g.value), f.x(reach), f.y(g.value), kDash);
      text(out, f.x(0) - 8, f.y(g.value) + 4, "end", format_util(g.value));
    }
  }

  // stable segment with endpoints, then the shapley point
  const Allocation& a = segment.alpha;
  const Allocation& b = segment.beta;
  line(out, "core-segment", f.x(a.provider_share), f.y(a.receiver_share),
       f.x(b.provider_share), f.y(b.receiver_share),
       "stroke=\"#222222\" stroke-width=\"5\" stroke-linecap=\"round\"");

  const bool degenerate = a == b;
  if (degenerate) {
    marker(out, "alpha", f.x(a.provider_share), f.y(a.receiver_share),
           "r=\"5\" fill=\"#ffffff\" stroke=\"#222222\" stroke-width=\"1.5\"");
    marker(out, "gamma", f.x(shapley_point.provider_share),
           f.y(shapley_point.receiver_share), "r=\"3.5\" fill=\"#c0392b\"");
    text(out, f.x(a.provider_share) + 10, f.y(a.receiver_share) - 8, "start",
         "&#945; = &#946; = &#947;");
  } else {
    marker(out, "alpha", f.x(a.provider_share), f.y(a.receiver_share),
           "r=\"5\" fill=\"#ffffff\" stroke=\"#222222\" stroke-width=\"1.5\"");
    marker(out, "beta", f.x(b.provider_share), f.y(b.receiver_share),
           "r=\"5\" fill=\"#ffffff\" stroke=\"#222222\" stroke-width=\"1.5\"");
    marker(out, "gamma", f.x(shapley_point.provider_share),
           f.y(shapley_point.receiver_share), "r=\"3.5\" fill=\"#c0392b\"");
    text(out, f.x(a.provider_share) + 10, f.y(a.receiver_share) - 8, "start",
         "&#945;");
    text(out, f.x(b.provider_share) + 10, f.y(b.receiver_share) - 8, "start",
         "&#946;");
    text(out, f.x(shapley_point.provider_share) + 10,
         f.y(shapley_point.receiver_share) + 16, "start", "&#947;");
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace isr
