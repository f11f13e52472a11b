#include "platelink/colorspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "platelink/error.hpp"

namespace platelink {

void YellowWindow::validate() const {
  if (!(h_min >= 0.0 && h_min < h_max && h_max < 360.0))
    throw RangeError("yellow window needs 0 <= h_min < h_max < 360");
  if (!(s_min >= 0.0 && s_min <= 1.0) || !(v_min >= 0.0 && v_min <= 1.0))
    throw RangeError("yellow window s_min and v_min must lie in [0, 1]");
}

namespace {

HsvPixel hexcone(int r, int g, int b) {
  const int hi = std::max({r, g, b});
  const int lo = std::min({r, g, b});
  HsvPixel out;
  out.v = hi / double{kMaxSample};
  if (hi == 0 || hi == lo) return out;  // achromatic: h = s = 0
  const double delta = hi - lo;
  out.s = delta / hi;
  double h;
  if (hi == r)
    h = 60.0 * ((g - b) / delta);
  else if (hi == g)
    h = 60.0 * ((b - r) / delta + 2.0);
  else
    h = 60.0 * ((r - g) / delta + 4.0);
  if (h < 0.0) h += 360.0;
  if (h >= 360.0) h -= 360.0;
  out.h = h;
  return out;
}

}  // namespace

HsvPixel rgb_to_hsv(Rgb12 pixel) {
  if (pixel.r > kMaxSample || pixel.g > kMaxSample || pixel.b > kMaxSample)
    throw RangeError("rgb channel exceeds 4095: (" + std::to_string(pixel.r) + ", " +
                     std::to_string(pixel.g) + ", " + std::to_string(pixel.b) + ")");
  return hexcone(pixel.r, pixel.g, pixel.b);
}

Rgb12 hsv_to_rgb(const HsvPixel& pixel) {
  const double c = pixel.v * pixel.s;
  const double hp = pixel.h / 60.0;
  const double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(hp) % 6) {
    case 0: r = c; g = x; break;
    case 1: r = x; g = c; break;
    case 2: g = c; b = x; break;
    case 3: g = x; b = c; break;
    case 4: r = x; b = c; break;
    default: r = c; b = x; break;
  }
  const double m = pixel.v - c;
  auto quantize = [](double unit) {
    return static_cast<std::uint16_t>(std::clamp(std::lround(unit * kMaxSample), 0L, long{kMaxSample}));
  };
  return {quantize(r + m), quantize(g + m), quantize(b + m)};
}

bool is_yellow(Rgb12 pixel, const YellowWindow& window) {
  return classify_yellow(hexcone(pixel.r, pixel.g, pixel.b), window);
}

}  // namespace platelink
