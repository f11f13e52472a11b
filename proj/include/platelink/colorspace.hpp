#pragma once

#include "platelink/demosaic.hpp"

namespace platelink {

// h in degrees [0, 360), s and v in [0, 1]. Achromatic pixels carry h == 0.
struct HsvPixel {
  double h = 0.0;
  double s = 0.0;
  double v = 0.0;
};

// Inclusive hue bounds plus saturation/value floors.
struct YellowWindow {
  double h_min = 40.0;
  double h_max = 70.0;
  double s_min = 0.35;
  double v_min = 0.30;

  // Throws RangeError unless 0 <= h_min < h_max < 360 and s_min, v_min in [0, 1].
  void validate() const;
};

// Hexcone HSV with channels normalized by 4095. Throws RangeError for
// channels above 4095.
HsvPixel rgb_to_hsv(Rgb12 pixel);

// Inverse hexcone mapping, rounded to the nearest 12-bit code.
Rgb12 hsv_to_rgb(const HsvPixel& pixel);

inline bool classify_yellow(const HsvPixel& pixel, const YellowWindow& window) {
  return pixel.h >= window.h_min && pixel.h <= window.h_max && pixel.s >= window.s_min &&
         pixel.v >= window.v_min;
}

// Same decision as classify_yellow(rgb_to_hsv(pixel), window) without the
// range check; used on the hot path where frames are already validated.
bool is_yellow(Rgb12 pixel, const YellowWindow& window);

}  // namespace platelink
