#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "platelink/demosaic.hpp"
#include "platelink/detector.hpp"

namespace platelink {

struct SyntheticScene {
  BayerFrame bayer;
  // Plate rectangle in demosaiced (half-resolution) coordinates.
  std::optional<PlateRegion> plate;
};

// Mosaics a half-resolution RGB scene into a Bayer frame so that demosaicing
// returns the scene exactly.
BayerFrame mosaic(const RgbFrame& scene, BayerOrder order);

// Random street-like scene: textured non-yellow background and, when
// with_plate is set, one yellow plate with dark glyphs confined to its
// middle so its edge rows keep long yellow runs.
SyntheticScene synth_scene(std::size_t width, std::size_t height, BayerOrder order,
                           std::mt19937_64& rng, bool with_plate = true);

}  // namespace platelink
