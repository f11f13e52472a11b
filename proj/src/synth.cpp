#include "platelink/synth.hpp"

#include <algorithm>

namespace platelink {

BayerFrame mosaic(const RgbFrame& scene, BayerOrder order) {
  const std::size_t w = scene.width() * 2;
  const std::size_t h = scene.height() * 2;
  std::vector<std::uint16_t> samples(w * h);
  for (std::size_t y = 0; y < scene.height(); ++y) {
    for (std::size_t x = 0; x < scene.width(); ++x) {
      const Rgb12 p = scene.at(y, x);
      std::uint16_t quad[4] = {};  // tl, tr, bl, br
      switch (order) {
        case BayerOrder::RGGB: quad[0] = p.r; quad[1] = p.g; quad[2] = p.g; quad[3] = p.b; break;
        case BayerOrder::GRBG: quad[0] = p.g; quad[1] = p.r; quad[2] = p.b; quad[3] = p.g; break;
        case BayerOrder::GBRG: quad[0] = p.g; quad[1] = p.b; quad[2] = p.r; quad[3] = p.g; break;
        case BayerOrder::BGGR: quad[0] = p.b; quad[1] = p.g; quad[2] = p.g; quad[3] = p.r; break;
      }
      std::uint16_t* top = samples.data() + (2 * y) * w + 2 * x;
      top[0] = quad[0];
      top[1] = quad[1];
      top[w] = quad[2];
      top[w + 1] = quad[3];
    }
  }
  return BayerFrame(w, h, order, std::move(samples));
}

namespace {

std::uint16_t jitter(int base, int amplitude, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-amplitude, amplitude);
  return static_cast<std::uint16_t>(std::clamp(base + d(rng), 0, int{kMaxSample}));
}

}  // namespace

SyntheticScene synth_scene(std::size_t width, std::size_t height, BayerOrder order,
                           std::mt19937_64& rng, bool with_plate) {
  const std::size_t sw = width / 2;
  const std::size_t sh = height / 2;
  RgbFrame scene(sw, sh);

  // Background of 16x16 tiles: greys, blues, reds, greens. Never yellow.
  constexpr Rgb12 kPalette[] = {
      {1200, 1200, 1200}, {2400, 2400, 2400}, {600, 600, 600},  {800, 1200, 2600},
      {2600, 500, 400},   {700, 2000, 800},   {3000, 3000, 3000}, {200, 200, 300},
  };
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kPalette) - 1);
  const std::size_t tiles_x = (sw + 15) / 16;
  std::vector<std::size_t> tile_colour(tiles_x * ((sh + 15) / 16));
  for (auto& t : tile_colour) t = pick(rng);
  for (std::size_t y = 0; y < sh; ++y)
    for (std::size_t x = 0; x < sw; ++x) {
      const Rgb12 c = kPalette[tile_colour[(y / 16) * tiles_x + x / 16]];
      scene.at(y, x) = {jitter(c.r, 60, rng), jitter(c.g, 60, rng), jitter(c.b, 60, rng)};
    }

  SyntheticScene out{BayerFrame(2, 2, order, {0, 0, 0, 0}), std::nullopt};
  if (with_plate && sw >= 8 && sh >= 4) {
    const std::size_t pw = std::max<std::size_t>(4, sw / 4);
    const std::size_t ph = std::max<std::size_t>(2, sh / 12);
    std::uniform_int_distribution<std::size_t> px(0, sw - pw);
    std::uniform_int_distribution<std::size_t> py(0, sh - ph);
    PlateRegion plate{py(rng), 0, px(rng), 0};
    plate.bottom = plate.top + ph - 1;
    plate.right = plate.left + pw - 1;

    // Glyphs sit in the middle 40% so each plate row keeps a 30% yellow margin.
    const std::size_t glyph_l = plate.left + pw * 3 / 10;
    const std::size_t glyph_r = plate.left + pw * 7 / 10;
    const std::size_t glyph_t = plate.top + ph / 4;
    const std::size_t glyph_b = plate.top + ph * 3 / 4;
    for (std::size_t y = plate.top; y <= plate.bottom; ++y)
      for (std::size_t x = plate.left; x <= plate.right; ++x) {
        const bool glyph = y >= glyph_t && y < glyph_b && x >= glyph_l && x < glyph_r &&
                           ((x - glyph_l) / 3) % 3 != 2;
        scene.at(y, x) = glyph ? Rgb12{jitter(300, 40, rng), jitter(300, 40, rng), jitter(300, 40, rng)}
                               : Rgb12{jitter(3600, 60, rng), jitter(3000, 60, rng), jitter(400, 60, rng)};
      }
    out.plate = plate;
  }
  out.bayer = mosaic(scene, order);
  return out;
}

}  // namespace platelink
