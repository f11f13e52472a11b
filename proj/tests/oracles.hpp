#pragma once

// Independent reference implementations used only by tests. None of these
// share code with the library paths they check.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "platelink/colorspace.hpp"
#include "platelink/demosaic.hpp"
#include "platelink/detector.hpp"

namespace oracle {

// CRC-32 one bit at a time, straight from the reflected polynomial.
inline std::uint32_t crc32_bitwise(std::span<const std::uint8_t> data) {
  std::uint32_t crc = 0xFFFFFFFFu;
  for (std::uint8_t byte : data) {
    for (int bit = 0; bit < 8; ++bit) {
      const bool mix = ((crc ^ (byte >> bit)) & 1u) != 0;
      crc >>= 1;
      if (mix) crc ^= 0xEDB88320u;
    }
  }
  return ~crc;
}

// Ones-complement addition with the end-around carry applied per word.
inline std::uint16_t ones_add(std::uint16_t a, std::uint16_t b) {
  std::uint32_t s = std::uint32_t{a} + b;
  return static_cast<std::uint16_t>((s & 0xFFFF) + (s >> 16));
}

inline std::uint16_t word_sum(std::span<const std::uint8_t> data, std::uint16_t acc = 0) {
  for (std::size_t i = 0; i < data.size(); i += 2) {
    const std::uint8_t hi = data[i];
    const std::uint8_t lo = i + 1 < data.size() ? data[i + 1] : 0;
    acc = ones_add(acc, static_cast<std::uint16_t>(hi << 8 | lo));
  }
  return acc;
}

// Quad binning by looking each role up in the order's spelling.
inline platelink::Rgb12 demosaic_quad(const std::string& order, std::uint16_t tl, std::uint16_t tr,
                                      std::uint16_t bl, std::uint16_t br) {
  const std::uint16_t v[4] = {tl, tr, bl, br};
  int r = -1, b = -1, g_sum = 0;
  for (int i = 0; i < 4; ++i) {
    if (order[i] == 'R') r = v[i];
    else if (order[i] == 'B') b = v[i];
    else g_sum += v[i];
  }
  return {static_cast<std::uint16_t>(r), static_cast<std::uint16_t>(g_sum / 2),
          static_cast<std::uint16_t>(b)};
}

// Runs by counting forward from every pixel that starts one.
inline std::vector<platelink::Run> runs(const std::vector<bool>& yellow, std::size_t min_run) {
  std::vector<platelink::Run> out;
  for (std::size_t x = 0; x < yellow.size(); ++x) {
    if (!yellow[x] || (x > 0 && yellow[x - 1])) continue;
    std::size_t len = 0;
    while (x + len < yellow.size() && yellow[x + len]) ++len;
    if (len >= min_run) out.push_back({x, len});
  }
  return out;
}

struct Detection {
  std::optional<platelink::PlateRegion> region;
  std::vector<bool> binary;  // row-major
};

// Classify everything first, then apply the band/gap rule over per-row
// qualification flags, then take the bounding box of qualifying runs.
inline Detection detect(const platelink::RgbFrame& frame, const platelink::DetectorConfig& cfg) {
  const std::size_t w = frame.width(), h = frame.height();
  std::vector<std::vector<bool>> yellow(h, std::vector<bool>(w));
  for (std::size_t y = 0; y < h; ++y)
    for (std::size_t x = 0; x < w; ++x) {
      const auto hsv = platelink::rgb_to_hsv(frame.at(y, x));
      yellow[y][x] = hsv.h >= cfg.window.h_min && hsv.h <= cfg.window.h_max &&
                     hsv.s >= cfg.window.s_min && hsv.v >= cfg.window.v_min;
    }
  std::vector<std::vector<platelink::Run>> row_runs(h);
  for (std::size_t y = 0; y < h; ++y) row_runs[y] = runs(yellow[y], cfg.min_run);

  Detection out;
  out.binary.assign(w * h, false);
  std::size_t top = h;
  for (std::size_t y = 0; y < h; ++y)
    if (!row_runs[y].empty()) {
      top = y;
      break;
    }
  if (top == h) return out;

  // Band ends at the first stretch of more than max_row_gap empty rows.
  std::size_t bottom = top;
  for (std::size_t y = top + 1; y < h; ++y) {
    if (!row_runs[y].empty()) {
      bottom = y;
      continue;
    }
    std::size_t empty = 0;
    while (y + empty < h && row_runs[y + empty].empty()) ++empty;
    if (empty > cfg.max_row_gap) break;
    y += empty - 1;
  }

  platelink::PlateRegion r{top, bottom, w, 0};
  for (std::size_t y = top; y <= bottom; ++y)
    for (const auto& run : row_runs[y]) {
      r.left = std::min(r.left, run.start);
      r.right = std::max(r.right, run.start + run.length - 1);
    }
  for (std::size_t y = r.top; y <= r.bottom; ++y)
    for (std::size_t x = r.left; x <= r.right; ++x) out.binary[y * w + x] = yellow[y][x];
  out.region = r;
  return out;
}

// Random frame: noise with planted yellow rectangles of random sizes.
inline platelink::RgbFrame random_plate_frame(std::mt19937_64& rng, std::size_t max_side = 128,
                                              int max_rects = 3) {
  std::uniform_int_distribution<std::size_t> side(1, max_side);
  const std::size_t w = side(rng), h = side(rng);
  platelink::RgbFrame frame(w, h);
  std::uniform_int_distribution<int> ch(0, 4095);
  std::bernoulli_distribution sparse_yellow(0.05);
  for (auto& p : frame.pixels()) {
    if (sparse_yellow(rng))
      p = {4095, 3500, 200};
    else
      p = {static_cast<std::uint16_t>(ch(rng)), static_cast<std::uint16_t>(ch(rng)),
           static_cast<std::uint16_t>(ch(rng))};
  }
  std::uniform_int_distribution<int> nrects(0, max_rects);
  const int n = nrects(rng);
  for (int i = 0; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> x0(0, w - 1), y0(0, h - 1);
    const std::size_t l = x0(rng), t = y0(rng);
    std::uniform_int_distribution<std::size_t> rw(1, w - l), rh(1, h - t);
    const std::size_t rwidth = rw(rng), rheight = rh(rng);
    std::uniform_int_distribution<int> gy(2500, 4095);
    for (std::size_t y = t; y < t + rheight; ++y)
      for (std::size_t x = l; x < l + rwidth; ++x) {
        const auto r = static_cast<std::uint16_t>(gy(rng));
        frame.at(y, x) = {r, static_cast<std::uint16_t>(r * 0.85), static_cast<std::uint16_t>(r * 0.1)};
      }
  }
  return frame;
}

}  // namespace oracle
