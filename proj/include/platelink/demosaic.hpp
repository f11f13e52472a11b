#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace platelink {

inline constexpr std::uint16_t kMaxSample = 4095;

// Raster order of the top-left 2x2 quad, e.g. RGGB is R G / G B.
enum class BayerOrder { RGGB, GRBG, GBRG, BGGR };

std::string_view to_string(BayerOrder order);
std::optional<BayerOrder> parse_bayer_order(std::string_view text);

// Single-channel 12-bit mosaic. Samples live in 16-bit cells.
class BayerFrame {
public:
  static constexpr std::size_t kDefaultWidth = 1280;
  static constexpr std::size_t kDefaultHeight = 960;

  // Validates the invariants: even, non-zero dimensions, size match and
  // every sample <= 4095.
  BayerFrame(std::size_t width, std::size_t height, BayerOrder order,
             std::vector<std::uint16_t> samples);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  BayerOrder order() const { return order_; }
  std::span<const std::uint16_t> samples() const { return samples_; }
  std::span<const std::uint16_t> row(std::size_t y) const {
    return std::span(samples_).subspan(y * width_, width_);
  }
  std::uint16_t at(std::size_t y, std::size_t x) const { return samples_[y * width_ + x]; }

private:
  std::size_t width_;
  std::size_t height_;
  BayerOrder order_;
  std::vector<std::uint16_t> samples_;
};

struct Rgb12 {
  std::uint16_t r = 0;
  std::uint16_t g = 0;
  std::uint16_t b = 0;

  friend bool operator==(const Rgb12&, const Rgb12&) = default;
};

class RgbFrame {
public:
  RgbFrame() = default;
  RgbFrame(std::size_t width, std::size_t height, Rgb12 fill = {});
  // Throws RangeError when any channel exceeds 4095.
  RgbFrame(std::size_t width, std::size_t height, std::vector<Rgb12> pixels);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::span<const Rgb12> pixels() const { return pixels_; }
  std::span<Rgb12> pixels() { return pixels_; }
  std::span<const Rgb12> row(std::size_t y) const {
    return std::span(pixels_).subspan(y * width_, width_);
  }
  const Rgb12& at(std::size_t y, std::size_t x) const { return pixels_[y * width_ + x]; }
  Rgb12& at(std::size_t y, std::size_t x) { return pixels_[y * width_ + x]; }

  friend bool operator==(const RgbFrame&, const RgbFrame&) = default;

private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<Rgb12> pixels_;
};

// Bins each non-overlapping 2x2 quad into one RGB pixel: R and B are taken
// from their photosites, G is floor((G1 + G2) / 2). Output is half size.
RgbFrame demosaic_downsample(const BayerFrame& frame);

// Converts a single quad given as its two rows (each two samples wide).
Rgb12 demosaic_quad(BayerOrder order, std::uint16_t top_left, std::uint16_t top_right,
                    std::uint16_t bottom_left, std::uint16_t bottom_right);

// Streaming variant mirroring the two line taps of the camera front end: rows
// are pushed one at a time and at most two are resident. Every second row
// completes an output row.
class RowPairDemosaicer {
public:
  RowPairDemosaicer(std::size_t width, BayerOrder order);

  // Returns the finished output row after every odd input row, else nullopt.
  std::optional<std::vector<Rgb12>> push_row(std::span<const std::uint16_t> row);

  std::size_t rows_seen() const { return rows_seen_; }

private:
  std::size_t width_;
  BayerOrder order_;
  std::vector<std::uint16_t> tap_;
  std::size_t rows_seen_ = 0;
};

}  // namespace platelink
