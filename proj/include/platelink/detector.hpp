#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "platelink/colorspace.hpp"
#include "platelink/demosaic.hpp"

namespace platelink {

struct DetectorConfig {
  YellowWindow window;
  // Shortest run of consecutive yellow pixels that makes a row qualify.
  std::size_t min_run = 32;
  // Non-qualifying rows tolerated inside the plate band before it closes.
  std::size_t max_row_gap = 2;

  void validate() const;
};

struct PlateRegion {
  std::size_t top = 0;
  std::size_t bottom = 0;
  std::size_t left = 0;
  std::size_t right = 0;

  std::size_t width() const { return right - left + 1; }
  std::size_t height() const { return bottom - top + 1; }
  bool contains(std::size_t y, std::size_t x) const {
    return y >= top && y <= bottom && x >= left && x <= right;
  }
  friend bool operator==(const PlateRegion&, const PlateRegion&) = default;
};

// Two-colour scene: 1 = plate background (white), 0 = everything else.
class BinaryFrame {
public:
  BinaryFrame() = default;
  BinaryFrame(std::size_t width, std::size_t height);
  // Throws DimensionError when bits.size() != width * height.
  BinaryFrame(std::size_t width, std::size_t height, std::vector<std::uint8_t> bits);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  bool at(std::size_t y, std::size_t x) const { return bits_[y * width_ + x] != 0; }
  void set(std::size_t y, std::size_t x, bool value) { bits_[y * width_ + x] = value ? 1 : 0; }
  std::size_t count_set() const;

  friend bool operator==(const BinaryFrame&, const BinaryFrame&) = default;

private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> bits_;
};

struct DetectionResult {
  std::optional<PlateRegion> region;
  BinaryFrame binary;
  std::size_t qualifying_rows = 0;
};

struct Run {
  std::size_t start = 0;
  std::size_t length = 0;

  std::size_t last() const { return start + length - 1; }
  friend bool operator==(const Run&, const Run&) = default;
};

// Maximal runs of yellow pixels at least min_run long, left to right.
std::vector<Run> scan_row_runs(std::span<const HsvPixel> row, const YellowWindow& window,
                               std::size_t min_run);

// Raster scan: the first row holding a qualifying run opens the plate band,
// which stays open through up to max_row_gap consecutive non-qualifying rows.
// Only the first band in the frame is reported.
DetectionResult detect_plate(const RgbFrame& frame, const DetectorConfig& config);

// Copy of frame with a one-pixel red border on the region perimeter.
// Throws BoundsError if the region does not fit.
RgbFrame overlay_region(const RgbFrame& frame, const PlateRegion& region);

}  // namespace platelink
