#include "platelink/detector.hpp"

#include <algorithm>
#include <string>

#include "platelink/error.hpp"

namespace platelink {

void DetectorConfig::validate() const {
  window.validate();
  if (min_run < 1) throw RangeError("min_run must be at least 1");
}

BinaryFrame::BinaryFrame(std::size_t width, std::size_t height)
    : width_(width), height_(height), bits_(width * height, 0) {}

BinaryFrame::BinaryFrame(std::size_t width, std::size_t height, std::vector<std::uint8_t> bits)
    : width_(width), height_(height), bits_(std::move(bits)) {
  if (bits_.size() != width_ * height_)
    throw DimensionError("binary frame holds " + std::to_string(bits_.size()) +
                         " bits, expected " + std::to_string(width_ * height_));
  for (auto& b : bits_) b = b ? 1 : 0;
}

std::size_t BinaryFrame::count_set() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

namespace {

// Appends qualifying runs of non-zero mask entries.
void collect_runs(std::span<const std::uint8_t> mask, std::size_t min_run, std::vector<Run>& out) {
  std::size_t x = 0;
  const std::size_t n = mask.size();
  while (x < n) {
    if (!mask[x]) {
      ++x;
      continue;
    }
    const std::size_t start = x;
    while (x < n && mask[x]) ++x;
    if (x - start >= min_run) out.push_back({start, x - start});
  }
}

}  // namespace

std::vector<Run> scan_row_runs(std::span<const HsvPixel> row, const YellowWindow& window,
                               std::size_t min_run) {
  if (min_run < 1) throw RangeError("min_run must be at least 1");
  std::vector<std::uint8_t> mask(row.size());
  std::transform(row.begin(), row.end(), mask.begin(),
                 [&](const HsvPixel& p) { return classify_yellow(p, window) ? 1 : 0; });
  std::vector<Run> runs;
  collect_runs(mask, min_run, runs);
  return runs;
}

DetectionResult detect_plate(const RgbFrame& frame, const DetectorConfig& config) {
  config.validate();
  const std::size_t w = frame.width();
  const std::size_t h = frame.height();

  DetectionResult result;
  result.binary = BinaryFrame(w, h);

  // Yellow mask for every row scanned so far; rows past the band are never
  // classified.
  std::vector<std::uint8_t> mask(w * h, 0);
  std::vector<Run> runs;
  std::optional<PlateRegion> region;
  std::size_t gap = 0;

  for (std::size_t y = 0; y < h; ++y) {
    auto src = frame.row(y);
    std::uint8_t* row_mask = mask.data() + y * w;
    for (std::size_t x = 0; x < w; ++x) row_mask[x] = is_yellow(src[x], config.window) ? 1 : 0;

    runs.clear();
    collect_runs(std::span<const std::uint8_t>(row_mask, w), config.min_run, runs);

    if (!runs.empty()) {
      const std::size_t left = runs.front().start;
      const std::size_t right = runs.back().last();
      if (!region) {
        region = PlateRegion{y, y, left, right};
      } else {
        region->bottom = y;
        region->left = std::min(region->left, left);
        region->right = std::max(region->right, right);
      }
      ++result.qualifying_rows;
      gap = 0;
    } else if (region) {
      if (++gap > config.max_row_gap) break;
    }
  }

  if (region) {
    for (std::size_t y = region->top; y <= region->bottom; ++y)
      for (std::size_t x = region->left; x <= region->right; ++x)
        if (mask[y * w + x]) result.binary.set(y, x, true);
  }
  result.region = region;
  return result;
}

RgbFrame overlay_region(const RgbFrame& frame, const PlateRegion& region) {
  if (region.top > region.bottom || region.left > region.right ||
      region.bottom >= frame.height() || region.right >= frame.width())
    throw BoundsError("region (" + std::to_string(region.top) + "," +
                      std::to_string(region.bottom) + "," + std::to_string(region.left) + "," +
                      std::to_string(region.right) + ") does not fit a " +
                      std::to_string(frame.width()) + "x" + std::to_string(frame.height()) +
                      " frame");
  constexpr Rgb12 kRed{kMaxSample, 0, 0};
  RgbFrame out = frame;
  for (std::size_t x = region.left; x <= region.right; ++x) {
    out.at(region.top, x) = kRed;
    out.at(region.bottom, x) = kRed;
  }
  for (std::size_t y = region.top; y <= region.bottom; ++y) {
    out.at(y, region.left) = kRed;
    out.at(y, region.right) = kRed;
  }
  return out;
}

}  // namespace platelink
