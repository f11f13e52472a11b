#include "platelink/demosaic.hpp"

#include <algorithm>
#include <string>

#include "platelink/error.hpp"

namespace platelink {

std::string_view to_string(BayerOrder order) {
  switch (order) {
    case BayerOrder::RGGB: return "RGGB";
    case BayerOrder::GRBG: return "GRBG";
    case BayerOrder::GBRG: return "GBRG";
    case BayerOrder::BGGR: return "BGGR";
  }
  return "?";
}

std::optional<BayerOrder> parse_bayer_order(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (auto order : {BayerOrder::RGGB, BayerOrder::GRBG, BayerOrder::GBRG, BayerOrder::BGGR})
    if (upper == to_string(order)) return order;
  return std::nullopt;
}

BayerFrame::BayerFrame(std::size_t width, std::size_t height, BayerOrder order,
                       std::vector<std::uint16_t> samples)
    : width_(width), height_(height), order_(order), samples_(std::move(samples)) {
  if (width_ == 0 || height_ == 0 || width_ % 2 != 0 || height_ % 2 != 0)
    throw DimensionError("bayer frame must have even, non-zero dimensions, got " +
                         std::to_string(width_) + "x" + std::to_string(height_));
  if (samples_.size() != width_ * height_)
    throw DimensionError("bayer frame holds " + std::to_string(samples_.size()) +
                         " samples, expected " + std::to_string(width_ * height_));
  auto bad = std::find_if(samples_.begin(), samples_.end(),
                          [](std::uint16_t s) { return s > kMaxSample; });
  if (bad != samples_.end())
    throw RangeError("bayer sample " + std::to_string(*bad) + " at index " +
                     std::to_string(bad - samples_.begin()) + " exceeds 4095");
}

RgbFrame::RgbFrame(std::size_t width, std::size_t height, Rgb12 fill)
    : width_(width), height_(height), pixels_(width * height, fill) {
  if (fill.r > kMaxSample || fill.g > kMaxSample || fill.b > kMaxSample)
    throw RangeError("rgb fill exceeds 4095");
}

RgbFrame::RgbFrame(std::size_t width, std::size_t height, std::vector<Rgb12> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (pixels_.size() != width_ * height_)
    throw DimensionError("rgb frame holds " + std::to_string(pixels_.size()) +
                         " pixels, expected " + std::to_string(width_ * height_));
  for (const auto& p : pixels_)
    if (p.r > kMaxSample || p.g > kMaxSample || p.b > kMaxSample)
      throw RangeError("rgb channel exceeds 4095");
}

namespace {

template <BayerOrder Order>
inline Rgb12 bin_quad(std::uint16_t tl, std::uint16_t tr, std::uint16_t bl, std::uint16_t br) {
  if constexpr (Order == BayerOrder::RGGB)
    return {tl, static_cast<std::uint16_t>((tr + bl) / 2), br};
  else if constexpr (Order == BayerOrder::GRBG)
    return {tr, static_cast<std::uint16_t>((tl + br) / 2), bl};
  else if constexpr (Order == BayerOrder::GBRG)
    return {bl, static_cast<std::uint16_t>((tl + br) / 2), tr};
  else
    return {br, static_cast<std::uint16_t>((tr + bl) / 2), tl};
}

template <BayerOrder Order>
void bin_row_pair(const std::uint16_t* top, const std::uint16_t* bottom, std::size_t width,
                  Rgb12* out) {
  for (std::size_t x = 0; x < width; x += 2)
    *out++ = bin_quad<Order>(top[x], top[x + 1], bottom[x], bottom[x + 1]);
}

void bin_row_pair(BayerOrder order, const std::uint16_t* top, const std::uint16_t* bottom,
                  std::size_t width, Rgb12* out) {
  switch (order) {
    case BayerOrder::RGGB: return bin_row_pair<BayerOrder::RGGB>(top, bottom, width, out);
    case BayerOrder::GRBG: return bin_row_pair<BayerOrder::GRBG>(top, bottom, width, out);
    case BayerOrder::GBRG: return bin_row_pair<BayerOrder::GBRG>(top, bottom, width, out);
    case BayerOrder::BGGR: return bin_row_pair<BayerOrder::BGGR>(top, bottom, width, out);
  }
}

}  // namespace

Rgb12 demosaic_quad(BayerOrder order, std::uint16_t top_left, std::uint16_t top_right,
                    std::uint16_t bottom_left, std::uint16_t bottom_right) {
  const std::uint16_t top[2] = {top_left, top_right};
  const std::uint16_t bottom[2] = {bottom_left, bottom_right};
  Rgb12 out;
  bin_row_pair(order, top, bottom, 2, &out);
  return out;
}

RgbFrame demosaic_downsample(const BayerFrame& frame) {
  const std::size_t out_w = frame.width() / 2;
  const std::size_t out_h = frame.height() / 2;
  RgbFrame out(out_w, out_h);
  const std::uint16_t* samples = frame.samples().data();
  Rgb12* dst = out.pixels().data();
  for (std::size_t y = 0; y < out_h; ++y) {
    const std::uint16_t* top = samples + (2 * y) * frame.width();
    bin_row_pair(frame.order(), top, top + frame.width(), frame.width(), dst + y * out_w);
  }
  return out;
}

RowPairDemosaicer::RowPairDemosaicer(std::size_t width, BayerOrder order)
    : width_(width), order_(order) {
  if (width_ == 0 || width_ % 2 != 0)
    throw DimensionError("row width must be even and non-zero, got " + std::to_string(width_));
  tap_.reserve(width_);
}

std::optional<std::vector<Rgb12>> RowPairDemosaicer::push_row(std::span<const std::uint16_t> row) {
  if (row.size() != width_)
    throw DimensionError("row of " + std::to_string(row.size()) + " samples, expected " +
                         std::to_string(width_));
  for (auto s : row)
    if (s > kMaxSample) throw RangeError("bayer sample " + std::to_string(s) + " exceeds 4095");
  ++rows_seen_;
  if (rows_seen_ % 2 == 1) {
    tap_.assign(row.begin(), row.end());
    return std::nullopt;
  }
  std::vector<Rgb12> out(width_ / 2);
  bin_row_pair(order_, tap_.data(), row.data(), width_, out.data());
  return out;
}

}  // namespace platelink
