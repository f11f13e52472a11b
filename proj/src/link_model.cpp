#include "platelink/link_model.hpp"

#include <string>

#include "platelink/error.hpp"

namespace platelink {

NibbleStream to_nibbles(std::span<const std::uint8_t> data) {
  NibbleStream out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back({ClockEdge::Rising, static_cast<std::uint8_t>(b >> 4)});
    out.push_back({ClockEdge::Falling, static_cast<std::uint8_t>(b & 0x0F)});
  }
  return out;
}

std::vector<std::uint8_t> from_nibbles(std::span<const Nibble> stream) {
  if (stream.size() % 2 != 0)
    throw FramingError("nibble stream has odd length " + std::to_string(stream.size()));
  std::vector<std::uint8_t> out(stream.size() / 2);
  for (std::size_t i = 0; i < stream.size(); i += 2) {
    const Nibble& hi = stream[i];
    const Nibble& lo = stream[i + 1];
    if (hi.edge != ClockEdge::Rising || lo.edge != ClockEdge::Falling)
      throw FramingError("edge alternation broken at symbol " +
                         std::to_string(hi.edge != ClockEdge::Rising ? i : i + 1));
    if (hi.value > 0xF || lo.value > 0xF)
      throw FramingError("symbol value above 0xF near symbol " + std::to_string(i));
    out[i / 2] = static_cast<std::uint8_t>((hi.value << 4) | lo.value);
  }
  return out;
}

void LineRate::validate() const {
  if (!(bytes_per_second > 0.0)) throw RangeError("line rate must be positive");
}

std::vector<TransmissionSlot> schedule_transmission(std::span<const std::size_t> frame_sizes,
                                                    const LineRate& rate) {
  rate.validate();
  std::vector<TransmissionSlot> out;
  out.reserve(frame_sizes.size());
  std::uint64_t offset = 0;  // byte-times since t = 0
  for (std::size_t size : frame_sizes) {
    out.push_back({offset / rate.bytes_per_second, (offset + size) / rate.bytes_per_second});
    offset += size + rate.interframe_gap;
  }
  return out;
}

double burst_period(std::span<const std::size_t> frame_sizes, const LineRate& rate) {
  rate.validate();
  std::uint64_t total = 0;
  for (std::size_t size : frame_sizes) total += size + rate.interframe_gap;
  return total / rate.bytes_per_second;
}

}  // namespace platelink
