#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace platelink {

// RGMII double data rate: each octet crosses the link as two 4-bit symbols,
// high nibble on the rising clock edge, low nibble on the falling one.
enum class ClockEdge : std::uint8_t { Rising, Falling };

struct Nibble {
  ClockEdge edge = ClockEdge::Rising;
  std::uint8_t value = 0;  // 0..15

  friend bool operator==(const Nibble&, const Nibble&) = default;
};

using NibbleStream = std::vector<Nibble>;

NibbleStream to_nibbles(std::span<const std::uint8_t> data);

// Throws FramingError on odd length, broken Rising/Falling alternation or a
// symbol value above 0xF.
std::vector<std::uint8_t> from_nibbles(std::span<const Nibble> stream);

struct LineRate {
  double bytes_per_second = 125'000'000.0;
  std::size_t interframe_gap = 12;  // byte-times

  void validate() const;
};

struct TransmissionSlot {
  double start_s = 0.0;
  double end_s = 0.0;
};

// Back-to-back frames separated by the interframe gap, starting at t = 0.
// Times are computed from integer byte-time offsets, so they are exact to
// double rounding (well under 1e-12 s).
std::vector<TransmissionSlot> schedule_transmission(std::span<const std::size_t> frame_sizes,
                                                    const LineRate& rate);

// Wire time a burst occupies including the gap after its last frame, i.e.
// the period between successive bursts sent back to back.
double burst_period(std::span<const std::size_t> frame_sizes, const LineRate& rate);

}  // namespace platelink
