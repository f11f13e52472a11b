#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "platelink/frame_codec.hpp"
#include "platelink/link_model.hpp"

namespace platelink {

// Classic libpcap container, linktype Ethernet (1), microsecond timestamps.
// Records hold frame octets 8..1077: preamble and SFD stripped, FCS kept.
inline constexpr std::uint32_t kPcapMagic = 0xA1B2C3D4;
inline constexpr std::uint32_t kPcapLinktypeEthernet = 1;
inline constexpr std::size_t kPcapGlobalHeaderSize = 24;
inline constexpr std::size_t kPcapRecordHeaderSize = 16;

enum class ByteOrder { Little, Big };

struct CapturedPacket {
  std::uint32_t ts_sec = 0;
  std::uint32_t ts_usec = 0;
  std::uint32_t original_length = 0;
  std::vector<std::uint8_t> data;

  friend bool operator==(const CapturedPacket&, const CapturedPacket&) = default;
};

// Timestamps come from the schedule's start times when one is given, else
// they are zero. Throws LengthError if the schedule is shorter than frames.
std::vector<std::uint8_t> write_capture(std::span<const EthernetFrame> frames,
                                        std::optional<std::span<const TransmissionSlot>> schedule = {},
                                        ByteOrder order = ByteOrder::Little);

// Accepts either byte order of the magic. Throws FormatError for a bad
// header and TruncationError naming the first incomplete record.
std::vector<CapturedPacket> read_capture(std::span<const std::uint8_t> bytes);

// Rebuilds the full wire frame (preamble + SFD prepended) from a stored
// record. Throws MalformedFrameError if the record is not 1070 octets.
EthernetFrame frame_from_capture(const CapturedPacket& packet);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace platelink
