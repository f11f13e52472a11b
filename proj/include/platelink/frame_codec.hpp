#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "platelink/detector.hpp"
#include "platelink/net_types.hpp"

namespace platelink {

inline constexpr std::size_t kPayloadSize = 1024;
inline constexpr std::size_t kFrameSize = 1078;
inline constexpr std::size_t kPreambleSize = 8;
inline constexpr std::size_t kFcsOffset = 1074;
inline constexpr std::size_t kPayloadOffset = 50;
inline constexpr std::size_t kIpHeaderOffset = 22;
inline constexpr std::size_t kUdpHeaderOffset = 42;
inline constexpr std::uint16_t kIpTotalLength = 20 + 8 + kPayloadSize;  // 0x041C
inline constexpr std::uint16_t kUdpLength = 8 + kPayloadSize;           // 0x0408
// crc32_fcs over any message followed by its own FCS (least significant
// octet first) always yields this value.
inline constexpr std::uint32_t kCrc32Residue = 0x2144DF1C;

using Payload = std::array<std::uint8_t, kPayloadSize>;

// One wire frame, preamble through FCS.
struct EthernetFrame {
  std::array<std::uint8_t, kFrameSize> bytes{};

  // Octets a capture stores: destination MAC through FCS.
  std::span<const std::uint8_t> without_preamble() const {
    return std::span(bytes).subspan(kPreambleSize);
  }
  friend bool operator==(const EthernetFrame&, const EthernetFrame&) = default;
};

struct ParsedFrame {
  MacAddress dst_mac;
  MacAddress src_mac;
  std::uint16_t ethertype = 0;
  Ipv4Address src_ip;
  Ipv4Address dst_ip;
  std::uint16_t src_port = 0;
  std::uint16_t dst_port = 0;
  std::uint16_t ip_id = 0;
  std::uint16_t udp_checksum = 0;
  std::uint32_t fcs = 0;
  Payload payload{};

  bool fcs_ok = false;
  bool ip_checksum_ok = false;
  bool udp_checksum_ok = false;
  bool addressed_to_us = false;

  bool valid() const { return fcs_ok && ip_checksum_ok && udp_checksum_ok; }
};

// One octet per pixel, row-major: white -> 0xFF, black -> 0x00.
std::vector<std::uint8_t> map_binary_to_bytes(const BinaryFrame& frame);

// Splits into 1024-octet payloads, zero-padding the last. Throws
// EmptyInputError for empty input.
std::vector<Payload> chunk_payloads(std::span<const std::uint8_t> data);

// Internet checksum of a 20-octet header whose checksum field is zero.
// Throws LengthError on any other length.
std::uint16_t ip_header_checksum(std::span<const std::uint8_t> header);

// Ones-complement 16-bit sum (not complemented) of big-endian words, with an
// odd trailing octet padded by zero. Carries are folded.
std::uint16_t ones_complement_sum(std::span<const std::uint8_t> data,
                                  std::uint32_t initial = 0);

// UDP checksum with the IPv4 pseudo-header. A computed zero is sent as
// 0xFFFF; Zero mode always yields 0 (checksum disabled).
std::uint16_t udp_checksum(const Ipv4Address& src_ip, const Ipv4Address& dst_ip,
                           std::span<const std::uint8_t> udp_header,
                           std::span<const std::uint8_t> payload, UdpChecksumMode mode);

// Ethernet CRC-32 (reflected 0x04C11DB7, init and final xor all ones).
std::uint32_t crc32_fcs(std::span<const std::uint8_t> data);
// Incremental form: start with 0xFFFFFFFF, finish by complementing.
std::uint32_t crc32_update(std::uint32_t state, std::span<const std::uint8_t> data);

EthernetFrame encode_frame(std::span<const std::uint8_t> payload, const NetConfig& cfg,
                           std::uint16_t ip_id);

// Validates length and preamble/SFD (throwing MalformedFrameError), then
// parses every field. Checksum failures only clear their flag.
ParsedFrame decode_frame(std::span<const std::uint8_t> bytes, const NetConfig& cfg);

// Orders frames by ip_id (wrapping modulo 2^16), concatenates their payloads
// and maps them back to pixels. Throws MissingPacketError for sequence gaps
// and PayloadCorruptionError for octets other than 0x00/0xFF.
BinaryFrame reassemble_image(std::span<const ParsedFrame> frames, std::size_t width,
                             std::size_t height);

// Same as reassemble_image for payloads that are already in order.
BinaryFrame reassemble_payloads(std::span<const Payload> payloads, std::size_t width,
                                std::size_t height);

// Owns the ip_id sequence of one sender. Calls may come from several threads;
// each frame still gets the next number.
class SenderSession {
public:
  explicit SenderSession(NetConfig cfg, std::uint16_t first_id = 0)
      : cfg_(std::move(cfg)), next_id_(first_id) {}

  EthernetFrame encode(std::span<const std::uint8_t> payload);
  std::uint16_t next_id() const;
  const NetConfig& config() const { return cfg_; }

private:
  NetConfig cfg_;
  mutable std::mutex mutex_;
  std::uint16_t next_id_;
};

}  // namespace platelink
