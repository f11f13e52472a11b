#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace platelink {

struct MacAddress {
  std::array<std::uint8_t, 6> octets{};

  // Colon-separated hex, e.g. "02:00:00:00:00:01".
  static std::optional<MacAddress> parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const MacAddress&, const MacAddress&) = default;
};

struct Ipv4Address {
  std::array<std::uint8_t, 4> octets{};

  // Dotted quad.
  static std::optional<Ipv4Address> parse(std::string_view text);
  std::string to_string() const;
  std::uint32_t to_host_order() const {
    return (std::uint32_t{octets[0]} << 24) | (std::uint32_t{octets[1]} << 16) |
           (std::uint32_t{octets[2]} << 8) | std::uint32_t{octets[3]};
  }
  friend bool operator==(const Ipv4Address&, const Ipv4Address&) = default;
};

enum class EtherTypeMode {
  // Bytes 08 88 exactly as laid out in the board's frame table.
  PaperFaithful,
  // IPv4 EtherType 08 00, parseable by ordinary capture tools.
  Standard,
};

enum class UdpChecksumMode { Rfc768, Zero };

struct NetConfig {
  MacAddress src_mac{{0x02, 0x00, 0x00, 0x00, 0x00, 0x01}};
  MacAddress dst_mac{{0x02, 0x00, 0x00, 0x00, 0x00, 0x02}};
  Ipv4Address src_ip{{192, 168, 1, 1}};
  Ipv4Address dst_ip{{192, 168, 1, 2}};
  std::uint16_t src_port = 5000;
  std::uint16_t dst_port = 5001;
  EtherTypeMode ethertype_mode = EtherTypeMode::PaperFaithful;
  UdpChecksumMode udp_checksum_mode = UdpChecksumMode::Rfc768;

  // The receiving station's own MAC. Both ends share one config, so the
  // receiver is whoever the sender addresses.
  const MacAddress& local_mac() const { return dst_mac; }
};

}  // namespace platelink
