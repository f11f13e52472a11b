#include "platelink/net_types.hpp"

#include <charconv>
#include <cstdio>

namespace platelink {

namespace {

template <std::size_t N>
bool parse_fields(std::string_view text, char sep, int base, unsigned max,
                  std::array<std::uint8_t, N>& out) {
  std::size_t field = 0;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  while (field < N) {
    unsigned value = 0;
    auto [next, ec] = std::from_chars(p, end, value, base);
    if (ec != std::errc{} || next == p || value > max || next - p > (base == 16 ? 2 : 3))
      return false;
    out[field++] = static_cast<std::uint8_t>(value);
    p = next;
    if (field < N) {
      if (p == end || *p != sep) return false;
      ++p;
    }
  }
  return p == end;
}

}  // namespace

std::optional<MacAddress> MacAddress::parse(std::string_view text) {
  MacAddress mac;
  if (!parse_fields(text, ':', 16, 0xFF, mac.octets)) return std::nullopt;
  return mac;
}

std::string MacAddress::to_string() const {
  char buf[18];
  std::snprintf(buf, sizeof buf, "%02x:%02x:%02x:%02x:%02x:%02x", octets[0], octets[1],
                octets[2], octets[3], octets[4], octets[5]);
  return buf;
}

std::optional<Ipv4Address> Ipv4Address::parse(std::string_view text) {
  Ipv4Address ip;
  if (!parse_fields(text, '.', 10, 255, ip.octets)) return std::nullopt;
  return ip;
}

std::string Ipv4Address::to_string() const {
  return std::to_string(octets[0]) + "." + std::to_string(octets[1]) + "." +
         std::to_string(octets[2]) + "." + std::to_string(octets[3]);
}

}  // namespace platelink
