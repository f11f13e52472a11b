#include "platelink/frame_codec.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>

#include "platelink/error.hpp"

namespace platelink {

namespace {

constexpr std::uint32_t kCrcPolyReflected = 0xEDB88320;

// Slice-by-8 tables; table[0] is the classic byte-at-a-time table.
struct CrcTables {
  std::uint32_t t[8][256];
  constexpr CrcTables() : t{} {
    for (std::uint32_t i = 0; i < 256; ++i) {
      std::uint32_t c = i;
      for (int k = 0; k < 8; ++k) c = (c & 1) ? (c >> 1) ^ kCrcPolyReflected : c >> 1;
      t[0][i] = c;
    }
    for (std::uint32_t i = 0; i < 256; ++i)
      for (int s = 1; s < 8; ++s) t[s][i] = (t[s - 1][i] >> 8) ^ t[0][t[s - 1][i] & 0xFF];
  }
};

constexpr CrcTables kCrc{};

void put16(std::uint8_t* p, std::uint16_t v) {
  p[0] = static_cast<std::uint8_t>(v >> 8);
  p[1] = static_cast<std::uint8_t>(v);
}

std::uint16_t get16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>((p[0] << 8) | p[1]);
}

std::uint32_t pseudo_header_sum(const Ipv4Address& src, const Ipv4Address& dst,
                                std::uint16_t udp_length) {
  std::uint32_t sum = 0;
  sum += (src.octets[0] << 8) | src.octets[1];
  sum += (src.octets[2] << 8) | src.octets[3];
  sum += (dst.octets[0] << 8) | dst.octets[1];
  sum += (dst.octets[2] << 8) | dst.octets[3];
  sum += 0x0011;
  sum += udp_length;
  return sum;
}

}  // namespace

std::vector<std::uint8_t> map_binary_to_bytes(const BinaryFrame& frame) {
  std::vector<std::uint8_t> out(frame.bits().size());
  std::transform(frame.bits().begin(), frame.bits().end(), out.begin(),
                 [](std::uint8_t bit) { return bit ? std::uint8_t{0xFF} : std::uint8_t{0x00}; });
  return out;
}

std::vector<Payload> chunk_payloads(std::span<const std::uint8_t> data) {
  if (data.empty()) throw EmptyInputError("nothing to chunk: input is empty");
  std::vector<Payload> chunks((data.size() + kPayloadSize - 1) / kPayloadSize);
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    auto part = data.subspan(i * kPayloadSize, std::min(kPayloadSize, data.size() - i * kPayloadSize));
    std::copy(part.begin(), part.end(), chunks[i].begin());
  }
  return chunks;
}

std::uint16_t ones_complement_sum(std::span<const std::uint8_t> data, std::uint32_t initial) {
  std::uint64_t sum = initial;
  const std::size_t pairs = data.size() / 2;
  for (std::size_t i = 0; i < pairs; ++i) sum += (std::uint32_t{data[2 * i]} << 8) | data[2 * i + 1];
  if (data.size() % 2) sum += std::uint32_t{data.back()} << 8;
  while (sum >> 16) sum = (sum & 0xFFFF) + (sum >> 16);
  return static_cast<std::uint16_t>(sum);
}

std::uint16_t ip_header_checksum(std::span<const std::uint8_t> header) {
  if (header.size() != 20)
    throw LengthError("IP header must be 20 octets, got " + std::to_string(header.size()));
  return static_cast<std::uint16_t>(~ones_complement_sum(header));
}

std::uint16_t udp_checksum(const Ipv4Address& src_ip, const Ipv4Address& dst_ip,
                           std::span<const std::uint8_t> udp_header,
                           std::span<const std::uint8_t> payload, UdpChecksumMode mode) {
  if (mode == UdpChecksumMode::Zero) return 0;
  if (udp_header.size() != 8)
    throw LengthError("UDP header must be 8 octets, got " + std::to_string(udp_header.size()));
  // Length comes from the header itself so the pseudo-header matches it.
  const std::uint16_t udp_length = get16(udp_header.data() + 4);
  std::uint8_t header[8];
  std::copy(udp_header.begin(), udp_header.end(), header);
  header[6] = header[7] = 0;
  std::uint32_t sum = pseudo_header_sum(src_ip, dst_ip, udp_length);
  sum = ones_complement_sum(header, sum);
  sum = ones_complement_sum(payload, sum);
  const auto result = static_cast<std::uint16_t>(~sum);
  return result == 0 ? 0xFFFF : result;
}

std::uint32_t crc32_update(std::uint32_t crc, std::span<const std::uint8_t> data) {
  const std::uint8_t* p = data.data();
  std::size_t n = data.size();
  while (n >= 8) {
    const std::uint32_t lo = crc ^ (std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 |
                                    std::uint32_t{p[2]} << 16 | std::uint32_t{p[3]} << 24);
    crc = kCrc.t[7][lo & 0xFF] ^ kCrc.t[6][(lo >> 8) & 0xFF] ^ kCrc.t[5][(lo >> 16) & 0xFF] ^
          kCrc.t[4][lo >> 24] ^ kCrc.t[3][p[4]] ^ kCrc.t[2][p[5]] ^ kCrc.t[1][p[6]] ^
          kCrc.t[0][p[7]];
    p += 8;
    n -= 8;
  }
  while (n--) crc = (crc >> 8) ^ kCrc.t[0][(crc ^ *p++) & 0xFF];
  return crc;
}

std::uint32_t crc32_fcs(std::span<const std::uint8_t> data) {
  return ~crc32_update(0xFFFFFFFFu, data);
}

EthernetFrame encode_frame(std::span<const std::uint8_t> payload, const NetConfig& cfg,
                           std::uint16_t ip_id) {
  if (payload.size() != kPayloadSize)
    throw LengthError("payload must be 1024 octets, got " + std::to_string(payload.size()));

  EthernetFrame frame;
  std::uint8_t* b = frame.bytes.data();
  std::fill(b, b + 7, std::uint8_t{0x55});
  b[7] = 0xD5;
  std::copy(cfg.dst_mac.octets.begin(), cfg.dst_mac.octets.end(), b + 8);
  std::copy(cfg.src_mac.octets.begin(), cfg.src_mac.octets.end(), b + 14);
  b[20] = 0x08;
  b[21] = cfg.ethertype_mode == EtherTypeMode::PaperFaithful ? 0x88 : 0x00;

  std::uint8_t* ip = b + kIpHeaderOffset;
  ip[0] = 0x45;
  ip[1] = 0x00;
  put16(ip + 2, kIpTotalLength);
  put16(ip + 4, ip_id);
  put16(ip + 6, 0x0000);
  ip[8] = 0x80;
  ip[9] = 0x11;
  std::copy(cfg.src_ip.octets.begin(), cfg.src_ip.octets.end(), ip + 12);
  std::copy(cfg.dst_ip.octets.begin(), cfg.dst_ip.octets.end(), ip + 16);
  put16(ip + 10, ip_header_checksum(std::span<const std::uint8_t>(ip, 20)));

  std::uint8_t* udp = b + kUdpHeaderOffset;
  put16(udp, cfg.src_port);
  put16(udp + 2, cfg.dst_port);
  put16(udp + 4, kUdpLength);
  std::copy(payload.begin(), payload.end(), b + kPayloadOffset);
  put16(udp + 6, udp_checksum(cfg.src_ip, cfg.dst_ip, std::span<const std::uint8_t>(udp, 8),
                              payload, cfg.udp_checksum_mode));

  const std::uint32_t fcs =
      crc32_fcs(std::span<const std::uint8_t>(b + kPreambleSize, kFcsOffset - kPreambleSize));
  for (int i = 0; i < 4; ++i) b[kFcsOffset + i] = static_cast<std::uint8_t>(fcs >> (8 * i));
  return frame;
}

ParsedFrame decode_frame(std::span<const std::uint8_t> bytes, const NetConfig& cfg) {
  if (bytes.size() != kFrameSize)
    throw MalformedFrameError("frame must be 1078 octets, got " + std::to_string(bytes.size()));
  for (std::size_t i = 0; i < 7; ++i)
    if (bytes[i] != 0x55) throw MalformedFrameError("bad preamble octet at offset " + std::to_string(i));
  if (bytes[7] != 0xD5) throw MalformedFrameError("bad start-frame delimiter");

  const std::uint8_t* b = bytes.data();
  ParsedFrame out;
  std::copy(b + 8, b + 14, out.dst_mac.octets.begin());
  std::copy(b + 14, b + 20, out.src_mac.octets.begin());
  out.ethertype = get16(b + 20);

  const std::uint8_t* ip = b + kIpHeaderOffset;
  out.ip_id = get16(ip + 4);
  std::copy(ip + 12, ip + 16, out.src_ip.octets.begin());
  std::copy(ip + 16, ip + 20, out.dst_ip.octets.begin());
  out.ip_checksum_ok = ones_complement_sum(std::span<const std::uint8_t>(ip, 20)) == 0xFFFF;

  const std::uint8_t* udp = b + kUdpHeaderOffset;
  out.src_port = get16(udp);
  out.dst_port = get16(udp + 2);
  out.udp_checksum = get16(udp + 6);
  std::copy(b + kPayloadOffset, b + kFcsOffset, out.payload.begin());
  if (out.udp_checksum == 0) {
    out.udp_checksum_ok = true;  // sender disabled the checksum
  } else {
    std::uint32_t sum = pseudo_header_sum(out.src_ip, out.dst_ip, get16(udp + 4));
    sum = ones_complement_sum(std::span<const std::uint8_t>(udp, 8), sum);
    out.udp_checksum_ok = ones_complement_sum(out.payload, sum) == 0xFFFF;
  }

  out.fcs = std::uint32_t{b[kFcsOffset]} | std::uint32_t{b[kFcsOffset + 1]} << 8 |
            std::uint32_t{b[kFcsOffset + 2]} << 16 | std::uint32_t{b[kFcsOffset + 3]} << 24;
  out.fcs_ok =
      crc32_fcs(std::span<const std::uint8_t>(b + kPreambleSize, kFcsOffset - kPreambleSize)) == out.fcs;
  out.addressed_to_us = out.dst_mac == cfg.local_mac();
  return out;
}

BinaryFrame reassemble_payloads(std::span<const Payload> payloads, std::size_t width,
                                std::size_t height) {
  const std::size_t total = width * height;
  if (total == 0) throw DimensionError("cannot reassemble an empty image");
  if (payloads.size() * kPayloadSize < total)
    throw MissingPacketError("image needs " + std::to_string((total + kPayloadSize - 1) / kPayloadSize) +
                                 " payloads, got " + std::to_string(payloads.size()),
                             {});
  std::vector<std::uint8_t> bits(total);
  for (std::size_t offset = 0; offset < total; ++offset) {
    const std::uint8_t octet = payloads[offset / kPayloadSize][offset % kPayloadSize];
    if (octet == 0xFF)
      bits[offset] = 1;
    else if (octet != 0x00)
      throw PayloadCorruptionError("payload octet 0x" + [&] {
        char hex[3];
        std::snprintf(hex, sizeof hex, "%02X", octet);
        return std::string(hex);
      }() + " at image offset " + std::to_string(offset) + " is neither 0x00 nor 0xFF");
  }
  return BinaryFrame(width, height, std::move(bits));
}

BinaryFrame reassemble_image(std::span<const ParsedFrame> frames, std::size_t width,
                             std::size_t height) {
  const std::size_t total = width * height;
  if (total == 0) throw DimensionError("cannot reassemble an empty image");
  const std::size_t needed = (total + kPayloadSize - 1) / kPayloadSize;
  if (needed > 0x10000) throw DimensionError("image needs more frames than ip_id can number");
  if (frames.empty()) throw MissingPacketError("no frames received", {});

  std::map<std::uint16_t, const ParsedFrame*> by_id;
  for (const auto& f : frames) {
    if (!f.valid() || !f.addressed_to_us)
      throw MalformedFrameError("frame ip_id " + std::to_string(f.ip_id) +
                                " failed validation or is not addressed to this station");
    auto [it, inserted] = by_id.emplace(f.ip_id, &f);
    if (!inserted && it->second->payload != f.payload)
      throw PayloadCorruptionError("two different payloads carry ip_id " + std::to_string(f.ip_id));
  }

  // The sequence starts right after the widest hole in the circular id space.
  std::uint16_t start = by_id.begin()->first;
  std::uint32_t widest = 0;
  for (auto it = by_id.begin(); it != by_id.end(); ++it) {
    auto next = std::next(it);
    const std::uint32_t next_id = next == by_id.end() ? by_id.begin()->first + 0x10000u : next->first;
    const std::uint32_t hole = next_id - it->first;
    if (hole > widest) {
      widest = hole;
      start = static_cast<std::uint16_t>(next_id);
    }
  }

  std::vector<Payload> ordered;
  std::vector<std::uint16_t> missing;
  ordered.reserve(needed);
  for (std::size_t i = 0; i < needed; ++i) {
    const auto id = static_cast<std::uint16_t>(start + i);
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      missing.push_back(id);
      continue;
    }
    ordered.push_back(it->second->payload);
  }
  if (!missing.empty()) {
    std::string list;
    for (std::size_t i = 0; i < missing.size() && i < 16; ++i)
      list += (i ? "," : "") + std::to_string(missing[i]);
    if (missing.size() > 16) list += ",...";
    throw MissingPacketError(std::to_string(missing.size()) + " packet(s) missing: {" + list + "}",
                             std::move(missing));
  }
  return reassemble_payloads(ordered, width, height);
}

EthernetFrame SenderSession::encode(std::span<const std::uint8_t> payload) {
  std::lock_guard lock(mutex_);
  EthernetFrame frame = encode_frame(payload, cfg_, next_id_);
  ++next_id_;
  return frame;
}

std::uint16_t SenderSession::next_id() const {
  std::lock_guard lock(mutex_);
  return next_id_;
}

}  // namespace platelink
