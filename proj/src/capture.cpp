#include "platelink/capture.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <string>

#include "platelink/error.hpp"

namespace platelink {

namespace {

class Writer {
public:
  Writer(std::vector<std::uint8_t>& out, ByteOrder order) : out_(out), order_(order) {}

  void u16(std::uint16_t v) { put(v, 2); }
  void u32(std::uint32_t v) { put(v, 4); }

private:
  void put(std::uint32_t v, int width) {
    for (int i = 0; i < width; ++i) {
      const int shift = order_ == ByteOrder::Little ? 8 * i : 8 * (width - 1 - i);
      out_.push_back(static_cast<std::uint8_t>(v >> shift));
    }
  }

  std::vector<std::uint8_t>& out_;
  ByteOrder order_;
};

std::uint32_t load32(const std::uint8_t* p, ByteOrder order) {
  if (order == ByteOrder::Little)
    return std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 | std::uint32_t{p[2]} << 16 |
           std::uint32_t{p[3]} << 24;
  return std::uint32_t{p[3]} | std::uint32_t{p[2]} << 8 | std::uint32_t{p[1]} << 16 |
         std::uint32_t{p[0]} << 24;
}

}  // namespace

std::vector<std::uint8_t> write_capture(std::span<const EthernetFrame> frames,
                                        std::optional<std::span<const TransmissionSlot>> schedule,
                                        ByteOrder order) {
  if (schedule && schedule->size() < frames.size())
    throw LengthError("schedule has " + std::to_string(schedule->size()) + " slots for " +
                      std::to_string(frames.size()) + " frames");
  constexpr std::uint32_t stored = kFrameSize - kPreambleSize;
  std::vector<std::uint8_t> out;
  out.reserve(kPcapGlobalHeaderSize + frames.size() * (kPcapRecordHeaderSize + stored));
  Writer w(out, order);
  w.u32(kPcapMagic);
  w.u16(2);
  w.u16(4);
  w.u32(0);  // thiszone
  w.u32(0);  // sigfigs
  w.u32(65535);
  w.u32(kPcapLinktypeEthernet);

  for (std::size_t i = 0; i < frames.size(); ++i) {
    std::uint32_t sec = 0, usec = 0;
    if (schedule) {
      const double start = (*schedule)[i].start_s;
      sec = static_cast<std::uint32_t>(start);
      usec = static_cast<std::uint32_t>(std::llround((start - sec) * 1e6));
      if (usec >= 1'000'000) {
        ++sec;
        usec -= 1'000'000;
      }
    }
    w.u32(sec);
    w.u32(usec);
    w.u32(stored);
    w.u32(stored);
    auto data = frames[i].without_preamble();
    out.insert(out.end(), data.begin(), data.end());
  }
  return out;
}

std::vector<CapturedPacket> read_capture(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kPcapGlobalHeaderSize)
    throw FormatError("capture shorter than its 24-octet global header");
  ByteOrder order;
  if (load32(bytes.data(), ByteOrder::Little) == kPcapMagic)
    order = ByteOrder::Little;
  else if (load32(bytes.data(), ByteOrder::Big) == kPcapMagic)
    order = ByteOrder::Big;
  else
    throw FormatError("not a pcap capture: bad magic number");

  std::vector<CapturedPacket> out;
  std::size_t pos = kPcapGlobalHeaderSize;
  while (pos < bytes.size()) {
    const std::size_t index = out.size();
    if (bytes.size() - pos < kPcapRecordHeaderSize)
      throw TruncationError("record " + std::to_string(index) + " header is truncated");
    const std::uint8_t* h = bytes.data() + pos;
    CapturedPacket pkt;
    pkt.ts_sec = load32(h, order);
    pkt.ts_usec = load32(h + 4, order);
    const std::uint32_t captured = load32(h + 8, order);
    pkt.original_length = load32(h + 12, order);
    pos += kPcapRecordHeaderSize;
    if (bytes.size() - pos < captured)
      throw TruncationError("record " + std::to_string(index) + " claims " +
                            std::to_string(captured) + " octets but only " +
                            std::to_string(bytes.size() - pos) + " remain");
    pkt.data.assign(bytes.begin() + pos, bytes.begin() + pos + captured);
    pos += captured;
    out.push_back(std::move(pkt));
  }
  return out;
}

EthernetFrame frame_from_capture(const CapturedPacket& packet) {
  if (packet.data.size() != kFrameSize - kPreambleSize)
    throw MalformedFrameError("captured packet holds " + std::to_string(packet.data.size()) +
                              " octets, expected 1070");
  EthernetFrame frame;
  std::fill(frame.bytes.begin(), frame.bytes.begin() + 7, std::uint8_t{0x55});
  frame.bytes[7] = 0xD5;
  std::copy(packet.data.begin(), packet.data.end(), frame.bytes.begin() + kPreambleSize);
  return frame;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string() + " for reading");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("failed writing " + path.string());
}

}  // namespace platelink
