#include "platelink/image_io.hpp"

#include <cctype>
#include <string>

#include "platelink/error.hpp"

namespace platelink {

namespace {

struct PnmHeader {
  std::size_t width = 0;
  std::size_t height = 0;
  unsigned maxval = 0;
  std::size_t data_offset = 0;
};

PnmHeader parse_pnm_header(std::span<const std::uint8_t> bytes, std::string_view magic) {
  if (bytes.size() < 2 || bytes[0] != magic[0] || bytes[1] != magic[1])
    throw FormatError("expected a " + std::string(magic) + " image");
  std::size_t pos = 2;
  auto next_number = [&]() -> std::size_t {
    for (;;) {
      while (pos < bytes.size() && std::isspace(bytes[pos])) ++pos;
      if (pos < bytes.size() && bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
        continue;
      }
      break;
    }
    if (pos >= bytes.size() || !std::isdigit(bytes[pos]))
      throw FormatError(std::string(magic) + " header is malformed");
    std::size_t value = 0;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
      value = value * 10 + (bytes[pos++] - '0');
      if (value > (1u << 30)) throw FormatError(std::string(magic) + " header value too large");
    }
    return value;
  };
  PnmHeader h;
  h.width = next_number();
  h.height = next_number();
  h.maxval = static_cast<unsigned>(next_number());
  if (pos >= bytes.size() || !std::isspace(bytes[pos]))
    throw FormatError(std::string(magic) + " header must end with one whitespace octet");
  h.data_offset = pos + 1;
  if (h.maxval == 0 || h.maxval > 65535) throw FormatError("maxval out of range");
  const std::size_t bytes_per_sample = h.maxval > 255 ? 2 : 1;
  const std::size_t channels = magic == "P6" ? 3 : 1;
  const std::size_t need = h.width * h.height * channels * bytes_per_sample;
  if (bytes.size() - h.data_offset < need)
    throw TruncationError(std::string(magic) + " pixel data is truncated: need " +
                          std::to_string(need) + " octets, have " +
                          std::to_string(bytes.size() - h.data_offset));
  return h;
}

void append_header(std::vector<std::uint8_t>& out, std::string_view magic, std::size_t width,
                   std::size_t height, unsigned maxval) {
  const std::string header = std::string(magic) + "\n" + std::to_string(width) + " " +
                             std::to_string(height) + "\n" + std::to_string(maxval) + "\n";
  out.insert(out.end(), header.begin(), header.end());
}

void put_be16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

}  // namespace

std::vector<std::uint8_t> encode_bayer_pgm(const BayerFrame& frame) {
  std::vector<std::uint8_t> out;
  append_header(out, "P5", frame.width(), frame.height(), kMaxSample);
  out.reserve(out.size() + frame.samples().size() * 2);
  for (auto s : frame.samples()) put_be16(out, s);
  return out;
}

BayerFrame decode_bayer_pgm(std::span<const std::uint8_t> bytes, BayerOrder order) {
  const auto h = parse_pnm_header(bytes, "P5");
  if (h.maxval > kMaxSample)
    throw FormatError("bayer PGM maxval " + std::to_string(h.maxval) + " exceeds 4095");
  std::vector<std::uint16_t> samples(h.width * h.height);
  const std::uint8_t* p = bytes.data() + h.data_offset;
  if (h.maxval > 255) {
    for (auto& s : samples) {
      s = static_cast<std::uint16_t>((p[0] << 8) | p[1]);
      p += 2;
    }
  } else {
    for (auto& s : samples) s = *p++;
  }
  return BayerFrame(h.width, h.height, order, std::move(samples));
}

std::vector<std::uint8_t> encode_bayer_raw(const BayerFrame& frame) {
  std::vector<std::uint8_t> out;
  out.reserve(frame.samples().size() * 2);
  for (auto s : frame.samples()) {
    out.push_back(static_cast<std::uint8_t>(s));
    out.push_back(static_cast<std::uint8_t>(s >> 8));
  }
  return out;
}

BayerFrame decode_bayer_raw(std::span<const std::uint8_t> bytes, std::size_t width,
                            std::size_t height, BayerOrder order) {
  if (bytes.size() != width * height * 2)
    throw DimensionError("raw bayer file holds " + std::to_string(bytes.size()) +
                         " octets, geometry " + std::to_string(width) + "x" +
                         std::to_string(height) + " needs " + std::to_string(width * height * 2));
  std::vector<std::uint16_t> samples(width * height);
  for (std::size_t i = 0; i < samples.size(); ++i)
    samples[i] = static_cast<std::uint16_t>(bytes[2 * i] | (bytes[2 * i + 1] << 8));
  return BayerFrame(width, height, order, std::move(samples));
}

std::vector<std::uint8_t> encode_rgb_ppm(const RgbFrame& frame) {
  std::vector<std::uint8_t> out;
  append_header(out, "P6", frame.width(), frame.height(), kMaxSample);
  out.reserve(out.size() + frame.pixels().size() * 6);
  for (const auto& p : frame.pixels()) {
    put_be16(out, p.r);
    put_be16(out, p.g);
    put_be16(out, p.b);
  }
  return out;
}

RgbFrame decode_rgb_ppm(std::span<const std::uint8_t> bytes) {
  const auto h = parse_pnm_header(bytes, "P6");
  if (h.maxval != kMaxSample)
    throw FormatError("RGB PPM must use maxval 4095, got " + std::to_string(h.maxval));
  std::vector<Rgb12> pixels(h.width * h.height);
  const std::uint8_t* p = bytes.data() + h.data_offset;
  auto get = [&p] {
    auto v = static_cast<std::uint16_t>((p[0] << 8) | p[1]);
    p += 2;
    return v;
  };
  for (auto& px : pixels) {
    px.r = get();
    px.g = get();
    px.b = get();
  }
  return RgbFrame(h.width, h.height, std::move(pixels));
}

std::vector<std::uint8_t> encode_binary_pgm(const BinaryFrame& frame) {
  std::vector<std::uint8_t> out;
  append_header(out, "P5", frame.width(), frame.height(), 255);
  for (auto bit : frame.bits()) out.push_back(bit ? 255 : 0);
  return out;
}

BinaryFrame decode_binary_pgm(std::span<const std::uint8_t> bytes) {
  const auto h = parse_pnm_header(bytes, "P5");
  if (h.maxval != 255) throw FormatError("binary PGM must use maxval 255");
  std::vector<std::uint8_t> bits(h.width * h.height);
  const std::uint8_t* p = bytes.data() + h.data_offset;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (p[i] != 0 && p[i] != 255)
      throw FormatError("binary PGM pixel " + std::to_string(i) + " is neither 0 nor 255");
    bits[i] = p[i] ? 1 : 0;
  }
  return BinaryFrame(h.width, h.height, std::move(bits));
}

}  // namespace platelink
