#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "platelink/demosaic.hpp"
#include "platelink/detector.hpp"

namespace platelink {

// Bayer input: 16-bit binary PGM (P5, maxval <= 4095, big-endian samples).
std::vector<std::uint8_t> encode_bayer_pgm(const BayerFrame& frame);
BayerFrame decode_bayer_pgm(std::span<const std::uint8_t> bytes, BayerOrder order);

// Headerless little-endian 16-bit samples; geometry comes from the config.
std::vector<std::uint8_t> encode_bayer_raw(const BayerFrame& frame);
BayerFrame decode_bayer_raw(std::span<const std::uint8_t> bytes, std::size_t width,
                            std::size_t height, BayerOrder order);

// PPM P6, maxval 4095, two octets per channel, most significant first.
std::vector<std::uint8_t> encode_rgb_ppm(const RgbFrame& frame);
RgbFrame decode_rgb_ppm(std::span<const std::uint8_t> bytes);

// PGM P5, maxval 255: white 255, black 0. Decoding rejects other values.
std::vector<std::uint8_t> encode_binary_pgm(const BinaryFrame& frame);
BinaryFrame decode_binary_pgm(std::span<const std::uint8_t> bytes);

}  // namespace platelink
