#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "platelink/config.hpp"
#include "platelink/demosaic.hpp"
#include "platelink/detector.hpp"
#include "platelink/frame_codec.hpp"

namespace platelink {

struct PipelineOutput {
  DetectionResult detection;
  std::vector<EthernetFrame> frames;
};

// Binary image -> octets -> 1024-octet payloads -> wire frames.
std::vector<EthernetFrame> packetize(const BinaryFrame& binary, SenderSession& session);

// demosaic -> detect/binarize -> packetize. With serial == false the
// packetizing stage runs on its own thread behind a PingPongChannel; the
// output is identical either way.
PipelineOutput run_pipeline(const BayerFrame& bayer, const DetectorConfig& detector,
                            SenderSession& session, bool serial = true);

std::vector<std::size_t> frame_sizes(const std::vector<EthernetFrame>& frames);

struct BenchReport {
  std::size_t images = 0;
  std::size_t ethernet_frames = 0;
  double seconds = 0.0;
  double fps = 0.0;
  // Images per second the link sustains for the 640x480 binary image.
  double line_rate_images_per_s = 0.0;
  // CRC-32 over every emitted frame, for serial/threaded comparison.
  std::uint32_t digest = 0;
};

// Synthesizes `images` random scenes (untimed), then times the full chain
// over all of them.
BenchReport run_bench(std::size_t images, const PipelineConfig& cfg, std::uint64_t seed,
                      bool serial);

}  // namespace platelink
