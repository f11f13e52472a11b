#include "platelink/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <thread>

#include "platelink/pingpong.hpp"
#include "platelink/synth.hpp"

namespace platelink {

namespace {

// Runs `body` on a worker thread and rethrows anything it threw on join.
class StageThread {
public:
  template <typename F>
  explicit StageThread(F body)
      : thread_([this, body = std::move(body)]() mutable {
          try {
            body();
          } catch (...) {
            error_ = std::current_exception();
          }
        }) {}
  ~StageThread() {
    if (thread_.joinable()) thread_.join();
  }
  void join() {
    thread_.join();
    if (error_) std::rethrow_exception(error_);
  }

private:
  std::exception_ptr error_;
  std::thread thread_;
};

}  // namespace

std::vector<EthernetFrame> packetize(const BinaryFrame& binary, SenderSession& session) {
  const auto payloads = chunk_payloads(map_binary_to_bytes(binary));
  std::vector<EthernetFrame> frames;
  frames.reserve(payloads.size());
  for (const auto& p : payloads) frames.push_back(session.encode(p));
  return frames;
}

PipelineOutput run_pipeline(const BayerFrame& bayer, const DetectorConfig& detector,
                            SenderSession& session, bool serial) {
  PipelineOutput out;
  out.detection = detect_plate(demosaic_downsample(bayer), detector);
  if (serial) {
    out.frames = packetize(out.detection.binary, session);
    return out;
  }

  const auto payloads = chunk_payloads(map_binary_to_bytes(out.detection.binary));
  PingPongChannel<Payload> channel;
  StageThread encoder([&] {
    try {
      while (auto p = channel.pop()) out.frames.push_back(session.encode(*p));
    } catch (...) {
      channel.close();
      throw;
    }
  });
  for (const auto& p : payloads) channel.push(p);
  channel.close();
  encoder.join();
  return out;
}

std::vector<std::size_t> frame_sizes(const std::vector<EthernetFrame>& frames) {
  return std::vector<std::size_t>(frames.size(), kFrameSize);
}

BenchReport run_bench(std::size_t images, const PipelineConfig& cfg, std::uint64_t seed,
                      bool serial) {
  // A small pool of distinct scenes is cycled; holding hundreds of
  // full-resolution mosaics would only measure memory bandwidth.
  std::mt19937_64 rng(seed);
  std::vector<BayerFrame> pool;
  const std::size_t pool_size = std::clamp<std::size_t>(images, 1, 8);
  for (std::size_t i = 0; i < pool_size; ++i)
    pool.push_back(synth_scene(cfg.width, cfg.height, cfg.order, rng).bayer);

  SenderSession session(cfg.net);
  BenchReport report;
  report.images = images;
  std::uint32_t crc = 0xFFFFFFFFu;
  std::size_t frames_per_image = 0;
  auto consume = [&](const BinaryFrame& binary) {
    const auto frames = packetize(binary, session);
    frames_per_image = frames.size();
    report.ethernet_frames += frames.size();
    for (const auto& f : frames) crc = crc32_update(crc, f.bytes);
  };

  const auto t0 = std::chrono::steady_clock::now();
  if (serial) {
    for (std::size_t i = 0; i < images; ++i)
      consume(detect_plate(demosaic_downsample(pool[i % pool_size]), cfg.detector).binary);
  } else {
    PingPongChannel<BinaryFrame> channel;
    StageThread front([&] {
      try {
        for (std::size_t i = 0; i < images; ++i)
          if (!channel.push(detect_plate(demosaic_downsample(pool[i % pool_size]), cfg.detector).binary))
            break;
      } catch (...) {
        channel.close();
        throw;
      }
      channel.close();
    });
    try {
      while (auto binary = channel.pop()) consume(*binary);
    } catch (...) {
      channel.close();
      throw;
    }
    front.join();
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report.fps = report.seconds > 0 ? images / report.seconds : 0.0;
  report.digest = ~crc;

  if (frames_per_image == 0)
    frames_per_image = (cfg.width / 2 * cfg.height / 2 + kPayloadSize - 1) / kPayloadSize;
  const std::vector<std::size_t> sizes(frames_per_image, kFrameSize);
  report.line_rate_images_per_s = 1.0 / burst_period(sizes, cfg.rate);
  return report;
}

}  // namespace platelink
