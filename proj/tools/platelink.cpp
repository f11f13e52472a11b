// platelink: Bayer video -> plate detection -> binary image -> Ethernet frames.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "platelink/capture.hpp"
#include "platelink/config.hpp"
#include "platelink/error.hpp"
#include "platelink/image_io.hpp"
#include "platelink/pipeline.hpp"
#include "platelink/synth.hpp"
#include "platelink/udp.hpp"

using namespace platelink;

namespace {

struct GlobalOptions {
  std::string config_path;
  std::string bayer_order;
  std::optional<std::size_t> min_run;
  std::uint64_t seed = 1;
  bool serial = false;
  std::string ethertype;
};

PipelineConfig resolve(const GlobalOptions& g) {
  PipelineConfig cfg;
  if (!g.config_path.empty()) cfg = load_config(g.config_path);
  if (!g.bayer_order.empty()) {
    auto order = parse_bayer_order(g.bayer_order);
    if (!order) throw ConfigError("unknown bayer order '" + g.bayer_order + "'");
    cfg.order = *order;
  }
  if (g.min_run) {
    cfg.detector.min_run = *g.min_run;
    cfg.detector.validate();
  }
  if (g.ethertype == "paper") cfg.net.ethertype_mode = EtherTypeMode::PaperFaithful;
  else if (g.ethertype == "standard") cfg.net.ethertype_mode = EtherTypeMode::Standard;
  return cfg;
}

BayerFrame load_bayer(const std::string& path, const PipelineConfig& cfg) {
  const auto bytes = read_file(path);
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5') return decode_bayer_pgm(bytes, cfg.order);
  return decode_bayer_raw(bytes, cfg.width, cfg.height, cfg.order);
}

void print_region(const std::optional<PlateRegion>& region) {
  if (region)
    std::cout << "region " << region->top << ' ' << region->bottom << ' ' << region->left << ' '
              << region->right << '\n';
  else
    std::cout << "region none\n";
}

std::vector<std::uint8_t> capture_for(const std::vector<EthernetFrame>& frames,
                                      const PipelineConfig& cfg) {
  const auto schedule = schedule_transmission(frame_sizes(frames), cfg.rate);
  return write_capture(frames, std::span<const TransmissionSlot>(schedule));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plate detection and user-defined Ethernet framing pipeline"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--config", g.config_path, "key = value config file")->check(CLI::ExistingFile);
  app.add_option("--bayer-order", g.bayer_order, "RGGB, GRBG, GBRG or BGGR");
  app.add_option("--min-run", g.min_run, "minimum yellow run length in pixels");
  app.add_option("--seed", g.seed, "seed for synthetic frames");
  app.add_flag("--serial", g.serial, "run every stage on one thread");
  app.add_option("--ethertype", g.ethertype, "paper or standard")
      ->check(CLI::IsMember({"paper", "standard"}));

  std::string in, out, out_overlay, binary_out, csv;
  std::size_t width = 0, height = 0, frames = 120;
  bool raw = false, no_plate = false, pace = false;
  std::string bind_ip = "0.0.0.0";
  std::uint16_t port = 0;
  long timeout_ms = 2000;

  auto* synth = app.add_subcommand("synth", "write a synthetic Bayer frame with a planted plate");
  synth->add_option("--out", out)->required();
  synth->add_option("--width", width, "defaults to the config width");
  synth->add_option("--height", height, "defaults to the config height");
  synth->add_flag("--raw", raw, "write headerless little-endian samples instead of PGM");
  synth->add_flag("--no-plate", no_plate);

  auto* demosaic = app.add_subcommand("demosaic", "Bayer (PGM or raw) -> 12-bit PPM");
  demosaic->add_option("--in", in)->required()->check(CLI::ExistingFile);
  demosaic->add_option("--out", out)->required();

  auto* detect = app.add_subcommand("detect", "12-bit PPM -> binary PGM and overlay PPM");
  detect->add_option("--in", in)->required()->check(CLI::ExistingFile);
  detect->add_option("--out-binary", out)->required();
  detect->add_option("--out-overlay", out_overlay);

  auto* packetize_cmd = app.add_subcommand("packetize", "binary PGM -> capture file");
  packetize_cmd->add_option("--in", in)->required()->check(CLI::ExistingFile);
  packetize_cmd->add_option("--out", out)->required();

  auto* pipeline = app.add_subcommand("pipeline", "Bayer -> capture file, all stages");
  pipeline->add_option("--in", in)->required()->check(CLI::ExistingFile);
  pipeline->add_option("--out", out)->required();
  pipeline->add_option("--binary-out", binary_out);

  auto* decode = app.add_subcommand("decode", "capture file -> validated binary PGM");
  decode->add_option("--in", in)->required()->check(CLI::ExistingFile);
  decode->add_option("--out", out)->required();
  decode->add_option("--width", width)->required();
  decode->add_option("--height", height)->required();

  auto* send = app.add_subcommand("send", "run the pipeline and send payloads over UDP");
  send->add_option("--in", in)->required()->check(CLI::ExistingFile);
  send->add_flag("--pace", pace, "pace datagrams at the configured line rate");

  auto* recv = app.add_subcommand("recv", "receive one image over UDP");
  recv->add_option("--bind", bind_ip);
  recv->add_option("--port", port, "defaults to the config dst_port");
  recv->add_option("--width", width)->required();
  recv->add_option("--height", height)->required();
  recv->add_option("--timeout-ms", timeout_ms, "idle timeout");
  recv->add_option("--out", out)->required();

  auto* bench = app.add_subcommand("bench", "time the full chain on synthetic frames");
  bench->add_option("--frames", frames, "number of images");
  bench->add_option("--csv", csv, "write the per-image transmission schedule");

  CLI11_PARSE(app, argc, argv);

  try {
    const PipelineConfig cfg = resolve(g);

    if (*synth) {
      std::mt19937_64 rng(g.seed);
      auto scene = synth_scene(width ? width : cfg.width, height ? height : cfg.height, cfg.order,
                               rng, !no_plate);
      write_file(out, raw ? encode_bayer_raw(scene.bayer) : encode_bayer_pgm(scene.bayer));
      if (scene.plate)
        std::cout << "plate " << scene.plate->top << ' ' << scene.plate->bottom << ' '
                  << scene.plate->left << ' ' << scene.plate->right << '\n';
      else
        std::cout << "plate none\n";
    } else if (*demosaic) {
      write_file(out, encode_rgb_ppm(demosaic_downsample(load_bayer(in, cfg))));
    } else if (*detect) {
      const auto rgb = decode_rgb_ppm(read_file(in));
      const auto result = detect_plate(rgb, cfg.detector);
      write_file(out, encode_binary_pgm(result.binary));
      if (!out_overlay.empty())
        write_file(out_overlay,
                   encode_rgb_ppm(result.region ? overlay_region(rgb, *result.region) : rgb));
      print_region(result.region);
    } else if (*packetize_cmd) {
      SenderSession session(cfg.net);
      const auto wire = packetize(decode_binary_pgm(read_file(in)), session);
      write_file(out, capture_for(wire, cfg));
      std::cout << "frames " << wire.size() << '\n';
    } else if (*pipeline) {
      SenderSession session(cfg.net);
      const auto result = run_pipeline(load_bayer(in, cfg), cfg.detector, session, g.serial);
      write_file(out, capture_for(result.frames, cfg));
      if (!binary_out.empty()) write_file(binary_out, encode_binary_pgm(result.detection.binary));
      print_region(result.detection.region);
      std::cout << "frames " << result.frames.size() << '\n';
    } else if (*decode) {
      std::vector<ParsedFrame> parsed;
      std::size_t bad = 0;
      for (const auto& pkt : read_capture(read_file(in))) {
        auto frame = decode_frame(frame_from_capture(pkt).bytes, cfg.net);
        if (!frame.valid() || !frame.addressed_to_us) {
          ++bad;
          continue;
        }
        parsed.push_back(frame);
      }
      std::cout << "frames " << parsed.size() << " rejected " << bad << '\n';
      write_file(out, encode_binary_pgm(reassemble_image(parsed, width, height)));
    } else if (*send) {
      SenderSession session(cfg.net);
      const auto result = run_pipeline(load_bayer(in, cfg), cfg.detector, session, g.serial);
      const auto payloads = chunk_payloads(map_binary_to_bytes(result.detection.binary));
      SendOptions options;
      if (pace) options.pacing = cfg.rate;
      const auto report = udp_send(payloads, cfg.net, options);
      print_region(result.detection.region);
      std::cout << "sent " << report.datagrams_sent << " datagrams to "
                << cfg.net.dst_ip.to_string() << ':' << cfg.net.dst_port << '\n';
    } else if (*recv) {
      auto ip = Ipv4Address::parse(bind_ip);
      if (!ip) throw ConfigError("bad bind address '" + bind_ip + "'");
      const std::size_t expected = (width * height + kPayloadSize - 1) / kPayloadSize;
      const auto report = udp_receive(*ip, port ? port : cfg.net.dst_port, expected,
                                      std::chrono::milliseconds(timeout_ms));
      std::cout << "received " << report.payloads.size() << " of " << expected
                << (report.timed_out ? " (timed out)" : "") << '\n';
      write_file(out, encode_binary_pgm(reassemble_payloads(report.payloads, width, height)));
    } else if (*bench) {
      const auto report = run_bench(frames, cfg, g.seed, g.serial);
      std::printf("images %zu\nseconds %.4f\nfps %.1f\nethernet_frames %zu\n"
                  "line_rate_images_per_s %.1f\ndigest %08x\n",
                  report.images, report.seconds, report.fps, report.ethernet_frames,
                  report.line_rate_images_per_s, report.digest);
      if (!csv.empty()) {
        const std::size_t per_image = report.images ? report.ethernet_frames / report.images : 0;
        const std::vector<std::size_t> sizes(per_image, kFrameSize);
        std::ofstream f(csv);
        if (!f) throw FormatError("cannot open " + csv + " for writing");
        f << "index,start_s,end_s\n";
        char line[96];
        const auto schedule = schedule_transmission(sizes, cfg.rate);
        for (std::size_t i = 0; i < schedule.size(); ++i) {
          std::snprintf(line, sizeof line, "%zu,%.12f,%.12f\n", i, schedule[i].start_s,
                        schedule[i].end_s);
          f << line;
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "platelink: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
