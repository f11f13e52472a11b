#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <chrono>
#include <random>
#include <thread>

#include "doctest.h"
#include "platelink/capture.hpp"
#include "platelink/error.hpp"
#include "platelink/image_io.hpp"
#include "platelink/udp.hpp"

using namespace platelink;
using namespace std::chrono_literals;

namespace {

std::vector<EthernetFrame> some_frames(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> byte(0, 255);
  SenderSession session(NetConfig{});
  std::vector<EthernetFrame> out;
  for (std::size_t i = 0; i < n; ++i) {
    Payload p;
    for (auto& b : p) b = static_cast<std::uint8_t>(byte(rng));
    out.push_back(session.encode(p));
  }
  return out;
}

std::vector<Payload> some_payloads(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> byte(0, 255);
  std::vector<Payload> out(n);
  for (auto& p : out)
    for (auto& b : p) b = static_cast<std::uint8_t>(byte(rng));
  return out;
}

}  // namespace

TEST_CASE("capture sizes") {
  CHECK(write_capture({}).size() == 24);
  const auto one = some_frames(1, 1);
  const auto bytes = write_capture(one);
  CHECK(bytes.size() == 24 + 16 + 1070);
  // Little-endian magic, version 2.4, linktype 1.
  CHECK(bytes[0] == 0xD4);
  CHECK(bytes[3] == 0xA1);
  CHECK(bytes[4] == 2);
  CHECK(bytes[6] == 4);
  CHECK(bytes[20] == 1);
}

TEST_CASE("capture roundtrip stores frames without preamble") {
  const auto frames = some_frames(5, 2);
  const auto packets = read_capture(write_capture(frames));
  REQUIRE(packets.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    const auto stored = frames[i].without_preamble();
    CHECK(packets[i].data == std::vector<std::uint8_t>(stored.begin(), stored.end()));
    CHECK(packets[i].original_length == 1070);
    CHECK(frame_from_capture(packets[i]) == frames[i]);
    CHECK(packets[i].ts_sec == 0);
    CHECK(packets[i].ts_usec == 0);
  }
}

TEST_CASE("capture timestamps follow the schedule") {
  const auto frames = some_frames(3, 3);
  const std::vector<TransmissionSlot> schedule = {{0.0, 1e-6}, {1.5, 1.6}, {2.000013, 2.1}};
  const auto packets = read_capture(write_capture(frames, std::span<const TransmissionSlot>(schedule)));
  CHECK(packets[1].ts_sec == 1);
  CHECK(packets[1].ts_usec == 500000);
  CHECK(packets[2].ts_sec == 2);
  CHECK(packets[2].ts_usec == 13);
  const std::vector<TransmissionSlot> short_schedule = {{0.0, 1e-6}};
  CHECK_THROWS_AS(write_capture(frames, std::span<const TransmissionSlot>(short_schedule)), LengthError);
}

TEST_CASE("big-endian captures parse identically") {
  const auto frames = some_frames(4, 4);
  const std::vector<TransmissionSlot> schedule = {{0, 0}, {0.25, 0}, {3.5, 0}, {7.000001, 0}};
  const auto le = write_capture(frames, std::span<const TransmissionSlot>(schedule), ByteOrder::Little);
  const auto be = write_capture(frames, std::span<const TransmissionSlot>(schedule), ByteOrder::Big);
  CHECK(le != be);
  CHECK(be[0] == 0xA1);
  CHECK(read_capture(le) == read_capture(be));
}

TEST_CASE("capture errors") {
  auto bytes = write_capture(some_frames(2, 5));
  SUBCASE("bad magic") {
    bytes[0] ^= 0xFF;
    CHECK_THROWS_AS(read_capture(bytes), FormatError);
  }
  SUBCASE("short header") { CHECK_THROWS_AS(read_capture(std::span(bytes).first(10)), FormatError); }
  SUBCASE("truncated final record") {
    bytes.pop_back();
    try {
      read_capture(bytes);
      FAIL("expected TruncationError");
    } catch (const TruncationError& e) {
      CHECK(std::string(e.what()).find("record 1") != std::string::npos);
    }
  }
  SUBCASE("truncated record header") {
    bytes.resize(24 + 16 + 1070 + 7);
    CHECK_THROWS_AS(read_capture(bytes), TruncationError);
  }
  SUBCASE("wrong stored length") {
    CapturedPacket p;
    p.data.resize(1069);
    CHECK_THROWS_AS(frame_from_capture(p), MalformedFrameError);
  }
}

TEST_CASE("image formats roundtrip") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> d(0, kMaxSample);
  std::vector<std::uint16_t> samples(8 * 6);
  for (auto& s : samples) s = static_cast<std::uint16_t>(d(rng));
  const BayerFrame bayer(8, 6, BayerOrder::GRBG, samples);

  const auto pgm = decode_bayer_pgm(encode_bayer_pgm(bayer), BayerOrder::GRBG);
  CHECK(std::equal(pgm.samples().begin(), pgm.samples().end(), samples.begin()));
  const auto raw = decode_bayer_raw(encode_bayer_raw(bayer), 8, 6, BayerOrder::GRBG);
  CHECK(std::equal(raw.samples().begin(), raw.samples().end(), samples.begin()));
  CHECK(encode_bayer_raw(bayer)[0] == (samples[0] & 0xFF));
  CHECK_THROWS_AS(decode_bayer_raw(encode_bayer_raw(bayer), 8, 8, BayerOrder::GRBG), DimensionError);

  const auto rgb = demosaic_downsample(bayer);
  const auto ppm = encode_rgb_ppm(rgb);
  CHECK(std::string(ppm.begin(), ppm.begin() + 12) == "P6\n4 3\n4095\n");
  CHECK(ppm.size() == 12 + 4 * 3 * 6);
  CHECK(decode_rgb_ppm(ppm) == rgb);

  BinaryFrame binary(5, 3, {1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1});
  const auto bin = encode_binary_pgm(binary);
  CHECK(decode_binary_pgm(bin) == binary);
  CHECK(bin.back() == 255);
}

TEST_CASE("image format errors") {
  const std::string not_pgm = "P2\n2 2\n4095\n";
  CHECK_THROWS_AS(decode_bayer_pgm({reinterpret_cast<const std::uint8_t*>(not_pgm.data()), not_pgm.size()},
                                   BayerOrder::RGGB),
                  FormatError);
  std::string big_max = "P5\n2 2\n65535\n" + std::string(8, '\0');
  CHECK_THROWS_AS(decode_bayer_pgm({reinterpret_cast<const std::uint8_t*>(big_max.data()), big_max.size()},
                                   BayerOrder::RGGB),
                  FormatError);
  std::string truncated = "P5\n2 2\n4095\n" + std::string(7, '\0');
  CHECK_THROWS_AS(decode_bayer_pgm({reinterpret_cast<const std::uint8_t*>(truncated.data()), truncated.size()},
                                   BayerOrder::RGGB),
                  TruncationError);
  std::string grey = "P5\n# comment\n2 1\n255\n";
  grey += '\0';
  grey += '\x80';
  CHECK_THROWS_AS(decode_binary_pgm({reinterpret_cast<const std::uint8_t*>(grey.data()), grey.size()}),
                  FormatError);
}

TEST_CASE("udp loopback roundtrip") {
  UdpReceiver receiver(*Ipv4Address::parse("127.0.0.1"), 0);
  NetConfig cfg;
  cfg.dst_ip = *Ipv4Address::parse("127.0.0.1");
  cfg.dst_port = receiver.port();
  const auto payloads = some_payloads(300, 7);

  ReceiveReport report;
  std::thread rx([&] { report = receiver.receive(payloads.size(), 2000ms); });
  SendOptions options;
  options.pacing = LineRate{};
  const auto sent = udp_send(payloads, cfg, options);
  rx.join();

  CHECK(sent.datagrams_sent == 300);
  CHECK(sent.bytes_sent == 300 * 1024);
  CHECK_FALSE(report.timed_out);
  REQUIRE(report.payloads.size() == 300);
  CHECK(report.payloads == payloads);
}

TEST_CASE("udp edge cases") {
  SUBCASE("empty send") {
    NetConfig cfg;
    CHECK(udp_send({}, cfg).datagrams_sent == 0);
  }
  SUBCASE("timeout with no traffic") {
    const auto report = udp_receive(*Ipv4Address::parse("127.0.0.1"), 0, 3, 50ms);
    CHECK(report.timed_out);
    CHECK(report.payloads.empty());
  }
  SUBCASE("wrong-sized datagrams are rejected") {
    UdpReceiver receiver(*Ipv4Address::parse("127.0.0.1"), 0);
    NetConfig cfg;
    cfg.dst_ip = *Ipv4Address::parse("127.0.0.1");
    cfg.dst_port = receiver.port();
    udp_send(some_payloads(1, 8), cfg);
    const int fd = ::socket(AF_INET, SOCK_DGRAM, 0);
    sockaddr_in to{};
    to.sin_family = AF_INET;
    to.sin_port = htons(receiver.port());
    to.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    const char runt[10] = {};
    ::sendto(fd, runt, sizeof runt, 0, reinterpret_cast<sockaddr*>(&to), sizeof to);
    ::close(fd);
    const auto report = receiver.receive(2, 100ms);
    CHECK(report.payloads.size() == 1);
    CHECK(report.rejected == 1);
    CHECK(report.timed_out);
  }
  SUBCASE("unreachable destination") {
    // A loopback port nobody listens on answers with ICMP port unreachable,
    // which the connected socket reports on a later send.
    std::uint16_t closed_port;
    {
      UdpReceiver probe(*Ipv4Address::parse("127.0.0.1"), 0);
      closed_port = probe.port();
    }
    NetConfig cfg;
    cfg.dst_ip = *Ipv4Address::parse("127.0.0.1");
    cfg.dst_port = closed_port;
    CHECK_THROWS_AS(udp_send(some_payloads(50, 9), cfg), TransportError);
  }
  SUBCASE("non-routable address") {
    NetConfig cfg;
    cfg.dst_ip = *Ipv4Address::parse("255.255.255.255");  // broadcast without SO_BROADCAST
    CHECK_THROWS_AS(udp_send(some_payloads(1, 10), cfg), TransportError);
  }
  SUBCASE("bind failure") {
    UdpReceiver first(*Ipv4Address::parse("127.0.0.1"), 0);
    CHECK_THROWS_AS(UdpReceiver(*Ipv4Address::parse("127.0.0.1"), first.port()), TransportError);
  }
}
