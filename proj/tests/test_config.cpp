#include "doctest.h"
#include "platelink/config.hpp"
#include "platelink/error.hpp"

using namespace platelink;

TEST_CASE("defaults") {
  const PipelineConfig cfg;
  CHECK(cfg.width == 1280);
  CHECK(cfg.height == 960);
  CHECK(cfg.order == BayerOrder::RGGB);
  CHECK(cfg.detector.min_run == 32);
  CHECK(cfg.detector.max_row_gap == 2);
  CHECK(cfg.detector.window.h_min == 40.0);
  CHECK(cfg.detector.window.h_max == 70.0);
  CHECK(cfg.detector.window.s_min == 0.35);
  CHECK(cfg.detector.window.v_min == 0.30);
  CHECK(cfg.net.src_ip.to_string() == "192.168.1.1");
  CHECK(cfg.net.dst_ip.to_string() == "192.168.1.2");
  CHECK(cfg.net.ethertype_mode == EtherTypeMode::PaperFaithful);
  CHECK(cfg.net.udp_checksum_mode == UdpChecksumMode::Rfc768);
  CHECK(cfg.rate.bytes_per_second == 125e6);
  CHECK(cfg.rate.interframe_gap == 12);
}

TEST_CASE("every key parses") {
  const auto cfg = parse_config(R"(
# camera
width = 640
height = 480
bayer_order = gbrg
min_run = 16      # shorter plates
max_row_gap = 0
h_min = 35.5
h_max = 75
s_min = 0.4
v_min = 0.25
src_mac = aa:bb:cc:dd:ee:ff
dst_mac = 00:11:22:33:44:55
src_ip = 10.0.0.1
dst_ip = 10.0.0.2
src_port = 4000
dst_port = 65535
ethertype = standard
udp_checksum = zero
bytes_per_second = 12500000
interframe_gap = 20
)");
  CHECK(cfg.width == 640);
  CHECK(cfg.height == 480);
  CHECK(cfg.order == BayerOrder::GBRG);
  CHECK(cfg.detector.min_run == 16);
  CHECK(cfg.detector.max_row_gap == 0);
  CHECK(cfg.detector.window.h_min == 35.5);
  CHECK(cfg.detector.window.h_max == 75.0);
  CHECK(cfg.detector.window.s_min == 0.4);
  CHECK(cfg.detector.window.v_min == 0.25);
  CHECK(cfg.net.src_mac.to_string() == "aa:bb:cc:dd:ee:ff");
  CHECK(cfg.net.dst_mac.to_string() == "00:11:22:33:44:55");
  CHECK(cfg.net.src_ip.to_string() == "10.0.0.1");
  CHECK(cfg.net.dst_ip.to_string() == "10.0.0.2");
  CHECK(cfg.net.src_port == 4000);
  CHECK(cfg.net.dst_port == 65535);
  CHECK(cfg.net.ethertype_mode == EtherTypeMode::Standard);
  CHECK(cfg.net.udp_checksum_mode == UdpChecksumMode::Zero);
  CHECK(cfg.rate.bytes_per_second == 12.5e6);
  CHECK(cfg.rate.interframe_gap == 20);
}

TEST_CASE("config errors carry the line number") {
  auto fails_with = [](std::string_view text, std::string_view fragment) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return std::string(e.what()).find(fragment) != std::string::npos;
    }
    return false;
  };
  CHECK(fails_with("\n\nbogus = 1", "line 3: unknown key 'bogus'"));
  CHECK(fails_with("width 640", "line 1: expected key = value"));
  CHECK(fails_with("src_mac = aa:bb:cc", "line 1: bad value"));
  CHECK(fails_with("src_ip = 300.1.1.1", "bad value"));
  CHECK(fails_with("dst_port = 70000", "out of range"));
  CHECK(fails_with("ethertype = ipx", "bad value"));
  CHECK(fails_with("min_run = 0", "min_run"));
  CHECK(fails_with("h_min = 80", "h_min"));
  CHECK(fails_with("width = 641", "even"));
  CHECK(fails_with("min_run = 12abc", "bad value"));
  CHECK_THROWS_AS(load_config("/nonexistent/platelink.conf"), ConfigError);
}

TEST_CASE("address parsing") {
  CHECK(MacAddress::parse("02:00:00:00:00:01").has_value());
  CHECK_FALSE(MacAddress::parse("02:00:00:00:00").has_value());
  CHECK_FALSE(MacAddress::parse("02:00:00:00:00:01:02").has_value());
  CHECK_FALSE(MacAddress::parse("02:00:00:00:00:1ff").has_value());
  CHECK_FALSE(MacAddress::parse("02-00-00-00-00-01").has_value());
  CHECK(Ipv4Address::parse("192.168.1.0")->to_host_order() == 0xC0A80100);
  CHECK_FALSE(Ipv4Address::parse("192.168.1").has_value());
  CHECK_FALSE(Ipv4Address::parse("192.168.1.256").has_value());
  CHECK_FALSE(Ipv4Address::parse("1.2.3.4 ").has_value());
}
