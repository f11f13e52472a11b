#include "platelink/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "platelink/error.hpp"

namespace platelink {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view value, std::string_view key, std::size_t line) {
  T out{};
  auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || end != value.data() + value.size())
    throw ConfigError("line " + std::to_string(line) + ": bad value '" + std::string(value) +
                      "' for " + std::string(key));
  return out;
}

std::uint16_t parse_port(std::string_view value, std::string_view key, std::size_t line) {
  const auto port = parse_number<unsigned>(value, key, line);
  if (port > 0xFFFF)
    throw ConfigError("line " + std::to_string(line) + ": port " + std::string(value) +
                      " out of range");
  return static_cast<std::uint16_t>(port);
}

}  // namespace

PipelineConfig parse_config(std::string_view text, PipelineConfig cfg) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    auto bad = [&]() -> ConfigError {
      return ConfigError("line " + std::to_string(line_no) + ": bad value '" + std::string(value) +
                         "' for " + std::string(key));
    };

    if (key == "width") {
      cfg.width = parse_number<std::size_t>(value, key, line_no);
    } else if (key == "height") {
      cfg.height = parse_number<std::size_t>(value, key, line_no);
    } else if (key == "bayer_order") {
      auto order = parse_bayer_order(value);
      if (!order) throw bad();
      cfg.order = *order;
    } else if (key == "min_run") {
      cfg.detector.min_run = parse_number<std::size_t>(value, key, line_no);
    } else if (key == "max_row_gap") {
      cfg.detector.max_row_gap = parse_number<std::size_t>(value, key, line_no);
    } else if (key == "h_min") {
      cfg.detector.window.h_min = parse_number<double>(value, key, line_no);
    } else if (key == "h_max") {
      cfg.detector.window.h_max = parse_number<double>(value, key, line_no);
    } else if (key == "s_min") {
      cfg.detector.window.s_min = parse_number<double>(value, key, line_no);
    } else if (key == "v_min") {
      cfg.detector.window.v_min = parse_number<double>(value, key, line_no);
    } else if (key == "src_mac" || key == "dst_mac") {
      auto mac = MacAddress::parse(value);
      if (!mac) throw bad();
      (key == "src_mac" ? cfg.net.src_mac : cfg.net.dst_mac) = *mac;
    } else if (key == "src_ip" || key == "dst_ip") {
      auto ip = Ipv4Address::parse(value);
      if (!ip) throw bad();
      (key == "src_ip" ? cfg.net.src_ip : cfg.net.dst_ip) = *ip;
    } else if (key == "src_port") {
      cfg.net.src_port = parse_port(value, key, line_no);
    } else if (key == "dst_port") {
      cfg.net.dst_port = parse_port(value, key, line_no);
    } else if (key == "ethertype") {
      if (value == "paper") cfg.net.ethertype_mode = EtherTypeMode::PaperFaithful;
      else if (value == "standard") cfg.net.ethertype_mode = EtherTypeMode::Standard;
      else throw bad();
    } else if (key == "udp_checksum") {
      if (value == "rfc768") cfg.net.udp_checksum_mode = UdpChecksumMode::Rfc768;
      else if (value == "zero") cfg.net.udp_checksum_mode = UdpChecksumMode::Zero;
      else throw bad();
    } else if (key == "bytes_per_second") {
      cfg.rate.bytes_per_second = parse_number<double>(value, key, line_no);
    } else if (key == "interframe_gap") {
      cfg.rate.interframe_gap = parse_number<std::size_t>(value, key, line_no);
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }

  try {
    cfg.detector.validate();
    cfg.rate.validate();
  } catch (const RangeError& e) {
    throw ConfigError(e.what());
  }
  if (cfg.width == 0 || cfg.height == 0 || cfg.width % 2 || cfg.height % 2)
    throw ConfigError("width and height must be even and non-zero");
  return cfg;
}

PipelineConfig load_config(const std::filesystem::path& path, PipelineConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open config file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str(), std::move(base));
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace platelink
