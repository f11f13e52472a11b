#pragma once

#include <cstddef>
#include <filesystem>
#include <string_view>

#include "platelink/demosaic.hpp"
#include "platelink/detector.hpp"
#include "platelink/link_model.hpp"
#include "platelink/net_types.hpp"

namespace platelink {

struct PipelineConfig {
  std::size_t width = BayerFrame::kDefaultWidth;
  std::size_t height = BayerFrame::kDefaultHeight;
  BayerOrder order = BayerOrder::RGGB;
  DetectorConfig detector;
  NetConfig net;
  LineRate rate;
};

// Line-oriented `key = value` text; `#` starts a comment. Unknown keys and
// unparsable values raise ConfigError with the line number.
//
//   width, height, bayer_order          geometry of raw input
//   min_run, max_row_gap                detector
//   h_min, h_max, s_min, v_min          yellow window
//   src_mac, dst_mac                    colon-hex
//   src_ip, dst_ip                      dotted quad
//   src_port, dst_port
//   ethertype      = paper | standard
//   udp_checksum   = rfc768 | zero
//   bytes_per_second, interframe_gap    line rate
PipelineConfig parse_config(std::string_view text, PipelineConfig base = {});
PipelineConfig load_config(const std::filesystem::path& path, PipelineConfig base = {});

}  // namespace platelink
