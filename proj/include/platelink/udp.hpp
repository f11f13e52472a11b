#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "platelink/frame_codec.hpp"
#include "platelink/link_model.hpp"

namespace platelink {

struct SendReport {
  std::size_t datagrams_sent = 0;
  std::size_t bytes_sent = 0;
};

struct SendOptions {
  // When set, datagram starts follow schedule_transmission in real time.
  std::optional<LineRate> pacing;
};

// Sends each payload as one datagram to cfg.dst_ip:cfg.dst_port. Throws
// TransportError with the OS reason on failure. bind_source_port pins the
// local port to cfg.src_port; otherwise the host picks one.
SendReport udp_send(std::span<const Payload> payloads, const NetConfig& cfg,
                    const SendOptions& options = {}, bool bind_source_port = false);

struct ReceiveReport {
  std::vector<Payload> payloads;  // arrival order
  bool timed_out = false;
  std::size_t rejected = 0;  // datagrams that were not exactly 1024 octets
};

// Bound UDP socket. Owned by one thread at a time.
class UdpReceiver {
public:
  // Throws TransportError if the address cannot be bound.
  UdpReceiver(const Ipv4Address& bind_ip, std::uint16_t port);
  ~UdpReceiver();
  UdpReceiver(const UdpReceiver&) = delete;
  UdpReceiver& operator=(const UdpReceiver&) = delete;

  std::uint16_t port() const { return port_; }

  // Collects datagrams until `expected` arrived or no datagram shows up for
  // `timeout`. A timeout is reported, not thrown.
  ReceiveReport receive(std::size_t expected, std::chrono::milliseconds timeout);

private:
  int fd_ = -1;
  std::uint16_t port_ = 0;
};

ReceiveReport udp_receive(const Ipv4Address& bind_ip, std::uint16_t port, std::size_t expected,
                          std::chrono::milliseconds timeout);

}  // namespace platelink
