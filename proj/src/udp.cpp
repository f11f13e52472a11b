#include "platelink/udp.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <string>
#include <thread>

#include "platelink/error.hpp"

namespace platelink {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw TransportError(what + ": " + std::strerror(errno));
}

sockaddr_in make_addr(const Ipv4Address& ip, std::uint16_t port) {
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  addr.sin_addr.s_addr = htonl(ip.to_host_order());
  return addr;
}

class Socket {
public:
  Socket() : fd_(::socket(AF_INET, SOCK_DGRAM, 0)) {
    if (fd_ < 0) fail("socket");
  }
  ~Socket() {
    if (fd_ >= 0) ::close(fd_);
  }
  Socket(const Socket&) = delete;
  Socket& operator=(const Socket&) = delete;
  int release() { return std::exchange(fd_, -1); }
  int get() const { return fd_; }

private:
  int fd_;
};

}  // namespace

SendReport udp_send(std::span<const Payload> payloads, const NetConfig& cfg,
                    const SendOptions& options, bool bind_source_port) {
  SendReport report;
  if (payloads.empty()) return report;

  Socket sock;
  if (bind_source_port) {
    auto local = make_addr(Ipv4Address{{0, 0, 0, 0}}, cfg.src_port);
    if (::bind(sock.get(), reinterpret_cast<sockaddr*>(&local), sizeof local) != 0)
      fail("bind source port " + std::to_string(cfg.src_port));
  }
  auto dst = make_addr(cfg.dst_ip, cfg.dst_port);
  const std::string where = cfg.dst_ip.to_string() + ":" + std::to_string(cfg.dst_port);
  if (::connect(sock.get(), reinterpret_cast<sockaddr*>(&dst), sizeof dst) != 0)
    fail("connect " + where);

  std::vector<TransmissionSlot> slots;
  if (options.pacing) {
    std::vector<std::size_t> sizes(payloads.size(), kFrameSize);
    slots = schedule_transmission(sizes, *options.pacing);
  }
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < payloads.size(); ++i) {
    if (options.pacing)
      std::this_thread::sleep_until(t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                             std::chrono::duration<double>(slots[i].start_s)));
    const ssize_t n = ::send(sock.get(), payloads[i].data(), payloads[i].size(), 0);
    if (n < 0) fail("send datagram " + std::to_string(i) + " to " + where);
    ++report.datagrams_sent;
    report.bytes_sent += static_cast<std::size_t>(n);
  }
  return report;
}

UdpReceiver::UdpReceiver(const Ipv4Address& bind_ip, std::uint16_t port) {
  Socket sock;
  int rcvbuf = 8 << 20;
  ::setsockopt(sock.get(), SOL_SOCKET, SO_RCVBUF, &rcvbuf, sizeof rcvbuf);
  auto addr = make_addr(bind_ip, port);
  if (::bind(sock.get(), reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0)
    fail("bind " + bind_ip.to_string() + ":" + std::to_string(port));
  socklen_t len = sizeof addr;
  if (::getsockname(sock.get(), reinterpret_cast<sockaddr*>(&addr), &len) != 0) fail("getsockname");
  port_ = ntohs(addr.sin_port);
  fd_ = sock.release();
}

UdpReceiver::~UdpReceiver() {
  if (fd_ >= 0) ::close(fd_);
}

ReceiveReport UdpReceiver::receive(std::size_t expected, std::chrono::milliseconds timeout) {
  ReceiveReport report;
  std::uint8_t buf[2048];
  while (report.payloads.size() < expected) {
    pollfd pfd{fd_, POLLIN, 0};
    const int ready = ::poll(&pfd, 1, static_cast<int>(timeout.count()));
    if (ready < 0) {
      if (errno == EINTR) continue;
      fail("poll");
    }
    if (ready == 0) {
      report.timed_out = true;
      break;
    }
    const ssize_t n = ::recv(fd_, buf, sizeof buf, 0);
    if (n < 0) {
      if (errno == EINTR) continue;
      fail("recv");
    }
    if (static_cast<std::size_t>(n) != kPayloadSize) {
      ++report.rejected;
      continue;
    }
    Payload p;
    std::memcpy(p.data(), buf, kPayloadSize);
    report.payloads.push_back(p);
  }
  return report;
}

ReceiveReport udp_receive(const Ipv4Address& bind_ip, std::uint16_t port, std::size_t expected,
                          std::chrono::milliseconds timeout) {
  UdpReceiver receiver(bind_ip, port);
  return receiver.receive(expected, timeout);
}

}  // namespace platelink
