#pragma once

#include <stdexcept>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace platelink {

// Root of every error the library throws. Subclasses exist so callers and
// tests can tell failure kinds apart without string matching.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error { using Error::Error; };
class RangeError : public Error { using Error::Error; };
class BoundsError : public Error { using Error::Error; };
class LengthError : public Error { using Error::Error; };
class EmptyInputError : public Error { using Error::Error; };
class MalformedFrameError : public Error { using Error::Error; };
// Carries every sequence number that was expected but not received.
class MissingPacketError : public Error {
public:
  MissingPacketError(const std::string& what, std::vector<std::uint16_t> missing)
      : Error(what), missing_(std::move(missing)) {}
  const std::vector<std::uint16_t>& missing() const { return missing_; }

private:
  std::vector<std::uint16_t> missing_;
};

class PayloadCorruptionError : public Error { using Error::Error; };
class FramingError : public Error { using Error::Error; };
class FormatError : public Error { using Error::Error; };
class TruncationError : public Error { using Error::Error; };
class TransportError : public Error { using Error::Error; };
class ConfigError : public Error { using Error::Error; };

}  // namespace platelink
