#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rdom {

/// A protocol message: a 4-bit kind tag, a list of vertex ids and a list of
/// id sequences (paths, routes or adjacency records). Ids are in [0, n).
struct Message {
  std::uint8_t kind = 0;
  std::vector<std::uint32_t> ids;
  std::vector<std::vector<std::uint32_t>> paths;

  friend bool operator==(const Message&, const Message&) = default;
};

/// Canonical wire layout for an n-vertex network:
///   header  = kind (4 bits) | #ids (count_width) | #paths (count_width)
///   ids     = id_width bits each
///   paths   = (length) in id_width bits, then (length + 1) ids
/// with id_width = max(1, ceil(log2 n)), count_width = max(1, ceil(log2(n + 1))).
/// Bits are packed most significant first.
struct WireFormat {
  std::size_t n = 1;

  unsigned id_width() const noexcept;
  unsigned count_width() const noexcept;
  std::size_t header_bits() const noexcept { return 4 + 2 * count_width(); }
};

struct EncodedMessage {
  std::size_t header_bits = 0;
  std::size_t payload_bits = 0;
  std::vector<std::uint8_t> bytes;
  std::size_t bits() const noexcept { return header_bits + payload_bits; }
};

/// Throws InvalidArgument if an id is out of range, a path is empty, the
/// kind exceeds 4 bits, or a count does not fit its field.
EncodedMessage encode_message(const Message& msg, WireFormat format);
Message decode_message(std::span<const std::uint8_t> bytes, WireFormat format);

/// Exact bit count of encode_message(msg, format) without materializing it.
std::size_t message_bits(const Message& msg, WireFormat format);

}  // namespace rdom
