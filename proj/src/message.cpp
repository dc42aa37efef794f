#include "rdom/message.hpp"

#include <bit>
#include <string>

#include "rdom/error.hpp"

namespace rdom {

namespace {

unsigned ceil_log2(std::size_t x) {
  return x <= 1 ? 0u : static_cast<unsigned>(std::bit_width(x - 1));
}

class BitWriter {
 public:
  void put(std::uint64_t value, unsigned width) {
    for (unsigned i = width; i-- > 0;) {
      if (bits_ % 8 == 0) bytes_.push_back(0);
      if ((value >> i) & 1u) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (bits_ % 8));
      ++bits_;
    }
  }
  std::size_t bits() const noexcept { return bits_; }
  std::vector<std::uint8_t> take() { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t bits_ = 0;
};

class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}
  std::uint64_t get(unsigned width) {
    std::uint64_t value = 0;
    for (unsigned i = 0; i < width; ++i) {
      if (pos_ / 8 >= bytes_.size()) throw InvalidArgument("truncated message");
      value = (value << 1) | ((bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1u);
      ++pos_;
    }
    return value;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void check_id(std::uint32_t id, std::size_t n) {
  if (id >= n) throw InvalidArgument("id " + std::to_string(id) + " out of range for n = " + std::to_string(n));
}

}  // namespace

unsigned WireFormat::id_width() const noexcept { return std::max(1u, ceil_log2(n)); }
unsigned WireFormat::count_width() const noexcept { return std::max(1u, ceil_log2(n + 1)); }

std::size_t message_bits(const Message& msg, WireFormat format) {
  const std::size_t w = format.id_width();
  std::size_t bits = format.header_bits() + msg.ids.size() * w;
  for (const auto& p : msg.paths) bits += w * (1 + p.size());
  return bits;
}

EncodedMessage encode_message(const Message& msg, WireFormat format) {
  const unsigned w = format.id_width();
  const unsigned cw = format.count_width();
  const std::uint64_t max_count = (std::uint64_t{1} << cw) - 1;
  if (msg.kind > 15) throw InvalidArgument("message kind does not fit in 4 bits");
  if (msg.ids.size() > max_count || msg.paths.size() > max_count) {
    throw InvalidArgument("message carries more items than its count field allows");
  }
  BitWriter out;
  out.put(msg.kind, 4);
  out.put(msg.ids.size(), cw);
  out.put(msg.paths.size(), cw);
  EncodedMessage enc;
  enc.header_bits = out.bits();
  for (auto id : msg.ids) {
    check_id(id, format.n);
    out.put(id, w);
  }
  for (const auto& p : msg.paths) {
    if (p.empty()) throw InvalidArgument("empty path in message");
    if (p.size() - 1 >= format.n) throw InvalidArgument("path longer than n - 1");
    out.put(p.size() - 1, w);
    for (auto id : p) {
      check_id(id, format.n);
      out.put(id, w);
    }
  }
  enc.payload_bits = out.bits() - enc.header_bits;
  enc.bytes = out.take();
  return enc;
}

Message decode_message(std::span<const std::uint8_t> bytes, WireFormat format) {
  const unsigned w = format.id_width();
  const unsigned cw = format.count_width();
  BitReader in(bytes);
  Message msg;
  msg.kind = static_cast<std::uint8_t>(in.get(4));
  const auto ids = in.get(cw);
  const auto paths = in.get(cw);
  msg.ids.reserve(ids);
  for (std::uint64_t i = 0; i < ids; ++i) msg.ids.push_back(static_cast<std::uint32_t>(in.get(w)));
  msg.paths.resize(paths);
  for (auto& p : msg.paths) {
    const auto length = in.get(w);
    p.reserve(length + 1);
    for (std::uint64_t i = 0; i <= length; ++i) p.push_back(static_cast<std::uint32_t>(in.get(w)));
  }
  return msg;
}

}  // namespace rdom
