#include <doctest.h>

#include <random>

#include "rdom/error.hpp"
#include "rdom/message.hpp"

using namespace rdom;

namespace {

unsigned ceil_log2(std::size_t x) {
  unsigned b = 0;
  while ((std::size_t{1} << b) < x) ++b;
  return b;
}

}  // namespace

TEST_SUITE("message") {
  TEST_CASE("field widths") {
    CHECK(WireFormat{1}.id_width() == 1);
    CHECK(WireFormat{2}.id_width() == 1);
    CHECK(WireFormat{16}.id_width() == 4);
    CHECK(WireFormat{17}.id_width() == 5);
    CHECK(WireFormat{16}.count_width() == 5);
    CHECK(WireFormat{15}.count_width() == 4);
    for (std::size_t n = 2; n < 5000; n += 7) {
      CHECK(WireFormat{n}.id_width() == ceil_log2(n));
      CHECK(WireFormat{n}.count_width() == std::max(1u, ceil_log2(n + 1)));
    }
  }

  TEST_CASE("encoding examples") {
    const WireFormat f{16};
    const auto empty = encode_message(Message{}, f);
    CHECK(empty.payload_bits == 0);
    CHECK(empty.bits() == f.header_bits());

    const auto one = encode_message(Message{1, {9}, {}}, f);
    CHECK(one.payload_bits == 4);

    const auto path = encode_message(Message{2, {}, {{1, 2, 3, 4}}}, f);
    CHECK(path.payload_bits == 4 + 16);

    // kind 1, one id, no paths, id 9: 0001 00001 00000 1001
    CHECK(one.bytes == std::vector<std::uint8_t>{0x10, 0x82, 0x40});
  }

  TEST_CASE("invalid messages throw") {
    const WireFormat f{8};
    CHECK_THROWS_AS(encode_message(Message{0, {8}, {}}, f), InvalidArgument);
    CHECK_THROWS_AS(encode_message(Message{0, {}, {{}}}, f), InvalidArgument);
    CHECK_THROWS_AS(encode_message(Message{16, {}, {}}, f), InvalidArgument);
    CHECK_THROWS_AS(encode_message(Message{0, {}, {{1, 2, 3, 4, 5, 6, 7, 0, 1}}}, f), InvalidArgument);
    CHECK_THROWS_AS(encode_message(Message{0, std::vector<std::uint32_t>(16, 0), {}}, f), InvalidArgument);
  }

  TEST_CASE("random round trips") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 2000; ++trial) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3000)(rng);
      const WireFormat f{n};
      std::uniform_int_distribution<std::uint32_t> id(0, static_cast<std::uint32_t>(n - 1));
      std::uniform_int_distribution<std::size_t> count(0, std::min<std::size_t>(n, 6));
      Message m;
      m.kind = static_cast<std::uint8_t>(trial % 16);
      for (std::size_t i = count(rng); i > 0; --i) m.ids.push_back(id(rng));
      for (std::size_t i = count(rng); i > 0; --i) {
        std::vector<std::uint32_t> p(std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(n, 5))(rng));
        for (auto& x : p) x = id(rng);
        m.paths.push_back(p);
      }
      const auto enc = encode_message(m, f);
      CHECK(enc.bits() == message_bits(m, f));
      CHECK(enc.bytes.size() == (enc.bits() + 7) / 8);
      std::size_t expect = m.ids.size() * f.id_width();
      for (const auto& p : m.paths) expect += (p.size() + 1) * f.id_width();
      CHECK(enc.payload_bits == expect);
      CHECK(decode_message(enc.bytes, f) == m);
    }
  }

  TEST_CASE("truncated input is rejected") {
    const WireFormat f{100};
    const auto enc = encode_message(Message{3, {1, 2, 3}, {{4, 5}}}, f);
    std::vector<std::uint8_t> cut(enc.bytes.begin(), enc.bytes.end() - 2);
    CHECK_THROWS_AS(decode_message(cut, f), InvalidArgument);
  }
}
