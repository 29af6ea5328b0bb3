#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "fddi/noise.hpp"
#include "fddi/nrzi.hpp"
#include "fddi/symbols.hpp"

using namespace fddi;

TEST_CASE("alphabet is a bijection over the 32 groups") {
  std::set<uint8_t> groups;
  int data = 0, line = 0, control = 0, invalid = 0;
  for (uint8_t g = 0; g < 32; ++g) {
    Symbol s = decode_group(g);
    REQUIRE(s.code_group() == g);
    groups.insert(s.code_group());
    switch (s.cls()) {
      case SymbolClass::Data: ++data; break;
      case SymbolClass::Quiet:
      case SymbolClass::Idle:
      case SymbolClass::Halt: ++line; break;
      case SymbolClass::V:
      case SymbolClass::VH: ++invalid; break;
      default: ++control; break;
    }
  }
  REQUIRE(groups.size() == 32);
  REQUIRE(data == 16);
  REQUIRE(line == 3);
  REQUIRE(control == 5);
  REQUIRE(invalid == 8);
}

TEST_CASE("code group assignments") {
  REQUIRE(encode_symbol(Symbol::data(0x5)) == 0b01011);
  REQUIRE(encode_symbol(sym::J) == 0b11000);
  REQUIRE(encode_symbol(sym::K) == 0b10001);
  REQUIRE(decode_group(0b11110) == Symbol::data(0x0));
  REQUIRE(decode_group(0b00001).cls() == SymbolClass::VH);
  REQUIRE(decode_group(0b00110).cls() == SymbolClass::V);
  REQUIRE_THROWS_AS(encode_symbol(sym::V), AttemptToTransmitViolation);
  REQUIRE_THROWS_AS(encode_symbol(sym::VH), AttemptToTransmitViolation);
}

TEST_CASE("exactly four groups decode as VH") {
  std::set<uint8_t> vh;
  for (uint8_t g = 0; g < 32; ++g)
    if (decode_group(g).cls() == SymbolClass::VH) vh.insert(g);
  REQUIRE(vh == std::set<uint8_t>{0b00001, 0b00010, 0b01000, 0b10000});
}

TEST_CASE("data groups have at most two consecutive zero code-bits") {
  for (uint8_t v = 0; v < 16; ++v) {
    uint8_t g = Symbol::data(v).code_group();
    for (int b = 4; b >= 2; --b) {
      bool run3 = !((g >> b) & 1) && !((g >> (b - 1)) & 1) && !((g >> (b - 2)) & 1);
      REQUIRE_FALSE(run3);
    }
  }
}

TEST_CASE("roundtrip for every transmittable symbol") {
  for (uint8_t g = 0; g < 32; ++g) {
    Symbol s = decode_group(g);
    if (s.is_violation()) continue;
    REQUIRE(decode_group(encode_symbol(s)) == s);
  }
}

TEST_CASE("nrzi modulation of 11110 from low") {
  LevelStream ls = nrzi_modulate({1, 1, 1, 1, 0}, Level::Low);
  REQUIRE(ls.levels == std::vector<uint8_t>{1, 0, 1, 0, 0});
  REQUIRE(nrzi_demodulate(ls) == CodeBits{1, 1, 1, 1, 0});
}

TEST_CASE("all-zero stream yields constant level") {
  LevelStream ls = nrzi_modulate(CodeBits(12, 0), Level::Low);
  REQUIRE(ls.levels == std::vector<uint8_t>(12, 0));
  REQUIRE(nrzi_demodulate(ls) == CodeBits(12, 0));
}

TEST_CASE("nrzi roundtrip for random streams, both leading levels") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    CodeBits bits(1 + rng() % 64);
    for (auto& b : bits) b = rng() & 1;
    for (Level lead : {Level::Low, Level::High}) {
      REQUIRE(nrzi_demodulate(nrzi_modulate(bits, lead)) == bits);
    }
  }
}

TEST_CASE("demodulation is leading-level symmetric") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    CodeBits bits(1 + rng() % 64);
    for (auto& b : bits) b = rng() & 1;
    LevelStream ls = nrzi_modulate(bits, Level::Low);
    LevelStream inverted = ls;
    inverted.leading_level ^= 1;
    for (auto& l : inverted.levels) l ^= 1;
    REQUIRE(nrzi_demodulate(inverted) == nrzi_demodulate(ls));
  }
}

TEST_CASE("flipped fourth cell of Data(0) decodes as Data(F)") {
  LevelStream ls = nrzi_modulate(symbols_to_bits({Symbol::data(0)}), Level::Low);
  LevelStream noisy = apply_noise(ls, NoiseEvent{3});
  CodeBits bits = nrzi_demodulate(noisy);
  REQUIRE(bits == CodeBits{1, 1, 1, 0, 1});
  REQUIRE(bits_to_symbols(bits) == std::vector<Symbol>{Symbol::data(0xF)});
}

TEST_CASE("symbol text notation") {
  auto syms = symbols_from_string("IIIIJK8005TRRR");
  REQUIRE(syms.size() == 14);
  REQUIRE(symbols_to_string(syms) == "IIIIJK8005TRRR");
  REQUIRE_THROWS_AS(symbol_from_char('X'), CodingError);
}
