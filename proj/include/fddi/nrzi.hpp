#pragma once

// NRZI modulation: a polarity transition in the optical signal encodes a
// logical 1, no transition encodes 0. One code cell carries one code-bit.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fddi/symbols.hpp"

namespace fddi {

// Ordered code-bits, one entry per bit, transmission order. Values are 0/1.
using CodeBits = std::vector<uint8_t>;

enum class Level : uint8_t { Low = 0, High = 1 };

// Binary signal levels, one per code cell, plus the level of the cell
// immediately preceding the stream (decode depends only on transitions).
struct LevelStream {
  std::vector<uint8_t> levels;  // 0 = low, 1 = high
  uint8_t leading_level = 0;

  std::size_t size() const { return levels.size(); }
};

inline LevelStream nrzi_modulate(const CodeBits& bits, Level leading = Level::Low) {
  LevelStream out;
  out.leading_level = static_cast<uint8_t>(leading);
  out.levels.resize(bits.size());
  uint8_t level = out.leading_level;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    level ^= bits[i] & 1;
    out.levels[i] = level;
  }
  return out;
}

inline CodeBits nrzi_demodulate(const LevelStream& stream) {
  CodeBits bits(stream.levels.size());
  uint8_t prev = stream.leading_level;
  for (std::size_t i = 0; i < stream.levels.size(); ++i) {
    bits[i] = static_cast<uint8_t>(stream.levels[i] != prev);
    prev = stream.levels[i];
  }
  return bits;
}

inline CodeBits symbols_to_bits(const std::vector<Symbol>& syms) {
  CodeBits bits;
  bits.reserve(syms.size() * 5);
  for (Symbol s : syms) {
    uint8_t g = encode_symbol(s);
    for (int b = 4; b >= 0; --b) bits.push_back((g >> b) & 1);
  }
  return bits;
}

// Decodes on fixed 5-bit boundaries; a trailing partial group is dropped.
inline std::vector<Symbol> bits_to_symbols(const CodeBits& bits) {
  std::vector<Symbol> syms;
  syms.reserve(bits.size() / 5);
  for (std::size_t i = 0; i + 5 <= bits.size(); i += 5) {
    uint8_t g = 0;
    for (int b = 0; b < 5; ++b) g = static_cast<uint8_t>((g << 1) | (bits[i + b] & 1));
    syms.push_back(decode_group(g));
  }
  return syms;
}

}  // namespace fddi
