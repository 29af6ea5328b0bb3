#pragma once

// Single-noise-event model: one misjudged optical signal level in one code
// cell. Under NRZI that flips exactly the two code-bits decoded across the
// affected cell's boundaries (one bit if the cell is last in the stream).
// This module derives the symbol-level consequences exhaustively: the effect
// matrix for data symbols, the outcome statistics, and the ten data-bit error
// patterns a noise event can produce.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fddi/nrzi.hpp"
#include "fddi/symbols.hpp"

namespace fddi {

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// One noise event. cell_index -1 denotes the cell immediately preceding the
// stream (it flips leading_level, corrupting the first decoded bit).
struct NoiseEvent {
  std::ptrdiff_t cell_index = 0;
};

inline LevelStream apply_noise(LevelStream stream, NoiseEvent e) {
  if (e.cell_index < -1 || e.cell_index >= static_cast<std::ptrdiff_t>(stream.size()))
    throw IndexOutOfRange("noise cell index out of range");
  if (e.cell_index == -1)
    stream.leading_level ^= 1;
  else
    stream.levels[static_cast<std::size_t>(e.cell_index)] ^= 1;
  return stream;
}

// The six "bit positions changed" columns for a single symbol: an event in
// cell i of a symbol flips code-bits i and i+1; the boundary cells flip
// position 1 alone or position 5 alone (the partner bit lands in the
// neighboring symbol).
enum class ChangedPositions : uint8_t { P1, P12, P23, P34, P45, P5 };

inline constexpr std::array<ChangedPositions, 6> kAllChangedPositions = {
    ChangedPositions::P1,  ChangedPositions::P12, ChangedPositions::P23,
    ChangedPositions::P34, ChangedPositions::P45, ChangedPositions::P5};

inline constexpr uint8_t position_mask(ChangedPositions p) {
  switch (p) {
    case ChangedPositions::P1:  return 0b10000;
    case ChangedPositions::P12: return 0b11000;
    case ChangedPositions::P23: return 0b01100;
    case ChangedPositions::P34: return 0b00110;
    case ChangedPositions::P45: return 0b00011;
    case ChangedPositions::P5:  return 0b00001;
  }
  return 0;
}

inline constexpr const char* position_label(ChangedPositions p) {
  switch (p) {
    case ChangedPositions::P1:  return "1";
    case ChangedPositions::P12: return "1,2";
    case ChangedPositions::P23: return "2,3";
    case ChangedPositions::P34: return "3,4";
    case ChangedPositions::P45: return "4,5";
    case ChangedPositions::P5:  return "5";
  }
  return "?";
}

// Resulting symbol when the given code-bit positions of a data symbol flip.
inline Symbol symbol_effect(Symbol s, ChangedPositions p) {
  if (!s.is_data()) throw CodingError("symbol_effect requires a data symbol");
  return decode_group(static_cast<uint8_t>(s.code_group() ^ position_mask(p)));
}

// Boundary noise between two adjacent data symbols: last code-bit of the
// first, first code-bit of the second.
inline std::pair<Symbol, Symbol> pair_effect(Symbol a, Symbol b) {
  return {symbol_effect(a, ChangedPositions::P5), symbol_effect(b, ChangedPositions::P1)};
}

// A data-bit error pattern: XOR of original and resulting data quartets.
// Single-symbol patterns are 4 bits; boundary patterns span two symbols
// (high nibble = earlier-transmitted symbol). The alphabet has exactly ten
// members; `count` follows the frequency table conventions (single-symbol
// counts are out of the 80 per-symbol cases, two-symbol counts out of the
// 1280 per-pair cases), so probability() is the chance that a noise event
// hitting a uniformly random symbol/cell produces this pattern.
struct ErrorPattern {
  uint16_t bits = 0;       // 4- or 8-bit XOR mask; bit 0 = last-transmitted data-bit
  uint8_t symbol_span = 1; // 1 or 2 symbols
  uint32_t count = 0;
  double probability() const {
    return symbol_span == 1 ? count / 80.0 : count / 1280.0;
  }
  std::string label() const {
    std::string s;
    int n = symbol_span * 4;
    for (int i = n - 1; i >= 0; --i) {
      s.push_back((bits >> i) & 1 ? '1' : '0');
      if (symbol_span == 2 && i == 4) s.push_back('-');
    }
    return s;
  }
};

// Exhaustive tabulation of the 64 intrasymbol and 256 intersymbol cases.
struct EffectTabulation {
  // intrasymbol outcome counts (out of 64 cases; percentages are /80)
  uint32_t intra_data = 0, intra_j = 0, intra_k = 0, intra_r = 0, intra_s = 0,
           intra_t = 0, intra_violation = 0;
  // intersymbol outcome counts (out of 256 pairs; percentages are /1280)
  uint32_t inter_data_data = 0, inter_data_t = 0, inter_data_r = 0,
           inter_data_s = 0, inter_violation = 0;
  // the ten error patterns, ordered as in the frequency table
  std::vector<ErrorPattern> patterns;

  static double intra_pct(uint32_t c) { return 100.0 * c / 80.0; }
  static double inter_pct(uint32_t c) { return 100.0 * c / 1280.0; }

  // share of data symbol errors producing H/I/V/VH anywhere (symbol violation)
  double symbol_violation_pct() const {
    return intra_pct(intra_violation) + inter_pct(inter_violation);
  }
  // share producing only other data symbols (invisible to symbol/framing checks)
  double data_to_data_pct() const {
    return intra_pct(intra_data) + inter_pct(inter_data_data);
  }
  double control_pct() const {
    return intra_pct(intra_j + intra_k + intra_r + intra_s + intra_t) +
           inter_pct(inter_data_t + inter_data_r + inter_data_s);
  }
};

namespace detail {

inline bool outcome_is_violation(Symbol s) { return s.aborts_frame(); }

}  // namespace detail

inline EffectTabulation tabulate_effects() {
  EffectTabulation tab;
  // pattern accumulation keyed by (bits, span)
  auto bump = [&](uint16_t bits, uint8_t span) {
    for (auto& p : tab.patterns)
      if (p.bits == bits && p.symbol_span == span) {
        ++p.count;
        return;
      }
    tab.patterns.push_back({bits, span, 1});
  };

  for (uint8_t v = 0; v < 16; ++v) {
    Symbol s = Symbol::data(v);
    for (ChangedPositions p : {ChangedPositions::P12, ChangedPositions::P23,
                               ChangedPositions::P34, ChangedPositions::P45}) {
      Symbol r = symbol_effect(s, p);
      if (r.is_data()) {
        ++tab.intra_data;
        bump(static_cast<uint16_t>(v ^ r.data_value()), 1);
      } else if (detail::outcome_is_violation(r)) {
        ++tab.intra_violation;
      } else {
        switch (r.cls()) {
          case SymbolClass::J: ++tab.intra_j; break;
          case SymbolClass::K: ++tab.intra_k; break;
          case SymbolClass::R: ++tab.intra_r; break;
          case SymbolClass::S: ++tab.intra_s; break;
          case SymbolClass::T: ++tab.intra_t; break;
          default: break;
        }
      }
    }
  }

  for (uint8_t a = 0; a < 16; ++a) {
    for (uint8_t b = 0; b < 16; ++b) {
      auto [ra, rb] = pair_effect(Symbol::data(a), Symbol::data(b));
      if (detail::outcome_is_violation(ra) || detail::outcome_is_violation(rb)) {
        ++tab.inter_violation;
      } else if (ra.is_data() && rb.is_data()) {
        ++tab.inter_data_data;
        uint16_t pat = static_cast<uint16_t>(((a ^ ra.data_value()) << 4) |
                                             (b ^ rb.data_value()));
        bump(pat, 2);
      } else if (ra.is_data()) {
        switch (rb.cls()) {
          case SymbolClass::T: ++tab.inter_data_t; break;
          case SymbolClass::R: ++tab.inter_data_r; break;
          case SymbolClass::S: ++tab.inter_data_s; break;
          default: ++tab.inter_violation; break;  // unreachable for this alphabet
        }
      } else {
        // first symbol became control: structurally broken either way
        ++tab.inter_violation;
      }
    }
  }

  // canonical order: 4-bit patterns ascending, then 8-bit ascending
  std::sort(tab.patterns.begin(), tab.patterns.end(), [](const auto& x, const auto& y) {
    if (x.symbol_span != y.symbol_span) return x.symbol_span < y.symbol_span;
    return x.bits < y.bits;
  });
  return tab;
}

// The ten-pattern alphabet (cached; tabulation is cheap but called often).
inline const std::vector<ErrorPattern>& error_pattern_alphabet() {
  static const std::vector<ErrorPattern> alphabet = tabulate_effects().patterns;
  return alphabet;
}

// Effect matrix: resulting symbol per (data symbol, changed positions).
inline std::array<std::array<Symbol, 6>, 16> effect_matrix() {
  std::array<std::array<Symbol, 6>, 16> m{};
  for (uint8_t v = 0; v < 16; ++v)
    for (std::size_t c = 0; c < 6; ++c)
      m[v][c] = symbol_effect(Symbol::data(v), kAllChangedPositions[c]);
  return m;
}

// Data-bit error pattern matrix: nullopt where the outcome is a nondata symbol.
inline std::array<std::array<std::optional<uint8_t>, 6>, 16> error_pattern_matrix() {
  std::array<std::array<std::optional<uint8_t>, 6>, 16> m{};
  for (uint8_t v = 0; v < 16; ++v)
    for (std::size_t c = 0; c < 6; ++c) {
      Symbol r = symbol_effect(Symbol::data(v), kAllChangedPositions[c]);
      if (r.is_data()) m[v][c] = static_cast<uint8_t>(v ^ r.data_value());
    }
  return m;
}

}  // namespace fddi
