#pragma once

// 4B/5B symbol alphabet of the FDDI physical layer.
//
// A symbol is one of the 32 five-code-bit groups. Code groups are stored as
// 5-bit integers whose bit 4 (0x10) is the first transmitted code-bit, so a
// group reads left-to-right in transmission order when written in binary.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fddi {

struct CodingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when asked to put a violation group on the wire.
struct AttemptToTransmitViolation : CodingError {
  AttemptToTransmitViolation() : CodingError("violation symbols shall not be transmitted") {}
};

enum class SymbolClass : uint8_t {
  Data,   // hex 0-F, carries one quartet of data bits
  Quiet,  // line state
  Idle,   // line state
  Halt,   // line state
  J,      // 1st symbol of the starting delimiter
  K,      // 2nd symbol of the starting delimiter
  T,      // ending delimiter
  R,      // status indicator: reset
  S,      // status indicator: set
  V,      // invalid group
  VH,     // invalid group, interpreted as Halt when received
};

namespace detail {

// class of each 5-bit group, indexed by group value
inline constexpr std::array<SymbolClass, 32> kClassOfGroup = [] {
  std::array<SymbolClass, 32> t{};
  auto set = [&](uint8_t g, SymbolClass c) { t[g] = c; };
  set(0b11110, SymbolClass::Data); set(0b01001, SymbolClass::Data);
  set(0b10100, SymbolClass::Data); set(0b10101, SymbolClass::Data);
  set(0b01010, SymbolClass::Data); set(0b01011, SymbolClass::Data);
  set(0b01110, SymbolClass::Data); set(0b01111, SymbolClass::Data);
  set(0b10010, SymbolClass::Data); set(0b10011, SymbolClass::Data);
  set(0b10110, SymbolClass::Data); set(0b10111, SymbolClass::Data);
  set(0b11010, SymbolClass::Data); set(0b11011, SymbolClass::Data);
  set(0b11100, SymbolClass::Data); set(0b11101, SymbolClass::Data);
  set(0b00000, SymbolClass::Quiet);
  set(0b11111, SymbolClass::Idle);
  set(0b00100, SymbolClass::Halt);
  set(0b11000, SymbolClass::J); set(0b10001, SymbolClass::K);
  set(0b01101, SymbolClass::T);
  set(0b00111, SymbolClass::R); set(0b11001, SymbolClass::S);
  set(0b00001, SymbolClass::VH); set(0b00010, SymbolClass::VH);
  set(0b00011, SymbolClass::V);  set(0b00101, SymbolClass::V);
  set(0b00110, SymbolClass::V);  set(0b01000, SymbolClass::VH);
  set(0b01100, SymbolClass::V);  set(0b10000, SymbolClass::VH);
  return t;
}();

// code group of each data value 0..15
inline constexpr std::array<uint8_t, 16> kGroupOfData = {
    0b11110, 0b01001, 0b10100, 0b10101, 0b01010, 0b01011, 0b01110, 0b01111,
    0b10010, 0b10011, 0b10110, 0b10111, 0b11010, 0b11011, 0b11100, 0b11101,
};

inline constexpr std::array<uint8_t, 32> kDataValueOfGroup = [] {
  std::array<uint8_t, 32> t{};
  t.fill(0xFF);
  for (uint8_t v = 0; v < 16; ++v) t[kGroupOfData[v]] = v;
  return t;
}();

}  // namespace detail

// One of the 32 symbols, keyed by its code group (the mapping is a bijection).
class Symbol {
 public:
  constexpr Symbol() : group_(0b11111) {}  // Idle

  static constexpr Symbol from_group(uint8_t group5) { return Symbol(group5 & 0x1F); }
  static constexpr Symbol data(uint8_t value) { return Symbol(detail::kGroupOfData[value & 0xF]); }

  constexpr SymbolClass cls() const { return detail::kClassOfGroup[group_]; }
  constexpr uint8_t code_group() const { return group_; }
  constexpr bool is_data() const { return cls() == SymbolClass::Data; }
  // pre: is_data()
  constexpr uint8_t data_value() const { return detail::kDataValueOfGroup[group_]; }

  constexpr bool is_line_state() const {
    auto c = cls();
    return c == SymbolClass::Quiet || c == SymbolClass::Idle || c == SymbolClass::Halt;
  }
  constexpr bool is_violation() const {
    return cls() == SymbolClass::V || cls() == SymbolClass::VH;
  }
  // Q/H/I/V/VH inside a frame aborts it (VH is interpreted as Halt on receive)
  constexpr bool aborts_frame() const { return is_line_state() || is_violation(); }

  constexpr bool operator==(const Symbol&) const = default;
  constexpr auto operator<=>(const Symbol&) const = default;

 private:
  explicit constexpr Symbol(uint8_t g) : group_(g) {}
  uint8_t group_;
};

namespace sym {
inline constexpr Symbol Q = Symbol::from_group(0b00000);
inline constexpr Symbol I = Symbol::from_group(0b11111);
inline constexpr Symbol H = Symbol::from_group(0b00100);
inline constexpr Symbol J = Symbol::from_group(0b11000);
inline constexpr Symbol K = Symbol::from_group(0b10001);
inline constexpr Symbol T = Symbol::from_group(0b01101);
inline constexpr Symbol R = Symbol::from_group(0b00111);
inline constexpr Symbol S = Symbol::from_group(0b11001);
// representative groups for constructing test streams; V/VH cover 8 groups
inline constexpr Symbol V = Symbol::from_group(0b00011);
inline constexpr Symbol VH = Symbol::from_group(0b00001);
}  // namespace sym

// encode_symbol: Table-1 code group of a transmittable symbol.
inline uint8_t encode_symbol(Symbol s) {
  if (s.is_violation()) throw AttemptToTransmitViolation();
  return s.code_group();
}

// decode_group: total on all 32 groups; violations decode to V or VH.
inline constexpr Symbol decode_group(uint8_t group5) { return Symbol::from_group(group5); }

// Text notation: data symbols as hex digits, control/line symbols as letters,
// violations as 'V' (the V/VH distinction is not representable in text).
inline char symbol_to_char(Symbol s) {
  switch (s.cls()) {
    case SymbolClass::Data: return "0123456789ABCDEF"[s.data_value()];
    case SymbolClass::Quiet: return 'Q';
    case SymbolClass::Idle: return 'I';
    case SymbolClass::Halt: return 'H';
    case SymbolClass::J: return 'J';
    case SymbolClass::K: return 'K';
    case SymbolClass::T: return 'T';
    case SymbolClass::R: return 'R';
    case SymbolClass::S: return 'S';
    case SymbolClass::V: return 'V';
    case SymbolClass::VH: return 'V';
  }
  return '?';
}

inline Symbol symbol_from_char(char c) {
  if (c >= '0' && c <= '9') return Symbol::data(static_cast<uint8_t>(c - '0'));
  if (c >= 'A' && c <= 'F') return Symbol::data(static_cast<uint8_t>(c - 'A' + 10));
  if (c >= 'a' && c <= 'f') return Symbol::data(static_cast<uint8_t>(c - 'a' + 10));
  switch (c) {
    case 'Q': case 'q': return sym::Q;
    case 'I': case 'i': return sym::I;
    case 'H': case 'h': return sym::H;
    case 'J': case 'j': return sym::J;
    case 'K': case 'k': return sym::K;
    case 'T': case 't': return sym::T;
    case 'R': case 'r': return sym::R;
    case 'S': case 's': return sym::S;
    case 'V': case 'v': return sym::V;
    default: throw CodingError(std::string("unknown symbol character '") + c + "'");
  }
}

inline std::string symbols_to_string(const std::vector<Symbol>& stream) {
  std::string out;
  out.reserve(stream.size());
  for (Symbol s : stream) out.push_back(symbol_to_char(s));
  return out;
}

inline std::vector<Symbol> symbols_from_string(std::string_view text) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == ' ') continue;
    out.push_back(symbol_from_char(c));
  }
  return out;
}

}  // namespace fddi
