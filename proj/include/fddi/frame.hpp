#pragma once

// FDDI protocol data units: frame/token construction, serialization to
// symbol streams, stream parsing, the enhanced frame validity criteria, and
// the per-station indicator repeat rules.
//
// Frame layout on the wire:
//   preamble (Idle symbols) | J K | FC(2) DA(12) SA(12) INFO(2k) FCS(8) | T | FS...
// Token layout:
//   preamble | J K | FC(2) | T T       (FC = 1000 0000 or 1100 0000)

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fddi/fcs.hpp"
#include "fddi/symbols.hpp"

namespace fddi {

struct OddInfoLength : std::invalid_argument {
  OddInfoLength() : std::invalid_argument("INFO field must be a whole number of symbol pairs") {}
};
struct TokenFcUsedForFrame : std::invalid_argument {
  TokenFcUsedForFrame() : std::invalid_argument("FC of the form 1X00 0000 denotes a token") {}
};
struct BadFieldArity : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kAddressSymbols = 12;   // 48-bit addressing
inline constexpr std::size_t kFcSymbols = 2;
inline constexpr std::size_t kMinDataSymbols = 34;   // FC + DA + SA + FCS
inline constexpr std::size_t kHeaderSymbols = kFcSymbols + 2 * kAddressSymbols;  // 26

inline bool is_token_fc(uint8_t fc1, uint8_t fc2) {
  return (fc1 == 0x8 || fc1 == 0xC) && fc2 == 0x0;
}

// FC classes exempt from the FCS requirement: 0X00 r000 or XX10 XXXX.
// The r bit is accepted either way on receive.
inline bool is_fcs_exempt_fc(uint8_t fc1, uint8_t fc2) {
  bool void_class = (fc1 == 0x0 || fc1 == 0x4) && (fc2 == 0x0 || fc2 == 0x8);
  bool exempt_class = (fc1 & 0b0011) == 0b0010;
  return void_class || exempt_class;
}

inline std::vector<uint8_t> nibbles_to_bits(std::span<const uint8_t> nibbles) {
  std::vector<uint8_t> bits;
  bits.reserve(nibbles.size() * 4);
  for (uint8_t v : nibbles)
    for (int b = 3; b >= 0; --b) bits.push_back((v >> b) & 1);
  return bits;
}

struct Frame {
  std::vector<uint8_t> fc;    // 2 data symbol values
  std::vector<uint8_t> da;    // 12
  std::vector<uint8_t> sa;    // 12
  std::vector<uint8_t> info;  // even count
  std::vector<uint8_t> fcs;   // 8
  std::vector<Symbol> indicators;  // >= 3; R/S from the originator
  std::size_t preamble_len = 4;

  std::vector<uint8_t> data_symbols() const {
    std::vector<uint8_t> out;
    out.reserve(fc.size() + da.size() + sa.size() + info.size() + fcs.size());
    for (const auto* f : {&fc, &da, &sa, &info, &fcs})
      out.insert(out.end(), f->begin(), f->end());
    return out;
  }
  // code-bit length on the wire (preamble + SD + data + ED + FS)
  std::size_t code_bits() const {
    return 5 * (preamble_len + 2 + data_symbols().size() + 1 + indicators.size());
  }
};

struct Token {
  bool restricted = false;
  std::size_t preamble_len = 4;
};

inline Frame build_frame(std::vector<uint8_t> fc, std::vector<uint8_t> da,
                         std::vector<uint8_t> sa, std::vector<uint8_t> info,
                         std::size_t preamble_len = 4) {
  if (fc.size() != kFcSymbols) throw BadFieldArity("FC must be 2 symbols");
  if (da.size() != kAddressSymbols || sa.size() != kAddressSymbols)
    throw BadFieldArity("DA/SA must be 12 symbols");
  if (info.size() % 2 != 0) throw OddInfoLength();
  if (is_token_fc(fc[0], fc[1])) throw TokenFcUsedForFrame();

  Frame f;
  f.fc = std::move(fc);
  f.da = std::move(da);
  f.sa = std::move(sa);
  f.info = std::move(info);
  f.preamble_len = preamble_len;

  std::vector<uint8_t> payload;
  for (const auto* part : {&f.fc, &f.da, &f.sa, &f.info})
    payload.insert(payload.end(), part->begin(), part->end());
  uint32_t crc = fcs_compute(nibbles_to_bits(payload));
  f.fcs.resize(8);
  for (int j = 0; j < 8; ++j) f.fcs[j] = (crc >> (28 - 4 * j)) & 0xF;

  f.indicators = {sym::R, sym::R, sym::R};
  return f;
}

inline std::vector<Symbol> serialize(const Frame& f) {
  std::vector<Symbol> out;
  out.reserve(f.preamble_len + 3 + f.data_symbols().size() + f.indicators.size());
  out.insert(out.end(), f.preamble_len, sym::I);
  out.push_back(sym::J);
  out.push_back(sym::K);
  for (uint8_t v : f.data_symbols()) out.push_back(Symbol::data(v));
  out.push_back(sym::T);
  out.insert(out.end(), f.indicators.begin(), f.indicators.end());
  return out;
}

inline std::vector<Symbol> serialize(const Token& t) {
  std::vector<Symbol> out;
  out.insert(out.end(), t.preamble_len, sym::I);
  out.push_back(sym::J);
  out.push_back(sym::K);
  out.push_back(Symbol::data(t.restricted ? 0xC : 0x8));
  out.push_back(Symbol::data(0x0));
  out.push_back(sym::T);
  out.push_back(sym::T);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

enum class FailureClass : uint8_t {
  none,
  symbol_violation,   // Q/H/I/V/VH inside the frame body
  framing_violation,  // misplaced control symbol / broken structure
  bad_length,         // odd or too-short data symbol count
  bad_fcs,
  e_indicator_not_R,
};

inline const char* to_string(FailureClass f) {
  switch (f) {
    case FailureClass::none: return "none";
    case FailureClass::symbol_violation: return "symbol_violation";
    case FailureClass::framing_violation: return "framing_violation";
    case FailureClass::bad_length: return "bad_length";
    case FailureClass::bad_fcs: return "bad_fcs";
    case FailureClass::e_indicator_not_R: return "e_indicator_not_R";
  }
  return "?";
}

struct ViolationEvent {
  std::size_t symbol_index;
  FailureClass kind;
};

struct FrameCandidate {
  std::vector<uint8_t> data;      // data symbol values between SD and ED
  std::vector<Symbol> indicators; // captured after T
  bool ended = false;             // saw the ending delimiter
  FailureClass abort = FailureClass::none;
  std::size_t start_index = 0;    // index of the J symbol in the stream
};

struct TokenCandidate {
  bool restricted = false;
  std::size_t start_index = 0;
};

struct ParseResult {
  std::vector<FrameCandidate> frames;
  std::vector<TokenCandidate> tokens;
  std::vector<ViolationEvent> violations;
};

// Scans a symbol stream for PDUs. JK is recognized on symbol boundaries only.
// Inside a frame, line-state and violation symbols abort reception (symbol
// violation); stray control symbols abort with a framing violation; a fresh
// JK abandons the current frame and starts a new one.
inline ParseResult parse(std::span<const Symbol> stream) {
  ParseResult res;
  std::size_t i = 0;
  const std::size_t n = stream.size();

  auto capture_indicators = [&](FrameCandidate& cand) {
    while (i < n) {
      SymbolClass c = stream[i].cls();
      bool rs = (c == SymbolClass::R || c == SymbolClass::S);
      bool early_slot = cand.indicators.size() < 3 &&
                        (c == SymbolClass::Data || c == SymbolClass::T);
      if (!rs && !early_slot) break;
      cand.indicators.push_back(stream[i]);
      ++i;
    }
  };

  while (i < n) {
    // scanning state: ignore everything until a JK pair
    if (!(stream[i].cls() == SymbolClass::J && i + 1 < n &&
          stream[i + 1].cls() == SymbolClass::K)) {
      ++i;
      continue;
    }
    FrameCandidate cand;
    cand.start_index = i;
    i += 2;
    bool closed = false;
    while (i < n && !closed) {
      Symbol s = stream[i];
      if (s.is_data()) {
        cand.data.push_back(s.data_value());
        ++i;
        continue;
      }
      closed = true;
      if (s.cls() == SymbolClass::T) {
        ++i;
        // a 2-symbol body with a token FC and a second T is a token
        if (cand.data.size() == 2 && is_token_fc(cand.data[0], cand.data[1]) &&
            i < n && stream[i].cls() == SymbolClass::T) {
          ++i;
          res.tokens.push_back({cand.data[0] == 0xC, cand.start_index});
          continue;
        }
        cand.ended = true;
        capture_indicators(cand);
        res.frames.push_back(std::move(cand));
      } else if (s.aborts_frame()) {
        res.violations.push_back({i, FailureClass::symbol_violation});
        cand.abort = FailureClass::symbol_violation;
        ++i;
        res.frames.push_back(std::move(cand));
      } else if (s.cls() == SymbolClass::J && i + 1 < n &&
                 stream[i + 1].cls() == SymbolClass::K) {
        // new starting delimiter pre-empts the current frame; leave i on the J
        res.violations.push_back({i, FailureClass::framing_violation});
        cand.abort = FailureClass::framing_violation;
        res.frames.push_back(std::move(cand));
      } else {
        // stray J/K/R/S
        res.violations.push_back({i, FailureClass::framing_violation});
        cand.abort = FailureClass::framing_violation;
        ++i;
        res.frames.push_back(std::move(cand));
      }
    }
    if (!closed) {
      // stream exhausted mid-frame
      res.frames.push_back(std::move(cand));
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Validity
// ---------------------------------------------------------------------------

struct ValidityVerdict {
  bool valid = false;
  FailureClass failure = FailureClass::none;

  static ValidityVerdict ok() { return {true, FailureClass::none}; }
  static ValidityVerdict fail(FailureClass f) { return {false, f}; }
};

enum class ValidityMode : uint8_t {
  enhanced,  // criteria 1-4 (E indicator must be R)
  baseline,  // criteria 1-3 only
};

// Applies the frame validity criteria in order: structure, data length,
// FC-class/FCS, E indicator.
inline ValidityVerdict validate(const FrameCandidate& cand,
                                ValidityMode mode = ValidityMode::enhanced,
                                const CheckPoly& poly = kFcs32) {
  if (cand.abort != FailureClass::none) return ValidityVerdict::fail(cand.abort);
  if (!cand.ended) return ValidityVerdict::fail(FailureClass::framing_violation);
  const auto& d = cand.data;
  if (d.size() < kHeaderSymbols)  // T landed in FC, DA or SA
    return ValidityVerdict::fail(FailureClass::framing_violation);
  if (is_token_fc(d[0], d[1]))
    return ValidityVerdict::fail(FailureClass::framing_violation);
  const std::size_t min_symbols = kHeaderSymbols + static_cast<std::size_t>(poly.degree) / 4;
  if (d.size() % 2 != 0 || d.size() < min_symbols)
    return ValidityVerdict::fail(FailureClass::bad_length);
  if (!is_fcs_exempt_fc(d[0], d[1])) {
    if (!check_region(poly, nibbles_to_bits(d)))
      return ValidityVerdict::fail(FailureClass::bad_fcs);
  }
  if (mode == ValidityMode::enhanced) {
    if (cand.indicators.empty() || cand.indicators[0].cls() != SymbolClass::R)
      return ValidityVerdict::fail(FailureClass::e_indicator_not_R);
  }
  return ValidityVerdict::ok();
}

// ---------------------------------------------------------------------------
// Station repeat rules
// ---------------------------------------------------------------------------

struct StationPolicy {
  bool address_recognized = false;
  bool copy_frame = false;
};

// Indicator handling of a repeating station. E is set on FCS failure for
// non-exempt FC, never reset, and forced to S when it is neither R nor S.
inline FrameCandidate repeat_station(FrameCandidate cand, const StationPolicy& policy = {},
                                     ValidityMode mode = ValidityMode::enhanced) {
  if (!cand.ended || cand.abort != FailureClass::none) return cand;
  if (mode == ValidityMode::enhanced) {
    bool fcs_ok = true;
    if (cand.data.size() >= kHeaderSymbols && !is_fcs_exempt_fc(cand.data[0], cand.data[1])) {
      auto bits = nibbles_to_bits(cand.data);
      fcs_ok = bits.size() >= 32 && fcs_check(bits);
    }
    if (cand.indicators.empty()) {
      // E position corrupted to a line state; rule 3 still emits an S
      cand.indicators.push_back(sym::S);
    } else {
      Symbol e = cand.indicators[0];
      bool is_r = e.cls() == SymbolClass::R;
      bool is_s = e.cls() == SymbolClass::S;
      if (!is_r && !is_s) cand.indicators[0] = sym::S;
      else if (is_r && !fcs_ok) cand.indicators[0] = sym::S;
      // S stays S
    }
  }
  if (policy.address_recognized && cand.indicators.size() >= 2)
    cand.indicators[1] = sym::S;
  if (policy.copy_frame && cand.indicators.size() >= 3)
    cand.indicators[2] = sym::S;
  return cand;
}

// Stream-level repeat: parses the inbound stream, applies station rules, and
// re-emits the outbound symbol stream. Frames aborted by a violation are
// truncated, with the remainder replaced by Idle symbols.
inline std::vector<Symbol> station_repeat(std::span<const Symbol> inbound,
                                          const StationPolicy& policy = {},
                                          ValidityMode mode = ValidityMode::enhanced) {
  ParseResult pr = parse(inbound);
  struct Event {
    std::size_t start;
    const FrameCandidate* frame;
    const TokenCandidate* token;
  };
  std::vector<Event> events;
  for (const auto& f : pr.frames) events.push_back({f.start_index, &f, nullptr});
  for (const auto& t : pr.tokens) events.push_back({t.start_index, nullptr, &t});
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return a.start < b.start; });

  std::vector<Symbol> out;
  out.reserve(inbound.size() + 8);
  for (const Event& ev : events) {
    out.insert(out.end(), 4, sym::I);
    if (ev.token) {
      Token t{ev.token->restricted};
      auto s = serialize(t);
      out.insert(out.end(), s.begin() + 4, s.end());  // preamble already emitted
      continue;
    }
    FrameCandidate repeated = repeat_station(*ev.frame, policy, mode);
    out.push_back(sym::J);
    out.push_back(sym::K);
    for (uint8_t v : repeated.data) out.push_back(Symbol::data(v));
    if (repeated.ended) {
      out.push_back(sym::T);
      out.insert(out.end(), repeated.indicators.begin(), repeated.indicators.end());
    } else {
      // aborted reception: remainder replaced by Idles
      out.insert(out.end(), 4, sym::I);
    }
  }
  out.insert(out.end(), 4, sym::I);
  return out;
}

}  // namespace fddi
