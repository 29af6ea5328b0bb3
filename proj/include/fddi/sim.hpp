#pragma once

// Seeded Monte Carlo ring simulation. Each trial sends one PDU from a source
// across l links; on every link each code cell (plus the cell preceding the
// stream) is flipped independently with probability p, the receiving station
// demodulates, parses, applies the repeat rules, and re-transmits. The
// destination's verdict is classified into the outcome tally.
//
// Tally conventions (the classes partition the trials):
//   - bad_length verdicts count as framing_violation (an odd or short data
//     field is a format error),
//   - e_indicator_not_R counts as e_marked_upstream,
//   - a frame whose starting delimiter was destroyed (nothing arrives)
//     counts as symbol_violation,
//   - delivered_clean means accepted with data bits identical to those sent
//     (hits confined to the preamble or the A/C indicators land here),
//   - undetected_error means accepted with different data bits.
// noise_hit_trials counts trials where any cell of the stream window was
// struck; its fraction is the quantity the closed-form frame-error rate
// predicts.

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "fddi/analytics.hpp"
#include "fddi/frame.hpp"
#include "fddi/noise.hpp"
#include "fddi/rng.hpp"

namespace fddi {

struct SimConfig {
  RingParams ring;                       // p, links, frame_code_bits
  uint64_t trials = 100000;
  uint64_t seed = 1;
  ValidityMode mode = ValidityMode::enhanced;
  // destination after this many links; 0 = full circuit (all L links)
  uint32_t destination_link = 0;
  int check_degree = 32;                 // weakened degrees are for merge runs

  uint32_t links() const { return static_cast<uint32_t>(ring.links); }
  uint32_t dest() const { return destination_link ? destination_link : links(); }
  // INFO pairs for the configured frame size: F = 220 + 10 * pairs
  uint32_t info_pairs() const {
    double f = ring.frame_code_bits;
    if (f < 220 || (static_cast<uint64_t>(f) - 220) % 10 != 0)
      throw InvalidRingParams("frame_code_bits must be 220 + 10k");
    return static_cast<uint32_t>((f - 220) / 10);
  }
};

struct OutcomeTally {
  uint64_t trials = 0;
  uint64_t delivered_clean = 0;
  uint64_t symbol_violation = 0;
  uint64_t framing_violation = 0;
  uint64_t bad_fcs = 0;
  uint64_t e_marked_upstream = 0;
  uint64_t undetected_error = 0;
  uint64_t token_lost = 0;
  uint64_t noise_hit_trials = 0;  // any cell struck anywhere on the path

  OutcomeTally& operator+=(const OutcomeTally& o) {
    trials += o.trials;
    delivered_clean += o.delivered_clean;
    symbol_violation += o.symbol_violation;
    framing_violation += o.framing_violation;
    bad_fcs += o.bad_fcs;
    e_marked_upstream += o.e_marked_upstream;
    undetected_error += o.undetected_error;
    token_lost += o.token_lost;
    noise_hit_trials += o.noise_hit_trials;
    return *this;
  }
  uint64_t classified() const {
    return delivered_clean + symbol_violation + framing_violation + bad_fcs +
           e_marked_upstream + undetected_error + token_lost;
  }
};

enum class UndetectedMechanism : uint8_t {
  none,
  false_delimiter,  // accepted body is not the transmitted body (false SD/ED)
  fcs_codeword,     // same body, error polynomial divisible by the generator
  unknown,
};

struct UndetectedInstance {
  uint64_t trial = 0;
  UndetectedMechanism mechanism = UndetectedMechanism::none;
};

struct SimReport {
  OutcomeTally tally;
  std::vector<UndetectedInstance> undetected;  // logged for replay
};

namespace detail {

// per-link noise: flip each of the stream's cells (plus the leading cell)
// with probability p; returns true if anything was struck
inline bool strike_link(LevelStream& ls, const GeometricSkips& skips, SplitMix64& rng) {
  if (skips.never()) return false;
  bool any = false;
  uint64_t window = ls.size() + 1;  // position 0 = leading cell
  uint64_t pos = skips.next_skip(rng);
  while (pos < window) {
    if (pos == 0)
      ls.leading_level ^= 1;
    else
      ls.levels[pos - 1] ^= 1;
    any = true;
    pos += 1 + skips.next_skip(rng);
  }
  return any;
}

// one link hop at the symbol level: encode, strike, demodulate
inline std::vector<Symbol> transmit(const std::vector<Symbol>& symbols,
                                    const GeometricSkips& skips, SplitMix64& rng,
                                    bool& struck) {
  LevelStream ls = nrzi_modulate(symbols_to_bits(symbols), Level::Low);
  struck = strike_link(ls, skips, rng);
  if (!struck) return symbols;
  return bits_to_symbols(nrzi_demodulate(ls));
}

// classify the destination's view of one frame trial
inline void classify_frame_arrival(const std::vector<Symbol>& arrived,
                                   const std::vector<uint8_t>& sent_data,
                                   ValidityMode mode, const CheckPoly& poly,
                                   OutcomeTally& tally, uint64_t trial,
                                   std::vector<UndetectedInstance>* log) {
  ParseResult pr = parse(arrived);
  if (pr.frames.empty()) {
    // starting delimiter destroyed; nothing frame-like arrived
    ++tally.symbol_violation;
    return;
  }
  // a trial is undetected if any accepted candidate delivers wrong data
  const FrameCandidate* accepted = nullptr;
  for (const auto& cand : pr.frames) {
    if (validate(cand, mode, poly).valid) {
      accepted = &cand;
      break;
    }
  }
  if (accepted) {
    if (accepted->data == sent_data) {
      ++tally.delivered_clean;
    } else {
      ++tally.undetected_error;
      if (log) {
        UndetectedMechanism mech;
        if (accepted->data.size() != sent_data.size()) {
          mech = UndetectedMechanism::false_delimiter;
        } else {
          GfPoly e;
          std::size_t nbits = 4 * sent_data.size();
          for (std::size_t s = 0; s < sent_data.size(); ++s) {
            uint8_t diff = accepted->data[s] ^ sent_data[s];
            for (int b = 0; b < 4; ++b)
              if ((diff >> b) & 1) e.flip(nbits - 1 - (4 * s + (3 - b)));
          }
          mech = is_codeword(e) ? UndetectedMechanism::fcs_codeword
                                : UndetectedMechanism::unknown;
        }
        log->push_back({trial, mech});
      }
    }
    return;
  }
  switch (validate(pr.frames[0], mode, poly).failure) {
    case FailureClass::symbol_violation: ++tally.symbol_violation; break;
    case FailureClass::framing_violation:
    case FailureClass::bad_length: ++tally.framing_violation; break;
    case FailureClass::bad_fcs: ++tally.bad_fcs; break;
    case FailureClass::e_indicator_not_R: ++tally.e_marked_upstream; break;
    case FailureClass::none: ++tally.framing_violation; break;
  }
}

inline Frame random_frame_for_trial(SplitMix64& rng, uint32_t info_pairs,
                                    const CheckPoly& poly) {
  auto nibbles = [&](std::size_t n) {
    std::vector<uint8_t> out(n);
    for (auto& v : out) v = rng.next() & 0xF;
    return out;
  };
  // FC fixed to an ordinary LLC-style value: not a token, not FCS-exempt
  Frame f;
  if (poly.degree == 32) {
    f = build_frame({0x5, 0x0}, nibbles(12), nibbles(12), nibbles(2 * info_pairs));
  } else {
    // weakened-check frames carry a degree/4-symbol FCS field
    f.fc = {0x5, 0x0};
    f.da = nibbles(12);
    f.sa = nibbles(12);
    f.info = nibbles(2 * info_pairs);
    std::vector<uint8_t> payload;
    for (const auto* part : {&f.fc, &f.da, &f.sa, &f.info})
      payload.insert(payload.end(), part->begin(), part->end());
    auto bits = compute_region_fcs(poly, nibbles_to_bits(payload));
    f.fcs.assign(poly.degree / 4, 0);
    for (int j = 0; j < poly.degree; ++j)
      f.fcs[j / 4] = static_cast<uint8_t>((f.fcs[j / 4] << 1) | bits[j]) & 0xF;
    f.indicators = {sym::R, sym::R, sym::R};
  }
  return f;
}

template <typename PerTrial>
OutcomeTally run_parallel(const SimConfig& cfg, PerTrial&& per_trial,
                          std::vector<UndetectedInstance>* log) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  uint64_t chunk = (cfg.trials + workers - 1) / workers;
  std::vector<std::future<SimReport>> futures;
  for (unsigned w = 0; w < workers; ++w) {
    uint64_t begin = w * chunk;
    uint64_t end = std::min(cfg.trials, begin + chunk);
    if (begin >= end) break;
    futures.push_back(std::async(std::launch::async, [&, begin, end] {
      SimReport rep;
      for (uint64_t t = begin; t < end; ++t) per_trial(t, rep);
      return rep;
    }));
  }
  OutcomeTally total;
  for (auto& f : futures) {
    SimReport rep = f.get();
    total += rep.tally;
    if (log)
      log->insert(log->end(), rep.undetected.begin(), rep.undetected.end());
  }
  total.trials = cfg.trials;
  return total;
}

}  // namespace detail

// Replays one frame trial deterministically (same seed, same trial index).
inline void run_frame_trial(const SimConfig& cfg, uint64_t trial, SimReport& rep) {
  CheckPoly poly = cfg.check_degree == 32
                       ? kFcs32
                       : (cfg.check_degree == 16 ? kCheck16 : kCheck8);
  GeometricSkips skips(cfg.ring.p);
  SplitMix64 rng = SplitMix64::stream(cfg.seed, trial);
  Frame frame = detail::random_frame_for_trial(rng, cfg.info_pairs(), poly);
  std::vector<uint8_t> sent_data = frame.data_symbols();

  std::vector<Symbol> stream = serialize(frame);
  bool dirty = false;
  uint32_t hops = cfg.dest();
  for (uint32_t link = 0; link < hops; ++link) {
    bool struck = false;
    stream = detail::transmit(stream, skips, rng, struck);
    if (struck) {
      rep.tally.noise_hit_trials += dirty ? 0 : 1;
      dirty = true;
    }
    bool at_destination = link + 1 == hops;
    if (!at_destination && dirty) {
      // intermediate station repeat (clean streams pass through unchanged)
      stream = station_repeat(stream, {}, cfg.mode);
    }
  }
  detail::classify_frame_arrival(stream, sent_data, cfg.mode, poly, rep.tally,
                                 trial, &rep.undetected);
  ++rep.tally.trials;
}

inline SimReport run_with_log(const SimConfig& cfg) {
  cfg.ring.validate();
  SimReport rep;
  rep.tally = detail::run_parallel(
      cfg, [&](uint64_t t, SimReport& r) { run_frame_trial(cfg, t, r); },
      &rep.undetected);
  std::sort(rep.undetected.begin(), rep.undetected.end(),
            [](const UndetectedInstance& a, const UndetectedInstance& b) {
              return a.trial < b.trial;
            });
  return rep;
}

inline OutcomeTally run(const SimConfig& cfg) { return run_with_log(cfg).tally; }

// Token circulation: one trial is one rotation over all L links; the token
// is lost when any station fails to recognize it.
inline OutcomeTally run_token(const SimConfig& cfg) {
  cfg.ring.validate();
  GeometricSkips skips(cfg.ring.p);
  return detail::run_parallel(
      cfg,
      [&](uint64_t t, SimReport& rep) {
        SplitMix64 rng = SplitMix64::stream(cfg.seed, t);
        Token token{(rng.next() & 1) != 0};
        std::vector<Symbol> stream = serialize(token);
        bool any_struck = false;
        bool lost = false;
        bool converted = false;
        for (uint32_t link = 0; link < cfg.links(); ++link) {
          bool struck = false;
          stream = detail::transmit(stream, skips, rng, struck);
          any_struck |= struck;
          ParseResult pr = parse(stream);
          if (pr.tokens.size() != 1) {
            lost = true;
            break;
          }
          if (pr.tokens[0].restricted != token.restricted) converted = true;
          // station regenerates the token
          stream = serialize(Token{pr.tokens[0].restricted});
        }
        rep.tally.noise_hit_trials += any_struck;
        if (lost) ++rep.tally.token_lost;
        else if (converted) ++rep.tally.undetected_error;  // class change (never expected)
        else ++rep.tally.delivered_clean;
      },
      nullptr);
}

// ---------------------------------------------------------------------------
// Frame merging: truncate one frame and splice the tail of another at octet
// boundaries; count splices that pass the check polynomial. For the 32-bit
// generator the acceptance probability (2^-32) is far below desk scale, so
// runs assert zero hits; the weakened generators make the rate measurable.
// ---------------------------------------------------------------------------
struct MergeEstimate {
  uint64_t trials = 0;
  uint64_t structurally_valid = 0;
  uint64_t accepted = 0;
  double acceptance_rate() const {
    return trials ? static_cast<double>(accepted) / static_cast<double>(trials) : 0.0;
  }
};

inline MergeEstimate merge_scenario(uint64_t trials, uint64_t seed,
                                    const CheckPoly& poly = kFcs32,
                                    uint32_t max_info_pairs = 40) {
  MergeEstimate est;
  est.trials = trials;
  std::atomic<uint64_t> structurally_valid{0}, accepted{0};
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  uint64_t chunk = (trials + workers - 1) / workers;
  std::vector<std::future<std::pair<uint64_t, uint64_t>>> futures;
  const std::size_t fcs_symbols = static_cast<std::size_t>(poly.degree) / 4;
  for (unsigned w = 0; w < workers; ++w) {
    uint64_t begin = w * chunk;
    uint64_t end = std::min(trials, begin + chunk);
    if (begin >= end) break;
    futures.push_back(std::async(std::launch::async, [&, begin, end] {
      uint64_t ok = 0, acc = 0;
      for (uint64_t t = begin; t < end; ++t) {
        SplitMix64 rng = SplitMix64::stream(seed ^ 0x6D65726765ull, t);
        auto frame_data = [&](uint32_t pairs) {
          std::vector<uint8_t> head(26);
          head[0] = 0x5;
          head[1] = 0x0;
          for (std::size_t i = 2; i < 26; ++i) head[i] = rng.next() & 0xF;
          std::vector<uint8_t> info(2 * pairs);
          for (auto& v : info) v = rng.next() & 0xF;
          std::vector<uint8_t> payload = head;
          payload.insert(payload.end(), info.begin(), info.end());
          auto bits = compute_region_fcs(poly, nibbles_to_bits(payload));
          for (std::size_t j = 0; j < bits.size(); j += 4)
            payload.push_back(static_cast<uint8_t>(
                (bits[j] << 3) | (bits[j + 1] << 2) | (bits[j + 2] << 1) | bits[j + 3]));
          return payload;
        };
        uint32_t pairs_a = 2 + rng.next() % max_info_pairs;
        uint32_t pairs_b = 2 + rng.next() % max_info_pairs;
        auto a = frame_data(pairs_a);
        auto b = frame_data(pairs_b);
        // octet-aligned cut points inside the data region
        std::size_t cut_a = 26 + 2 * (rng.next() % (pairs_a + 1));
        std::size_t cut_b = 26 + 2 * (rng.next() % (pairs_b + 1));
        std::vector<uint8_t> spliced(a.begin(), a.begin() + cut_a);
        spliced.insert(spliced.end(), b.begin() + cut_b, b.end());
        bool structural = spliced.size() % 2 == 0 &&
                          spliced.size() >= 26 + fcs_symbols;
        if (!structural) continue;
        ++ok;
        if (check_region(poly, nibbles_to_bits(spliced))) ++acc;
      }
      return std::make_pair(ok, acc);
    }));
  }
  for (auto& f : futures) {
    auto [ok, acc] = f.get();
    structurally_valid += ok;
    accepted += acc;
  }
  est.structurally_valid = structurally_valid;
  est.accepted = accepted;
  return est;
}

}  // namespace fddi
