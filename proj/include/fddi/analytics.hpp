#pragma once

// Closed-form detected/undetected error-rate analysis for an FDDI ring.
//
// Every quantity is carried in two forms: the exact expression and the
// low-order approximation (the published summary mixes both, so golden
// comparisons may match either). Mean times between events assume a fully
// utilized link (B/F frames per second); token loss uses the ring latency.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "fddi/noise.hpp"
#include "fddi/reference.hpp"

namespace fddi {

inline constexpr double kSecondsPerYear = 3.1536e7;  // 365 days
inline constexpr double kTwoToMinus32 = 1.0 / 4294967296.0;

struct InvalidRingParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RingParams {
  double links = 1000;               // L
  double p = 2.5e-10;                // noise event probability per link per cell
  double frame_code_bits = 45000;    // F
  double bandwidth = 1.25e8;         // B, code-bits per second
  double latency_s = 1.773e-3;       // D

  void validate() const {
    if (links < 1) throw InvalidRingParams("links must be >= 1");
    if (!(p >= 0.0) || p > 0.1) throw InvalidRingParams("p must be in [0, 0.1]");
    if (frame_code_bits < 250) throw InvalidRingParams("frame size below 250 code-bits");
    if (bandwidth <= 0 || latency_s < 0) throw InvalidRingParams("bad bandwidth/latency");
  }
  // first-order expressions degrade once pLF approaches 1
  bool small_probability_regime() const { return p * links * frame_code_bits < 0.1; }

  double data_symbols() const { return (frame_code_bits - 50) / 5; }
  double frames_per_second() const { return bandwidth / frame_code_bits; }

  // large-ring defaults with latency scaled to the link count
  static RingParams large_ring() { return {}; }
  static RingParams with(double links, double ber, double frame_octets) {
    RingParams r;
    r.links = links;
    r.p = ber;
    r.frame_code_bits = 10.0 * frame_octets;
    r.latency_s = 1.773e-3 * links / 1000.0;
    return r;
  }
};

struct RateReport {
  std::string quantity;
  double probability = 0;             // exact form
  double probability_first_order = 0; // lowest-order-in-p form
  double mean_time_s = 0;             // from the exact probability
  double mean_time_first_order_s = 0;

  double mean_time_years() const { return mean_time_s / kSecondsPerYear; }
};

enum class ValidityRules : uint8_t { enhanced, baseline, option_a };

inline const char* to_string(ValidityRules m) {
  switch (m) {
    case ValidityRules::enhanced: return "enhanced";
    case ValidityRules::baseline: return "baseline";
    case ValidityRules::option_a: return "option_a";
  }
  return "?";
}

namespace detail {

inline double safe_inverse(double rate) {
  return rate > 0 ? 1.0 / rate : std::numeric_limits<double>::infinity();
}

// mean time between events occurring with probability P per frame
inline double mean_time_per_frame(const RingParams& r, double P) {
  return safe_inverse(r.frames_per_second() * P);
}

}  // namespace detail

// P(frame error) = 1 - (1-p)^{L(F+1)}: an event in any of the F+1 cells
// (the cell before the starting delimiter corrupts the first code-bit).
inline RateReport frame_error(const RingParams& r) {
  r.validate();
  RateReport out;
  out.quantity = "P(Frame error)";
  double cells = r.links * (r.frame_code_bits + 1);
  out.probability = -std::expm1(cells * std::log1p(-r.p));
  out.probability_first_order = r.p * cells;
  out.mean_time_s = detail::mean_time_per_frame(r, out.probability);
  out.mean_time_first_order_s = detail::safe_inverse(r.bandwidth * r.p * r.links);
  return out;
}

// P(token loss per rotation) = 1 - (1-p)^{31L}; the token spans 30 code
// cells plus the preceding cell. Mean time assumes an idle ring (M = D/P).
inline RateReport token_loss(const RingParams& r) {
  r.validate();
  RateReport out;
  out.quantity = "P(Token loss per token rotation)";
  double cells = 31.0 * r.links;
  out.probability = -std::expm1(cells * std::log1p(-r.p));
  out.probability_first_order = r.p * cells;
  out.mean_time_s = out.probability > 0
                        ? r.latency_s / out.probability
                        : std::numeric_limits<double>::infinity();
  out.mean_time_first_order_s = out.probability_first_order > 0
                                    ? r.latency_s / out.probability_first_order
                                    : std::numeric_limits<double>::infinity();
  return out;
}

namespace detail {

// Outcome fractions used by the delimiter analyses, as published (the text
// quotes 4.84% for data->T; the exact enumeration gives 4.84375%).
inline constexpr double kDataToT = 0.0484;   // T anywhere: 3.75% intra + 1.09% boundary
inline constexpr double kDataToR = 0.0125;   // R, intrasymbol only
inline constexpr double kDataToRS = 0.0375;  // R or S, intrasymbol only
inline constexpr double kDataToJ = 0.0375;
inline constexpr double kDataToK = 0.05;

// false-ED probability with the INFO position count supplied by the caller
inline double false_ed_core(const RingParams& r, ValidityRules mode, double positions) {
  double symbol_hit = 5.0 * r.p;
  double base = (kDataToT * symbol_hit) * positions * 0.5 * (r.links / 2.0) * kTwoToMinus32;
  switch (mode) {
    case ValidityRules::baseline: return base;
    case ValidityRules::enhanced: return base * (kDataToR * symbol_hit);
    case ValidityRules::option_a:
      return base * (kDataToR * symbol_hit) * (kDataToRS * symbol_hit);
  }
  return 0;
}

}  // namespace detail

// Undetected error from a data symbol pair turning into T,R (false ending
// delimiter) with the FCS accidentally correct. The enhanced rules demand
// the E indicator as well; option A additionally demands a valid A.
inline RateReport ue_false_ed(const RingParams& r, ValidityRules mode) {
  r.validate();
  RateReport out;
  out.quantity = std::string("P(UE due to false ED) [") + to_string(mode) + "]";
  out.probability = detail::false_ed_core(r, mode, (r.frame_code_bits - 180.0) / 5.0);
  out.probability_first_order = detail::false_ed_core(r, mode, r.frame_code_bits / 5.0);
  out.mean_time_s = detail::mean_time_per_frame(r, out.probability);
  out.mean_time_first_order_s = detail::mean_time_per_frame(r, out.probability_first_order);
  return out;
}

// Undetected error from two data symbols turning into J,K on a symbol
// boundary (false starting delimiter).
inline RateReport ue_false_sd(const RingParams& r) {
  r.validate();
  RateReport out;
  out.quantity = "P(UE due to false SD)";
  double symbol_hit = 5.0 * r.p;
  auto core = [&](double positions) {
    return (detail::kDataToJ * symbol_hit) * (detail::kDataToK * symbol_hit) *
           (r.links / 2.0) * positions * 0.5 * kTwoToMinus32;
  };
  out.probability = core((r.frame_code_bits - 180.0) / 5.0);
  out.probability_first_order = core(r.frame_code_bits / 5.0);
  out.mean_time_s = detail::mean_time_per_frame(r, out.probability);
  out.mean_time_first_order_s = detail::mean_time_per_frame(r, out.probability_first_order);
  return out;
}

// Per-combination contribution to the three-event FCS miss: the product of
// the three pattern probabilities times the number of placements that fit.
struct TripleContribution {
  double coefficient;  // product of pattern probabilities x (5p)^3 stripped of p
  double positions;    // placements that fit in the frame
  double probability;  // with (L/2) or (L^3/4) applied by the caller
};

namespace detail {

inline double pattern_probability(std::string_view label) {
  for (const auto& p : error_pattern_alphabet())
    if (p.label() == label) return p.probability();
  throw std::logic_error("unknown error pattern " + std::string(label));
}

inline int pattern_span(std::string_view label) { return label.size() > 4 ? 2 : 1; }

}  // namespace detail

// k=3: sum over the published undetectable triples; k=4: the binomial
// estimate with the 2^-32 undetected fraction. Baseline rules replace the
// single-link average L/2 with the multi-link averages L^3/4 and L^4/5.
inline RateReport ue_fcs(const RingParams& r, int k, bool enhanced = true) {
  r.validate();
  if (k != 3 && k != 4) throw std::invalid_argument("ue_fcs supports k = 3 or 4");
  RateReport out;
  out.quantity = "P(FCS not detecting " + std::to_string(k) + " noise events) [" +
                 (enhanced ? "enhanced" : "baseline") + "]";
  double link_factor = 0;
  if (k == 3) link_factor = enhanced ? r.links / 2.0 : std::pow(r.links, 3) / 4.0;
  else link_factor = enhanced ? r.links / 2.0 : std::pow(r.links, 4) / 5.0;

  if (k == 3) {
    double total = 0;
    double avail = r.data_symbols();
    for (const auto& row : reference::kUndetectedTriples) {
      double prod = 1.0;
      for (auto pat : row.patterns) prod *= detail::pattern_probability(pat) * 5.0 * r.p;
      double top = row.offsets[2] + detail::pattern_span(row.patterns[2]) - 1;
      double count = std::max(0.0, avail - top);
      total += prod * count;
    }
    out.probability = total * link_factor;
    out.probability_first_order = out.probability;
  } else {
    double fd = r.frame_code_bits - 50.0;
    double dd = tabulate_effects().data_to_data_pct() / 100.0;  // 0.4656
    out.probability = std::pow(dd * r.p * fd, 4) / 24.0 * link_factor * kTwoToMinus32;
    out.probability_first_order = out.probability;
  }
  out.mean_time_s = detail::mean_time_per_frame(r, out.probability);
  out.mean_time_first_order_s = detail::mean_time_per_frame(r, out.probability_first_order);
  return out;
}

// Per-row breakdown of the k=3 sum for the large-ring configuration checks.
inline std::vector<TripleContribution> ue_fcs3_rows(const RingParams& r, bool enhanced = true) {
  r.validate();
  std::vector<TripleContribution> rows;
  double link_factor = enhanced ? r.links / 2.0 : std::pow(r.links, 3) / 4.0;
  double avail = r.data_symbols();
  for (const auto& row : reference::kUndetectedTriples) {
    TripleContribution c{};
    double prod = 1.0;
    for (auto pat : row.patterns) prod *= detail::pattern_probability(pat) * 5.0;
    c.coefficient = prod;
    double top = row.offsets[2] + detail::pattern_span(row.patterns[2]) - 1;
    c.positions = std::max(0.0, avail - top);
    c.probability = prod * std::pow(r.p, 3) * c.positions * link_factor;
    rows.push_back(c);
  }
  return rows;
}

// Probability that an arbitrary data-bit pattern carries a valid FCS:
// 2^-32 (one in 4.34 billion merged frames).
inline double merged_frame_prob() { return kTwoToMinus32; }

// ---------------------------------------------------------------------------
// Summary grid: all quantities for one parameter set.
// ---------------------------------------------------------------------------
struct SummaryEntry {
  std::string quantity;
  std::string unit;  // "", "ms", "s", "yr"
  RateReport report;
  bool is_mean_time;  // whether the displayed value is M rather than P
  double display_value(bool first_order = false) const {
    const RateReport& r = report;
    if (!is_mean_time) return first_order ? r.probability_first_order : r.probability;
    double seconds = first_order ? r.mean_time_first_order_s : r.mean_time_s;
    if (unit == "ms") return seconds * 1e3;
    if (unit == "yr") return seconds / kSecondsPerYear;
    return seconds;
  }
};

inline std::vector<SummaryEntry> summary_rates(const RingParams& r) {
  std::vector<SummaryEntry> out;
  auto push = [&](const RateReport& rep, const char* unit) {
    out.push_back({rep.quantity, "", rep, false});
    std::string mq = rep.quantity;
    if (mq.rfind("P(", 0) == 0) mq = "M(" + mq.substr(2);
    out.push_back({mq, unit, rep, true});
  };
  push(frame_error(r), "ms");
  push(token_loss(r), "s");
  push(ue_fcs(r, 3, true), "yr");
  push(ue_fcs(r, 4, true), "yr");
  push(ue_false_ed(r, ValidityRules::enhanced), "yr");
  push(ue_false_sd(r), "yr");
  push(ue_false_ed(r, ValidityRules::baseline), "yr");
  push(ue_fcs(r, 3, false), "yr");
  push(ue_fcs(r, 4, false), "yr");
  push(ue_false_ed(r, ValidityRules::option_a), "yr");
  return out;
}

}  // namespace fddi
