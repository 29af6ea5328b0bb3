#pragma once

// Exhaustive GF(2) residue searches over the ten-pattern error alphabet:
// which combinations of k noise events escape the FCS, and the minimum-degree
// multiples of the generator per Hamming weight.
//
// Every placement's residue is precomputed into a sorted table; combinations
// are completed by residue lookup (meet in the middle) instead of brute force
// over k-tuples. Searches are translation invariant, so the lowest-position
// event is fixed at symbol 0 and hits are reported as offset classes.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

#include "fddi/gf2.hpp"
#include "fddi/noise.hpp"

namespace fddi {

struct BoundExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotFoundWithinBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An error pattern placed at a symbol position (backward numbering: position
// 0 is the last FCS symbol). Two-symbol patterns occupy (position, position+1)
// with the high nibble on the earlier-transmitted symbol position+1.
struct PlacedPattern {
  uint32_t symbol_position = 0;
  uint8_t pattern_index = 0;  // into error_pattern_alphabet()

  auto operator<=>(const PlacedPattern&) const = default;
};

struct SearchHit {
  std::vector<PlacedPattern> events;  // sorted by (position, pattern)
  // lowest symbol count that can contain this combination
  uint32_t required_symbols = 0;
  std::vector<uint64_t> exponents;  // of the combined error polynomial
};

struct SearchResult {
  int events = 0;
  uint32_t data_symbols = 0;
  std::vector<SearchHit> hits;
};

namespace detail {

inline GfPoly pattern_poly(const ErrorPattern& p) {
  return GfPoly::from_bits(p.bits);
}

inline uint32_t pattern_width(const ErrorPattern& p) { return p.symbol_span; }

// residues of every placement, plus a sorted (residue, packed placement) table
struct PlacementTable {
  std::vector<std::vector<uint32_t>> residue;  // [pattern][position]
  std::vector<std::pair<uint32_t, uint32_t>> sorted;  // (residue, pos<<4|pat)

  static uint32_t pack(uint32_t pos, uint32_t pat) { return (pos << 4) | pat; }
  static PlacedPattern unpack(uint32_t v) {
    return {v >> 4, static_cast<uint8_t>(v & 0xF)};
  }

  explicit PlacementTable(uint32_t data_symbols,
                          const std::vector<ErrorPattern>& alphabet) {
    residue.resize(alphabet.size());
    std::size_t total = 0;
    for (std::size_t pi = 0; pi < alphabet.size(); ++pi) {
      uint32_t limit = data_symbols - (pattern_width(alphabet[pi]) - 1);
      residue[pi].resize(limit);
      uint32_t r = res32::reduce64(alphabet[pi].bits);
      for (uint32_t s = 0; s < limit; ++s) {
        residue[pi][s] = r;
        r = res32::mul_x4(r);
      }
      total += limit;
    }
    sorted.reserve(total);
    for (std::size_t pi = 0; pi < alphabet.size(); ++pi)
      for (uint32_t s = 0; s < residue[pi].size(); ++s)
        sorted.emplace_back(residue[pi][s], pack(s, static_cast<uint32_t>(pi)));
    std::sort(sorted.begin(), sorted.end());
  }

  template <typename Fn>
  void for_each_match(uint32_t target, Fn&& fn) const {
    auto lo = std::lower_bound(sorted.begin(), sorted.end(),
                               std::make_pair(target, uint32_t{0}));
    for (auto it = lo; it != sorted.end() && it->first == target; ++it)
      fn(unpack(it->second));
  }
};

inline SearchHit make_hit(const std::vector<PlacedPattern>& events,
                          const std::vector<ErrorPattern>& alphabet) {
  SearchHit hit;
  hit.events = events;
  std::sort(hit.events.begin(), hit.events.end());
  GfPoly e;
  uint32_t top = 0;
  for (const auto& ev : hit.events) {
    const auto& pat = alphabet[ev.pattern_index];
    e ^= pattern_poly(pat).shifted(4ull * ev.symbol_position);
    top = std::max(top, ev.symbol_position + pattern_width(pat));
  }
  hit.required_symbols = top;
  hit.exponents = e.exponents();
  return hit;
}

}  // namespace detail

// All k-event combinations (lowest position fixed at 0) whose combined error
// polynomial is a codeword, i.e. escapes the FCS. Combinations whose events
// cancel to the zero polynomial are no error at all and are excluded.
inline SearchResult find_undetected(int k, uint32_t data_symbols,
                                    const std::vector<ErrorPattern>& alphabet =
                                        error_pattern_alphabet()) {
  if (k < 1 || k > 3) throw BoundExceeded("k must be 1, 2 or 3");
  if (k <= 2 && data_symbols > 9000)
    throw BoundExceeded("data_symbols bound for k<=2 is 9000");
  if (k == 3 && data_symbols > 3700)
    throw BoundExceeded("data_symbols bound for k=3 is 3700");
  if (data_symbols < 2) throw BoundExceeded("need at least 2 data symbols");
  if (alphabet.empty() || alphabet.size() > 16)
    throw BoundExceeded("pattern alphabet must have 1..16 members");

  detail::PlacementTable table(data_symbols, alphabet);
  const std::size_t np = alphabet.size();

  SearchResult res;
  res.events = k;
  res.data_symbols = data_symbols;

  auto net_poly = [&](const std::vector<PlacedPattern>& evs) {
    GfPoly e;
    for (const auto& ev : evs)
      e ^= detail::pattern_poly(alphabet[ev.pattern_index])
               .shifted(4ull * ev.symbol_position);
    return e;
  };

  if (k == 1) {
    for (std::size_t p = 0; p < np; ++p)
      if (table.residue[p][0] == 0)
        res.hits.push_back(detail::make_hit({{0, static_cast<uint8_t>(p)}}, alphabet));
    return res;
  }

  if (k == 2) {
    for (std::size_t p1 = 0; p1 < np; ++p1) {
      PlacedPattern first{0, static_cast<uint8_t>(p1)};
      table.for_each_match(table.residue[p1][0], [&](PlacedPattern second) {
        if (second < first) return;
        std::vector<PlacedPattern> evs{first, second};
        if (!net_poly(evs).is_zero()) res.hits.push_back(detail::make_hit(evs, alphabet));
      });
    }
    std::sort(res.hits.begin(), res.hits.end(),
              [](const SearchHit& a, const SearchHit& b) { return a.events < b.events; });
    return res;
  }

  // k == 3: partitioned by the pattern of the position-0 event; each worker
  // walks all second placements and completes the triple by residue lookup
  auto worker = [&](std::size_t p1) {
    std::vector<SearchHit> hits;
    PlacedPattern first{0, static_cast<uint8_t>(p1)};
    uint32_t r1 = table.residue[p1][0];
    for (std::size_t p2 = 0; p2 < np; ++p2) {
      const auto& col = table.residue[p2];
      for (uint32_t s2 = 0; s2 < col.size(); ++s2) {
        PlacedPattern second{s2, static_cast<uint8_t>(p2)};
        if (second < first) continue;
        uint32_t target = r1 ^ col[s2];
        table.for_each_match(target, [&](PlacedPattern third) {
          if (third < second) return;
          std::vector<PlacedPattern> evs{first, second, third};
          if (!net_poly(evs).is_zero()) hits.push_back(detail::make_hit(evs, alphabet));
        });
      }
    }
    return hits;
  };

  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<std::vector<SearchHit>>> futures;
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < std::min<std::size_t>(workers, np); ++w) {
    futures.push_back(std::async(std::launch::async, [&]() {
      std::vector<SearchHit> mine;
      for (std::size_t p1 = next.fetch_add(1); p1 < np; p1 = next.fetch_add(1)) {
        auto part = worker(p1);
        mine.insert(mine.end(), part.begin(), part.end());
      }
      return mine;
    }));
  }
  for (auto& f : futures) {
    auto part = f.get();
    res.hits.insert(res.hits.end(), part.begin(), part.end());
  }
  // canonical order and dedup (results are order-independent)
  std::sort(res.hits.begin(), res.hits.end(),
            [](const SearchHit& a, const SearchHit& b) { return a.events < b.events; });
  res.hits.erase(std::unique(res.hits.begin(), res.hits.end(),
                             [](const SearchHit& a, const SearchHit& b) {
                               return a.events == b.events;
                             }),
                 res.hits.end());
  return res;
}

// Naive triple enumeration over a subrange, used as the completeness oracle
// for the residue-table search.
inline SearchResult find_undetected3_naive(uint32_t data_symbols,
                                           const std::vector<ErrorPattern>& alphabet =
                                               error_pattern_alphabet()) {
  SearchResult res;
  res.events = 3;
  res.data_symbols = data_symbols;
  std::vector<std::vector<uint32_t>> residue(alphabet.size());
  for (std::size_t pi = 0; pi < alphabet.size(); ++pi) {
    uint32_t limit = data_symbols - (alphabet[pi].symbol_span - 1);
    residue[pi].resize(limit);
    uint32_t r = res32::reduce64(alphabet[pi].bits);
    for (uint32_t s = 0; s < limit; ++s) {
      residue[pi][s] = r;
      r = res32::mul_x4(r);
    }
  }
  auto placements = [&](auto&& fn) {
    for (std::size_t pi = 0; pi < alphabet.size(); ++pi)
      for (uint32_t s = 0; s < residue[pi].size(); ++s)
        fn(PlacedPattern{s, static_cast<uint8_t>(pi)});
  };
  placements([&](PlacedPattern a) {
    if (a.symbol_position != 0) return;
    placements([&](PlacedPattern b) {
      if (b < a) return;
      placements([&](PlacedPattern c) {
        if (c < b) return;
        uint32_t r = residue[a.pattern_index][0] ^
                     residue[b.pattern_index][b.symbol_position] ^
                     residue[c.pattern_index][c.symbol_position];
        if (r != 0) return;
        GfPoly e;
        for (const auto& ev : {a, b, c})
          e ^= detail::pattern_poly(alphabet[ev.pattern_index])
                   .shifted(4ull * ev.symbol_position);
        if (!e.is_zero()) res.hits.push_back(detail::make_hit({a, b, c}, alphabet));
      });
    });
  });
  std::sort(res.hits.begin(), res.hits.end(),
            [](const SearchHit& x, const SearchHit& y) { return x.events < y.events; });
  return res;
}

// ---------------------------------------------------------------------------
// Minimum-degree multiples of the generator per Hamming weight.
// ---------------------------------------------------------------------------

struct MinDegreeResult {
  int weight = 0;
  uint64_t degree = 0;
  // every exponent set achieving the minimal degree (constant term included)
  std::vector<std::vector<uint64_t>> exponent_sets;

  GfPoly poly() const {
    return GfPoly::from_exponents(
        std::span<const uint64_t>(exponent_sets.at(0)));
  }
};

// Finds the minimum-degree monic multiple of the generator with constant
// term 1 and exactly `weight` nonzero terms, certifying minimality by
// exhausting all smaller degrees. Weights 3..6 are supported.
inline MinDegreeResult min_degree_multiple(int weight, uint32_t degree_bound) {
  if (weight < 3 || weight > 6)
    throw BoundExceeded("min_degree_multiple supports weights 3..6");

  std::vector<uint32_t> xr(degree_bound + 1);
  {
    uint32_t r = 1;
    for (uint32_t e = 0; e <= degree_bound; ++e) {
      xr[e] = r;
      r = res32::mul_x(r);
    }
  }
  MinDegreeResult out;
  out.weight = weight;

  auto finish = [&](uint64_t degree, std::vector<std::vector<uint64_t>> sets) {
    out.degree = degree;
    out.exponent_sets = std::move(sets);
    for (auto& s : out.exponent_sets) std::sort(s.begin(), s.end());
    std::sort(out.exponent_sets.begin(), out.exponent_sets.end());
    return out;
  };

  if (weight == 3) {
    // residue -> smallest exponent with that residue
    std::unordered_map<uint32_t, uint32_t> first_at;
    first_at.reserve(degree_bound * 2);
    for (uint32_t b = 1; b <= degree_bound; ++b) {
      uint32_t target = 1u ^ xr[b];
      auto it = first_at.find(target);
      if (it != first_at.end() && it->second < b)
        return finish(b, {{0ull, it->second, b}});
      first_at.emplace(xr[b], b);
    }
    throw NotFoundWithinBound("no weight-3 multiple within bound");
  }

  // pair table over all a < b <= bound: residue -> packed (a, b)
  std::vector<std::pair<uint32_t, uint64_t>> pairs;
  pairs.reserve(static_cast<std::size_t>(degree_bound) * (degree_bound + 1) / 2);
  for (uint32_t b = 2; b <= degree_bound; ++b)
    for (uint32_t a = 1; a < b; ++a)
      pairs.emplace_back(xr[a] ^ xr[b], (static_cast<uint64_t>(b) << 32) | a);
  std::sort(pairs.begin(), pairs.end());

  auto match_pairs = [&](uint32_t target, uint32_t below, auto&& fn) {
    auto lo = std::lower_bound(pairs.begin(), pairs.end(),
                               std::make_pair(target, uint64_t{0}));
    for (auto it = lo; it != pairs.end() && it->first == target; ++it) {
      uint32_t b = static_cast<uint32_t>(it->second >> 32);
      uint32_t a = static_cast<uint32_t>(it->second & 0xFFFFFFFF);
      if (b < below) fn(a, b);
    }
  };

  if (weight == 4) {
    for (uint32_t c = 3; c <= degree_bound; ++c) {
      std::vector<std::vector<uint64_t>> sets;
      match_pairs(1u ^ xr[c], c, [&](uint32_t a, uint32_t b) {
        sets.push_back({0ull, a, b, c});
      });
      if (!sets.empty()) return finish(c, std::move(sets));
    }
    throw NotFoundWithinBound("no weight-4 multiple within bound");
  }

  if (weight == 5) {
    for (uint32_t d = 4; d <= degree_bound; ++d) {
      std::vector<std::vector<uint64_t>> sets;
      for (uint32_t c = 3; c < d; ++c) {
        match_pairs(1u ^ xr[c] ^ xr[d], c, [&](uint32_t a, uint32_t b) {
          sets.push_back({0ull, a, b, c, d});
        });
      }
      if (!sets.empty()) return finish(d, std::move(sets));
    }
    throw NotFoundWithinBound("no weight-5 multiple within bound");
  }

  // weight == 6
  for (uint32_t e = 5; e <= degree_bound; ++e) {
    std::vector<std::vector<uint64_t>> sets;
    for (uint32_t d = 4; d < e; ++d) {
      uint32_t partial = 1u ^ xr[d] ^ xr[e];
      for (uint32_t c = 3; c < d; ++c) {
        match_pairs(partial ^ xr[c], c, [&](uint32_t a, uint32_t b) {
          sets.push_back({0ull, a, b, c, d, e});
        });
      }
    }
    if (!sets.empty()) return finish(e, std::move(sets));
  }
  throw NotFoundWithinBound("no weight-6 multiple within bound");
}

}  // namespace fddi
