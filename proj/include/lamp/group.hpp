#pragma once

// The cyclic lamplighter group C2 wr C_n as a concrete data type.
//
// An element is a pair (lamps, pos): a subset of C_n stored as an n-bit
// mask, and a residue mod n.  The group law is
//   (x, g) * (y, k) = (x xor shift(y, g), g + k mod n)
// where shift(y, g) = {i - g mod n : i in y}.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lamp {

using LampConfig = std::uint64_t;

struct GroupElement {
  LampConfig lamps = 0;
  std::uint32_t pos = 0;

  bool operator==(const GroupElement&) const = default;
};

inline constexpr std::uint32_t kMaxN = 64;

inline void check_modulus(std::uint32_t n) {
  if (n < 3 || n > kMaxN)
    throw std::invalid_argument("modulus n must satisfy 3 <= n <= 64, got " +
                                std::to_string(n));
}

inline LampConfig lamp_mask(std::uint32_t n) {
  return n == 64 ? ~LampConfig{0} : (LampConfig{1} << n) - 1;
}

// alpha^k on lamp configurations: bit j of the result is bit (j+k mod n) of x.
inline LampConfig shift(LampConfig x, std::int64_t k, std::uint32_t n) {
  std::uint32_t r = static_cast<std::uint32_t>(((k % n) + n) % n);
  if (r == 0) return x;
  return ((x >> r) | (x << (n - r))) & lamp_mask(n);
}

inline GroupElement multiply(const GroupElement& a, const GroupElement& b,
                             std::uint32_t n) {
  return {a.lamps ^ shift(b.lamps, a.pos, n),
          (a.pos + b.pos) % n};
}

inline GroupElement inverse(const GroupElement& g, std::uint32_t n) {
  std::uint32_t p = (n - g.pos) % n;
  return {shift(g.lamps, -static_cast<std::int64_t>(g.pos), n), p};
}

inline GroupElement identity() { return {0, 0}; }

inline std::uint32_t cyclic_distance(std::uint32_t j, std::uint32_t k,
                                     std::uint32_t n) {
  std::uint32_t d = j >= k ? j - k : k - j;
  d %= n;
  return d <= n - d ? d : n - d;
}

// Arc [start, start+length) mod n.
struct Arc {
  std::uint32_t start = 0;
  std::uint32_t length = 0;

  bool contains(std::uint32_t k, std::uint32_t n) const {
    return (k + n - start) % n < length;
  }
};

inline LampConfig arc_bitmask(const Arc& a, std::uint32_t n) {
  LampConfig m = 0;
  for (std::uint32_t t = 0; t < a.length; ++t)
    m |= LampConfig{1} << ((a.start + t) % n);
  return m;
}

inline std::uint32_t arc_distance(std::uint32_t k, const Arc& I,
                                  std::uint32_t n) {
  if (I.length == 0) throw std::invalid_argument("arc_distance: empty arc");
  if (I.contains(k, n)) return 0;
  // Nearest endpoint wins; the arc is connected.
  std::uint32_t d1 = cyclic_distance(k, I.start, n);
  std::uint32_t d2 = cyclic_distance(k, (I.start + I.length - 1) % n, n);
  return d1 < d2 ? d1 : d2;
}

// The n arcs of length floor(n/3), one per start residue.
inline std::vector<Arc> arc_family(std::uint32_t n) {
  check_modulus(n);
  std::vector<Arc> arcs;
  arcs.reserve(n);
  for (std::uint32_t s = 0; s < n; ++s) arcs.push_back({s, n / 3});
  return arcs;
}

// Dense index pos * 2^n + lamps; used by BFS tables and exhaustive scans.
inline std::uint64_t dense_index(const GroupElement& g, std::uint32_t n) {
  return (static_cast<std::uint64_t>(g.pos) << n) | g.lamps;
}

inline GroupElement element_from_index(std::uint64_t idx, std::uint32_t n) {
  return {idx & lamp_mask(n), static_cast<std::uint32_t>(idx >> n)};
}

inline std::uint64_t group_order(std::uint32_t n) {
  return static_cast<std::uint64_t>(n) << n;
}

}  // namespace lamp
