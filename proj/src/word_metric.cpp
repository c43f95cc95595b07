#include "lamp/word_metric.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace lamp {

std::vector<GroupElement> GeneratorSet::symmetrized(std::uint32_t n) const {
  std::set<std::uint32_t> moves;
  for (std::uint32_t s : movement) {
    if (s == 0 || s >= n)
      throw std::invalid_argument("movement step out of range: " +
                                  std::to_string(s));
    moves.insert(s);
    moves.insert(n - s);
  }
  std::vector<GroupElement> out;
  for (std::uint32_t s : moves) out.push_back({0, s});
  if (toggle) out.push_back({1, 0});
  return out;
}

WordMetricTable bfs_table(std::uint32_t n, const GeneratorSet& gens) {
  check_modulus(n);
  if (n > kBfsMaxN)
    throw std::length_error("bfs_table: n=" + std::to_string(n) +
                            " exceeds cap " + std::to_string(kBfsMaxN));
  const std::uint64_t size = group_order(n);
  WordMetricTable table{n, gens, std::vector<std::uint8_t>(size, 0xFF)};
  const auto sym = gens.symmetrized(n);

  std::vector<std::uint64_t> frontier{0}, next;
  table.dist[0] = 0;
  std::uint8_t layer = 0;
  while (!frontier.empty()) {
    ++layer;
    if (layer == 0xFF) throw std::runtime_error("bfs_table: distance overflow");
    next.clear();
    for (std::uint64_t idx : frontier) {
      const GroupElement g = element_from_index(idx, n);
      for (const GroupElement& s : sym) {
        const std::uint64_t ni = dense_index(multiply(g, s, n), n);
        if (table.dist[ni] == 0xFF) {
          table.dist[ni] = layer;
          next.push_back(ni);
        }
      }
    }
    frontier.swap(next);
  }

  for (std::uint64_t idx = 0; idx < size; ++idx)
    if (table.dist[idx] == 0xFF) {
      const GroupElement g = element_from_index(idx, n);
      throw std::runtime_error(
          "generating set does not generate: unreached element (lamps=" +
          std::to_string(g.lamps) + ", pos=" + std::to_string(g.pos) + ")");
    }
  return table;
}

namespace {

// Shortest walk on C_n starting at 0, visiting every set bit of `visit`
// (positions as residues), ending at j.  The walk's trace is an arc
// [-l .. r] around 0; states are (l, r, endpoint side).
std::uint32_t min_travel(LampConfig visit, std::uint32_t j, std::uint32_t n) {
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 2;

  // needr[l]: smallest r such that [-l .. r] covers all of `visit`,
  // i.e. the largest p in visit with p < n - l (0 if none).
  std::vector<std::uint32_t> needr(n, 0);
  for (std::uint32_t l = 0; l < n; ++l) {
    std::uint32_t m = 0;
    for (std::uint32_t p = 1; p < n - l; ++p)
      if (visit >> p & 1) m = p;
    needr[l] = m;
  }

  std::vector<std::uint32_t> costL(n * n, kInf), costR(n * n, kInf);
  costL[0] = costR[0] = 0;
  std::uint32_t best = kInf;
  for (std::uint32_t s = 0; s < n; ++s) {
    for (std::uint32_t l = 0; l <= s && l < n; ++l) {
      const std::uint32_t r = s - l;
      if (r >= n || l + r > n - 1) continue;
      const std::uint32_t idx = l * n + r;
      for (int e = 0; e < 2; ++e) {
        const std::uint32_t c = e == 0 ? costL[idx] : costR[idx];
        if (c >= kInf) continue;
        if (r >= needr[l]) {
          const std::uint32_t endpos = e == 0 ? (n - l) % n : r;
          best = std::min(best, c + cyclic_distance(endpos, j, n));
        }
        if (l + r < n - 1) {
          const std::uint32_t cross = c + l + r + 1;
          if (l + 1 < n) {
            std::uint32_t& tl = costL[(l + 1) * n + r];
            tl = std::min(tl, e == 0 ? c + 1 : cross);
          }
          if (r + 1 < n) {
            std::uint32_t& tr = costR[l * n + r + 1];
            tr = std::min(tr, e == 0 ? cross : c + 1);
          }
        }
      }
    }
  }
  return best;
}

}  // namespace

std::uint32_t exact_travel_metric(LampConfig x, std::uint32_t j,
                                  std::uint32_t n) {
  check_modulus(n);
  // Under the algebraic group law, toggling while standing at position p
  // flips the lamp at -p; the visit set is the negation of the lamp set.
  LampConfig visit = 0;
  for (std::uint32_t k = 0; k < n; ++k)
    if (x >> k & 1) visit |= LampConfig{1} << ((n - k) % n);
  return static_cast<std::uint32_t>(std::popcount(x)) +
         min_travel(visit, j % n, n);
}

std::uint32_t surrogate_sigma(const GroupElement& a, const GroupElement& b,
                              std::uint32_t n) {
  const LampConfig diff = a.lamps ^ b.lamps;
  std::uint32_t lampterm = 0;
  for (std::uint32_t k = 0; k < n; ++k)
    if (diff >> k & 1)
      lampterm = std::max(lampterm, cyclic_distance(0, k, n) + 1);
  return cyclic_distance(a.pos, b.pos, n) + lampterm;
}

std::uint32_t pair_distance(const WordMetricTable& table,
                            const GroupElement& a, const GroupElement& b) {
  return table.at(multiply(inverse(b, table.n), a, table.n));
}

std::uint32_t travel_pair_distance(const GroupElement& a,
                                   const GroupElement& b, std::uint32_t n) {
  const GroupElement d = multiply(inverse(b, n), a, n);
  return exact_travel_metric(d.lamps, d.pos, n);
}

}  // namespace lamp
