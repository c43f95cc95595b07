#pragma once

// Word metrics on C2 wr C_n: exact values by Cayley-graph BFS for any
// generating set, and an O(n^2) travel dynamic program for the standard
// two generators ({0},0) and (empty,1).

#include <cstdint>
#include <optional>
#include <vector>

#include "lamp/group.hpp"

namespace lamp {

// Movement steps plus an optional toggle generator; symmetrized under
// inverses before use.
struct GeneratorSet {
  std::vector<std::uint32_t> movement;  // subset of C_n \ {0}
  bool toggle = true;                   // include ({0},0)

  static GeneratorSet standard() { return {{1}, true}; }

  // The closure under inverses, as explicit group elements.
  std::vector<GroupElement> symmetrized(std::uint32_t n) const;
};

struct WordMetricTable {
  std::uint32_t n = 0;
  GeneratorSet gens;
  std::vector<std::uint8_t> dist;  // indexed by dense_index, value rho(g, e)

  std::uint32_t at(const GroupElement& g) const {
    return dist[dense_index(g, n)];
  }
};

inline constexpr std::uint32_t kBfsMaxN = 22;

// Exact rho(g, e) for every element by breadth-first search from the
// identity.  Throws if the set does not generate or n exceeds the cap.
WordMetricTable bfs_table(std::uint32_t n, const GeneratorSet& gens);

// rho((x,j), e) for the standard generators: |x| lamp toggles plus the
// shortest walk from 0 visiting every position of {-k : k in x} and
// ending at j.
std::uint32_t exact_travel_metric(LampConfig x, std::uint32_t j,
                                  std::uint32_t n);

// Lemma-style surrogate: d(j,l) + max_{k in x xor y} (d(0,k) + 1),
// with the max read as 0 when the lamp sets agree.
std::uint32_t surrogate_sigma(const GroupElement& a, const GroupElement& b,
                              std::uint32_t n);

// rho(a, b) = rho(b^-1 a, e) by left-invariance.
std::uint32_t pair_distance(const WordMetricTable& table,
                            const GroupElement& a, const GroupElement& b);

// Travel-metric pair distance (standard generators only).
std::uint32_t travel_pair_distance(const GroupElement& a,
                                   const GroupElement& b, std::uint32_t n);

}  // namespace lamp
