#pragma once

// Certified Euclidean-distortion lower bounds: the representation
// averaging bound (smallest Rayleigh quotient of the generator operator
// over a list of nontrivial representations), and the spectral bound
// for random movement generating sets via the zig-zag eigenvalue
// estimate.

#include <cstdint>
#include <vector>

#include "lamp/representations.hpp"
#include "lamp/word_metric.hpp"

namespace lamp {

struct IrrepSpec {
  RepLabel label;
  std::vector<RepMatrix> generator_matrices;

  static IrrepSpec build(const RepLabel& label, const GeneratorSet& gens) {
    return {label, irrep_generator_matrices(label, gens)};
  }
};

// min over unit v of sum_s ||gamma(s)v - v||^2, i.e. the smallest
// eigenvalue of sum_s (2 Id - gamma(s) - gamma(s)^*).  Throws for the
// trivial representation.
double rayleigh_min(const IrrepSpec& irrep);

// The nontrivial representations that certify the lamplighter bound:
// all characters, the singleton Walsh class (whose Rayleigh minimum is
// monotone under enlarging A), and the full-set sign.
std::vector<IrrepSpec> standard_irrep_list(std::uint32_t n,
                                           const GeneratorSet& gens);

// sqrt( sum_rho_sq / (2|G|) * min_irreps rayleigh / |S| ).
double lemma32_bound(const WordMetricTable& table, const GeneratorSet& gens,
                     const std::vector<IrrepSpec>& irreps);

// Same bound from a sampled mean of rho(g,e)^2 (standard generators),
// for n beyond the BFS cap.
double lemma32_bound_sampled(std::uint32_t n, const GeneratorSet& gens,
                             const std::vector<IrrepSpec>& irreps,
                             std::uint64_t samples, std::uint64_t seed);

// Eigenvalues (1/|S'|) sum_{s in S'} cos(2 pi u s / n) of the
// normalized adjacency of Cayley(C_n, S), S' = S u -S, sorted
// descending.
std::vector<double> circulant_spectrum(std::uint32_t n,
                                       const std::vector<std::uint32_t>& S);

// Uniform size-`count` subset of C_n \ {0} that generates C_n
// (gcd condition), rejection-sampled deterministically from the seed.
std::vector<std::uint32_t> sample_generators(std::uint32_t n,
                                             std::uint32_t count,
                                             std::uint64_t seed);

// Zig-zag second-eigenvalue estimate
//   (1 - l2^2) l1 / 2 + sqrt((1 - l2^2)^2 l1^2 + 4 l2^2) / 2.
double zigzag_lambda(double lambda1, double lambda2);

struct SpectralReport {
  double lambda1 = 0.0;     // 1 - 2/n, the cube
  double lambda2 = 0.0;     // second eigenvalue of Cayley(C_n, S)
  double lambda = 0.0;      // zig-zag bound
  double avg_rho_sq = 0.0;  // mean squared distance (exact or estimate)
  double d_lower = 0.0;     // sqrt((1 - lambda) avg_rho_sq / 2)
  bool exact = false;
  bool degenerate = false;  // lambda at 1; bound reported as 0
};

enum class RhoSource {
  ExactTable,    // BFS over (empty x S) u {({0},0)}; small n only
  LampEstimate,  // E|x xor y|^2 = n/4 + n(n-1)/4
};

SpectralReport prop34_bound(std::uint32_t n,
                            const std::vector<std::uint32_t>& S,
                            RhoSource source);

}  // namespace lamp
