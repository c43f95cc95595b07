#pragma once

// The equivariant arc embedding of C2 wr C_n: one block per pair of an
// arc I of length floor(n/3) and a subset A of the reflected arc -I,
// carrying the representation pi_A applied to the arc profile v^I.
//
// v^I is eta on I and delta * d(k, I)^alpha outside it.  Squared
// distances collapse over the subsets of each arc, leaving an O(n)
// closed form after O(n) precomputation; the global 2^{floor(n/3)}
// block factor is folded into rescaled parameters analytically so the
// evaluation never touches denormal magnitudes.

#include <cstdint>
#include <vector>

#include "lamp/group.hpp"

namespace lamp {

struct EmbeddingParams {
  std::uint32_t n = 0;
  std::uint32_t arc_len = 0;
  double alpha = 0.5;
  // Parameters pre-multiplied by 2^{arc_len/2} (the per-arc subset count
  // folded in).  The defaults correspond to eta = 1/(n 2^{n/6}) and
  // delta = 1/(sqrt(n) 2^{n/6}).
  double eta_scaled = 0.0;
  double delta_scaled = 0.0;

  static EmbeddingParams defaults(std::uint32_t n);
  // Explicit raw eta/delta (scaled internally); for diagnostics.
  static EmbeddingParams with_raw(std::uint32_t n, double eta, double delta,
                                  double alpha = 0.5);
};

struct ArcProfile {
  Arc arc;
  std::vector<double> values;  // v^I_k, in the params' scaled units
};

ArcProfile build_arc_profile(const Arc& I, const EmbeddingParams& params);

// Precomputed state for the closed-form distance oracle.
class ArcEmbedding {
 public:
  explicit ArcEmbedding(const EmbeddingParams& params);

  const EmbeddingParams& params() const { return params_; }

  // ||f(g) - f(e)||^2, exact closed form, O(n).
  double sq_dist_to_identity(const GroupElement& g) const;

  // ||f(g) - f(h)||^2 via equivariance.
  double pair_sq_dist(const GroupElement& g, const GroupElement& h) const;

  // The two sides of the travel/parity decomposition; their sum is the
  // exact squared distance.
  struct Terms {
    double travel = 0.0;
    double parity = 0.0;
  };
  Terms term_decomposition(const GroupElement& g) const;

  // E[ ||f(x,0) - f(e)||^2 | x subset of B ], exact closed form.
  double subcube_diagnostic(LampConfig B) const;

  // Expansion of the embedding against a word metric is attained at the
  // generator displacements; this returns max_s ||f(s) - f(e)||.
  double generator_expansion(const std::vector<GroupElement>& sym_gens) const;

 private:
  EmbeddingParams params_;
  std::vector<double> profile_;      // canonical w_t for I = [0, arc_len)
  std::vector<LampConfig> hitmask_;  // hitmask_[t]: arc mask whose
                                     // intersection with x decides the
                                     // parity indicator at offset t
};

// Dense materialization, guard n <= 12: coordinate (I, A, k) with
// A a subset of -I equals W_A(alpha^k(x)) * v^I_{k+j}.
std::vector<double> dense_embed(const GroupElement& g,
                                const EmbeddingParams& params);

inline constexpr std::uint32_t kDenseMaxN = 12;

}  // namespace lamp
