#include "lamp/embedding.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lamp {

EmbeddingParams EmbeddingParams::defaults(std::uint32_t n) {
  check_modulus(n);
  EmbeddingParams p;
  p.n = n;
  p.arc_len = n / 3;
  p.alpha = 0.5;
  // 2^{L/2} * 1/(n 2^{n/6}) = 2^{(L - n/3)/2} / n, with L = floor(n/3);
  // the exponent lies in (-1/2, 0].
  const double scale = std::exp2((p.arc_len - n / 3.0) / 2.0);
  p.eta_scaled = scale / n;
  p.delta_scaled = scale / std::sqrt(static_cast<double>(n));
  return p;
}

EmbeddingParams EmbeddingParams::with_raw(std::uint32_t n, double eta,
                                          double delta, double alpha) {
  check_modulus(n);
  if (!(eta > 0.0) || !(delta > 0.0))
    throw std::invalid_argument("embedding parameters must be positive");
  EmbeddingParams p;
  p.n = n;
  p.arc_len = n / 3;
  p.alpha = alpha;
  const double scale = std::exp2(p.arc_len / 2.0);
  p.eta_scaled = scale * eta;
  p.delta_scaled = scale * delta;
  return p;
}

ArcProfile build_arc_profile(const Arc& I, const EmbeddingParams& params) {
  if (I.length != params.arc_len)
    throw std::invalid_argument("arc length does not match params.arc_len");
  ArcProfile p{I, std::vector<double>(params.n)};
  for (std::uint32_t k = 0; k < params.n; ++k) {
    const std::uint32_t d = arc_distance(k, I, params.n);
    p.values[k] = d == 0 ? params.eta_scaled
                         : params.delta_scaled * std::pow(d, params.alpha);
  }
  return p;
}

ArcEmbedding::ArcEmbedding(const EmbeddingParams& params) : params_(params) {
  const std::uint32_t n = params.n;
  const std::uint32_t L = params.arc_len;
  check_modulus(n);
  if (L == 0 || L > n) throw std::invalid_argument("invalid arc length");
  profile_ = build_arc_profile({0, L}, params).values;
  // For the block of arc I_s = [s, s+L) the parity indicator at
  // coordinate k compares alpha^k(x) with the reflected arc -I_s; after
  // the change of variable t = k - s this depends only on t, through
  // the arc of length L starting at n - L + 1 + t.
  hitmask_.resize(n);
  for (std::uint32_t t = 0; t < n; ++t)
    hitmask_[t] = arc_bitmask({(n - L + 1 + t) % n, L}, n);
}

double ArcEmbedding::sq_dist_to_identity(const GroupElement& g) const {
  const std::uint32_t n = params_.n;
  const std::uint32_t j = g.pos % n;
  double total = 0.0;
  for (std::uint32_t t = 0; t < n; ++t) {
    const double a = profile_[(t + j) % n];
    const double b = profile_[t];
    const bool meets = (g.lamps & hitmask_[t]) != 0;
    total += a * a + b * b - (meets ? 0.0 : 2.0 * a * b);
  }
  return n * total;
}

double ArcEmbedding::pair_sq_dist(const GroupElement& g,
                                  const GroupElement& h) const {
  return sq_dist_to_identity(multiply(inverse(h, params_.n), g, params_.n));
}

ArcEmbedding::Terms ArcEmbedding::term_decomposition(
    const GroupElement& g) const {
  const std::uint32_t n = params_.n;
  const std::uint32_t j = g.pos % n;
  Terms out;
  for (std::uint32_t t = 0; t < n; ++t) {
    const double a = profile_[(t + j) % n];
    const double b = profile_[t];
    out.travel += (a - b) * (a - b);
    if (g.lamps & hitmask_[t]) out.parity += 2.0 * a * b;
  }
  out.travel *= n;
  out.parity *= n;
  return out;
}

double ArcEmbedding::subcube_diagnostic(LampConfig B) const {
  const std::uint32_t n = params_.n;
  double total = 0.0;
  for (std::uint32_t t = 0; t < n; ++t) {
    const int c = std::popcount(B & hitmask_[t]);
    if (c == 0) continue;
    const double w = profile_[t];
    total += 2.0 * w * w * (1.0 - std::exp2(-c));
  }
  return n * total;
}

double ArcEmbedding::generator_expansion(
    const std::vector<GroupElement>& sym_gens) const {
  double best = 0.0;
  for (const GroupElement& s : sym_gens)
    best = std::max(best, std::sqrt(sq_dist_to_identity(s)));
  return best;
}

std::vector<double> dense_embed(const GroupElement& g,
                                const EmbeddingParams& params) {
  const std::uint32_t n = params.n;
  const std::uint32_t L = params.arc_len;
  if (n > kDenseMaxN)
    throw std::length_error("dense guard: n=" + std::to_string(n) +
                            " exceeds " + std::to_string(kDenseMaxN) +
                            "; use the closed-form oracle");
  // Dense coordinates carry the raw (unscaled) per-block values; undo
  // the folded 2^{L/2} factor.
  const double unscale = std::exp2(-static_cast<double>(L) / 2.0);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n) << L);
  for (std::uint32_t s = 0; s < n; ++s) {
    const Arc I{s, L};
    const auto v = build_arc_profile(I, params).values;
    // Subsets A of the reflected arc -I = [n - s - L + 1, n - s].
    std::vector<std::uint32_t> members(L);
    for (std::uint32_t t = 0; t < L; ++t)
      members[t] = (2 * n - s - L + 1 + t) % n;
    for (std::uint32_t bits = 0; bits < (1u << L); ++bits) {
      LampConfig A = 0;
      for (std::uint32_t t = 0; t < L; ++t)
        if (bits >> t & 1) A |= LampConfig{1} << members[t];
      for (std::uint32_t k = 0; k < n; ++k) {
        const int w =
            A == 0 ? 1
                   : (std::popcount(A & shift(g.lamps, k, n)) & 1 ? -1 : 1);
        out.push_back(w * unscale * v[(k + g.pos) % n]);
      }
    }
  }
  return out;
}

}  // namespace lamp
