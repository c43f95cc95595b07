#include "lamp/representations.hpp"

#include <cmath>
#include <numbers>

namespace lamp {

std::uint32_t RepLabel::dim() const {
  if (kind == Kind::Character) return 1;
  if (subset == lamp_mask(n)) return 1;  // the sign representation
  return n;
}

Complex chi_apply(std::uint32_t u, const GroupElement& g, std::uint32_t n) {
  const double theta =
      2.0 * std::numbers::pi * static_cast<double>(u) * g.pos / n;
  return {std::cos(theta), std::sin(theta)};
}

RepVector pi_apply(LampConfig A, const GroupElement& g, const RepVector& v,
                   std::uint32_t n) {
  RepVector out(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    const double w = A == 0 ? 1.0 : walsh_eval(A, shift(g.lamps, k, n));
    out(k) = w * v((k + g.pos) % n);
  }
  return out;
}

RepMatrix rep_matrix(const RepLabel& label, const GroupElement& g) {
  const std::uint32_t n = label.n;
  if (label.kind == RepLabel::Kind::Character) {
    RepMatrix m(1, 1);
    m(0, 0) = chi_apply(label.u, g, n);
    return m;
  }
  if (label.subset == lamp_mask(n)) {
    RepMatrix m(1, 1);
    m(0, 0) = std::popcount(g.lamps) & 1 ? -1.0 : 1.0;
    return m;
  }
  RepMatrix m = RepMatrix::Zero(n, n);
  for (std::uint32_t k = 0; k < n; ++k) {
    const double w =
        label.subset == 0 ? 1.0 : walsh_eval(label.subset, shift(g.lamps, k, n));
    m(k, (k + g.pos) % n) = w;
  }
  return m;
}

std::vector<RepMatrix> irrep_generator_matrices(const RepLabel& label,
                                                const GeneratorSet& gens) {
  std::vector<RepMatrix> out;
  for (const GroupElement& s : gens.symmetrized(label.n))
    out.push_back(rep_matrix(label, s));
  return out;
}

}  // namespace lamp
