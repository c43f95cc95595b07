#pragma once

// Fourier pipeline for invariant metrics on finite Abelian groups:
// character weights by inversion, negative-type testing, the character
// embedding into L_p(dual, mu), and the distortion report against the
// log-exponent bounds.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace lamp {

struct AbelianGroupSpec {
  std::vector<std::uint32_t> moduli;  // G = C_{m1} x ... x C_{md}
  std::uint64_t order = 0;
  std::uint64_t exponent = 0;  // lcm of moduli

  static AbelianGroupSpec make(std::vector<std::uint32_t> moduli);

  std::vector<std::uint32_t> coords(std::uint64_t index) const;
  std::uint64_t index(const std::vector<std::uint32_t>& coords) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t negate(std::uint64_t a) const;
  // chi_t(x) for dual index t and element index x.
  std::complex<double> character(std::uint64_t t, std::uint64_t x) const;
};

inline constexpr std::uint64_t kAbelianMaxOrder = 1ULL << 16;

// rho(x, 0) for every element index; validated on construction.
struct InvariantMetric {
  std::vector<double> F;

  // Checks F(0)=0, symmetry, positivity, and the triangle inequality
  // (exhaustively for |G| <= 4096, sampled above).
  static InvariantMetric validated(const AbelianGroupSpec& g,
                                   std::vector<double> F);

  static InvariantMetric hamming(const AbelianGroupSpec& g);
  static InvariantMetric cycle(const AbelianGroupSpec& g);  // single modulus
};

struct CharacterWeights {
  std::vector<double> a;  // indexed by dual index; a[0] (trivial) is 0
  bool negative_type = false;
  double min_weight = 0.0;
  std::uint64_t min_weight_character = 0;
};

// a_chi = -F_hat(chi) / (2|G|) for nontrivial chi; the reconstruction
// sum_chi a_chi |1 - chi(x)|^2 = F(x) is asserted to 1e-9 relative.
CharacterWeights fourier_weights(const AbelianGroupSpec& g,
                                 const InvariantMetric& F);

// ( sum_chi a_chi |chi(x) - chi(y)|^p )^{1/p}; weights must be
// nonnegative and p in [1, 2].
double lp_distance(const AbelianGroupSpec& g, const CharacterWeights& w,
                   std::uint64_t x, std::uint64_t y, double p);

struct GlReport {
  std::uint64_t exponent = 0;
  double p = 1.0;
  double measured_distortion = 0.0;  // of x -> (chi(x))_chi into L_p
  double bound_l1 = 0.0;             // log(m) * D^4 with D = 1
  double bound_lp = 0.0;             // D^{4/p} / (p - 1), infinite at p = 1
};

// Measures the distortion of the character embedding from (G, rho) into
// L_1 (p = 1) or from (G, rho^{1/p}) into L_p, by exact reduced scan.
GlReport gl_check(const AbelianGroupSpec& g, const InvariantMetric& F,
                  double p);

}  // namespace lamp
