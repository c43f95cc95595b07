#include "lamp/abelian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "lamp/rng.hpp"

namespace lamp {

AbelianGroupSpec AbelianGroupSpec::make(std::vector<std::uint32_t> moduli) {
  if (moduli.empty())
    throw std::invalid_argument("abelian group needs at least one modulus");
  AbelianGroupSpec g;
  g.moduli = std::move(moduli);
  g.order = 1;
  g.exponent = 1;
  for (std::uint32_t m : g.moduli) {
    if (m < 2) throw std::invalid_argument("each modulus must be >= 2");
    g.order *= m;
    g.exponent = std::lcm(g.exponent, static_cast<std::uint64_t>(m));
    if (g.order > kAbelianMaxOrder)
      throw std::length_error("abelian group order exceeds guard 2^16");
  }
  return g;
}

std::vector<std::uint32_t> AbelianGroupSpec::coords(std::uint64_t index) const {
  std::vector<std::uint32_t> c(moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    c[i] = static_cast<std::uint32_t>(index % moduli[i]);
    index /= moduli[i];
  }
  return c;
}

std::uint64_t AbelianGroupSpec::index(
    const std::vector<std::uint32_t>& coords) const {
  std::uint64_t idx = 0;
  for (std::size_t i = moduli.size(); i-- > 0;)
    idx = idx * moduli[i] + coords[i] % moduli[i];
  return idx;
}

std::uint64_t AbelianGroupSpec::add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t idx = 0, mult = 1;
  for (std::uint32_t m : moduli) {
    idx += mult * ((a % m + b % m) % m);
    a /= m;
    b /= m;
    mult *= m;
  }
  return idx;
}

std::uint64_t AbelianGroupSpec::negate(std::uint64_t a) const {
  std::uint64_t idx = 0, mult = 1;
  for (std::uint32_t m : moduli) {
    idx += mult * ((m - a % m) % m);
    a /= m;
    mult *= m;
  }
  return idx;
}

std::complex<double> AbelianGroupSpec::character(std::uint64_t t,
                                                 std::uint64_t x) const {
  double theta = 0.0;
  for (std::uint32_t m : moduli) {
    theta += 2.0 * std::numbers::pi * static_cast<double>(t % m) *
             static_cast<double>(x % m) / m;
    t /= m;
    x /= m;
  }
  return {std::cos(theta), std::sin(theta)};
}

InvariantMetric InvariantMetric::validated(const AbelianGroupSpec& g,
                                           std::vector<double> F) {
  if (F.size() != g.order)
    throw std::invalid_argument("metric table size does not match |G|");
  if (F[0] != 0.0) throw std::invalid_argument("metric requires F(0) = 0");
  for (std::uint64_t x = 1; x < g.order; ++x) {
    if (!(F[x] > 0.0))
      throw std::invalid_argument("metric requires F(x) > 0 for x != 0");
    if (std::abs(F[x] - F[g.negate(x)]) > 1e-12 * (1.0 + F[x]))
      throw std::invalid_argument("metric requires F(x) = F(-x)");
  }
  const double tol = 1e-9;
  if (g.order <= 4096) {
    for (std::uint64_t x = 0; x < g.order; ++x)
      for (std::uint64_t y = 0; y < g.order; ++y)
        if (F[g.add(x, y)] > F[x] + F[y] + tol)
          throw std::invalid_argument("metric violates triangle inequality");
  } else {
    CounterRng rng{0xabe11a};
    for (std::uint64_t i = 0; i < 200000; ++i) {
      const std::uint64_t x = rng.below(2 * i, g.order);
      const std::uint64_t y = rng.below(2 * i + 1, g.order);
      if (F[g.add(x, y)] > F[x] + F[y] + tol)
        throw std::invalid_argument("metric violates triangle inequality");
    }
  }
  return InvariantMetric{std::move(F)};
}

InvariantMetric InvariantMetric::hamming(const AbelianGroupSpec& g) {
  std::vector<double> F(g.order);
  for (std::uint64_t x = 0; x < g.order; ++x) {
    const auto c = g.coords(x);
    F[x] = static_cast<double>(std::count_if(
        c.begin(), c.end(), [](std::uint32_t v) { return v != 0; }));
  }
  return validated(g, std::move(F));
}

InvariantMetric InvariantMetric::cycle(const AbelianGroupSpec& g) {
  if (g.moduli.size() != 1)
    throw std::invalid_argument("cycle metric needs a single modulus");
  const std::uint64_t m = g.moduli[0];
  std::vector<double> F(m);
  for (std::uint64_t x = 0; x < m; ++x)
    F[x] = static_cast<double>(std::min(x, m - x));
  return validated(g, std::move(F));
}

CharacterWeights fourier_weights(const AbelianGroupSpec& g,
                                 const InvariantMetric& F) {
  const std::uint64_t N = g.order;
  CharacterWeights w;
  w.a.assign(N, 0.0);
  for (std::uint64_t t = 1; t < N; ++t) {
    double re = 0.0;
    for (std::uint64_t x = 0; x < N; ++x) {
      if (F.F[x] == 0.0) continue;
      re += F.F[x] * g.character(t, x).real();  // F real and symmetric
    }
    w.a[t] = -re / (2.0 * static_cast<double>(N));
  }
  // Reconstruction check: sum_chi a_chi |1 - chi(x)|^2 = F(x).
  double fmax = 0.0;
  for (double v : F.F) fmax = std::max(fmax, std::abs(v));
  for (std::uint64_t x = 0; x < N; ++x) {
    double recon = 0.0;
    for (std::uint64_t t = 1; t < N; ++t)
      recon += w.a[t] * std::norm(1.0 - g.character(t, x));
    if (std::abs(recon - F.F[x]) > 1e-9 * (1.0 + fmax))
      throw std::runtime_error(
          "fourier_weights: reconstruction residual exceeds tolerance");
  }
  w.min_weight = 0.0;
  w.min_weight_character = 0;
  for (std::uint64_t t = 1; t < N; ++t)
    if (w.a[t] < w.min_weight) {
      w.min_weight = w.a[t];
      w.min_weight_character = t;
    }
  w.negative_type = w.min_weight >= -1e-12;
  return w;
}

double lp_distance(const AbelianGroupSpec& g, const CharacterWeights& w,
                   std::uint64_t x, std::uint64_t y, double p) {
  if (p < 1.0 || p > 2.0)
    throw std::invalid_argument("lp_distance: p must lie in [1, 2]");
  if (!w.negative_type)
    throw std::invalid_argument(
        "lp_distance: weights are not nonnegative; run negative_type first");
  const std::uint64_t d = g.add(x, g.negate(y));
  double acc = 0.0;
  for (std::uint64_t t = 1; t < g.order; ++t) {
    if (w.a[t] <= 0.0) continue;
    const double step = std::abs(1.0 - g.character(t, d));
    acc += w.a[t] * std::pow(step, p);
  }
  return std::pow(acc, 1.0 / p);
}

GlReport gl_check(const AbelianGroupSpec& g, const InvariantMetric& F,
                  double p) {
  const CharacterWeights w = fourier_weights(g, F);
  if (!w.negative_type)
    throw std::runtime_error(
        "gl_check requires a negative-type metric; the most negative "
        "weight is at character " +
        std::to_string(w.min_weight_character));
  GlReport r;
  r.exponent = g.exponent;
  r.p = p;
  r.bound_l1 = std::log(static_cast<double>(g.exponent));
  r.bound_lp = p > 1.0 ? 1.0 / (p - 1.0)
                       : std::numeric_limits<double>::infinity();
  // Translation invariance on both sides: scan (x, 0) only.
  double expansion = 0.0, contraction = 0.0;
  for (std::uint64_t x = 1; x < g.order; ++x) {
    const double rho = p == 1.0 ? F.F[x] : std::pow(F.F[x], 1.0 / p);
    const double emb = lp_distance(g, w, x, 0, p);
    if (emb <= 0.0)
      throw std::runtime_error("gl_check: degenerate embedded distance");
    expansion = std::max(expansion, emb / rho);
    contraction = std::max(contraction, rho / emb);
  }
  r.measured_distortion = expansion * contraction;
  return r;
}

}  // namespace lamp
