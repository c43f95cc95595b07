#include "lamp/lower_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "lamp/rng.hpp"

namespace lamp {

double rayleigh_min(const IrrepSpec& irrep) {
  if (irrep.label.trivial())
    throw std::invalid_argument(
        "rayleigh_min: trivial representation voids the bound");
  if (irrep.generator_matrices.empty())
    throw std::invalid_argument("rayleigh_min: no generator matrices");
  const auto dim = irrep.generator_matrices.front().rows();
  RepMatrix H = RepMatrix::Zero(dim, dim);
  for (const RepMatrix& m : irrep.generator_matrices)
    H += 2.0 * RepMatrix::Identity(dim, dim) - m - m.adjoint();
  Eigen::SelfAdjointEigenSolver<RepMatrix> es(H);
  return es.eigenvalues()(0);
}

std::vector<IrrepSpec> standard_irrep_list(std::uint32_t n,
                                           const GeneratorSet& gens) {
  std::vector<IrrepSpec> out;
  for (std::uint32_t u = 1; u < n; ++u)
    out.push_back(IrrepSpec::build(RepLabel::character(u, n), gens));
  out.push_back(IrrepSpec::build(RepLabel::walsh(1, n), gens));
  out.push_back(IrrepSpec::build(RepLabel::walsh(lamp_mask(n), n), gens));
  return out;
}

namespace {

double min_rayleigh_over(const std::vector<IrrepSpec>& irreps) {
  if (irreps.empty())
    throw std::invalid_argument("lemma32_bound: empty representation list");
  double best = std::numeric_limits<double>::infinity();
  for (const IrrepSpec& ir : irreps) best = std::min(best, rayleigh_min(ir));
  return best;
}

double assemble_bound(double mean_rho_sq, double rmin, std::size_t gen_count) {
  return std::sqrt(mean_rho_sq / 2.0 * rmin /
                   static_cast<double>(gen_count));
}

}  // namespace

double lemma32_bound(const WordMetricTable& table, const GeneratorSet& gens,
                     const std::vector<IrrepSpec>& irreps) {
  double sum = 0.0;
  for (std::uint8_t d : table.dist) sum += static_cast<double>(d) * d;
  const double mean = sum / static_cast<double>(table.dist.size());
  return assemble_bound(mean, min_rayleigh_over(irreps),
                        gens.symmetrized(table.n).size());
}

double lemma32_bound_sampled(std::uint32_t n, const GeneratorSet& gens,
                             const std::vector<IrrepSpec>& irreps,
                             std::uint64_t samples, std::uint64_t seed) {
  check_modulus(n);
  CounterRng rng{seed};
  double sum = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const LampConfig x = rng.at(2 * i) & lamp_mask(n);
    const auto j = static_cast<std::uint32_t>(rng.below(2 * i + 1, n));
    const double r = exact_travel_metric(x, j, n);
    sum += r * r;
  }
  return assemble_bound(sum / static_cast<double>(samples),
                        min_rayleigh_over(irreps),
                        gens.symmetrized(n).size());
}

std::vector<double> circulant_spectrum(std::uint32_t n,
                                       const std::vector<std::uint32_t>& S) {
  if (S.empty()) throw std::invalid_argument("circulant_spectrum: empty S");
  std::vector<bool> present(n, false);
  for (std::uint32_t s : S) {
    if (s == 0 || s >= n)
      throw std::invalid_argument("circulant_spectrum: step out of range");
    present[s] = present[n - s] = true;
  }
  std::vector<std::uint32_t> sym;
  for (std::uint32_t s = 1; s < n; ++s)
    if (present[s]) sym.push_back(s);
  std::vector<double> lam(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    double acc = 0.0;
    for (std::uint32_t s : sym)
      acc += std::cos(2.0 * std::numbers::pi * u * s / n);
    lam[u] = acc / static_cast<double>(sym.size());
  }
  std::sort(lam.rbegin(), lam.rend());
  return lam;
}

std::vector<std::uint32_t> sample_generators(std::uint32_t n,
                                             std::uint32_t count,
                                             std::uint64_t seed) {
  if (count == 0 || count > n - 1)
    throw std::invalid_argument("sample_generators: infeasible count");
  CounterRng rng{seed};
  std::uint64_t counter = 0;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    // Seeded Fisher-Yates prefix of {1, ..., n-1}.
    std::vector<std::uint32_t> pool(n - 1);
    std::iota(pool.begin(), pool.end(), 1u);
    for (std::uint32_t i = 0; i < count; ++i) {
      const auto j =
          i + static_cast<std::uint32_t>(rng.below(counter++, pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    std::vector<std::uint32_t> S(pool.begin(), pool.begin() + count);
    std::uint64_t g = n;
    for (std::uint32_t s : S) g = std::gcd(g, static_cast<std::uint64_t>(s));
    if (g == 1) {
      std::sort(S.begin(), S.end());
      return S;
    }
  }
  throw std::runtime_error("sample_generators: rejection sampling stalled");
}

double zigzag_lambda(double lambda1, double lambda2) {
  const double a = (1.0 - lambda2 * lambda2) * lambda1;
  return 0.5 * a + 0.5 * std::sqrt(a * a + 4.0 * lambda2 * lambda2);
}

SpectralReport prop34_bound(std::uint32_t n,
                            const std::vector<std::uint32_t>& S,
                            RhoSource source) {
  // No lamp-word cap here: estimate mode only touches the cycle spectrum,
  // so n well beyond the BFS range is fine.
  if (n < 3) throw std::invalid_argument("prop34_bound: n must be >= 3");
  SpectralReport r;
  r.lambda1 = 1.0 - 2.0 / n;
  const auto spec = circulant_spectrum(n, S);
  r.lambda2 = spec.size() > 1 ? spec[1] : 0.0;
  r.lambda = zigzag_lambda(r.lambda1, std::abs(r.lambda2));
  if (source == RhoSource::ExactTable) {
    GeneratorSet gens{S, true};
    const WordMetricTable table = bfs_table(n, gens);
    double sum = 0.0;
    for (std::uint8_t d : table.dist) sum += static_cast<double>(d) * d;
    r.avg_rho_sq = sum / static_cast<double>(table.dist.size());
    r.exact = true;
  } else {
    r.avg_rho_sq = n / 4.0 + n * (n - 1.0) / 4.0;
  }
  if (r.lambda >= 1.0 - 1e-12) {
    r.degenerate = true;
    r.d_lower = 0.0;
  } else {
    r.d_lower = std::sqrt((1.0 - r.lambda) * r.avg_rho_sq / 2.0);
  }
  return r;
}

}  // namespace lamp
