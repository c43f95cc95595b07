#pragma once

// Distortion measurement for arbitrary (metric, embedded-distance)
// oracle pairs, the Gram-averaging symmetrization that turns any finite
// embedding into an equivariant one without increasing distortion, and
// the subcube-average diagnostic lives in ArcEmbedding.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lamp/rng.hpp"

namespace lamp {

// Distance between two domain indices.
using PairOracle = std::function<double(std::uint64_t, std::uint64_t)>;

struct ScanMode {
  enum class Kind {
    ExactAllPairs,  // every unordered pair of the domain
    ExactReduced,   // pairs (g, 0); valid when metric is invariant and
                    // the embedding equivariant
    Sampled,        // seeded pairs; a lower estimate
  };
  Kind kind = Kind::ExactAllPairs;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static ScanMode exact() { return {Kind::ExactAllPairs, 0, 0}; }
  static ScanMode reduced() { return {Kind::ExactReduced, 0, 0}; }
  static ScanMode sampled(std::uint64_t count, std::uint64_t seed) {
    return {Kind::Sampled, count, seed};
  }
};

struct DistortionReport {
  double expansion = 0.0;    // max embed/metric
  double contraction = 0.0;  // max metric/embed
  double distortion = 0.0;   // product; scale-free
  std::pair<std::uint64_t, std::uint64_t> expansion_witness{0, 0};
  std::pair<std::uint64_t, std::uint64_t> contraction_witness{0, 0};
  ScanMode mode;
  std::uint64_t pairs_visited = 0;
};

// Scans pairs of [0, domain_size) indices.  Throws on a zero embedded
// distance between points at positive metric distance.
DistortionReport distortion_scan(const PairOracle& metric,
                                 const PairOracle& embed,
                                 std::uint64_t domain_size, ScanMode mode,
                                 std::uint32_t threads = 0);

struct GramKernel {
  Eigen::MatrixXd K;          // |G| x |G|, PSD up to clipping tolerance
  Eigen::MatrixXd coords;     // rows: spectral coordinates per element
  double clipped_mass = 0.0;  // total negative eigenvalue mass set to 0
  bool degenerate = false;    // kernel vanished (constant input map)
};

// Lemma-style averaging: K(x, y) = (1/|G|) sum_z <f(zx), f(zy)>, then a
// spectral factorization with eigenvalues below -1e-9 * trace clipped.
// `mult` is the group multiplication on dense indices.
GramKernel symmetrize(
    const std::vector<Eigen::VectorXd>& values,
    const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& mult);

inline constexpr std::uint64_t kSymmetrizeMaxOrder = 4096;

}  // namespace lamp
