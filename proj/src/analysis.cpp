#include "lamp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace lamp {

namespace {

struct Extremes {
  double expansion = 0.0;
  double contraction = 0.0;
  std::pair<std::uint64_t, std::uint64_t> ew{0, 0}, cw{0, 0};
  std::uint64_t visited = 0;

  void feed(std::uint64_t a, std::uint64_t b, double m, double e) {
    ++visited;
    if (m == 0.0) return;  // same point (callers guarantee m=0 => a=b)
    if (e <= 0.0)
      throw std::runtime_error(
          "degenerate embedding: zero embedded distance at positive metric "
          "distance (pair " +
          std::to_string(a) + "," + std::to_string(b) + ")");
    if (e / m > expansion) {
      expansion = e / m;
      ew = {a, b};
    }
    if (m / e > contraction) {
      contraction = m / e;
      cw = {a, b};
    }
  }

  void merge(const Extremes& o) {
    visited += o.visited;
    if (o.expansion > expansion) {
      expansion = o.expansion;
      ew = o.ew;
    }
    if (o.contraction > contraction) {
      contraction = o.contraction;
      cw = o.cw;
    }
  }
};

template <class Body>
Extremes parallel_reduce(std::uint64_t count, std::uint32_t threads,
                         const Body& body) {
  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<std::uint32_t>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(count, 1)));
  std::vector<Extremes> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (std::uint32_t t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::uint64_t i = t; i < count; i += threads) body(parts[t], i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  Extremes total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

}  // namespace

DistortionReport distortion_scan(const PairOracle& metric,
                                 const PairOracle& embed,
                                 std::uint64_t domain_size, ScanMode mode,
                                 std::uint32_t threads) {
  if (domain_size < 2)
    throw std::invalid_argument("distortion_scan: need at least two points");
  Extremes ex;
  switch (mode.kind) {
    case ScanMode::Kind::ExactAllPairs:
      ex = parallel_reduce(domain_size, threads, [&](Extremes& acc,
                                                     std::uint64_t a) {
        for (std::uint64_t b = a + 1; b < domain_size; ++b)
          acc.feed(a, b, metric(a, b), embed(a, b));
      });
      break;
    case ScanMode::Kind::ExactReduced:
      ex = parallel_reduce(domain_size, threads,
                           [&](Extremes& acc, std::uint64_t a) {
                             if (a != 0) acc.feed(a, 0, metric(a, 0), embed(a, 0));
                           });
      break;
    case ScanMode::Kind::Sampled: {
      CounterRng rng{mode.seed};
      ex = parallel_reduce(mode.samples, threads,
                           [&](Extremes& acc, std::uint64_t i) {
                             std::uint64_t a = rng.below(2 * i, domain_size);
                             std::uint64_t b = rng.below(2 * i + 1, domain_size);
                             if (a == b) return;
                             acc.feed(a, b, metric(a, b), embed(a, b));
                           });
      break;
    }
  }
  DistortionReport r;
  r.expansion = ex.expansion;
  r.contraction = ex.contraction;
  r.distortion = ex.expansion * ex.contraction;
  r.expansion_witness = ex.ew;
  r.contraction_witness = ex.cw;
  r.mode = mode;
  r.pairs_visited = ex.visited;
  return r;
}

GramKernel symmetrize(
    const std::vector<Eigen::VectorXd>& values,
    const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& mult) {
  const std::uint64_t order = values.size();
  if (order == 0 || order > kSymmetrizeMaxOrder)
    throw std::length_error("symmetrize guard: group order " +
                            std::to_string(order) + " outside (0, " +
                            std::to_string(kSymmetrizeMaxOrder) + "]");
  const auto N = static_cast<Eigen::Index>(order);
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(N, N);
  for (std::uint64_t z = 0; z < order; ++z) {
    Eigen::MatrixXd F(values[0].size(), N);
    for (std::uint64_t x = 0; x < order; ++x)
      F.col(static_cast<Eigen::Index>(x)) = values[mult(z, x)];
    K.noalias() += F.transpose() * F;
  }
  K /= static_cast<double>(order);

  GramKernel out;
  out.K = K;
  const double trace = K.trace();
  if (trace <= 0.0) {
    out.degenerate = true;
    out.coords = Eigen::MatrixXd::Zero(N, N);
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K);
  const double clip = -1e-9 * trace;
  Eigen::VectorXd lam = es.eigenvalues();
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) < clip)
      throw std::runtime_error("symmetrize: kernel not PSD within tolerance");
    if (lam(i) < 0.0) {
      out.clipped_mass += -lam(i);
      lam(i) = 0.0;
    }
  }
  out.coords = es.eigenvectors() * lam.cwiseSqrt().asDiagonal();
  return out;
}

}  // namespace lamp
