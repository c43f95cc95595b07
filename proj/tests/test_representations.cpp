#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "lamp/representations.hpp"
#include "lamp/rng.hpp"

using namespace lamp;

namespace {

RepVector random_vector(std::uint32_t n, const CounterRng& rng,
                        std::uint64_t base) {
  RepVector v(n);
  for (std::uint32_t k = 0; k < n; ++k)
    v(k) = Complex{2.0 * rng.unit(base + 2 * k) - 1.0,
                   2.0 * rng.unit(base + 2 * k + 1) - 1.0};
  return v;
}

}  // namespace

TEST_CASE("walsh evaluation") {
  CHECK(walsh_eval(0, 0b1011) == 1);
  CHECK(walsh_eval(0b110, 0) == 1);
  CHECK(walsh_eval(0b011, 0b010) == -1);  // |A cap x| = 1
  // multiplicative in x
  CounterRng rng{41};
  for (std::uint64_t i = 0; i < 200; ++i) {
    const LampConfig A = rng.at(3 * i) & lamp_mask(10);
    const LampConfig x = rng.at(3 * i + 1) & lamp_mask(10);
    const LampConfig y = rng.at(3 * i + 2) & lamp_mask(10);
    CHECK(walsh_eval(A, x ^ y) == walsh_eval(A, x) * walsh_eval(A, y));
  }
}

TEST_CASE("character evaluation") {
  const std::uint32_t n = 4;
  CHECK(chi_apply(0, {0b101, 3}, n) == Complex{1.0, 0.0});
  CHECK(chi_apply(2, {0b11, 0}, n) == Complex{1.0, 0.0});
  CHECK(std::abs(chi_apply(1, {0, 1}, n) - Complex{0.0, 1.0}) < 1e-15);
  // multiplicative
  CounterRng rng{43};
  for (std::uint64_t i = 0; i < 200; ++i) {
    const GroupElement g = element_from_index(rng.below(2 * i, group_order(n)), n);
    const GroupElement h =
        element_from_index(rng.below(2 * i + 1, group_order(n)), n);
    CHECK(std::abs(chi_apply(1, multiply(g, h, n), n) -
                   chi_apply(1, g, n) * chi_apply(1, h, n)) < 1e-12);
  }
}

TEST_CASE("pi hand cases") {
  const std::uint32_t n = 4;
  const LampConfig A = 0b10;
  CounterRng rng{7};
  const RepVector v = random_vector(n, rng, 100);
  CHECK((pi_apply(A, identity(), v, n) - v).norm() < 1e-15);

  // pi_A((empty,1)) e_0 = e_{n-1}: entry k of the output is v_{k+1}.
  RepVector e0 = RepVector::Zero(n);
  e0(0) = 1.0;
  const RepVector s = pi_apply(A, {0, 1}, e0, n);
  for (std::uint32_t k = 0; k < n; ++k)
    CHECK(std::abs(s(k) - (k == n - 1 ? 1.0 : 0.0)) < 1e-15);

  // A = {0}, g = ({0},0): entry 0 negated, others unchanged.
  const RepVector t = pi_apply(1, {1, 0}, v, n);
  for (std::uint32_t k = 0; k < n; ++k)
    CHECK(std::abs(t(k) - (k == 0 ? -v(k) : v(k))) < 1e-15);
}

TEST_CASE("pi is a unitary homomorphism (sampled, n in 4..10)") {
  for (std::uint32_t n = 4; n <= 10; ++n) {
    CounterRng rng{n};
    for (std::uint64_t i = 0; i < 150; ++i) {
      const LampConfig A = rng.at(4 * i) & lamp_mask(n);
      const GroupElement g =
          element_from_index(rng.below(4 * i + 1, group_order(n)), n);
      const GroupElement h =
          element_from_index(rng.below(4 * i + 2, group_order(n)), n);
      const RepVector v = random_vector(n, rng, 1000 * (i + 1));
      CHECK(pi_apply(A, g, v, n).norm() == doctest::Approx(v.norm()).epsilon(1e-12));
      const RepVector lhs = pi_apply(A, multiply(g, h, n), v, n);
      const RepVector rhs = pi_apply(A, g, pi_apply(A, h, v, n), n);
      CHECK((lhs - rhs).norm() < 1e-12);
    }
  }
}

TEST_CASE("rep_matrix hand cases") {
  const std::uint32_t n = 4;
  const GeneratorSet gens = GeneratorSet::standard();

  const RepMatrix triv = rep_matrix(RepLabel::character(0, n), {0, 1});
  REQUIRE(triv.rows() == 1);
  CHECK(std::abs(triv(0, 0) - 1.0) < 1e-15);

  // walsh(A) on (empty,1): row k selects column k+1
  const RepMatrix sh = rep_matrix(RepLabel::walsh(1, n), {0, 1});
  for (std::uint32_t r = 0; r < n; ++r)
    for (std::uint32_t c = 0; c < n; ++c)
      CHECK(std::abs(sh(r, c) - (c == (r + 1) % n ? 1.0 : 0.0)) < 1e-15);

  // walsh({0}) on ({0},0) = diag(-1, 1, 1, 1)
  const RepMatrix d = rep_matrix(RepLabel::walsh(1, n), {1, 0});
  for (std::uint32_t r = 0; r < n; ++r)
    for (std::uint32_t c = 0; c < n; ++c) {
      const double want = r != c ? 0.0 : (r == 0 ? -1.0 : 1.0);
      CHECK(std::abs(d(r, c) - want) < 1e-15);
    }

  // full subset: one-dimensional sign
  const RepMatrix sign = rep_matrix(RepLabel::walsh(lamp_mask(n), n), {0b101, 2});
  REQUIRE(sign.rows() == 1);
  CHECK(std::abs(sign(0, 0) - 1.0) < 1e-15);  // even lamp count
  CHECK(std::abs(rep_matrix(RepLabel::walsh(lamp_mask(n), n), {1, 0})(0, 0) +
                 1.0) < 1e-15);

  for (const GroupElement& s : gens.symmetrized(n)) {
    const RepMatrix m = rep_matrix(RepLabel::walsh(0b11, n), s);
    CHECK((m * m.adjoint() - RepMatrix::Identity(n, n)).norm() < 1e-12);
  }
}

TEST_CASE("rep_matrix agrees with pi_apply and is a homomorphism") {
  const std::uint32_t n = 6;
  CounterRng rng{77};
  for (std::uint64_t i = 0; i < 100; ++i) {
    LampConfig A = rng.at(3 * i) & lamp_mask(n);
    if (A == lamp_mask(n)) A ^= 1;  // keep the n-dimensional branch
    const RepLabel lab = RepLabel::walsh(A, n);
    const GroupElement g = element_from_index(rng.below(3 * i + 1, group_order(n)), n);
    const GroupElement h =
        element_from_index(rng.below(3 * i + 2, group_order(n)), n);
    const RepVector v = random_vector(n, rng, 500 * (i + 1));
    CHECK((rep_matrix(lab, g) * v - pi_apply(A, g, v, n)).norm() < 1e-12);
    CHECK((rep_matrix(lab, multiply(g, h, n)) -
           rep_matrix(lab, g) * rep_matrix(lab, h))
              .norm() < 1e-12);
  }
}

TEST_CASE("nontrivial listed representations sum to zero over G") {
  for (std::uint32_t n : {4u, 5u, 6u}) {
    std::vector<RepLabel> labels;
    for (std::uint32_t u = 1; u < n; ++u)
      labels.push_back(RepLabel::character(u, n));
    labels.push_back(RepLabel::walsh(1, n));
    labels.push_back(RepLabel::walsh(0b11, n));
    labels.push_back(RepLabel::walsh(lamp_mask(n), n));
    for (const RepLabel& lab : labels) {
      RepMatrix sum = RepMatrix::Zero(lab.dim(), lab.dim());
      for (std::uint64_t i = 0; i < group_order(n); ++i)
        sum += rep_matrix(lab, element_from_index(i, n));
      CHECK(sum.norm() < 1e-9);
    }
  }
}

TEST_CASE("pi_empty decomposes into the characters (orbit Gram check)") {
  const std::uint32_t n = 8;
  CounterRng rng{91};
  RepVector v(n);
  for (std::uint32_t k = 0; k < n; ++k)
    v(k) = 2.0 * rng.unit(k) - 1.0;  // real vector
  // DFT magnitudes of v
  std::vector<double> power(n, 0.0);
  for (std::uint32_t u = 0; u < n; ++u) {
    Complex acc = 0.0;
    for (std::uint32_t k = 0; k < n; ++k)
      acc += v(k) * std::polar(1.0, -2.0 * 3.14159265358979323846 * u * k / n);
    power[u] = std::norm(acc);
  }
  for (std::uint64_t i = 0; i < 100; ++i) {
    const GroupElement g = element_from_index(rng.below(2 * i + 64, group_order(n)), n);
    const GroupElement h =
        element_from_index(rng.below(2 * i + 65, group_order(n)), n);
    const Complex lhs = pi_apply(0, g, v, n).dot(pi_apply(0, h, v, n));
    Complex rhs = 0.0;
    for (std::uint32_t u = 0; u < n; ++u)
      rhs += power[u] / static_cast<double>(n) *
             std::conj(chi_apply(u, g, n)) * chi_apply(u, h, n);
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }
}
