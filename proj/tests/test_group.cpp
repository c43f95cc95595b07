#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lamp/group.hpp"
#include "lamp/rng.hpp"

using namespace lamp;

TEST_CASE("identity is two-sided neutral") {
  const std::uint32_t n = 5;
  for (std::uint64_t i = 0; i < group_order(n); ++i) {
    const GroupElement g = element_from_index(i, n);
    CHECK(multiply(identity(), g, n) == g);
    CHECK(multiply(g, identity(), n) == g);
  }
}

TEST_CASE("toggle generator is an involution") {
  const GroupElement t{1, 0};
  CHECK(multiply(t, t, 4) == identity());
}

TEST_CASE("wreath law hand case at n=4") {
  // (empty,1) * ({0},0) = ({3},1): the left factor's position shifts the
  // right factor's lamp set.
  const GroupElement a{0, 1}, b{1, 0};
  const GroupElement p = multiply(a, b, 4);
  CHECK(p.lamps == (LampConfig{1} << 3));
  CHECK(p.pos == 1);
}

TEST_CASE("inverse hand cases at n=4") {
  CHECK(inverse(identity(), 4) == identity());
  const GroupElement g{1, 1};  // ({0},1)
  const GroupElement gi = inverse(g, 4);
  CHECK(gi.lamps == (LampConfig{1} << 1));
  CHECK(gi.pos == 3);
  const GroupElement h{LampConfig{1} << 3, 1};  // ({3},1)
  CHECK(multiply(h, inverse(h, 4), 4) == identity());
  CHECK(multiply(inverse(h, 4), h, 4) == identity());
}

TEST_CASE("inverse law holds for every element at n<=6") {
  for (std::uint32_t n = 3; n <= 6; ++n)
    for (std::uint64_t i = 0; i < group_order(n); ++i) {
      const GroupElement g = element_from_index(i, n);
      CHECK(multiply(g, inverse(g, n), n) == identity());
      CHECK(multiply(inverse(g, n), g, n) == identity());
    }
}

TEST_CASE("associativity: exhaustive at n=4, sampled at n=16") {
  const std::uint32_t n = 4;
  const std::uint64_t N = group_order(n);
  for (std::uint64_t a = 0; a < N; ++a)
    for (std::uint64_t b = 0; b < N; ++b)
      for (std::uint64_t c = 0; c < N; ++c) {
        const GroupElement ga = element_from_index(a, n);
        const GroupElement gb = element_from_index(b, n);
        const GroupElement gc = element_from_index(c, n);
        CHECK(multiply(multiply(ga, gb, n), gc, n) ==
              multiply(ga, multiply(gb, gc, n), n));
      }

  const std::uint32_t m = 16;
  CounterRng rng{17};
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const GroupElement ga = element_from_index(rng.below(3 * i, group_order(m)), m);
    const GroupElement gb =
        element_from_index(rng.below(3 * i + 1, group_order(m)), m);
    const GroupElement gc =
        element_from_index(rng.below(3 * i + 2, group_order(m)), m);
    CHECK(multiply(multiply(ga, gb, m), gc, m) ==
          multiply(ga, multiply(gb, gc, m), m));
  }
}

TEST_CASE("cyclic distance") {
  CHECK(cyclic_distance(0, 7, 12) == 5);
  CHECK(cyclic_distance(3, 3, 12) == 0);
  CHECK(cyclic_distance(0, 11, 12) == 1);
}

TEST_CASE("shift is the inverse-direction rotation action") {
  // alpha({1,2}) = {0,1}
  CHECK(shift(0b110, 1, 5) == 0b011);
  CounterRng rng{3};
  for (std::uint32_t n : {3u, 7u, 12u, 64u}) {
    const LampConfig x = rng.at(n) & lamp_mask(n);
    CHECK(shift(x, 0, n) == x);
    CHECK(shift(x, n, n) == x);
    // group action: alpha^{j+k} = alpha^j o alpha^k
    CHECK(shift(shift(x, 2, n), 1, n) == shift(x, 3, n));
  }
}

TEST_CASE("arc distance at n=12 for I=[0..3]") {
  const Arc I{0, 4};
  CHECK(arc_distance(2, I, 12) == 0);
  CHECK(arc_distance(5, I, 12) == 2);
  CHECK(arc_distance(11, I, 12) == 1);
  CHECK(arc_distance(7, I, 12) == 4);
  CHECK(arc_distance(8, I, 12) == 4);
}

TEST_CASE("arc distance matches min over members") {
  for (std::uint32_t n : {7u, 12u}) {
    for (std::uint32_t s = 0; s < n; ++s) {
      const Arc I{s, n / 3};
      for (std::uint32_t k = 0; k < n; ++k) {
        std::uint32_t best = n;
        for (std::uint32_t t = 0; t < I.length; ++t)
          best = std::min(best, cyclic_distance(k, (s + t) % n, n));
        CHECK(arc_distance(k, I, n) == best);
      }
    }
  }
}

TEST_CASE("arc distance is reflection covariant") {
  const std::uint32_t n = 12;
  for (std::uint32_t s = 0; s < n; ++s) {
    const Arc I{s, 4};
    const Arc rI{(2 * n - s - 3) % n, 4};  // -I
    for (std::uint32_t k = 0; k < n; ++k)
      CHECK(arc_distance(k, I, n) == arc_distance((n - k) % n, rI, n));
  }
}

TEST_CASE("arc family") {
  auto a12 = arc_family(12);
  REQUIRE(a12.size() == 12);
  for (const Arc& a : a12) CHECK(a.length == 4);
  auto a7 = arc_family(7);
  REQUIRE(a7.size() == 7);
  for (const Arc& a : a7) CHECK(a.length == 2);
  // every residue lies in exactly floor(n/3) arcs
  for (std::uint32_t k = 0; k < 12; ++k) {
    std::uint32_t cnt = 0;
    for (const Arc& a : a12)
      if (a.contains(k, 12)) ++cnt;
    CHECK(cnt == 4);
  }
}

TEST_CASE("dense index round trip") {
  for (std::uint32_t n : {3u, 10u}) {
    for (std::uint64_t i = 0; i < group_order(n); ++i)
      CHECK(dense_index(element_from_index(i, n), n) == i);
  }
}

TEST_CASE("modulus guard") {
  CHECK_THROWS_AS(check_modulus(2), std::invalid_argument);
  CHECK_THROWS_AS(check_modulus(65), std::invalid_argument);
  CHECK_NOTHROW(check_modulus(64));
}
