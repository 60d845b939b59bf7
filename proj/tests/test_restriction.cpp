#include <doctest.h>

#include "quotcoh/restriction.hpp"
#include "support.hpp"

using namespace quotcoh;
using namespace quotcoh::test;

TEST_CASE("restriction examples") {
  auto c = make_context(0, 1, 4);
  XiEngine e(c);
  auto xi = e.xi_equivariant({2});
  CHECK(restrict(xi, {3}) == mul(t(c, 3) - t(c, 0), t(c, 3) - t(c, 1)));
  CHECK(restrict(xi, {1}).is_zero());
  CHECK(restrict(one(c), {2}) == one(c));
  CHECK(top_term(restrict(xi, {2})) == mul(t(c, 2) - t(c, 0), t(c, 2) - t(c, 1)));
  CHECK(top_term_product(c, {2}, {2}) == mul(t(c, 2) - t(c, 0), t(c, 2) - t(c, 1)));
  CHECK(check_vanishing(e, {2}, {1}));
  CHECK_THROWS_AS(restrict(xi, {4}), AlgebraError);
  CHECK_THROWS_AS(restrict(om(make_context(0, 1), 1), {0}), AlgebraError);
}

TEST_CASE("t-degree and top term") {
  auto c = make_context(0, 2, 2);
  auto f = mul(t(c, 0), t(c, 0)) + mul(t(c, 1), D(c, 1, 2));
  CHECK(t_degree(f) == 2);
  CHECK(top_term(f) == mul(t(c, 0), t(c, 0)));
  CHECK(!t_degree(RingElement(c)).has_value());
  CHECK(top_term(RingElement(c)).is_zero());
}

TEST_CASE("omega substitution with repeated fixed weights") {
  auto c = make_context(1, 2, 2);
  CHECK(restrict(om(c, 2), {0, 0}) == t(c, 0) - D(c, 1, 2));
  CHECK(restrict(om(c, 2), {0, 1}) == t(c, 1));
  CHECK(restrict(om(c, 1), {1, 1}) == t(c, 1));
  auto d = make_context(0, 1, 2, {3, 0});
  CHECK(restrict(om(d, 1), {0}) == t(d, 0) + Rational(3) * pt(d, 1));
}

TEST_CASE("restriction is a ring homomorphism") {
  std::mt19937_64 rng(41);
  for (int g = 0; g <= 2; ++g) {
    auto c = make_context(g, 3, 3);
    for (int trial = 0; trial < 10; ++trial) {
      auto x = random_homogeneous(c, static_cast<int>(rng() % 5), rng) + t(c, static_cast<int>(rng() % 3));
      auto y = random_homogeneous(c, static_cast<int>(rng() % 5), rng);
      WeightVector w{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
      CHECK(restrict(mul(x, y), w) == mul(restrict(x, w), restrict(y, w)));
      CHECK(restrict(x + y, w) == restrict(x, w) + restrict(y, w));
      CHECK(is_omega_free(restrict(x, w)));
    }
  }
}

TEST_CASE("localization lemmas on a small grid") {
  for (int g = 0; g <= 1; ++g) {
    auto c = make_context(g, 2, 3);
    XiEngine e(c);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const WeightVector v{a, b};
        for (int x = 0; x < 3; ++x)
          for (int y = 0; y < 3; ++y) {
            const WeightVector w{x, y};
            if (leq0(v, w)) CHECK(check_top_term(e, v, w).is_zero());
            CHECK(check_vanishing(e, v, w));
          }
        for (const auto& sigma : enumerate_permutations(2)) CHECK(check_degree_bound(e, v, sigma));
      }
  }
}
