#include <doctest.h>

#include "quotcoh/quot_pullback.hpp"
#include "support.hpp"

using namespace quotcoh;
using namespace quotcoh::test;

namespace {

QuotPullback make(const ContextPtr& c) { return QuotPullback(std::make_shared<XiEngine>(c)); }

}  // namespace

TEST_CASE("psi examples by both methods") {
  for (int g = 0; g <= 2; ++g) {
    auto c = make_context(g, 2);
    auto p = make(c);
    const auto expected = om(c, 1) + om(c, 2) + D(c, 1, 2);
    CHECK(p.psi({1, 0}, one(c)) == expected);
    CHECK(p.psi_combinatorial({1, 0}, one(c)) == expected);
    CHECK(p.psi({1, 1}, one(c)) == mul(om(c, 1), om(c, 2)));
    CHECK(p.psi_combinatorial({1, 1}, one(c)) == mul(om(c, 1), om(c, 2)));
    CHECK(p.psi({0, 0}, one(c)) == one(c));
    CHECK(p.psi_combinatorial({0, 0}, one(c)) == one(c));
  }
  auto c = make_context(1, 2);
  auto p = make(c);
  auto s2 = enumerate_permutations(2);
  const auto a = al(c, 1, 1);
  CHECK(p.psi_combinatorial({0, 0}, a) == Rational(2) * project_invariant(s2, a) * Rational(1, 2));
  CHECK(p.psi({0, 0}, project_invariant(s2, a)) == project_invariant(s2, a));
}

TEST_CASE("psi with a non-invariant class") {
  auto c = make_context(1, 2);
  auto p = make(c);
  const auto a = al(c, 1, 1);
  CHECK(!p.stabilizer_invariant({0, 0}, a));
  CHECK(p.stabilizer_invariant({1, 0}, a));
  CHECK_THROWS_AS(p.psi({0, 0}, a, true), AlgebraError);
  CHECK_THROWS_AS(p.psi_combinatorial({0, 0}, a, SumConvention::RowsSumToPermuted, true), AlgebraError);
  CHECK(p.psi({0, 0}, a) == p.psi({0, 0}, project_invariant(enumerate_permutations(2), a)));
  CHECK_THROWS_AS(p.psi({0, 1}, one(c)), AlgebraError);
}

TEST_CASE("closed formula needs trivial degrees") {
  auto c = make_context(0, 2, 2, {1, 0});
  auto p = make(c);
  CHECK_THROWS_AS(p.psi_combinatorial({1, 0}, one(c)), AlgebraError);
  CHECK_NOTHROW(p.psi({1, 0}, one(c)));
}

TEST_CASE("psi_partial degenerations") {
  auto c = make_context(1, 2);
  auto p = make(c);
  CHECK(p.psi_partial({1, 1}, {0, 1}, one(c)) == om(c, 2) + D(c, 1, 2));
  CHECK(p.psi_partial({2}, {1, 0}, one(c)) == p.psi({1, 0}, one(c)));
  auto c3 = make_context(1, 3);
  auto p3 = make(c3);
  CHECK(p3.psi_partial({2, 1}, {1, 1, 0}, one(c3)) == p3.engine().xi({1, 1, 0}));
  CHECK(p3.psi_partial({3}, {2, 1, 0}, one(c3)) == p3.psi({2, 1, 0}, one(c3)));
  CHECK_THROWS_AS(p3.psi_partial({2, 2}, {1, 1, 0}, one(c3)), AlgebraError);
}

TEST_CASE("recursion and closed formula agree at n=3 with invariant letters") {
  for (int g = 0; g <= 1; ++g) {
    auto c = make_context(g, 3);
    auto p = make(c);
    for (const auto& u : enumerate_B(3, kUnboundedRank, 3)) {
      for (int d = 0; d <= 2; ++d)
        for (const auto& a : invariant_letter_classes(c, stabilizer(u), d)) {
          auto x = p.psi(u, a, true);
          CHECK(x == p.psi_combinatorial(u, a, SumConvention::RowsSumToPermuted, true));
          CHECK(rho_invariance_check(x));
        }
    }
  }
}

TEST_CASE("the alternate sum convention is distinguished at n=3") {
  auto c = make_context(0, 3);
  auto p = make(c);
  int mismatches = 0;
  for (const auto& u : enumerate_B(3, kUnboundedRank, 4))
    for (int d = 0; d <= 4; ++d)
      for (const auto& a : invariant_letter_classes(c, stabilizer(u), d))
        if (p.psi(u, a, true) != p.psi_combinatorial(u, a, SumConvention::PermutedRowsSum, true)) ++mismatches;
  CHECK(mismatches > 0);
  auto c2 = make_context(1, 2);
  auto p2 = make(c2);
  for (const auto& u : enumerate_B(2, kUnboundedRank, 4))
    CHECK(p2.psi_combinatorial(u, one(c2), SumConvention::PermutedRowsSum) == p2.psi(u, one(c2)));
}

TEST_CASE("rho invariance check") {
  auto c = make_context(1, 2);
  CHECK(rho_invariance_check(om(c, 1) + om(c, 2) + D(c, 1, 2)));
  CHECK(!rho_invariance_check(om(c, 1)));
}

TEST_CASE("invariant dimension against the pullback span") {
  auto c = make_context(0, 2);
  auto rows = pullback_rank_check(c, kUnboundedRank, 4);
  for (const auto& row : rows) CHECK(row.ok());
  CHECK(invariant_dimension(c, 0) == 1);
  // degree 2 at g=0: omega_1+omega_2, omega_1 pt_1 ... only pt_1+pt_2 and omega_1+omega_2
  CHECK(invariant_dimension(c, 2) == 2);
  CHECK(invariant_dimension(c, 1) == 0);
  std::vector<RingElement> classes{om(c, 1), om(c, 2), om(c, 1) + om(c, 2), pt(c, 1)};
  CHECK(span_rank(classes, 2) == 3);
  CHECK(span_rank(classes, 4) == 0);
  CHECK_THROWS_AS(span_rank({om(c, 1) + one(c)}, 2), AlgebraError);
}

TEST_CASE("monomial bases") {
  auto c = make_context(1, 2);
  CHECK(letter_basis(*c, 0).size() == 1);
  CHECK(letter_basis(*c, 1).size() == 4);
  CHECK(letter_basis(*c, 4).size() == 1);
  CHECK(letter_basis(*c, 5).empty());
  CHECK(monomial_basis(*c, 2).size() == 2 + 6);
}

TEST_CASE("generating identity") {
  auto c2 = make_context(0, 2);
  XiEngine e2(c2);
  auto r = generating_identity_check(e2, Letter::point(), 2);
  CHECK(r.ok());
  auto c3 = make_context(0, 3);
  XiEngine e3(c3);
  CHECK(generating_identity_check(e3, Letter::unit(), 2).ok());
  auto g1 = make_context(1, 3);
  XiEngine e4(g1);
  for (Letter a : curve_basis(1)) CHECK(generating_identity_check(e4, a, 3).ok());
}

TEST_CASE("generator span") {
  for (const auto& row : generator_span_check(make_context(0, 2), 6)) CHECK(row.ok());
  for (const auto& row : generator_span_check(make_context(1, 2), 4)) CHECK(row.ok());
}

TEST_CASE("bounded rank pullback ranks") {
  auto c = make_context(0, 2);
  auto ranks = pullback_ranks(c, 1, 4);
  // only u = 0: the invariant letter classes 1, pt_1+pt_2, pt_1 pt_2
  CHECK(ranks == std::vector<std::size_t>{1, 0, 1, 0, 1});
}
