#include <doctest.h>

#include <set>

#include "quotcoh/weights.hpp"

using namespace quotcoh;

TEST_CASE("basic weight operations") {
  CHECK(nor({0, 2, 1}) == WeightVector{2, 1, 0});
  CHECK(co({0, 2, 1}) == 3);
  CHECK(stabilizer_order({1, 1, 0}) == 2);
  CHECK(stabilizer_order({0, 0, 0}) == 6);
  CHECK(stabilizer_order({2, 1, 0}) == 1);
  CHECK(leq0({1, 0}, {1, 2}));
  CHECK(!leq0({2, 0}, {1, 2}));
  CHECK(is_decreasing({2, 2, 0}));
  CHECK(!is_decreasing({0, 1}));
  CHECK(support({0, 3, 0, 1}) == std::vector<int>{1, 3});
  CHECK(parse_weights("1,0,2") == WeightVector{1, 0, 2});
  CHECK(to_string({1, 0, 2}) == "1,0,2");
  CHECK_THROWS_AS(parse_weights("1,x"), AlgebraError);
  CHECK_THROWS_AS(parse_weights("1,-2"), AlgebraError);
}

TEST_CASE("permutations act on weights") {
  Permutation sigma{1, 2, 0};  // 1 -> 2, 2 -> 3, 3 -> 1
  CHECK(act(sigma, {5, 6, 7}) == WeightVector{7, 5, 6});
  CHECK(act(inverse(sigma), act(sigma, {5, 6, 7})) == WeightVector{5, 6, 7});
  CHECK(compose(sigma, inverse(sigma)) == identity_permutation(3));
  CHECK(enumerate_permutations(3).size() == 6);
  CHECK(enumerate_permutations(0).size() == 1);
  for (const auto& s : enumerate_permutations(3))
    for (const auto& t : enumerate_permutations(3))
      CHECK(act(compose(s, t), {4, 1, 0}) == act(s, act(t, {4, 1, 0})));
  CHECK(stabilizer({1, 1, 0}).size() == 2);
  CHECK(transposition(3, 0, 2) == Permutation{2, 1, 0});
  CHECK(adjacent_transpositions(3).size() == 2);
}

TEST_CASE("young subgroup") {
  auto y = young_subgroup({2, 1});
  REQUIRE(y.size() == 2);
  CHECK(std::set<Permutation>(y.begin(), y.end()) == std::set<Permutation>{{0, 1, 2}, {1, 0, 2}});
  CHECK(young_subgroup({1, 1, 1}).size() == 1);
  CHECK(young_subgroup({3}).size() == 6);
  CHECK(young_subgroup({2, 2}).size() == 4);
}

TEST_CASE("enumerate_B") {
  CHECK(enumerate_B(2, 2, 2) == std::vector<WeightVector>{{0, 0}, {1, 0}, {1, 1}});
  CHECK(enumerate_B(2, kUnboundedRank, 1) == std::vector<WeightVector>{{0, 0}, {1, 0}});
  CHECK(enumerate_B(3, 1, 5) == std::vector<WeightVector>{{0, 0, 0}});
  for (const auto& v : enumerate_B(3, 3, 4)) {
    CHECK(is_decreasing(v));
    CHECK(co(v) <= 4);
    CHECK(v.front() < 3);
  }
}

TEST_CASE("decompositions") {
  auto d = dec_of_weights({2}, {1, 0}, 2);
  CHECK(d.parts == std::vector<std::vector<int>>{{1}, {1}});
  CHECK(dec_of_weights({3}, {0, 0, 0}, 3).parts == std::vector<std::vector<int>>{{3}, {0}, {0}});
  CHECK_THROWS_AS(dec_of_weights({2}, {0, 1}, 2), AlgebraError);
  CHECK_THROWS_AS(dec_of_weights({2}, {2, 0}, 2), AlgebraError);
  for (int r = 1; r <= 3; ++r) {
    for (const std::vector<int>& blocks : std::vector<std::vector<int>>{{3}, {2, 1}, {1, 2}, {1, 1, 1}}) {
      // every concatenation of decreasing blocks
      std::vector<std::vector<WeightVector>> per_block;
      for (int b : blocks) per_block.push_back(enumerate_B(b, r, 100));
      std::vector<WeightVector> all{{}};
      for (const auto& options : per_block) {
        std::vector<WeightVector> next;
        for (const auto& prefix : all)
          for (const auto& o : options) {
            WeightVector v = prefix;
            v.insert(v.end(), o.begin(), o.end());
            next.push_back(v);
          }
        all = next;
      }
      std::set<std::vector<std::vector<int>>> seen;
      for (const auto& v : all) {
        auto dec = dec_of_weights(blocks, v, r);
        CHECK(weights_of_dec(blocks, dec) == v);
        int weighted = 0;
        for (int alpha = 0; alpha < r; ++alpha)
          for (int x : dec.parts[alpha]) weighted += alpha * x;
        CHECK(dec.co() == co(v));
        CHECK(weighted == co(v));
        CHECK(seen.insert(dec.parts).second);
      }
    }
  }
  // |B(l, r)| equals the number of r-multisets of size l
  CHECK(enumerate_dec(3, 3).size() == 10);
  CHECK(enumerate_dec(4, 2).size() == 5);
  CHECK(enumerate_dec(0, 2).size() == 1);
}

TEST_CASE("subset tuples") {
  auto t = make_subset_tuple({{1, 2}, {2, 3}, {4}});
  auto comps = connected_components(t);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].sets == std::vector<std::vector<int>>{{1, 2}, {2, 3}});
  CHECK(comps[1].sets == std::vector<std::vector<int>>{{4}});
  CHECK(!is_connected(t));
  CHECK_THROWS_AS(betti_b1(t), AlgebraError);
  CHECK(betti_b1(make_subset_tuple({{1, 2}, {2, 3}})) == 0);
  CHECK(betti_b1(make_subset_tuple({{1, 2}, {2, 3}, {1, 3}})) == 1);
  CHECK(betti_b1(make_subset_tuple({{1, 2}, {2, 3}, {1, 2, 3}})) == 2);
  CHECK(betti_b1(make_subset_tuple({{3}})) == 0);
  CHECK_THROWS_AS(make_subset_tuple({{1}, {}}), AlgebraError);
  auto classes = classify(make_subset_tuple({{1, 2}, {1, 2}, {3}, {4, 5}}));
  CHECK(classes[1].size() == 1);
  CHECK(classes[0].size() == 2);
}

TEST_CASE("incidence-graph b1 agrees with the closed formula") {
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<int> s;
    for (int i = 0; i < 4; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    subsets.push_back(s);
  }
  int connected = 0;
  for (const auto& a : subsets)
    for (const auto& b : subsets)
      for (const auto& c : subsets) {
        for (const auto& t : {make_subset_tuple({a}), make_subset_tuple({a, b}), make_subset_tuple({a, b, c})}) {
          CHECK(incidence_graph_b1(t) >= 0);
          if (!is_connected(t)) continue;
          ++connected;
          CHECK(betti_b1(t) == incidence_graph_b1(t));
        }
      }
  CHECK(connected > 0);
}

TEST_CASE("T(u, sigma) small cases") {
  const Permutation id{0, 1}, swap{1, 0};
  auto t_id = enumerate_T({1, 0}, id);
  std::set<std::vector<WeightVector>> got;
  for (const auto& L : t_id) got.insert(L.rows);
  CHECK(got == std::set<std::vector<WeightVector>>{{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}});
  auto t_swap = enumerate_T({1, 0}, swap);
  REQUIRE(t_swap.size() == 1);
  CHECK(t_swap[0].rows == std::vector<WeightVector>{{0, 0}, {0, 1}});
  for (const auto& sigma : enumerate_permutations(3)) {
    auto zero = enumerate_T({0, 0, 0}, sigma);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].rows == std::vector<WeightVector>(3, WeightVector(3, 0)));
  }
  CHECK_THROWS_AS(enumerate_T({0, 1}, id), AlgebraError);
}

TEST_CASE("T(u, sigma) derived data") {
  TupleSequence L{{{1, 0, 0}, {0, 2, 0}, {1, 0, 1}}};
  CHECK(L.hat_support(1) == std::vector<int>{1});
  CHECK(L.hat_support(2) == std::vector<int>{2});
  CHECK(L.hat_support(3) == std::vector<int>{1, 3});
  CHECK(L.rho(1) == 1);
  CHECK(L.rho(2) == 2);
  CHECK(L.rho(3) == 1);
  TupleSequence zero{{{0, 0}, {0, 0}}};
  CHECK(zero.hat_support(2) == std::vector<int>{2});
  CHECK(zero.rho(2) == 0);
}

TEST_CASE("T(u, sigma) enumeration is deterministic and matches the independent membership test") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& u : enumerate_B(n, kUnboundedRank, 4)) {
      for (const auto& sigma : enumerate_permutations(n)) {
        for (auto conv : {SumConvention::RowsSumToPermuted, SumConvention::PermutedRowsSum}) {
          auto first = enumerate_T(u, sigma, conv);
          CHECK(first == enumerate_T(u, sigma, conv));
          for (const auto& L : first) CHECK(in_T(L, u, sigma, conv));
          // brute force over all row tuples with the right total
          const WeightVector target = T_target(u, sigma, conv);
          std::size_t brute = 0;
          std::vector<WeightVector> rows(n, WeightVector(n, 0));
          std::function<void(int, int)> rec = [&](int j, int pos) {
            if (j == n) {
              WeightVector sum(n, 0);
              for (const auto& r : rows)
                for (int i = 0; i < n; ++i) sum[i] += r[i];
              if (sum == target && in_T(TupleSequence{rows}, u, sigma, conv)) ++brute;
              return;
            }
            if (pos > j) {
              rec(j + 1, 0);
              return;
            }
            for (int x = 0; x <= target[pos]; ++x) {
              rows[j][pos] = x;
              rec(j, pos + 1);
            }
            rows[j][pos] = 0;
          };
          rec(0, 0);
          CHECK(brute == first.size());
        }
      }
    }
  }
}
