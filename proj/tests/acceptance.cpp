// Acceptance criteria A1-A9 on their exact grids. Prints one line per
// criterion; exits nonzero when any selected criterion fails.
//
//   acceptance            run all criteria
//   acceptance A3 A7      run a subset

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "quotcoh/poincare.hpp"
#include "quotcoh/quot_pullback.hpp"
#include "quotcoh/restriction.hpp"
#include "quotcoh/weights.hpp"
#include "quotcoh/xi_engine.hpp"

using namespace quotcoh;

namespace {

struct Outcome {
  std::size_t cases = 0;
  std::size_t failed = 0;
  std::string first_failure;
  std::vector<std::string> notes;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (ok) return;
    if (failed++ == 0) first_failure = describe();
  }
  void residual(const RingElement& r, const std::string& where) {
    record(r.is_zero(), [&] { return where + " residual " + format(r); });
  }
};

std::vector<WeightVector> vectors_up_to(int n, int max_co) {
  std::vector<WeightVector> out;
  WeightVector v(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      out.push_back(v);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      v[i] = x;
      rec(i + 1, left - x);
    }
    v[i] = 0;
  };
  rec(0, max_co);
  return out;
}

std::vector<WeightVector> box(int n, int r) {
  std::vector<WeightVector> out;
  for (const auto& v : vectors_up_to(n, n * (r - 1))) {
    bool inside = true;
    for (int x : v) inside = inside && x < r;
    if (inside) out.push_back(v);
  }
  return out;
}

std::string where(int g, const WeightVector& v) { return "g=" + std::to_string(g) + " v=(" + to_string(v) + ")"; }

// A1 and the rho half of A5 share the pullback outputs.
struct PullbackCase {
  int genus;
  WeightVector u;
  RingElement a;
  RingElement value;
};

std::vector<PullbackCase>& pullback_outputs() {
  static std::vector<PullbackCase> outputs;
  return outputs;
}

Outcome a1() {
  Outcome out;
  auto& outputs = pullback_outputs();
  outputs.clear();
  for (int g = 0; g <= 2; ++g) {
    for (int n = 2; n <= 4; ++n) {
      auto ctx = make_context(g, n);
      QuotPullback pullback(std::make_shared<XiEngine>(ctx));
      for (const auto& u : enumerate_B(n, kUnboundedRank, n == 4 ? 3 : 4)) {
        const auto st = stabilizer(u);
        for (int d = 0; d <= 4; ++d) {
          for (const auto& a : invariant_letter_classes(ctx, st, d)) {
            RingElement recursive = pullback.psi(u, a, true);
            RingElement closed = pullback.psi_combinatorial(u, a, SumConvention::RowsSumToPermuted, true);
            out.residual(recursive - closed, where(g, u) + " a=" + format(a));
            outputs.push_back({g, u, a, recursive});
          }
        }
      }
    }
  }
  return out;
}

Outcome a2() {
  Outcome out;
  for (int g = 0; g <= 2; ++g)
    for (int n = 1; n <= 4; ++n) {
      XiEngine engine(make_context(g, n));
      for (int pos = 0; pos < n; ++pos) {
        auto series = engine.pn_series(pos, 6);
        auto closed = engine.pn_closed_form(pos, 6);
        for (int l = 0; l <= 6; ++l)
          out.residual(series[l] - closed[l], "g=" + std::to_string(g) + " n=" + std::to_string(n) +
                                                  " position=" + std::to_string(pos + 1) + " power=" + std::to_string(l));
      }
    }
  return out;
}

Outcome a3() {
  Outcome out;
  std::size_t general_cases = 0, general_failed = 0;
  for (int g = 0; g <= 2; ++g)
    for (int n = 2; n <= 3; ++n) {
      XiEngine plain(make_context(g, n));
      XiEngine equivariant(make_context(g, n, 6));
      for (const auto& v : vectors_up_to(n, 4)) {
        if (v.back() < 1) continue;
        for (int m = 0; m + 1 < n; ++m) {
          const std::string at = where(g, v) + " m=" + std::to_string(m + 1);
          out.residual(plain.check_increment_lower_index(v, m, false), at);
          out.residual(equivariant.check_increment_lower_index(v, m, true), at + " equivariant");
          general_cases += 2;
          general_failed += !plain.check_increment_general(v, m, false).is_zero();
          general_failed += !equivariant.check_increment_general(v, m, true).is_zero();
        }
      }
    }
  std::mt19937_64 rng(0);
  std::map<int, std::unique_ptr<XiEngine>> engines;
  for (int i = 0; i < 200; ++i) {
    const int g = static_cast<int>(rng() % 3);
    WeightVector v(4);
    for (int k = 0; k < 3; ++k) v[k] = static_cast<int>(rng() % 3);
    v[3] = 1 + static_cast<int>(rng() % 2);
    const int m = static_cast<int>(rng() % 3);
    auto& engine = engines[g];
    if (!engine) engine = std::make_unique<XiEngine>(make_context(g, 4));
    out.residual(engine->check_increment_lower_index(v, m, false), where(g, v) + " m=" + std::to_string(m + 1));
    ++general_cases;
    general_failed += !engine->check_increment_general(v, m, false).is_zero();
  }
  out.notes.push_back("general multiplication rule on the same inputs: " +
                      std::to_string(general_cases - general_failed) + "/" + std::to_string(general_cases) + " pass");
  return out;
}

Outcome a4() {
  Outcome out;
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<int> s;
    for (int i = 0; i < 4; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    subsets.push_back(s);
  }
  std::vector<SubsetTuple> tuples;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    tuples.push_back(make_subset_tuple({subsets[i]}));
    for (std::size_t j = 0; j < subsets.size(); ++j) {
      tuples.push_back(make_subset_tuple({subsets[i], subsets[j]}));
      for (std::size_t k = 0; k < subsets.size(); ++k)
        tuples.push_back(make_subset_tuple({subsets[i], subsets[j], subsets[k]}));
    }
  }
  for (int g = 0; g <= 2; ++g) {
    auto ctx = make_context(g, 4);
    for (const auto& t : tuples) {
      if (!is_connected(t)) continue;
      RingElement direct = RingElement::one(ctx);
      for (const auto& s : t.sets) direct = mul(direct, small_diagonal(ctx, s));
      const int b1 = betti_b1(t);
      RingElement expected(ctx);
      if (b1 == 0) expected = small_diagonal(ctx, t.support());
      if (b1 == 1) expected = Rational(2 - 2 * g) * point_on(ctx, t.support());
      out.residual(direct - expected, "g=" + std::to_string(g) + " b1=" + std::to_string(b1));
    }
  }
  const std::vector<std::pair<std::vector<std::vector<int>>, int>> examples{
      {{{1, 2}, {2, 3}}, 0}, {{{1, 2}, {2, 3}, {1, 3}}, 1}, {{{1, 2}, {2, 3}, {1, 2, 3}}, 2}};
  for (const auto& [sets, b1] : examples) {
    const int got = betti_b1(make_subset_tuple(sets));
    out.record(got == b1, [&] { return "b1 example expected " + std::to_string(b1) + " got " + std::to_string(got); });
  }
  return out;
}

Outcome a5() {
  Outcome out;
  if (pullback_outputs().empty()) a1();
  for (const auto& c : pullback_outputs())
    out.record(rho_invariance_check(c.value), [&] { return where(c.genus, c.u) + " a=" + format(c.a) + " not rho-invariant"; });
  for (int g = 0; g <= 1; ++g)
    for (int n = 1; n <= 3; ++n)
      for (const auto& row : pullback_rank_check(make_context(g, n), kUnboundedRank, 8))
        out.record(row.ok(), [&] {
          return "g=" + std::to_string(g) + " n=" + std::to_string(n) + " degree " + std::to_string(row.degree) +
                 ": rank " + std::to_string(row.generated) + " vs invariant dimension " + std::to_string(row.invariant);
        });
  return out;
}

Outcome a6() {
  Outcome out;
  for (int g = 0; g <= 2; ++g)
    for (int n = 1; n <= 3; ++n)
      for (int r = 1; r <= 3; ++r) {
        auto ctx = make_context(g, n, r);
        XiEngine engine(ctx);
        const auto points = box(n, r);
        for (const auto& v : points) {
          if (co(v) > 3) continue;
          const std::string at = where(g, v) + " r=" + std::to_string(r);
          for (const auto& w : points) {
            if (leq0(v, w)) out.residual(check_top_term(engine, v, w), at + " w=(" + to_string(w) + ")");
            out.record(check_vanishing(engine, v, w), [&] { return at + " w=(" + to_string(w) + ") vanishing"; });
          }
          for (const auto& sigma : enumerate_permutations(n))
            out.record(check_degree_bound(engine, v, sigma),
                       [&] { return at + " w=(" + to_string(act(sigma, v)) + ") degree bound"; });
        }
      }
  return out;
}

std::string poly_text(const Poly& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].get_str();
  return s + "]";
}

Outcome a7() {
  Outcome out;
  for (int g = 0; g <= 2; ++g) {
    for (int r = 1; r <= 3; ++r) {
      const auto residual = quot_series_check(g, r, 4, 10);
      for (int l = 0; l <= 4; ++l)
        out.record(is_zero(residual[l]), [&] {
          return "quot g=" + std::to_string(g) + " r=" + std::to_string(r) + " l=" + std::to_string(l) + " residual " +
                 poly_text(residual[l]);
        });
    }
    for (int n = 0; n <= 4; ++n)
      for (int r = 1; r <= 3; ++r) {
        const auto residual = filt_presentation_check(g, r, n);
        out.record(is_zero(residual), [&] {
          return "filt g=" + std::to_string(g) + " n=" + std::to_string(n) + " r=" + std::to_string(r) + " residual " +
                 poly_text(residual);
        });
      }
  }
  for (int g = 0; g <= 1; ++g) {
    const auto report = infinite_limits_check(g, 10);
    for (const auto& row : report.rows)
      out.record(row.ok(), [&] { return "limit g=" + std::to_string(g) + " t^" + std::to_string(row.power); });
  }
  return out;
}

Outcome a8() {
  Outcome out;
  for (int g = 0; g <= 2; ++g)
    for (int n = 1; n <= 3; ++n) {
      auto ctx = make_context(g, n);
      XiEngine engine(ctx);
      const auto grid = vectors_up_to(n, 4);
      for (const auto& v : grid) {
        const RingElement xi = engine.xi(v);
        const auto degree = cohomological_degree(xi);
        out.record(degree && *degree == 2 * co(v), [&] { return where(g, v) + " not homogeneous of degree 2co"; });
        RingElement top(ctx);
        for (const auto& [m, q] : xi.terms())
          if (m.omega_degree() == co(v)) top += RingElement::monomial(ctx, m, q);
        Monomial lead;
        lead.letters.assign(n, Letter::unit());
        lead.omega.assign(v.begin(), v.end());
        out.residual(top - RingElement::monomial(ctx, lead), where(g, v) + " leading term");
      }
      for (const auto& v : grid)
        for (const auto& w : grid) {
          if (co(v) + co(w) > 4) continue;
          WeightVector sum(n);
          for (int i = 0; i < n; ++i) sum[i] = v[i] + w[i];
          const auto coeffs = engine.to_xi_basis(mul(engine.xi(v), engine.xi(w)));
          bool ok = true;
          for (const auto& [u, c] : coeffs) ok = ok && co(u) <= co(sum);
          auto it = coeffs.find(sum);
          ok = ok && it != coeffs.end() && it->second == RingElement::one(ctx);
          out.record(ok, [&] { return where(g, v) + " w=(" + to_string(w) + ") filtration product"; });
        }
      for (const auto& v : grid) {
        if (v.back() < 1) continue;
        const WeightVector u(v.begin(), v.end() - 1);
        for (int d = 0; d <= 2 * n; ++d)
          for (const auto& m : letter_basis(*ctx, d)) {
            const RingElement a = RingElement::monomial(ctx, m);
            out.residual(engine.check_module_recursion(u, v.back(), a), where(g, v) + " a=" + format(a));
          }
      }
    }
  return out;
}

Outcome a9() {
  Outcome out;
  for (auto [n, g, d] : std::vector<std::tuple<int, int, int>>{{2, 0, 8}, {2, 1, 8}, {3, 0, 6}})
    for (const auto& row : generator_span_check(make_context(g, n), d))
      out.record(row.ok(), [&] {
        return "n=" + std::to_string(n) + " g=" + std::to_string(g) + " degree " + std::to_string(row.degree) +
               ": rank " + std::to_string(row.generated) + " vs " + std::to_string(row.invariant);
      });
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria{
      {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5}, {"A6", a6}, {"A7", a7}, {"A8", a8}, {"A9", a9}};
  std::set<std::string> selected(argv + 1, argv + argc);
  for (const auto& name : selected) {
    bool known = false;
    for (const auto& c : criteria) known = known || c.first == name;
    if (!known) {
      std::cerr << "unknown criterion " << name << "\n";
      return 2;
    }
  }
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    if (!selected.empty() && !selected.count(name)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    std::string error;
    try {
      out = run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = error.empty() && out.failed == 0 && out.cases > 0;
    failures += !pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", seconds);
    std::cout << name << (pass ? " PASS " : " FAIL ") << out.cases - out.failed << "/" << out.cases << " " << timing;
    if (!error.empty()) std::cout << " error: " << error;
    if (out.failed) std::cout << " first: " << out.first_failure;
    std::cout << "\n";
    for (const auto& note : out.notes) std::cout << "   " << note << "\n";
  }
  return failures == 0 ? 0 : 1;
}
