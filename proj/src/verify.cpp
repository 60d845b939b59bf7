#include "quotcoh/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "quotcoh/poincare.hpp"
#include "quotcoh/quot_pullback.hpp"
#include "quotcoh/restriction.hpp"

namespace quotcoh {

using nlohmann::json;

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }));
}

const CaseResult* SuiteReport::first_failure() const {
  for (const auto& c : cases)
    if (!c.pass) return &c;
  return nullptr;
}

json SuiteReport::to_json() const {
  json out;
  out["suite"] = suite;
  out["cases"] = json::array();
  for (const auto& c : cases)
    out["cases"].push_back({{"inputs", c.inputs}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}});
  out["summary"] = {{"total", cases.size()}, {"passed", passed()}, {"failed", cases.size() - passed()}};
  return out;
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << suite << ": " << passed() << "/" << cases.size() << " cases passed\n";
  if (const CaseResult* c = first_failure()) {
    out << "first counterexample:\n"
        << "  inputs:   " << c->inputs.dump() << "\n"
        << "  expected: " << c->expected << "\n"
        << "  got:      " << c->got << "\n";
  }
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"recursion", "pullback",   "localization", "series",
                                              "ranks",     "diagonal",   "generators",   "structure"};
  return names;
}

namespace {

json with(json base, const json& extra) {
  base.update(extra);
  return base;
}

CaseResult residual_case(json inputs, const RingElement& residual) {
  return {std::move(inputs), "0", format(residual), residual.is_zero()};
}

CaseResult value_case(json inputs, const std::string& expected, const std::string& got) {
  return {std::move(inputs), expected, got, expected == got};
}

CaseResult flag_case(json inputs, bool ok) { return {std::move(inputs), "true", ok ? "true" : "false", ok}; }

std::vector<int> genera_or(const VerifyOptions& o, std::vector<int> fallback) {
  return o.genera.empty() ? fallback : o.genera;
}

std::vector<int> ns_or(const VerifyOptions& o, std::vector<int> fallback) {
  if (!o.n) return fallback;
  return {*o.n};
}

/// Every vector in Z_{>=0}^n with co(v) <= max_co, lexicographic.
std::vector<WeightVector> all_vectors(int n, int max_co) {
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

/// Every vector in [0, r-1]^n.
std::vector<WeightVector> box_vectors(int n, int r) {
  std::vector<WeightVector> out;
  WeightVector v(n, 0);
  while (true) {
    out.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[i] == r - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

std::string poly_string(const Poly& p) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i].get_str();
  out << "]";
  return out.str();
}

std::string letter_name(Letter l) {
  switch (l.kind) {
    case Letter::Kind::Unit: return "one";
    case Letter::Kind::Point: return "pt";
    case Letter::Kind::Alpha: return "a" + std::to_string(l.index);
    case Letter::Kind::Beta: return "b" + std::to_string(l.index);
  }
  return "?";
}

// -- recursion ----------------------------------------------------------------

void suite_recursion(const VerifyOptions& o, std::vector<CaseResult>& cases) {
  const int max_power = o.max_t.value_or(6);
  for (int g : genera_or(o, {0, 1, 2})) {
    for (int n : ns_or(o, {1, 2, 3, 4})) {
      XiEngine engine(make_context(g, n));
      for (int pos = 0; pos < n; ++pos) {
        auto series = engine.pn_series(pos, max_power);
        auto closed = engine.pn_closed_form(pos, max_power);
        for (int l = 0; l <= max_power; ++l)
          cases.push_back(residual_case(
              {{"check", "generating-function"}, {"genus", g}, {"n", n}, {"position", pos + 1}, {"power", l}},
              series[l] - closed[l]));
      }
      if (n > 3) continue;
      for (Letter a : curve_basis(g)) {
        auto result = generating_identity_check(engine, a, max_power);
        json base{{"check", "generating-identity"}, {"genus", g}, {"n", n}, {"a", letter_name(a)}};
        cases.push_back(flag_case(with(base, {{"property", "choice-independent"}}), result.choice_independent));
        for (int l = 0; l <= max_power; ++l)
          cases.push_back(residual_case(with(base, {{"power", l}}), result.residual[l]));
      }
    }
  }

  const int max_co = o.max_co.value_or(4);
  for (int g : genera_or(o, {0, 1, 2})) {
    for (int n : ns_or(o, {2, 3})) {
      if (n < 2 || n > 3) continue;
      XiEngine plain(make_context(g, n));
      XiEngine equivariant(make_context(g, n, max_co + 2));
      for (const auto& v : all_vectors(n, max_co)) {
        if (v.back() < 1) continue;
        for (int m = 0; m + 1 < n; ++m) {
          json in{{"check", "increment-lower-index"}, {"genus", g}, {"v", to_string(v)}, {"m", m + 1}};
          cases.push_back(residual_case(with(in, {{"equivariant", false}}),
                                        plain.check_increment_lower_index(v, m, false)));
          cases.push_back(residual_case(with(in, {{"equivariant", true}, {"rank", max_co + 2}}),
                                        equivariant.check_increment_lower_index(v, m, true)));
        }
        for (int m = 0; m < n; ++m) {
          json in{{"check", "increment-general"}, {"genus", g}, {"v", to_string(v)}, {"m", m + 1}};
          cases.push_back(residual_case(with(in, {{"equivariant", false}}), plain.check_increment_general(v, m, false)));
          cases.push_back(residual_case(with(in, {{"equivariant", true}, {"rank", max_co + 2}}),
                                        equivariant.check_increment_general(v, m, true)));
        }
      }
    }
  }

  if (o.n && *o.n != 4) return;
  std::mt19937_64 rng(o.seed);
  const auto genera = genera_or(o, {0, 1, 2});
  std::map<int, std::unique_ptr<XiEngine>> engines;
  for (int i = 0; i < o.random_cases; ++i) {
    const int g = genera[rng() % genera.size()];
    WeightVector v(4);
    for (int k = 0; k < 3; ++k) v[k] = static_cast<int>(rng() % 3);
    v[3] = 1 + static_cast<int>(rng() % 2);
    const int m = static_cast<int>(rng() % 3);
    auto& engine = engines[g];
    if (!engine) engine = std::make_unique<XiEngine>(make_context(g, 4));
    cases.push_back(residual_case(
        {{"check", "increment-lower-index"}, {"genus", g}, {"v", to_string(v)}, {"m", m + 1}, {"random", i}},
        engine->check_increment_lower_index(v, m, false)));
    cases.push_back(residual_case(
        {{"check", "increment-general"}, {"genus", g}, {"v", to_string(v)}, {"m", m + 1}, {"random", i}},
        engine->check_increment_general(v, m, false)));
  }
}

// -- pullback -----------------------------------------------------------------

void suite_pullback(const VerifyOptions& o, std::vector<CaseResult>& cases) {
  const int max_a_degree = o.max_degree.value_or(4);
  for (int g : genera_or(o, {0, 1, 2})) {
    for (int n : ns_or(o, {2, 3, 4})) {
      const int max_co = o.max_co.value_or(n >= 4 ? 3 : 4);
      auto ctx = make_context(g, n);
      QuotPullback pullback(std::make_shared<XiEngine>(ctx));
      for (const auto& u : enumerate_B(n, kUnboundedRank, max_co)) {
        const auto st = stabilizer(u);
        for (int d = 0; d <= max_a_degree; ++d) {
          const auto classes = invariant_letter_classes(ctx, st, d);
          for (std::size_t j = 0; j < classes.size(); ++j) {
            const RingElement& a = classes[j];
            json in{{"genus", g}, {"n", n}, {"u", to_string(u)}, {"a", format(a)}};
            RingElement recursive = pullback.psi(u, a, true);
            RingElement combinatorial = pullback.psi_combinatorial(u, a, SumConvention::RowsSumToPermuted, true);
            cases.push_back(residual_case(with(in, {{"check", "combinatorial-formula"}}),
                                          recursive - combinatorial));
            RingElement defect(ctx);
            for (const auto& s : adjacent_transpositions(n)) {
              defect = rho_act(s, recursive) - recursive;
              if (!defect.is_zero()) break;
            }
            cases.push_back(residual_case(with(in, {{"check", "rho-invariance"}}), defect));
          }
        }
      }
    }
  }
}

// -- localization -------------------------------------------------------------

void suite_localization(const VerifyOptions& o, std::vector<CaseResult>& cases) {
  const int max_co = o.max_co.value_or(3);
  std::vector<int> ranks{1, 2, 3};
  if (o.rank) ranks = {*o.rank};
  for (int g : genera_or(o, {0, 1, 2})) {
    for (int n : ns_or(o, {1, 2, 3})) {
      for (int r : ranks) {
        auto ctx = make_context(g, n, r);
        XiEngine engine(ctx);
        const auto box = box_vectors(n, r);
        const auto perms = enumerate_permutations(n);
        for (const auto& v : box) {
          if (co(v) > max_co) continue;
          const RingElement xi = engine.xi_equivariant(v);
          json base{{"genus", g}, {"n", n}, {"rank", r}, {"v", to_string(v)}};
          for (const auto& w : box) {
            json in = with(base, {{"w", to_string(w)}});
            const RingElement image = restrict(xi, w);
            const auto degree = t_degree(image);
            if (leq0(v, w)) {
              cases.push_back(residual_case(with(in, {{"check", "top-term"}}),
                                            top_term(image) - top_term_product(ctx, v, w)));
              cases.push_back(value_case(with(in, {{"check", "top-degree"}}), std::to_string(co(v)),
                                         degree ? std::to_string(*degree) : "-inf"));
            } else if (degree && *degree == co(v)) {
              cases.push_back(flag_case(with(in, {{"check", "top-degree-converse"}}), false));
            }
            cases.push_back(flag_case(with(in, {{"check", "vanishing"}}), check_vanishing(engine, v, w)));
          }
          std::set<WeightVector> seen;
          for (const auto& sigma : perms) {
            if (!seen.insert(act(sigma, v)).second) continue;
            cases.push_back(flag_case(with(base, {{"check", "degree-bound"}, {"w", to_string(act(sigma, v))}}),
                                      check_degree_bound(engine, v, sigma)));
          }
        }
      }
    }
  }
}

// -- series -------------------------------------------------------------------

void suite_series(const VerifyOptions& o, std::vector<CaseResult>& cases) {
  const int max_t = o.max_t.value_or(10);
  std::vector<int> ranks{1, 2, 3};
  if (o.rank) ranks = {*o.rank};
  for (int g : genera_or(o, {0, 1, 2})) {
    for (int r : ranks) {
      const auto residual = quot_series_check(g, r, 4, max_t);
      for (int l = 0; l <= 4; ++l)
        cases.push_back(value_case({{"check", "quot-series"}, {"genus", g}, {"rank", r}, {"length", l}}, "[]",
                                   poly_string(residual[l])));
    }
    const auto unbounded = quot_series_check(g, kUnboundedRank, 4, max_t);
    for (int l = 0; l <= 4; ++l)
      cases.push_back(value_case({{"check", "quot-series"}, {"genus", g}, {"rank", "inf"}, {"length", l}}, "[]",
                                 poly_string(unbounded[l])));
    for (int n : ns_or(o, {0, 1, 2, 3, 4}))
      for (int r : ranks)
        cases.push_back(value_case({{"check", "filt-presentation"}, {"genus", g}, {"n", n}, {"rank", r}}, "[]",
                                   poly_string(filt_presentation_check(g, r, n))));
    for (int m = 0; m <= 4; ++m)
      cases.push_back(value_case({{"check", "symmetric-product"}, {"genus", g}, {"m", m}},
                                 poly_string(sym_prod_poincare(g, m)), poly_string(sym_prod_invariant_dims(g, m))));
  }
  for (int g : genera_or(o, {0, 1})) {
    const auto report = infinite_limits_check(g, max_t);
    for (const auto& row : report.rows) {
      std::string stable = row.by_rank.front().get_str();
      for (const auto& c : row.by_rank)
        if (c != row.by_rank.front()) stable = "unstable";
      cases.push_back({{{"check", "infinite-limit"}, {"genus", g}, {"power", row.power}},
                       "stable " + row.product.get_str() + ", tensor model " + row.product.get_str(),
                       "stable " + stable + ", tensor model " + row.tensor_model.get_str(), row.ok()});
    }
  }
}

// -- ranks --------------------------------------------------------------------

void suite_ranks(const VerifyOptions& o, std::vector<CaseResult>& cases) {
  const int max_degree = o.max_degree.value_or(8);
  for (int g : genera_or(o, {0, 1})) {
    for (int n : ns_or(o, {1, 2, 3})) {
      for (const auto& row : pullback_rank_check(make_context(g, n), kUnboundedRank, max_degree))
        cases.push_back(value_case({{"check", "rank-equality"}, {"genus", g}, {"n", n}, {"degree", row.degree}},
                                   std::to_string(row.invariant), std::to_string(row.generated)));
    }
  }
  std::vector<int> ranks{1, 2, 3};
  if (o.rank) ranks = {*o.rank};
  const int dim_degree = o.max_degree.value_or(6);
  for (int g : genera_or(o, {0, 1}))
    for (int n : ns_or(o, {1, 2, 3}))
      for (int r : ranks)
        for (const auto& row : decomposition_dimension_check(g, n, r, dim_degree))
          cases.push_back(value_case(
              {{"check", "decomposition-dimension"}, {"genus", g}, {"n", n}, {"rank", r}, {"degree", row.degree}},
              row.expected.get_str(), std::to_string(row.rank)));
}

// -- diagonal -----------------------------------------------------------------

void suite_diagonal(const VerifyOptions& o, std::vector<CaseResult>& cases) {
  const int ground = 4;
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << ground); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < ground; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    subsets.push_back(std::move(s));
  }
  std::vector<SubsetTuple> tuples;
  std::vector<std::vector<int>> current;
  std::function<void()> rec = [&]() {
    if (!current.empty()) {
      SubsetTuple t = make_subset_tuple(current);
      if (is_connected(t)) tuples.push_back(t);
    }
    if (current.size() == 3) return;
    for (const auto& s : subsets) {
      current.push_back(s);
      rec();
      current.pop_back();
    }
  };
  rec();
  auto describe = [](const SubsetTuple& t) {
    std::string out;
    for (const auto& s : t.sets) {
      out += out.empty() ? "{" : ",{";
      for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
      out += "}";
    }
    return out;
  };
  for (int g : genera_or(o, {0, 1, 2})) {
    auto ctx = make_context(g, ground);
    for (const auto& t : tuples) {
      RingElement direct = RingElement::one(ctx);
      for (const auto& s : t.sets) direct = mul(direct, small_diagonal(ctx, s));
      const int b1 = betti_b1(t);
      const auto support = t.support();
      RingElement classified(ctx);
      if (b1 == 0) classified = small_diagonal(ctx, support);
      if (b1 == 1) classified = Rational(2 - 2 * g) * point_on(ctx, support);
      cases.push_back(residual_case({{"check", "diagonal-product"}, {"genus", g}, {"tuple", describe(t)}, {"b1", b1}},
                                    direct - classified));
    }
  }
  const std::vector<std::pair<std::vector<std::vector<int>>, int>> examples{
      {{{1, 2}, {2, 3}}, 0}, {{{1, 2}, {2, 3}, {1, 3}}, 1}, {{{1, 2}, {2, 3}, {1, 2, 3}}, 2}};
  for (const auto& [sets, b1] : examples) {
    SubsetTuple t = make_subset_tuple(sets);
    cases.push_back(
        value_case({{"check", "b1-example"}, {"tuple", describe(t)}}, std::to_string(b1), std::to_string(betti_b1(t))));
  }
}

// -- generators ---------------------------------------------------------------

void suite_generators(const VerifyOptions& o, std::vector<CaseResult>& cases) {
  std::vector<std::tuple<int, int, int>> grid;  // n, genus, max degree
  for (int g : genera_or(o, {0, 1})) grid.emplace_back(2, g, o.max_degree.value_or(8));
  for (int g : genera_or(o, {0})) grid.emplace_back(3, g, o.max_degree.value_or(6));
  for (auto [n, g, d] : grid) {
    if (o.n && *o.n != n) continue;
    for (const auto& row : generator_span_check(make_context(g, n), d))
      cases.push_back(value_case({{"check", "generator-span"}, {"genus", g}, {"n", n}, {"degree", row.degree}},
                                 std::to_string(row.invariant), std::to_string(row.generated)));
  }
}

// -- structure ----------------------------------------------------------------

void suite_structure(const VerifyOptions& o, std::vector<CaseResult>& cases) {
  const int max_co = o.max_co.value_or(4);
  for (int g : genera_or(o, {0, 1, 2})) {
    for (int n : ns_or(o, {2, 3})) {
      auto ctx = make_context(g, n);
      XiEngine engine(ctx);
      const auto grid = all_vectors(n, max_co);
      for (const auto& v : grid) {
        const RingElement xi = engine.xi(v);
        json in{{"genus", g}, {"n", n}, {"v", to_string(v)}};
        auto degree = cohomological_degree(xi);
        cases.push_back(value_case(with(in, {{"check", "homogeneity"}}), std::to_string(2 * co(v)),
                                   degree ? std::to_string(*degree) : "inhomogeneous"));
        std::vector<RingElement::Term> top;
        for (const auto& term : xi.terms())
          if (term.first.omega_degree() == co(v)) top.push_back(term);
        Monomial leading;
        leading.letters.assign(n, Letter::unit());
        leading.omega.assign(v.begin(), v.end());
        cases.push_back(residual_case(with(in, {{"check", "leading-term"}}),
                                      RingElement::from_valid_terms(ctx, std::move(top)) -
                                          RingElement::monomial(ctx, leading)));
      }
      for (const auto& v : grid) {
        for (const auto& w : grid) {
          if (co(v) + co(w) > std::max(5, max_co)) continue;
          WeightVector sum(n);
          for (int i = 0; i < n; ++i) sum[i] = v[i] + w[i];
          auto coeffs = engine.to_xi_basis(mul(engine.xi(v), engine.xi(w)));
          bool bounded = true;
          for (const auto& [u, c] : coeffs)
            if (co(u) > co(sum)) bounded = false;
          auto it = coeffs.find(sum);
          const bool leading = it != coeffs.end() && it->second == RingElement::one(ctx);
          cases.push_back(flag_case(
              {{"check", "filtration-product"}, {"genus", g}, {"n", n}, {"v", to_string(v)}, {"w", to_string(w)}},
              bounded && leading));
        }
      }
      for (const auto& v : grid) {
        if (v.back() < 1) continue;
        WeightVector u(v.begin(), v.end() - 1);
        for (int d = 0; d <= 2 * n; ++d) {
          for (const auto& m : letter_basis(*ctx, d)) {
            RingElement a = RingElement::monomial(ctx, m);
            cases.push_back(residual_case({{"check", "module-recursion"},
                                           {"genus", g},
                                           {"u", to_string(u)},
                                           {"l", v.back()},
                                           {"a", format(a)}},
                                          engine.check_module_recursion(u, v.back(), a)));
          }
        }
      }
    }
  }
}

const std::map<std::string, void (*)(const VerifyOptions&, std::vector<CaseResult>&)>& registry() {
  static const std::map<std::string, void (*)(const VerifyOptions&, std::vector<CaseResult>&)> table{
      {"recursion", suite_recursion}, {"pullback", suite_pullback},     {"localization", suite_localization},
      {"series", suite_series},       {"ranks", suite_ranks},           {"diagonal", suite_diagonal},
      {"generators", suite_generators}, {"structure", suite_structure}};
  return table;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  SuiteReport report{name, {}};
  if (name == "all") {
    for (const auto& suite : suite_names()) {
      std::vector<CaseResult> cases;
      registry().at(suite)(options, cases);
      for (auto& c : cases) {
        c.inputs["suite"] = suite;
        report.cases.push_back(std::move(c));
      }
    }
    return report;
  }
  auto it = registry().find(name);
  if (it == registry().end()) throw AlgebraError("unknown suite '" + name + "'");
  it->second(options, report.cases);
  return report;
}

}  // namespace quotcoh
