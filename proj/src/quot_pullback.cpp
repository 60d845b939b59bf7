#include "quotcoh/quot_pullback.hpp"

#include <functional>
#include <set>

#include "quotcoh/linear_algebra.hpp"

namespace quotcoh {

QuotPullback::QuotPullback(std::shared_ptr<XiEngine> engine) : engine_(std::move(engine)) {}

bool QuotPullback::stabilizer_invariant(const WeightVector& u, const RingElement& a) const {
  for (const auto& sigma : stabilizer(u))
    if (!(permute_factors(sigma, a) == a)) return false;
  return true;
}

RingElement QuotPullback::prepare(const WeightVector& u, const RingElement& a, bool strict,
                                  const std::vector<Permutation>& group) const {
  if (static_cast<int>(u.size()) != context()->factors) throw AlgebraError("weight length does not match context");
  if (!is_omega_free(a) || !is_t_free(a)) throw AlgebraError("a must be omega-free and t-free");
  for (const auto& sigma : group) {
    if (permute_factors(sigma, a) == a) continue;
    if (strict) throw AlgebraError("a is not invariant under the stabilizer of (" + to_string(u) + ")");
    return project_invariant(group, a);
  }
  return a;
}

RingElement QuotPullback::psi(const WeightVector& u, const RingElement& a, bool strict) {
  if (!is_decreasing(u)) throw AlgebraError("psi needs a decreasing weight vector");
  RingElement inv = prepare(u, a, strict, stabilizer(u));
  RingElement sum = engine_->sym_xi(u, inv);
  sum *= Rational(1, stabilizer_order(u));
  return sum;
}

RingElement QuotPullback::combinatorial_kernel(const WeightVector& u, const Permutation& sigma,
                                               SumConvention convention) {
  auto key = std::make_tuple(u, sigma, static_cast<int>(convention));
  if (auto it = kernels_.find(key); it != kernels_.end()) return it->second;
  const ContextPtr& ctx = context();
  const int n = ctx->factors;
  const Rational euler(2 - 2 * ctx->genus);
  RingElement kernel(ctx);
  for (const auto& L : enumerate_T(u, sigma, convention)) {
    Monomial omega_part;
    omega_part.letters.assign(n, Letter::unit());
    omega_part.omega.assign(n, 0);
    for (int h = 1; h <= n; ++h) omega_part.omega[h - 1] = static_cast<Exponent>(L.rho(h));
    RingElement term = RingElement::monomial(ctx, std::move(omega_part));
    for (const auto& [b1, comps] : classify(L.incidence())) {
      for (const auto& comp : comps) {
        if (b1 == 0) {
          term = mul(term, small_diagonal(ctx, comp.support()));
        } else if (b1 == 1) {
          term = mul(term, euler * point_on(ctx, comp.support()));
        } else {
          throw AlgebraError("T(u, sigma) produced a component with b1 >= 2");
        }
      }
    }
    kernel += term;
  }
  return kernels_.emplace(std::move(key), std::move(kernel)).first->second;
}

RingElement QuotPullback::psi_combinatorial(const WeightVector& u, const RingElement& a, SumConvention convention,
                                            bool strict) {
  if (!context()->trivial_degrees())
    throw AlgebraError("the combinatorial formula is only available for trivial line-bundle degrees");
  if (!is_decreasing(u)) throw AlgebraError("psi needs a decreasing weight vector");
  RingElement inv = prepare(u, a, strict, stabilizer(u));
  RingElement sum(context());
  for (const auto& sigma : enumerate_permutations(context()->factors)) {
    RingElement kernel = combinatorial_kernel(u, sigma, convention);
    if (!kernel.is_zero()) sum += mul(kernel, permute_factors(sigma, inv));
  }
  sum *= Rational(1, stabilizer_order(u));
  return sum;
}

RingElement QuotPullback::psi_partial(const std::vector<int>& composition, const WeightVector& v_star,
                                      const RingElement& a, bool strict) {
  int total = 0;
  for (int l : composition) total += l;
  if (total != static_cast<int>(v_star.size()) || total != context()->factors)
    throw AlgebraError("composition does not match the weight vector");
  long block_stabilizer = 1;
  std::size_t offset = 0;
  for (int l : composition) {
    WeightVector block(v_star.begin() + offset, v_star.begin() + offset + l);
    if (!is_decreasing(block)) throw AlgebraError("each block of v_star must be decreasing");
    block_stabilizer *= stabilizer_order(block);
    offset += l;
  }
  const auto young = young_subgroup(composition);
  std::vector<Permutation> fixing;
  for (const auto& sigma : young)
    if (act(sigma, v_star) == v_star) fixing.push_back(sigma);
  RingElement inv = prepare(v_star, a, strict, fixing);
  RingElement sum(context());
  for (const auto& sigma : young) sum += mul(engine_->xi(act(sigma, v_star)), permute_factors(sigma, inv));
  sum *= Rational(1, block_stabilizer);
  return sum;
}

// ---------------------------------------------------------------------------

bool rho_invariance_check(const RingElement& x) {
  for (const auto& s : adjacent_transpositions(x.ctx().factors))
    if (!(rho_act(s, x) == x)) return false;
  return true;
}

std::vector<Monomial> letter_basis(const RingContext& ctx, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  const auto basis = curve_basis(ctx.genus);
  Monomial m;
  m.letters.assign(ctx.factors, Letter::unit());
  m.omega.assign(ctx.factors, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == ctx.factors) {
      if (left == 0) out.push_back(m);
      return;
    }
    for (Letter l : basis) {
      if (l.degree() > left) continue;
      m.letters[i] = l;
      rec(i + 1, left - l.degree());
    }
    m.letters[i] = Letter::unit();
  };
  rec(0, degree);
  return out;
}

std::vector<Monomial> monomial_basis(const RingContext& ctx, int degree) {
  std::vector<Monomial> out;
  for (int ld = degree % 2; ld <= std::min(degree, 2 * ctx.factors); ld += 2) {
    const int od = (degree - ld) / 2;
    for (const auto& letters : letter_basis(ctx, ld)) {
      Monomial m = letters;
      std::function<void(int, int)> rec = [&](int i, int left) {
        if (i + 1 >= ctx.factors) {
          if (ctx.factors == 0) {
            if (left == 0) out.push_back(m);
            return;
          }
          m.omega[i] = static_cast<Exponent>(left);
          out.push_back(m);
          return;
        }
        for (int e = 0; e <= left; ++e) {
          m.omega[i] = static_cast<Exponent>(e);
          rec(i + 1, left - e);
        }
        m.omega[i] = 0;
      };
      rec(0, od);
    }
  }
  return out;
}

namespace {

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return canonical_compare(a, b) < 0; }
};

// Averages of the group action over orbit representatives of the given monomials.
template <typename Action>
std::vector<RingElement> orbit_averages(const ContextPtr& ctx, const std::vector<Permutation>& group,
                                        const std::vector<Monomial>& monomials, Action action) {
  std::set<Monomial, MonomialLess> seen;
  std::vector<RingElement> out;
  for (const auto& m : monomials) {
    if (seen.count(m)) continue;
    RingElement x = RingElement::monomial(ctx, m);
    RingElement sum(ctx);
    for (const auto& sigma : group) {
      RingElement image = action(sigma, x);
      seen.insert(image.terms().front().first);
      sum += image;
    }
    if (!sum.is_zero()) out.push_back(sum * Rational(1, static_cast<long>(group.size())));
  }
  return out;
}

}  // namespace

std::size_t invariant_dimension(const ContextPtr& ctx, int degree) {
  const auto group = enumerate_permutations(ctx->factors);
  auto averages = orbit_averages(ctx, group, monomial_basis(*ctx, degree),
                                 [](const Permutation& s, const RingElement& x) { return rho_act(s, x); });
  return quotcoh::span_rank(averages);
}

std::vector<RingElement> invariant_letter_classes(const ContextPtr& ctx, const std::vector<Permutation>& group,
                                                  int degree) {
  return orbit_averages(ctx, group, letter_basis(*ctx, degree),
                        [](const Permutation& s, const RingElement& x) { return permute_factors(s, x); });
}

std::size_t span_rank(const std::vector<RingElement>& classes, int degree) {
  EchelonBasis basis;
  for (const auto& x : classes) {
    if (x.is_zero()) continue;
    auto d = cohomological_degree(x);
    if (!d) throw AlgebraError("span_rank needs homogeneous classes");
    if (*d == degree) basis.insert(x);
  }
  return basis.rank();
}

bool GeneratingIdentityResult::ok() const {
  if (!choice_independent) return false;
  for (const auto& c : residual)
    if (!c.is_zero()) return false;
  return true;
}

GeneratingIdentityResult generating_identity_check(XiEngine& engine, Letter a, int max_power) {
  const ContextPtr& ctx = engine.context();
  const int n = ctx->factors;
  GeneratingIdentityResult result;
  result.residual.assign(max_power + 1, RingElement(ctx));
  for (int pos = 0; pos < n; ++pos) {
    RingElement pulled = RingElement::letter(ctx, pos + 1, a);
    auto series = engine.pn_series(pos, max_power);
    for (int l = 0; l <= max_power; ++l) result.residual[l] += mul(series[l], pulled);
  }
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> set;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) set.push_back(i + 1);
    const int h = static_cast<int>(set.size());
    RingElement delta = small_diagonal(ctx, set);
    RingElement delta_a = mul(delta, RingElement::letter(ctx, set.front(), a));
    for (int i : set)
      if (!(mul(delta, RingElement::letter(ctx, i, a)) == delta_a)) result.choice_independent = false;
    for (int l = h - 1; l <= max_power; ++l)
      result.residual[l] -= mul(delta_a, complete_homogeneous(ctx, set, l - h + 1));
  }
  return result;
}

std::vector<DegreeRank> generator_span_check(const ContextPtr& ctx, int max_degree) {
  if (!ctx->trivial_degrees() || ctx->equivariant())
    throw AlgebraError("generator_span_check runs in the non-equivariant model");
  const int n = ctx->factors;
  auto engine = std::make_shared<XiEngine>(ctx);
  QuotPullback pullback(engine);
  const auto sn = enumerate_permutations(n);

  struct Generator {
    RingElement value;
    int degree;
  };
  std::vector<Generator> gens;
  for (int l = 1; l <= n; ++l) {
    WeightVector u(n, 0);
    u[0] = l;
    for (Letter a : curve_basis(ctx->genus))
      gens.push_back({pullback.psi(u, RingElement::letter(ctx, 1, a), true), 2 * l + a.degree()});
  }

  std::vector<std::vector<RingElement>> spans(max_degree + 1);
  std::vector<DegreeRank> report;
  for (int d = 0; d <= max_degree; ++d) {
    EchelonBasis basis;
    auto add = [&](const RingElement& x) {
      if (basis.insert(x)) spans[d].push_back(x);
    };
    for (const auto& b : invariant_letter_classes(ctx, sn, d)) add(b);
    for (const auto& g : gens) {
      if (g.degree > d) continue;
      for (const auto& v : spans[d - g.degree]) add(mul(g.value, v));
    }
    report.push_back({d, basis.rank(), invariant_dimension(ctx, d)});
  }
  return report;
}

std::vector<std::size_t> pullback_ranks(const ContextPtr& ctx, int rank, int max_degree) {
  auto engine = std::make_shared<XiEngine>(ctx);
  QuotPullback pullback(engine);
  const int n = ctx->factors;
  std::vector<std::size_t> ranks;
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<RingElement> classes;
    for (const auto& u : enumerate_B(n, rank, d / 2)) {
      const int rest = d - 2 * co(u);
      for (const auto& a : invariant_letter_classes(ctx, stabilizer(u), rest))
        classes.push_back(pullback.psi(u, a, true));
    }
    ranks.push_back(span_rank(classes, d));
  }
  return ranks;
}

std::vector<DegreeRank> pullback_rank_check(const ContextPtr& ctx, int rank, int max_degree) {
  auto ranks = pullback_ranks(ctx, rank, max_degree);
  std::vector<DegreeRank> report;
  for (int d = 0; d <= max_degree; ++d) report.push_back({d, ranks[d], invariant_dimension(ctx, d)});
  return report;
}

}  // namespace quotcoh
