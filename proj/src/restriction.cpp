#include "quotcoh/restriction.hpp"

namespace quotcoh {

namespace {

void require_range(const RingContext& ctx, const WeightVector& w) {
  if (!ctx.equivariant()) throw AlgebraError("restriction needs an equivariant context");
  if (static_cast<int>(w.size()) != ctx.factors) throw AlgebraError("fixed-point weight has the wrong length");
  for (int x : w) {
    if (x < 0 || (ctx.rank > 0 && x >= ctx.rank))
      throw AlgebraError("entry " + std::to_string(x) + " out of range for rank " + std::to_string(ctx.rank));
  }
}

}  // namespace

RingElement restrict(const RingElement& x, const WeightVector& w) {
  const ContextPtr& ctx = x.context();
  require_range(*ctx, w);
  const int n = ctx->factors;
  std::vector<RingElement> images;
  for (int i = 0; i < n; ++i) {
    RingElement image = RingElement::t_param(ctx, w[i]);
    for (int k = 0; k < i; ++k)
      if (w[k] == w[i]) image -= diagonal(ctx, k + 1, i + 1);
    if (long d = ctx->degree_of(w[i]); d != 0) image += Rational(d) * point_on(ctx, {i + 1});
    images.push_back(std::move(image));
  }
  std::vector<std::vector<RingElement>> powers(n);
  auto power_of = [&](int i, int e) -> const RingElement& {
    auto& list = powers[i];
    if (list.empty()) list.push_back(RingElement::one(ctx));
    while (static_cast<int>(list.size()) <= e) list.push_back(mul(list.back(), images[i]));
    return list[e];
  };
  RingElement out(ctx);
  for (const auto& [m, c] : x.terms()) {
    Monomial base = m;
    std::fill(base.omega.begin(), base.omega.end(), 0);
    RingElement term = RingElement::monomial(ctx, std::move(base), c);
    for (int i = 0; i < n && !term.is_zero(); ++i)
      if (m.omega[i] != 0) term = mul(term, power_of(i, m.omega[i]));
    out += term;
  }
  return out;
}

std::optional<int> t_degree(const RingElement& f) {
  std::optional<int> best;
  for (const auto& [m, c] : f.terms()) best = std::max(best.value_or(0), m.t_degree());
  return best;
}

RingElement top_term(const RingElement& f) {
  auto d = t_degree(f);
  if (!d) return f;
  std::vector<RingElement::Term> terms;
  for (const auto& term : f.terms())
    if (term.first.t_degree() == *d) terms.push_back(term);
  return RingElement::from_valid_terms(f.context(), std::move(terms));
}

RingElement top_term_product(const ContextPtr& ctx, const WeightVector& v, const WeightVector& w) {
  RingElement out = RingElement::one(ctx);
  for (std::size_t j = 0; j < v.size(); ++j)
    for (int i = 0; i < v[j]; ++i)
      out = mul(out, RingElement::t_param(ctx, w[j]) - RingElement::t_param(ctx, i));
  return out;
}

RingElement check_top_term(XiEngine& engine, const WeightVector& v, const WeightVector& w) {
  if (!leq0(v, w)) throw AlgebraError("check_top_term needs v <=_0 w");
  if (!engine.context()->trivial_degrees()) throw AlgebraError("check_top_term needs trivial degrees");
  return top_term(restrict(engine.xi_equivariant(v), w)) - top_term_product(engine.context(), v, w);
}

bool check_vanishing(XiEngine& engine, const WeightVector& v, const WeightVector& w) {
  for (const auto& sigma : enumerate_permutations(static_cast<int>(v.size())))
    if (leq0(act(sigma, v), w)) return true;
  return restrict(engine.xi_equivariant(v), w).is_zero();
}

bool check_degree_bound(XiEngine& engine, const WeightVector& v, const Permutation& sigma) {
  const WeightVector w = act(sigma, v);
  int moved = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != w[i]) ++moved;
  auto d = t_degree(restrict(engine.xi_equivariant(v), w));
  return !d || *d <= co(v) - moved + 1;
}

}  // namespace quotcoh
