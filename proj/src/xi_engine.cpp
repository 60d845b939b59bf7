#include "quotcoh/xi_engine.hpp"

#include <functional>

namespace quotcoh {

XiEngine::XiEngine(ContextPtr ctx) : ctx_(std::move(ctx)) {}

std::size_t XiEngine::cache_size() const {
  std::lock_guard lock(mutex_);
  return plain_.size() + equivariant_.size();
}

void XiEngine::check_entries(const WeightVector& v, bool equivariant) const {
  if (static_cast<int>(v.size()) != ctx_->factors)
    throw AlgebraError("weight vector has " + std::to_string(v.size()) + " entries, context has " +
                       std::to_string(ctx_->factors) + " factors");
  if (equivariant && !ctx_->equivariant()) throw AlgebraError("equivariant class needs rank >= 1");
  if (ctx_->rank > 0) {
    for (int x : v)
      if (x < 0 || x >= ctx_->rank)
        throw AlgebraError("entry " + std::to_string(x) + " out of range for rank " + std::to_string(ctx_->rank));
  }
  for (int x : v)
    if (x < 0) throw AlgebraError("negative weight entry");
}

RingElement XiEngine::xi(const WeightVector& v) {
  check_entries(v, false);
  return compute(v, false);
}

RingElement XiEngine::xi_equivariant(const WeightVector& v) {
  check_entries(v, true);
  return compute(v, true);
}

RingElement XiEngine::compute(const WeightVector& v, bool equivariant) {
  Cache& cache = equivariant ? equivariant_ : plain_;
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache.find(v); it != cache.end()) return it->second;
  }
  int j = static_cast<int>(v.size()) - 1;
  while (j >= 0 && v[j] == 0) --j;
  RingElement result = RingElement::one(ctx_);
  if (j >= 0) {
    WeightVector w = v;
    --w[j];
    const int level = w[j];
    RingElement step = RingElement::omega(ctx_, j + 1);
    if (long d = ctx_->degree_of(level); d != 0) step -= Rational(d) * point_on(ctx_, {j + 1});
    if (equivariant) step -= RingElement::t_param(ctx_, level);
    result = mul(step, compute(w, equivariant));
    for (int k = 0; k < j; ++k) {
      if (w[k] > level) continue;
      WeightVector swapped = w;
      std::swap(swapped[k], swapped[j]);
      result += mul(diagonal(ctx_, k + 1, j + 1), compute(swapped, equivariant));
    }
  }
  std::lock_guard lock(mutex_);
  return cache.emplace(v, std::move(result)).first->second;
}

RingElement XiEngine::sym_xi(const WeightVector& v, const RingElement& a) {
  if (!is_omega_free(a) || !is_t_free(a)) throw AlgebraError("sym_xi: a must be omega-free and t-free");
  RingElement sum(ctx_);
  for (const auto& sigma : enumerate_permutations(ctx_->factors))
    sum += mul(xi(act(sigma, v)), permute_factors(sigma, a));
  return sum;
}

std::map<WeightVector, RingElement> XiEngine::to_xi_basis(const RingElement& x) {
  if (!is_t_free(x)) throw AlgebraError("to_xi_basis needs a non-equivariant element");
  std::map<WeightVector, RingElement> coeffs;
  RingElement rest = x;
  while (!rest.is_zero()) {
    const int top = *omega_degree(rest);
    std::map<WeightVector, std::vector<RingElement::Term>> layer;
    for (const auto& [m, c] : rest.terms()) {
      if (m.omega_degree() != top) continue;
      WeightVector e(m.omega.begin(), m.omega.end());
      Monomial letters_only = m;
      std::fill(letters_only.omega.begin(), letters_only.omega.end(), 0);
      layer[e].emplace_back(std::move(letters_only), c);
    }
    for (auto& [e, terms] : layer) {
      RingElement a = RingElement::from_valid_terms(ctx_, std::move(terms));
      rest -= mul(a, xi(e));
      auto [it, fresh] = coeffs.emplace(e, a);
      if (!fresh) it->second += a;
    }
    if (auto d = omega_degree(rest); d && *d >= top)
      throw AlgebraError("to_xi_basis: top omega layer did not cancel");
  }
  for (auto it = coeffs.begin(); it != coeffs.end();) it = it->second.is_zero() ? coeffs.erase(it) : std::next(it);
  return coeffs;
}

RingElement XiEngine::check_increment_lower_index(const WeightVector& v, int m, bool equivariant) {
  const int n = static_cast<int>(v.size());
  if (n < 2 || v.back() < 1) throw AlgebraError("check_increment_lower_index needs v_n >= 1");
  if (m < 0 || m >= n - 1) throw AlgebraError("check_increment_lower_index needs m < n");
  auto class_of = [&](const WeightVector& x) { return equivariant ? xi_equivariant(x) : xi(x); };
  RingElement factor = RingElement::omega(ctx_, m + 1);
  for (int k = 0; k < m; ++k)
    if (v[k] == v[m]) factor -= diagonal(ctx_, k + 1, m + 1);
  if (long d = ctx_->degree_of(v[m]); d != 0) factor -= Rational(d) * point_on(ctx_, {m + 1});
  if (equivariant) factor -= RingElement::t_param(ctx_, v[m]);
  RingElement lhs = mul(factor, class_of(v));
  WeightVector up = v;
  ++up[m];
  RingElement rhs = class_of(up);
  if (v[m] < v[n - 1]) {
    WeightVector swapped = v;
    std::swap(swapped[m], swapped[n - 1]);
    rhs += mul(diagonal(ctx_, m + 1, n), class_of(swapped));
  }
  return lhs - rhs;
}

RingElement XiEngine::check_increment_general(const WeightVector& v, int m, bool equivariant) {
  const int n = static_cast<int>(v.size());
  if (m < 0 || m >= n) throw AlgebraError("check_increment_general needs 0 <= m < n");
  auto class_of = [&](const WeightVector& x) { return equivariant ? xi_equivariant(x) : xi(x); };
  RingElement factor = RingElement::omega(ctx_, m + 1);
  for (int k = 0; k < m; ++k)
    if (v[k] == v[m]) factor += diagonal(ctx_, k + 1, m + 1);
  if (long d = ctx_->degree_of(v[m]); d != 0) factor -= Rational(d) * point_on(ctx_, {m + 1});
  if (equivariant) factor -= RingElement::t_param(ctx_, v[m]);
  RingElement residual = mul(factor, class_of(v));
  WeightVector up = v;
  ++up[m];
  residual -= class_of(up);
  for (int k = 0; k < n; ++k) {
    const bool above = k > m && v[k] > v[m];
    const bool below = k < m && v[k] < v[m];
    if (!above && !below) continue;
    WeightVector swapped = v;
    std::swap(swapped[k], swapped[m]);
    RingElement term = mul(diagonal(ctx_, std::min(k, m) + 1, std::max(k, m) + 1), class_of(swapped));
    if (above) {
      residual -= term;
    } else {
      residual += term;
    }
  }
  return residual;
}

RingElement XiEngine::check_module_recursion(const WeightVector& u, int l, const RingElement& a) {
  const int n = ctx_->factors;
  if (static_cast<int>(u.size()) != n - 1) throw AlgebraError("u must cover the first n-1 positions");
  if (l < 1) throw AlgebraError("module recursion needs l >= 1");
  if (!is_omega_free(a) || !is_t_free(a)) throw AlgebraError("a must be omega-free and t-free");
  WeightVector top = u;
  top.push_back(l);
  WeightVector lower = u;
  lower.push_back(l - 1);
  RingElement lhs = mul(xi(top), a);
  RingElement rhs = mul(mul(RingElement::omega(ctx_, n), xi(lower)), a);
  for (int k = 0; k < n - 1; ++k) {
    if (u[k] > l - 1) continue;
    Permutation tau = transposition(n, k, n - 1);
    rhs += mul(mul(diagonal(ctx_, k + 1, n), xi(act(tau, lower))), permute_factors(tau, a));
  }
  return lhs - rhs;
}

RingSeries XiEngine::pn_series(int position, int max_power) {
  if (position < 0 || position >= ctx_->factors) throw AlgebraError("position out of range");
  RingSeries out;
  for (int l = 0; l <= max_power; ++l) {
    WeightVector v(ctx_->factors, 0);
    v[position] = l;
    out.push_back(xi(v));
  }
  return out;
}

RingElement complete_homogeneous(const ContextPtr& ctx, const std::vector<int>& factors, int m) {
  RingElement sum(ctx);
  if (m < 0) return sum;
  if (factors.empty()) return m == 0 ? RingElement::one(ctx) : sum;
  std::vector<RingElement::Term> terms;
  Monomial base;
  base.letters.assign(ctx->factors, Letter::unit());
  base.omega.assign(ctx->factors, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (idx + 1 == factors.size()) {
      base.omega[factors[idx] - 1] = static_cast<Exponent>(left);
      terms.emplace_back(base, Rational(1));
      base.omega[factors[idx] - 1] = 0;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      base.omega[factors[idx] - 1] = static_cast<Exponent>(e);
      rec(idx + 1, left - e);
    }
    base.omega[factors[idx] - 1] = 0;
  };
  rec(0, m);
  return RingElement::from_terms(ctx, std::move(terms));
}

RingSeries XiEngine::pn_closed_form(int position, int max_power) {
  if (position < 0 || position >= ctx_->factors) throw AlgebraError("position out of range");
  RingSeries out(max_power + 1, RingElement(ctx_));
  const int lower = position;  // J ranges over subsets of the positions before
  for (unsigned mask = 0; mask < (1u << lower); ++mask) {
    std::vector<int> set;
    for (int i = 0; i < lower; ++i)
      if (mask & (1u << i)) set.push_back(i + 1);
    const int size_j = static_cast<int>(set.size());
    if (size_j > max_power) continue;
    set.push_back(position + 1);
    RingElement delta = small_diagonal(ctx_, set);
    for (int l = size_j; l <= max_power; ++l) out[l] += mul(delta, complete_homogeneous(ctx_, set, l - size_j));
  }
  return out;
}

}  // namespace quotcoh
