#include "quotcoh/curve_algebra.hpp"

#include <algorithm>
#include <numeric>

#include <boost/container_hash/hash.hpp>

namespace quotcoh {

long RingContext::degree_of(int alpha) const {
  if (alpha < 0 || alpha >= static_cast<int>(degrees.size())) return 0;
  return degrees[alpha];
}

bool RingContext::trivial_degrees() const {
  return std::all_of(degrees.begin(), degrees.end(), [](long d) { return d == 0; });
}

ContextPtr make_context(int genus, int factors, int rank, std::vector<long> degrees) {
  if (genus < 0) throw AlgebraError("genus must be non-negative");
  if (genus > 200) throw AlgebraError("genus too large");
  if (factors < 0) throw AlgebraError("number of factors must be non-negative");
  if (rank < 0 && rank != kUnboundedRank) throw AlgebraError("rank must be >= 0 or unbounded");
  if (rank == 0 && !degrees.empty()) throw AlgebraError("degrees given for a non-equivariant context");
  if (rank > 0 && !degrees.empty() && static_cast<int>(degrees.size()) != rank)
    throw AlgebraError("expected " + std::to_string(rank) + " line-bundle degrees, got " +
                       std::to_string(degrees.size()));
  auto ctx = std::make_shared<RingContext>();
  ctx->genus = genus;
  ctx->factors = factors;
  ctx->rank = rank;
  ctx->degrees = std::move(degrees);
  return ctx;
}

std::vector<Letter> curve_basis(int genus) {
  std::vector<Letter> basis{Letter::unit()};
  for (int k = 1; k <= genus; ++k) basis.push_back(Letter::alpha(k));
  for (int k = 1; k <= genus; ++k) basis.push_back(Letter::beta(k));
  basis.push_back(Letter::point());
  return basis;
}

// ---------------------------------------------------------------------------
// Monomials

int Monomial::letter_degree() const {
  int d = 0;
  for (auto l : letters) d += l.degree();
  return d;
}

int Monomial::omega_degree() const { return std::accumulate(omega.begin(), omega.end(), 0); }

int Monomial::t_degree() const { return std::accumulate(t.begin(), t.end(), 0); }

void Monomial::trim_t() {
  while (!t.empty() && t.back() == 0) t.pop_back();
}

namespace {

template <typename V>
int compare_padded_desc(const V& a, const V& b) {
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    const auto x = i < a.size() ? a[i] : 0;
    const auto y = i < b.size() ? b[i] : 0;
    if (x != y) return x > y ? -1 : 1;
  }
  return 0;
}

}  // namespace

int canonical_compare(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? -1 : 1;
  const int ta = a.t_degree(), tb = b.t_degree();
  if (ta != tb) return ta > tb ? -1 : 1;
  if (int c = compare_padded_desc(a.t, b.t)) return c;
  const int oa = a.omega_degree(), ob = b.omega_degree();
  if (oa != ob) return oa > ob ? -1 : 1;
  if (int c = compare_padded_desc(a.omega, b.omega)) return c;
  const std::size_t len = std::min(a.letters.size(), b.letters.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (a.letters[i] != b.letters[i]) return a.letters[i] > b.letters[i] ? -1 : 1;
  }
  if (a.letters.size() != b.letters.size()) return a.letters.size() > b.letters.size() ? -1 : 1;
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t seed = 0;
  for (auto l : m.letters) boost::hash_combine(seed, (static_cast<int>(l.kind) << 8) | l.index);
  for (auto e : m.omega) boost::hash_combine(seed, e);
  boost::hash_combine(seed, 0x9e37u);
  for (auto e : m.t) boost::hash_combine(seed, e);
  return seed;
}

namespace {

// Product of two curve letters; returns 0 when it vanishes, otherwise the sign.
int multiply_letters(Letter x, Letter y, Letter& out) {
  using K = Letter::Kind;
  if (x.kind == K::Unit) {
    out = y;
    return 1;
  }
  if (y.kind == K::Unit) {
    out = x;
    return 1;
  }
  if (x.index != y.index) return 0;
  if (x.kind == K::Alpha && y.kind == K::Beta) {
    out = Letter::point();
    return 1;
  }
  if (x.kind == K::Beta && y.kind == K::Alpha) {
    out = Letter::point();
    return -1;
  }
  return 0;
}

void validate_monomial(const RingContext& ctx, const Monomial& m) {
  if (static_cast<int>(m.letters.size()) != ctx.factors || static_cast<int>(m.omega.size()) != ctx.factors)
    throw AlgebraError("monomial has " + std::to_string(m.letters.size()) + " factors, context has " +
                       std::to_string(ctx.factors));
  for (auto l : m.letters) {
    if ((l.kind == Letter::Kind::Alpha || l.kind == Letter::Kind::Beta) &&
        (l.index < 1 || l.index > ctx.genus))
      throw AlgebraError("curve class index " + std::to_string(l.index) + " out of range for genus " +
                         std::to_string(ctx.genus));
  }
  if (!ctx.unbounded() && static_cast<int>(m.t.size()) > ctx.rank) {
    if (ctx.rank == 0) throw AlgebraError("t-variables used in a non-equivariant context");
    throw AlgebraError("t-variable index out of range for rank " + std::to_string(ctx.rank));
  }
}

Monomial unit_monomial(const RingContext& ctx) {
  Monomial m;
  m.letters.assign(ctx.factors, Letter::unit());
  m.omega.assign(ctx.factors, 0);
  return m;
}

void check_factor(const RingContext& ctx, int i) {
  if (i < 1 || i > ctx.factors)
    throw AlgebraError("factor index " + std::to_string(i) + " out of range [1," + std::to_string(ctx.factors) +
                       "]");
}

// Sorts and merges like terms, dropping zeros.
void normalize_terms(std::vector<RingElement::Term>& terms) {
  for (auto& term : terms) term.second.canonicalize();
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return canonical_compare(a.first, b.first) < 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = terms[i].second;
    while (j < terms.size() && terms[j].first == terms[i].first) c += terms[j++].second;
    if (c != 0) {
      if (out != i) terms[out].first = std::move(terms[i].first);
      terms[out].second = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

bool multiply_monomials(const Monomial& x, const Monomial& y, Monomial& out, int& sign_out) {
  const std::size_t n = x.letters.size();
  out.letters.resize(n);
  int sign = 1;
  int odd_x_after = 0;
  int parity = 0;
  for (std::size_t k = n; k-- > 0;) {
    if (y.letters[k].odd()) parity += odd_x_after;
    if (x.letters[k].odd()) ++odd_x_after;
    int s = multiply_letters(x.letters[k], y.letters[k], out.letters[k]);
    if (s == 0) return false;
    sign *= s;
  }
  if (parity % 2) sign = -sign;
  out.omega.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.omega[k] = x.omega[k] + y.omega[k];
  out.t.assign(std::max(x.t.size(), y.t.size()), 0);
  for (std::size_t k = 0; k < x.t.size(); ++k) out.t[k] += x.t[k];
  for (std::size_t k = 0; k < y.t.size(); ++k) out.t[k] += y.t[k];
  sign_out = sign;
  return true;
}

// ---------------------------------------------------------------------------
// RingElement

RingElement RingElement::constant(ContextPtr ctx, const Rational& c) {
  RingElement e(ctx);
  Rational k = c;
  k.canonicalize();
  if (k != 0) e.terms_.emplace_back(unit_monomial(*ctx), k);
  return e;
}

RingElement RingElement::omega(ContextPtr ctx, int i) {
  check_factor(*ctx, i);
  Monomial m = unit_monomial(*ctx);
  m.omega[i - 1] = 1;
  return monomial(std::move(ctx), std::move(m));
}

RingElement RingElement::t_param(ContextPtr ctx, int alpha) {
  if (!ctx->equivariant()) throw AlgebraError("t-variables need an equivariant context");
  if (alpha < 0 || (!ctx->unbounded() && alpha >= ctx->rank))
    throw AlgebraError("t index " + std::to_string(alpha) + " out of range");
  Monomial m = unit_monomial(*ctx);
  m.t.assign(alpha + 1, 0);
  m.t[alpha] = 1;
  return monomial(std::move(ctx), std::move(m));
}

RingElement RingElement::letter(ContextPtr ctx, int i, Letter l) {
  check_factor(*ctx, i);
  Monomial m = unit_monomial(*ctx);
  m.letters[i - 1] = l;
  return monomial(std::move(ctx), std::move(m));
}

RingElement RingElement::monomial(ContextPtr ctx, Monomial m, const Rational& c) {
  m.trim_t();
  validate_monomial(*ctx, m);
  RingElement e(std::move(ctx));
  Rational k = c;
  k.canonicalize();
  if (k != 0) e.terms_.emplace_back(std::move(m), k);
  return e;
}

RingElement RingElement::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  for (auto& [m, c] : terms) {
    m.trim_t();
    validate_monomial(*ctx, m);
  }
  return from_valid_terms(std::move(ctx), std::move(terms));
}

RingElement RingElement::from_valid_terms(ContextPtr ctx, std::vector<Term> terms) {
  normalize_terms(terms);
  RingElement e(std::move(ctx));
  e.terms_ = std::move(terms);
  return e;
}

Rational RingElement::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return canonical_compare(t.first, key) < 0; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

void RingElement::require_same(const RingElement& o) const {
  if (ctx_ != o.ctx_ && !(*ctx_ == *o.ctx_)) throw AlgebraError("ring context mismatch");
}

void RingElement::merge(const RingElement& o, int sign) {
  require_same(o);
  if (o.terms_.empty()) return;
  if (&o == this) {
    const RingElement copy = o;
    merge(copy, sign);
    return;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    int c = a == terms_.end() ? 1 : b == o.terms_.end() ? -1 : canonical_compare(a->first, b->first);
    if (c < 0) {
      out.push_back(std::move(*a++));
    } else if (c > 0) {
      out.emplace_back(b->first, sign > 0 ? b->second : Rational(-b->second));
      ++b;
    } else {
      Rational s = a->second;
      if (sign > 0) {
        s += b->second;
      } else {
        s -= b->second;
      }
      if (s != 0) out.emplace_back(std::move(a->first), std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

RingElement& RingElement::operator+=(const RingElement& o) {
  merge(o, 1);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  merge(o, -1);
  return *this;
}

RingElement& RingElement::operator*=(const Rational& c) {
  Rational k = c;
  k.canonicalize();
  if (k == 0) {
    terms_.clear();
  } else {
    for (auto& term : terms_) term.second *= k;
  }
  return *this;
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto& term : r.terms_) term.second = -term.second;
  return r;
}

RingElement operator*(const RingElement& a, const RingElement& b) { return mul(a, b); }

bool operator==(const RingElement& a, const RingElement& b) {
  a.require_same(b);
  return a.terms_ == b.terms_;
}

RingElement mul(const RingElement& x, const RingElement& y) {
  if (x.context() != y.context() && !(x.ctx() == y.ctx())) throw AlgebraError("ring context mismatch");
  std::vector<RingElement::Term> terms;
  terms.reserve(x.size() * y.size());
  Monomial prod;
  int sign = 1;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      if (!multiply_monomials(mx, my, prod, sign)) continue;
      Rational c = cx * cy;
      if (sign < 0) c = -c;
      terms.emplace_back(prod, std::move(c));
    }
  }
  return RingElement::from_valid_terms(x.context(), std::move(terms));
}

RingElement power(const RingElement& x, int k) {
  if (k < 0) throw AlgebraError("negative power");
  RingElement result = RingElement::one(x.context());
  RingElement base = x;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Symmetric group actions

namespace {

void check_permutation(const Permutation& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) throw AlgebraError("permutation size does not match factor count");
  std::vector<char> seen(n, 0);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[v]) throw AlgebraError("not a permutation");
    seen[v] = 1;
  }
}

RingElement act(const Permutation& sigma, const RingElement& x, bool move_omega) {
  const int n = x.ctx().factors;
  check_permutation(sigma, n);
  std::vector<RingElement::Term> terms;
  terms.reserve(x.size());
  for (const auto& [m, c] : x.terms()) {
    Monomial out = m;
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      out.letters[sigma[i]] = m.letters[i];
      if (move_omega) out.omega[sigma[i]] = m.omega[i];
      if (!m.letters[i].odd()) continue;
      for (int j = i + 1; j < n; ++j)
        if (m.letters[j].odd() && sigma[i] > sigma[j]) ++inversions;
    }
    terms.emplace_back(std::move(out), inversions % 2 ? Rational(-c) : c);
  }
  return RingElement::from_valid_terms(x.context(), std::move(terms));
}

}  // namespace

RingElement permute_factors(const Permutation& sigma, const RingElement& x) { return act(sigma, x, false); }

RingElement rho_act(const Permutation& sigma, const RingElement& x) { return act(sigma, x, true); }

// ---------------------------------------------------------------------------
// Diagonal and point classes

RingElement diagonal(const ContextPtr& ctx, int i, int j) {
  if (i > j) std::swap(i, j);
  check_factor(*ctx, i);
  check_factor(*ctx, j);
  if (i == j) throw AlgebraError("diagonal needs two distinct factors");
  std::vector<RingElement::Term> terms;
  auto place = [&](Letter li, Letter lj, int sign) {
    Monomial m = unit_monomial(*ctx);
    m.letters[i - 1] = li;
    m.letters[j - 1] = lj;
    terms.emplace_back(std::move(m), Rational(sign));
  };
  place(Letter::point(), Letter::unit(), 1);
  place(Letter::unit(), Letter::point(), 1);
  for (int k = 1; k <= ctx->genus; ++k) {
    place(Letter::alpha(k), Letter::beta(k), -1);
    place(Letter::beta(k), Letter::alpha(k), 1);
  }
  return RingElement::from_terms(ctx, std::move(terms));
}

RingElement diagonal_product(const ContextPtr& ctx, const std::vector<std::pair<int, int>>& edges) {
  RingElement result = RingElement::one(ctx);
  for (auto [i, j] : edges) result = mul(result, diagonal(ctx, i, j));
  return result;
}

RingElement small_diagonal(const ContextPtr& ctx, const std::vector<int>& subset) {
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int i : sorted) check_factor(*ctx, i);
  std::vector<std::pair<int, int>> chain;
  for (std::size_t k = 1; k < sorted.size(); ++k) chain.emplace_back(sorted[k - 1], sorted[k]);
  return diagonal_product(ctx, chain);
}

RingElement point_on(const ContextPtr& ctx, const std::vector<int>& subset) {
  Monomial m = unit_monomial(*ctx);
  for (int i : subset) {
    check_factor(*ctx, i);
    if (m.letters[i - 1] == Letter::point()) throw AlgebraError("repeated index in point class");
    m.letters[i - 1] = Letter::point();
  }
  return RingElement::monomial(ctx, std::move(m));
}

RingElement embed(const RingElement& x, const ContextPtr& target) {
  const RingContext& src = x.ctx();
  if (src.genus != target->genus || src.rank != target->rank || src.degrees != target->degrees)
    throw AlgebraError("embed: contexts differ in genus, rank or degrees");
  if (target->factors < src.factors) throw AlgebraError("embed: target has fewer factors");
  std::vector<RingElement::Term> terms;
  terms.reserve(x.size());
  for (const auto& [m, c] : x.terms()) {
    Monomial out = m;
    out.letters.resize(target->factors, Letter::unit());
    out.omega.resize(target->factors, 0);
    terms.emplace_back(std::move(out), c);
  }
  return RingElement::from_valid_terms(target, std::move(terms));
}

std::optional<int> cohomological_degree(const RingElement& x) {
  if (x.is_zero()) return std::nullopt;
  const int d = x.terms().front().first.degree();
  for (const auto& [m, c] : x.terms())
    if (m.degree() != d) return std::nullopt;
  return d;
}

bool is_homogeneous(const RingElement& x) { return x.is_zero() || cohomological_degree(x).has_value(); }

RingElement homogeneous_part(const RingElement& x, int degree) {
  std::vector<RingElement::Term> terms;
  for (const auto& term : x.terms())
    if (term.first.degree() == degree) terms.push_back(term);
  return RingElement::from_valid_terms(x.context(), std::move(terms));
}

RingElement project_invariant(const std::vector<Permutation>& group, const RingElement& x) {
  if (group.empty()) throw AlgebraError("empty group");
  RingElement sum(x.context());
  for (const auto& sigma : group) sum += permute_factors(sigma, x);
  sum *= Rational(1, static_cast<long>(group.size()));
  return sum;
}

bool is_omega_free(const RingElement& x) {
  return std::all_of(x.terms().begin(), x.terms().end(), [](const auto& t) { return t.first.omega_degree() == 0; });
}

bool is_t_free(const RingElement& x) {
  return std::all_of(x.terms().begin(), x.terms().end(), [](const auto& t) { return t.first.t.empty(); });
}

RingElement set_t_zero(const RingElement& x) {
  std::vector<RingElement::Term> terms;
  for (const auto& term : x.terms())
    if (term.first.t.empty()) terms.push_back(term);
  return RingElement::from_valid_terms(x.context(), std::move(terms));
}

std::optional<int> omega_degree(const RingElement& x) {
  if (x.is_zero()) return std::nullopt;
  int d = 0;
  for (const auto& [m, c] : x.terms()) d = std::max(d, m.omega_degree());
  return d;
}

}  // namespace quotcoh
