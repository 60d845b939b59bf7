#include "quotcoh/poincare.hpp"

#include <algorithm>
#include <functional>

#include "quotcoh/quot_pullback.hpp"
#include "quotcoh/weights.hpp"

namespace quotcoh {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly truncate(Poly p, int max_t) {
  if (max_t >= 0 && static_cast<int>(p.size()) > max_t + 1) p.resize(max_t + 1);
  trim(p);
  return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b, int max_t) {
  if (a.empty() || b.empty()) return {};
  std::size_t size = a.size() + b.size() - 1;
  if (max_t >= 0) size = std::min<std::size_t>(size, max_t + 1);
  Poly out(size);
  for (std::size_t i = 0; i < a.size() && i < size; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < size; ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly poly_pow(const Poly& a, int k, int max_t) {
  Poly out{1};
  for (int i = 0; i < k; ++i) out = poly_mul(out, a, max_t);
  return out;
}

Poly poly_shift(const Poly& a, int k) {
  if (a.empty()) return {};
  Poly out(k, 0);
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

bool is_zero(const Poly& p) {
  return std::all_of(p.begin(), p.end(), [](const mpz_class& c) { return c == 0; });
}

mpz_class coeff(const Poly& p, int k) { return k >= 0 && k < static_cast<int>(p.size()) ? p[k] : mpz_class(0); }

Poly sym_prod_poincare(int genus, int m) {
  if (genus < 0 || m < 0) throw AlgebraError("sym_prod_poincare needs genus, m >= 0");
  // [u^a] (1+ut)^{2g} times [u^b] 1/(1-u) times [u^c] 1/(1-ut^2) with a+b+c = m.
  Poly out(2 * m + 1);
  mpz_class binom = 1;
  for (int a = 0; a <= std::min(m, 2 * genus); ++a) {
    for (int c = 0; a + c <= m; ++c) out[a + 2 * c] += binom;
    binom = binom * (2 * genus - a) / (a + 1);
  }
  trim(out);
  return out;
}

Poly sym_prod_invariant_dims(int genus, int m) {
  if (m == 0) return {1};
  auto ctx = make_context(genus, m);
  const auto group = enumerate_permutations(m);
  Poly out(2 * m + 1);
  for (int d = 0; d <= 2 * m; ++d) out[d] = span_rank(invariant_letter_classes(ctx, group, d), d);
  trim(out);
  return out;
}

Poly quot_poincare(int genus, int r, int l, int max_t) {
  if (l < 0) throw AlgebraError("quot_poincare needs l >= 0");
  if (r == kUnboundedRank && max_t < 0) throw AlgebraError("unbounded rank needs a t-degree cap");
  if (r != kUnboundedRank && r < 1) throw AlgebraError("quot_poincare needs r >= 1");
  const int top = r == kUnboundedRank ? max_t / 2 + 1 : r;
  std::vector<Poly> sym(l + 1);
  for (int m = 0; m <= l; ++m) sym[m] = sym_prod_poincare(genus, m);
  Poly total;
  // alpha runs down so that l_0 absorbs the remainder.
  std::function<void(int, int, int, Poly)> rec = [&](int alpha, int left, int weight, Poly acc) {
    if (alpha == 0) {
      acc = poly_mul(acc, sym[left], max_t);
      total = poly_add(total, truncate(poly_shift(acc, 2 * weight), max_t));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      const int w = weight + alpha * k;
      if (max_t >= 0 && 2 * w > max_t) break;
      rec(alpha - 1, left - k, w, poly_mul(acc, sym[k], max_t));
    }
  };
  rec(top - 1, l, 0, Poly{1});
  return total;
}

namespace {

Series2 zero_series(int max_s, int max_t) { return Series2(max_s + 1, Poly(max_t + 1)); }

// Multiplies by (1 + s t^k) in place.
void times_binomial(Series2& s, int k) {
  const int max_t = static_cast<int>(s[0].size()) - 1;
  for (int i = static_cast<int>(s.size()) - 1; i >= 1; --i)
    for (int t = max_t; t >= k; --t) s[i][t] += s[i - 1][t - k];
}

// Multiplies by 1 / (1 - s t^k) in place.
void times_geometric(Series2& s, int k) {
  const int max_t = static_cast<int>(s[0].size()) - 1;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (int t = k; t <= max_t; ++t) s[i][t] += s[i - 1][t - k];
}

void times_binomial(Poly& p, int k) {
  for (int t = static_cast<int>(p.size()) - 1; t >= k; --t) p[t] += p[t - k];
}

void times_geometric(Poly& p, int k) {
  for (int t = k; t < static_cast<int>(p.size()); ++t) p[t] += p[t - k];
}

}  // namespace

Series2 quot_product_formula(int genus, int r, int max_s, int max_t) {
  if (max_s < 0 || max_t < 0) throw AlgebraError("series caps must be non-negative");
  Series2 s = zero_series(max_s, max_t);
  s[0][0] = 1;
  const int top = r == kUnboundedRank ? max_t / 2 + 1 : std::min(r, max_t / 2 + 1);
  for (int h = 0; h < top; ++h) {
    for (int i = 0; i < 2 * genus; ++i) times_binomial(s, 2 * h + 1);
    times_geometric(s, 2 * h);
    times_geometric(s, 2 * h + 2);
  }
  for (auto& row : s) trim(row);
  return s;
}

Series2 quot_series_check(int genus, int r, int max_s, int max_t) {
  Series2 product = quot_product_formula(genus, r, max_s, max_t);
  Series2 residual;
  for (int l = 0; l <= max_s; ++l) residual.push_back(poly_sub(quot_poincare(genus, r, l, max_t), product[l]));
  return residual;
}

Poly filt_poincare(int genus, int r, int n) {
  if (r < 1 || n < 0) throw AlgebraError("filt_poincare needs r >= 1 and n >= 0");
  const Poly fibre = poly_pow(Poly{1, 2 * genus, 1}, n);
  Poly weights;
  WeightVector v(n, 0);
  while (true) {
    weights = poly_add(weights, poly_shift(Poly{1}, 2 * co(v)));
    int i = 0;
    while (i < n && v[i] == r - 1) v[i++] = 0;
    if (i == n) break;
    ++v[i];
  }
  return poly_mul(weights, fibre);
}

Poly filt_presentation_check(int genus, int r, int n) {
  Poly geometric(2 * r - 1);
  for (int k = 0; k < r; ++k) geometric[2 * k] = 1;
  Poly closed = poly_mul(poly_pow(Poly{1, 2 * genus, 1}, n), poly_pow(geometric, n));
  return poly_sub(filt_poincare(genus, r, n), closed);
}

Poly infinite_quot_product(int genus, int max_t) {
  Poly p(max_t + 1);
  p[0] = 1;
  for (int i = 0; i < 2 * genus; ++i) times_binomial(p, 1);
  times_geometric(p, 2);
  for (int h = 1; 2 * h <= max_t; ++h) {
    for (int i = 0; i < 2 * genus; ++i) times_binomial(p, 2 * h + 1);
    times_geometric(p, 2 * h);
    times_geometric(p, 2 * h + 2);
  }
  trim(p);
  return p;
}

Poly tensor_model_series(int genus, int max_t) {
  // (degree, multiplicity) of a homogeneous basis of the generating space.
  std::vector<std::pair<int, int>> generators{{1, 2 * genus}, {2, 1}};
  for (int h = 1; 2 * h <= max_t; ++h) {
    generators.emplace_back(2 * h, 1);
    generators.emplace_back(2 * h + 1, 2 * genus);
    generators.emplace_back(2 * h + 2, 1);
  }
  Poly p(max_t + 1);
  p[0] = 1;
  for (auto [degree, count] : generators) {
    if (degree > max_t) continue;
    for (int i = 0; i < count; ++i) {
      if (degree % 2 == 1) {
        times_binomial(p, degree);
      } else {
        times_geometric(p, degree);
      }
    }
  }
  trim(p);
  return p;
}

bool LimitRow::ok() const {
  for (const auto& c : by_rank)
    if (c != product) return false;
  return product == tensor_model;
}

bool LimitReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const LimitRow& r) { return r.ok(); });
}

LimitReport infinite_limits_check(int genus, int max_t) {
  if (max_t < 0) throw AlgebraError("infinite_limits_check needs max_t >= 0");
  const int max_rank = max_t + 2;
  std::vector<Poly> quot(max_rank + 1);
  for (int r = 1; r <= max_rank; ++r) quot[r] = quot_poincare(genus, r, r, max_t);
  const Poly product = infinite_quot_product(genus, max_t);
  const Poly tensor = tensor_model_series(genus, max_t);
  LimitReport report;
  for (int k = 0; k <= max_t; ++k) {
    LimitRow row;
    row.power = k;
    for (int r = k + 1; r <= max_rank; ++r) row.by_rank.push_back(coeff(quot[r], k));
    row.product = coeff(product, k);
    row.tensor_model = coeff(tensor, k);
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<DimensionRow> decomposition_dimension_check(int genus, int n, int r, int max_degree) {
  if (r < 1) throw AlgebraError("decomposition_dimension_check needs a finite rank");
  Poly expected;
  for (const auto& v : enumerate_B(n, r, max_degree / 2)) {
    Decomposition dec = dec_of_weights({n}, v, r);
    Poly fixed{1};
    for (const auto& part : dec.parts) fixed = poly_mul(fixed, sym_prod_poincare(genus, part[0]), max_degree);
    expected = poly_add(expected, truncate(poly_shift(fixed, 2 * co(v)), max_degree));
  }
  const auto ranks = pullback_ranks(make_context(genus, n), r, max_degree);
  std::vector<DimensionRow> rows;
  for (int d = 0; d <= max_degree; ++d) rows.push_back({d, coeff(expected, d), ranks[d]});
  return rows;
}

}  // namespace quotcoh
