#pragma once

// Poincare polynomials of symmetric products, filt and quot schemes as
// truncated integer polynomials in t, and checks of their product formulas.

#include <vector>

#include <gmpxx.h>

#include "quotcoh/curve_algebra.hpp"

namespace quotcoh {

/// Coefficients by power of t; no trailing zeros (the zero polynomial is empty).
using Poly = std::vector<mpz_class>;
/// Bivariate truncated series, indexed [power of s][power of t].
using Series2 = std::vector<Poly>;

void trim(Poly& p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
/// Product truncated to t-degree <= max_t (no truncation when max_t < 0).
Poly poly_mul(const Poly& a, const Poly& b, int max_t = -1);
Poly poly_pow(const Poly& a, int k, int max_t = -1);
/// t^k.
Poly poly_shift(const Poly& a, int k);
Poly truncate(Poly p, int max_t);
bool is_zero(const Poly& p);
/// Coefficient of t^k (zero past the end).
mpz_class coeff(const Poly& p, int k);

/// [u^m] (1+ut)^{2g} / ((1-u)(1-ut^2)).
Poly sym_prod_poincare(int genus, int m);
/// Degreewise dimension of the S_m-invariants of H*(C)^{(x) m} by projector averaging.
Poly sym_prod_invariant_dims(int genus, int m);

/// sum over Dec(l, r) of t^{2 co} prod_alpha P(C^(l_alpha)), truncated at max_t
/// when max_t >= 0. r may be kUnboundedRank only with a truncation.
Poly quot_poincare(int genus, int r, int l, int max_t = -1);
/// Coefficients of prod_{h<r} (1+st^{2h+1})^{2g} / ((1-t^{2h}s)(1-t^{2h+2}s)),
/// s-degree <= max_s and t-degree <= max_t. r may be kUnboundedRank.
Series2 quot_product_formula(int genus, int r, int max_s, int max_t);
/// quot_poincare(r, l) - [s^l] product formula for all l <= max_s.
Series2 quot_series_check(int genus, int r, int max_s, int max_t);

/// sum_{v in [0,r-1]^n} t^{2co(v)} (1+2gt+t^2)^n.
Poly filt_poincare(int genus, int r, int n);
/// filt_poincare minus (1+2gt+t^2)^n ((1-t^{2r})/(1-t^2))^n.
Poly filt_presentation_check(int genus, int r, int n);

struct LimitRow {
  int power = 0;
  std::vector<mpz_class> by_rank;  // P(Quot(r, r)) coefficient for r = power+1, power+2, ...
  mpz_class product;
  mpz_class tensor_model;
  bool ok() const;
};

struct LimitReport {
  std::vector<LimitRow> rows;
  bool ok() const;
};

/// (1+t)^{2g}/(1-t^2) prod_{h>=1} (1+t^{2h+1})^{2g}/((1-t^{2h})(1-t^{2h+2})) up to max_t.
Poly infinite_quot_product(int genus, int max_t);
/// Poincare series of Sym(H^{>0}(C) + sum_{h>=1} H*(C)[-2h]) up to max_t.
Poly tensor_model_series(int genus, int max_t);
/// For each k <= max_t: the t^k coefficient of P(Quot(r, r)) for r = k+1 .. max_t+2
/// agrees, and matches the limit product and the tensor model.
LimitReport infinite_limits_check(int genus, int max_t);

struct DimensionRow {
  int degree = 0;
  mpz_class expected;
  std::size_t rank = 0;
  bool ok() const { return expected == rank; }
};

/// sum_{v in B(n,r)} t^{2co(v)} P(F^Q(v)) against the degreewise rank of
/// {psi(v; a_j)} in the free model.
std::vector<DimensionRow> decomposition_dimension_check(int genus, int n, int r, int max_degree);

}  // namespace quotcoh
