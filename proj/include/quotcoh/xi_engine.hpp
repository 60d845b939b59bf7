#pragma once

// Fixed-point classes xi(v) of the complete filt scheme, realized in the free
// polynomial model H*(C^n)[omega][t].
//
// Weight-vector positions are 0-based throughout this header.

#include <map>
#include <mutex>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "quotcoh/curve_algebra.hpp"
#include "quotcoh/weights.hpp"

namespace quotcoh {

/// A polynomial in a formal variable with ring coefficients; index = power.
using RingSeries = std::vector<RingElement>;

class XiEngine {
 public:
  explicit XiEngine(ContextPtr ctx);

  const ContextPtr& context() const { return ctx_; }
  int factors() const { return ctx_->factors; }

  /// Non-equivariant class. xi(0) = 1; otherwise with j the last nonzero
  /// position and w = v - e_j:
  ///   xi(v) = (omega_j - d_{w_j} pt_j) xi(w) + sum_{k<j, w_k<=w_j} Delta_{kj} xi(tau_{kj} w).
  RingElement xi(const WeightVector& v);

  /// Same recursion with the step factor (omega_j - d_{w_j} pt_j - t_{w_j}).
  RingElement xi_equivariant(const WeightVector& v);

  /// sum over sigma in S_n of xi(sigma v) * sigma(a); a must be omega- and t-free.
  RingElement sym_xi(const WeightVector& v, const RingElement& a);

  /// Coefficients a_v (omega-free) with x = sum_v a_v xi(v), found by peeling
  /// off the top omega-degree layer. x must be t-free.
  std::map<WeightVector, RingElement> to_xi_basis(const RingElement& x);

  /// LHS - RHS of
  ///   (omega_m - sum_{k<m, v_k=v_m} Delta_{km} - d_{v_m} pt_m [- t_{v_m}]) xi(v)
  ///     = xi(v + e_m) + H_{m,n}(v) Delta_{mn} xi(tau_{mn} v),
  /// where n is the last position, H = 1 iff v_m < v_n. Needs v_n >= 1, m < n.
  RingElement check_increment_lower_index(const WeightVector& v, int m, bool equivariant = false);

  /// LHS - RHS of the multiplication rule for omega_m at any position m:
  ///   (omega_m + sum_{k<m, v_k=v_m} Delta_{km} - d_{v_m} pt_m [- t_{v_m}]) xi(v)
  ///     = xi(v + e_m) + sum_{k>m, v_k>v_m} Delta_{mk} xi(tau_{mk} v)
  ///                   - sum_{k<m, v_k<v_m} Delta_{km} xi(tau_{km} v).
  RingElement check_increment_general(const WeightVector& v, int m, bool equivariant = false);

  /// Residual of the module recursion for xi(u + l e_n) a, with u covering the
  /// first n-1 positions, l >= 1 and a omega/t-free.
  RingElement check_module_recursion(const WeightVector& u, int l, const RingElement& a);

  /// Coefficients of P_n(t) = sum_l t^l xi(l e_n) up to t^max_power, for the
  /// 0-based position.
  RingSeries pn_series(int position, int max_power);
  /// Same coefficients from sum_J Delta_{J+n} t^{|J|} prod (1 - omega_i t)^{-1}.
  RingSeries pn_closed_form(int position, int max_power);

  std::size_t cache_size() const;

 private:
  RingElement compute(const WeightVector& v, bool equivariant);
  void check_entries(const WeightVector& v, bool equivariant) const;

  using Cache = std::unordered_map<WeightVector, RingElement, boost::hash<WeightVector>>;

  ContextPtr ctx_;
  mutable std::mutex mutex_;
  Cache plain_;
  Cache equivariant_;
};

/// Complete homogeneous polynomial h_m in omega_i for the given 1-based factors.
RingElement complete_homogeneous(const ContextPtr& ctx, const std::vector<int>& factors, int m);

}  // namespace quotcoh
