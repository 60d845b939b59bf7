#pragma once

// Restriction of equivariant classes to the torus-fixed components F(w).

#include <optional>

#include "quotcoh/weights.hpp"
#include "quotcoh/xi_engine.hpp"

namespace quotcoh {

/// Ring map fixing letters and t, with
///   omega_i -> t_{w_i} - sum_{k<i, w_k=w_i} Delta_{k,i} + d_{w_i} pt_i.
RingElement restrict(const RingElement& x, const WeightVector& w);

/// Maximal total t-exponent; nullopt for zero.
std::optional<int> t_degree(const RingElement& f);
/// Terms of maximal t-degree (zero stays zero).
RingElement top_term(const RingElement& f);

/// prod_j prod_{i<v_j} (t_{w_j} - t_i).
RingElement top_term_product(const ContextPtr& ctx, const WeightVector& v, const WeightVector& w);

/// top_term(xi(v)^w) minus the product formula; needs v <=_0 w.
RingElement check_top_term(XiEngine& engine, const WeightVector& v, const WeightVector& w);
/// False only when no sigma has sigma(v) <=_0 w and yet xi(v)^w != 0.
bool check_vanishing(XiEngine& engine, const WeightVector& v, const WeightVector& w);
/// deg_t xi(v)^{sigma v} <= co(v) - |I| + 1 with I = {i : v_i != (sigma v)_i}.
bool check_degree_bound(XiEngine& engine, const WeightVector& v, const Permutation& sigma);

}  // namespace quotcoh
