#pragma once

// Quot-scheme side: pullback of the fixed-point classes xi^Q(u; a) along the
// forgetful map from the complete filt scheme, computed by symmetrizing the
// xi recursion and by the closed combinatorial formula over T(u, sigma).

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "quotcoh/weights.hpp"
#include "quotcoh/xi_engine.hpp"

namespace quotcoh {

class QuotPullback {
 public:
  explicit QuotPullback(std::shared_ptr<XiEngine> engine);

  const ContextPtr& context() const { return engine_->context(); }
  XiEngine& engine() { return *engine_; }

  /// (1/|St(u)|) sum_sigma xi(sigma u) sigma(a). In strict mode a must be
  /// St(u)-invariant; otherwise it is replaced by its St(u)-average first.
  RingElement psi(const WeightVector& u, const RingElement& a, bool strict = false);

  /// (1/|St(u)|) sum_sigma sum_{L in T(u, sigma)} omega^rho(L) prod Delta prod (2-2g) pt sigma(a).
  /// Requires trivial line-bundle degrees.
  RingElement psi_combinatorial(const WeightVector& u, const RingElement& a,
                                SumConvention convention = SumConvention::RowsSumToPermuted, bool strict = false);

  /// The a-independent part of the combinatorial formula for one sigma.
  RingElement combinatorial_kernel(const WeightVector& u, const Permutation& sigma, SumConvention convention);

  /// Partial symmetrization over the Young subgroup of the composition,
  /// divided by the order of the block stabilizer of v_star.
  RingElement psi_partial(const std::vector<int>& composition, const WeightVector& v_star, const RingElement& a,
                          bool strict = false);

  /// Whether a is fixed by every element of St(u) under permute_factors.
  bool stabilizer_invariant(const WeightVector& u, const RingElement& a) const;

 private:
  RingElement prepare(const WeightVector& u, const RingElement& a, bool strict,
                      const std::vector<Permutation>& group) const;

  std::shared_ptr<XiEngine> engine_;
  std::map<std::tuple<WeightVector, Permutation, int>, RingElement> kernels_;
};

/// x == rho(s) x for every adjacent transposition s.
bool rho_invariance_check(const RingElement& x);

/// Basis monomials of H*(C^n)[omega] (no t) in the given degree.
std::vector<Monomial> monomial_basis(const RingContext& ctx, int degree);
/// Letter-only monomials of H*(C^n) in the given degree.
std::vector<Monomial> letter_basis(const RingContext& ctx, int degree);

/// Dimension of the rho-invariant subspace in a degree, by averaging rho over
/// S_n on the monomial basis.
std::size_t invariant_dimension(const ContextPtr& ctx, int degree);

/// Rank over Q of the degree-d members of a list of homogeneous classes.
std::size_t span_rank(const std::vector<RingElement>& classes, int degree);

/// Spanning set of the G-invariant part of H*(C^n) in a degree (orbit averages).
std::vector<RingElement> invariant_letter_classes(const ContextPtr& ctx, const std::vector<Permutation>& group,
                                                  int degree);

struct GeneratingIdentityResult {
  RingSeries residual;
  bool choice_independent = true;
  bool ok() const;
};

/// Compares sum_{n'} sum_l t^l xi(l e_{n'}) p_{n'}^*(a) against
/// sum_I Delta_I(a) t^{|I|-1} prod_{j in I} (1 - omega_j t)^{-1} up to t^max_power.
GeneratingIdentityResult generating_identity_check(XiEngine& engine, Letter a, int max_power);

struct DegreeRank {
  int degree = 0;
  std::size_t generated = 0;
  std::size_t invariant = 0;
  bool ok() const { return generated == invariant; }
};

/// Degreewise rank of the subalgebra generated by psi(l e_1, p_1^* a), l <= n,
/// together with the S_n-invariant omega-free classes, against the dimension
/// of the rho-invariants.
std::vector<DegreeRank> generator_span_check(const ContextPtr& ctx, int max_degree);

/// Span of psi(u; a_j) over u in B(n, r) (co bounded by degree) and a_j
/// spanning the St(u)-invariants, against the rho-invariant dimension.
std::vector<DegreeRank> pullback_rank_check(const ContextPtr& ctx, int rank, int max_degree);

/// Degreewise rank of {psi(u; a_j) : u in B(n, r)} alone.
std::vector<std::size_t> pullback_ranks(const ContextPtr& ctx, int rank, int max_degree);

}  // namespace quotcoh
