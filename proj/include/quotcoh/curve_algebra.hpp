#pragma once

// Exact graded-commutative arithmetic in the model ring
//
//   H*(C^n; Q) [omega_1 .. omega_n] [t_0 .. t_{r-1}]
//
// where C is a smooth projective curve of genus g with symplectic basis
// {1, alpha_1..alpha_g, beta_1..beta_g, pt}, alpha_k * beta_k = pt.
//
// Factor indices in the public constructors (omega, pt, diagonal, ...) are
// 1-based to match the usual notation; vector-valued data (weight vectors,
// permutations, exponent vectors) is 0-based.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace quotcoh {

using Rational = mpq_class;

/// Thrown for malformed input to ring operations (index ranges, mismatched
/// contexts, parse errors).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kUnboundedRank = -1;

/// Global parameters shared by every element of one ring.
///
/// rank == 0 means no equivariant parameters; rank == kUnboundedRank allows
/// t-variables of any index and places no bound on weight entries.
struct RingContext {
  int genus = 0;
  int factors = 0;
  int rank = 0;
  std::vector<long> degrees;

  bool equivariant() const { return rank != 0; }
  bool unbounded() const { return rank == kUnboundedRank; }
  /// Degree of L_alpha; zero past the configured list.
  long degree_of(int alpha) const;
  bool trivial_degrees() const;
  bool operator==(const RingContext&) const = default;
};

using ContextPtr = std::shared_ptr<const RingContext>;

/// Validates and freezes a context. degrees may be empty (all zero) or, for
/// finite rank, must have exactly rank entries.
ContextPtr make_context(int genus, int factors, int rank = 0, std::vector<long> degrees = {});

/// A basis class of H*(C).
struct Letter {
  enum class Kind : std::uint8_t { Unit, Alpha, Beta, Point };
  Kind kind = Kind::Unit;
  std::uint8_t index = 0;

  static constexpr Letter unit() { return {Kind::Unit, 0}; }
  static constexpr Letter alpha(int k) { return {Kind::Alpha, static_cast<std::uint8_t>(k)}; }
  static constexpr Letter beta(int k) { return {Kind::Beta, static_cast<std::uint8_t>(k)}; }
  static constexpr Letter point() { return {Kind::Point, 0}; }

  constexpr int degree() const {
    switch (kind) {
      case Kind::Unit: return 0;
      case Kind::Point: return 2;
      default: return 1;
    }
  }
  constexpr bool odd() const { return degree() == 1; }
  auto operator<=>(const Letter&) const = default;
};

/// Basis {1, a1..ag, b1..bg, pt} of H*(C) for the given genus.
std::vector<Letter> curve_basis(int genus);

using Exponent = std::uint16_t;

/// letters (x) omega^omega (x) t^t. The t vector never carries trailing zeros.
struct Monomial {
  boost::container::small_vector<Letter, 4> letters;
  boost::container::small_vector<Exponent, 4> omega;
  boost::container::small_vector<Exponent, 4> t;

  int letter_degree() const;
  int omega_degree() const;
  int t_degree() const;
  int degree() const { return letter_degree() + 2 * omega_degree() + 2 * t_degree(); }
  bool letter_odd() const { return letter_degree() % 2 == 1; }
  void trim_t();
  bool operator==(const Monomial&) const = default;
};

/// Canonical order used for storage and printing: negative when a is listed
/// before b. Higher total degree first, then t (degree, then lexicographic,
/// larger first), then omega likewise, then letters lexicographically with
/// larger letters first.
int canonical_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

class RingElement {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit RingElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static RingElement constant(ContextPtr ctx, const Rational& c);
  static RingElement one(ContextPtr ctx) { return constant(std::move(ctx), 1); }
  /// omega_i, 1-based.
  static RingElement omega(ContextPtr ctx, int i);
  /// Equivariant parameter t_alpha, 0-based.
  static RingElement t_param(ContextPtr ctx, int alpha);
  /// p_i^*(letter), 1-based factor.
  static RingElement letter(ContextPtr ctx, int i, Letter l);
  /// A single monomial; validated against the context.
  static RingElement monomial(ContextPtr ctx, Monomial m, const Rational& c = 1);
  /// Builds from arbitrary terms: merges duplicates and drops zeros.
  static RingElement from_terms(ContextPtr ctx, std::vector<Term> terms);
  /// As from_terms, but trusts that every monomial already fits the context.
  static RingElement from_valid_terms(ContextPtr ctx, std::vector<Term> terms);

  const ContextPtr& context() const { return ctx_; }
  const RingContext& ctx() const { return *ctx_; }
  /// Terms in canonical order, all coefficients nonzero.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of m (zero when absent).
  Rational coefficient(const Monomial& m) const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const Rational& c);
  RingElement operator-() const;

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const Rational& c) { return a *= c; }
  friend RingElement operator*(const Rational& c, RingElement a) { return a *= c; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);

  /// Equality of coefficient maps; contexts must agree.
  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  void require_same(const RingElement& o) const;
  void merge(const RingElement& o, int sign);

  ContextPtr ctx_;
  std::vector<Term> terms_;
};

/// Graded-commutative product with Koszul sign (-1)^{sum_{i<j} |y_i||x_j|}.
RingElement mul(const RingElement& x, const RingElement& y);

/// x^k for k >= 0.
RingElement power(const RingElement& x, int k);

/// Product of a single pair of monomials: returns false when the product
/// vanishes. Sign is folded into sign_out (+1/-1).
bool multiply_monomials(const Monomial& x, const Monomial& y, Monomial& out, int& sign_out);

/// Permutations are 0-based image vectors: perm[i] = sigma(i).
using Permutation = std::vector<int>;

/// sigma . (x_1 (x) ... (x) x_n) = eps * (x_{sigma^-1(1)} (x) ...), omega and t
/// untouched. eps counts inversions of sigma among odd letters.
RingElement permute_factors(const Permutation& sigma, const RingElement& x);

/// permute_factors together with omega_i -> omega_{sigma(i)}.
RingElement rho_act(const Permutation& sigma, const RingElement& x);

/// Diagonal class Delta_{ij} = pt_i + pt_j - sum_k (a_k^(i) b_k^(j) - b_k^(i) a_k^(j)).
RingElement diagonal(const ContextPtr& ctx, int i, int j);

/// Small diagonal Delta_I as the chain product along sorted I; 1 when |I| <= 1.
/// I holds 1-based factor indices.
RingElement small_diagonal(const ContextPtr& ctx, const std::vector<int>& subset);

/// Product of pairwise diagonals along arbitrary edges (for spanning-tree checks).
RingElement diagonal_product(const ContextPtr& ctx, const std::vector<std::pair<int, int>>& edges);

/// pt_I = prod_{i in I} pt_i.
RingElement point_on(const ContextPtr& ctx, const std::vector<int>& subset);

/// Pullback into a context with at least as many factors: pads trailing
/// factors with the unit and zero omega exponents.
RingElement embed(const RingElement& x, const ContextPtr& target);

/// Cohomological degree, or nullopt when x is zero or inhomogeneous.
std::optional<int> cohomological_degree(const RingElement& x);
bool is_homogeneous(const RingElement& x);
RingElement homogeneous_part(const RingElement& x, int degree);

/// (1/|G|) sum_{sigma in G} permute_factors(sigma, x).
RingElement project_invariant(const std::vector<Permutation>& group, const RingElement& x);

bool is_omega_free(const RingElement& x);
bool is_t_free(const RingElement& x);

/// Specialize every t to 0.
RingElement set_t_zero(const RingElement& x);

/// Maximal total omega exponent, nullopt for zero.
std::optional<int> omega_degree(const RingElement& x);

/// Canonical text form (see the element grammar in README).
std::string format(const RingElement& x);
RingElement parse(const ContextPtr& ctx, std::string_view text);

}  // namespace quotcoh
