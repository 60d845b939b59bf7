#pragma once

// Weight vectors, decompositions, subset tuples and the index sets of the
// combinatorial pullback formula.

#include <map>
#include <string>
#include <vector>

#include "quotcoh/curve_algebra.hpp"

namespace quotcoh {

/// Element of Z_{>=0}^n, 0-based positions.
using WeightVector = std::vector<int>;

int co(const WeightVector& v);
/// Descending reordering.
WeightVector nor(const WeightVector& v);
/// Product of factorials of value multiplicities.
long stabilizer_order(const WeightVector& v);
/// Componentwise v <= w.
bool leq0(const WeightVector& v, const WeightVector& w);
bool is_decreasing(const WeightVector& v);
/// Indices (0-based) of nonzero entries.
std::vector<int> support(const WeightVector& v);
/// e_i with 0-based i.
WeightVector unit_vector(int n, int i);
std::string to_string(const WeightVector& v);
/// Parses "1,0,2".
WeightVector parse_weights(const std::string& text);

// -- permutations -----------------------------------------------------------

Permutation identity_permutation(int n);
/// (sigma o tau)(i) = sigma(tau(i)).
Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation inverse(const Permutation& sigma);
/// Transposition of 0-based positions i and j.
Permutation transposition(int n, int i, int j);
/// All of S_n in lexicographic order of image vectors.
std::vector<Permutation> enumerate_permutations(int n);
/// Block permutations of the composition (l_1, ..., l_h).
std::vector<Permutation> young_subgroup(const std::vector<int>& composition);
/// {sigma : sigma . v = v}.
std::vector<Permutation> stabilizer(const WeightVector& v);
/// Adjacent transpositions generating S_n.
std::vector<Permutation> adjacent_transpositions(int n);
/// (sigma . v)_{sigma(i)} = v_i.
WeightVector act(const Permutation& sigma, const WeightVector& v);

// -- B(n, r) and decompositions ---------------------------------------------

/// Decreasing vectors of length n with entries < r (any entry when r is
/// kUnboundedRank) and co(v) <= max_co, in lexicographic order.
std::vector<WeightVector> enumerate_B(int n, int r, int max_co);

/// An r-decomposition (l_0, ..., l_{r-1}) of a block-length vector.
struct Decomposition {
  std::vector<std::vector<int>> parts;

  int co() const;
  bool operator==(const Decomposition&) const = default;
};

/// The bijection B(l, r) -> Dec(l, r). blocks gives the block lengths and
/// v_star the concatenation of the (decreasing) blocks.
Decomposition dec_of_weights(const std::vector<int>& blocks, const WeightVector& v_star, int r);
/// Inverse of dec_of_weights.
WeightVector weights_of_dec(const std::vector<int>& blocks, const Decomposition& dec);
/// All r-decompositions of a scalar l, ordered by dec_of_weights on enumerate_B.
std::vector<std::vector<int>> enumerate_dec(int l, int r);

// -- subset tuples -----------------------------------------------------------

/// Tuple of nonempty subsets of [1, n] (1-based elements, each set sorted).
struct SubsetTuple {
  std::vector<std::vector<int>> sets;

  /// Union of the sets.
  std::vector<int> support() const;
  bool operator==(const SubsetTuple&) const = default;
};

/// Rejects empty sets and normalizes each set to sorted, duplicate-free form.
SubsetTuple make_subset_tuple(std::vector<std::vector<int>> sets);

/// Components of the chain-intersection relation, in order of first set.
std::vector<SubsetTuple> connected_components(const SubsetTuple& tuple);
bool is_connected(const SubsetTuple& tuple);
/// sum |I_j| - h - |S| + 1; throws on disconnected input.
int betti_b1(const SubsetTuple& tuple);
/// b1 via an explicit incidence graph: edges - vertices + components.
int incidence_graph_b1(const SubsetTuple& tuple);
/// Components grouped by first Betti number.
std::map<int, std::vector<SubsetTuple>> classify(const SubsetTuple& tuple);

// -- the index sets T(u, sigma) ----------------------------------------------

/// How the rows of L are matched against u.
enum class SumConvention {
  RowsSumToPermuted,  ///< sum_j l_j = sigma(u) (default)
  PermutedRowsSum,    ///< sigma(sum_j l_j) = u
};

/// L = (l_1, ..., l_n) with l_j in Z_{>=0}^j (stored padded to length n).
struct TupleSequence {
  std::vector<WeightVector> rows;

  int n() const { return static_cast<int>(rows.size()); }
  /// s(l_j) u {j}, 1-based, for 1-based row index j.
  std::vector<int> hat_support(int j) const;
  /// |l_j| - |hat_support(j)| + 1.
  int rho(int j) const;
  /// (hat_support(1), ..., hat_support(n)).
  SubsetTuple incidence() const;
  bool operator==(const TupleSequence&) const = default;
};

/// The weight vector the rows must add up to.
WeightVector T_target(const WeightVector& u, const Permutation& sigma, SumConvention convention);

/// Enumerates T(u, sigma) row by row from index n downward.
std::vector<TupleSequence> enumerate_T(const WeightVector& u, const Permutation& sigma,
                                       SumConvention convention = SumConvention::RowsSumToPermuted);

/// Independent check of the three defining conditions.
bool in_T(const TupleSequence& L, const WeightVector& u, const Permutation& sigma,
          SumConvention convention = SumConvention::RowsSumToPermuted);

}  // namespace quotcoh
