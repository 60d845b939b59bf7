#pragma once

#include <map>
#include <vector>

#include "quotcoh/curve_algebra.hpp"

namespace quotcoh {

/// Incremental row-echelon basis over Q with fraction-free (integer) rows.
///
/// Rows are kept primitive (content 1) and are keyed by their leading
/// monomial in canonical order; inserting reduces only leading terms, so each
/// stored row has a distinct pivot.
class EchelonBasis {
 public:
  using Row = std::vector<std::pair<Monomial, mpz_class>>;

  /// Returns true when x is independent of the rows inserted so far.
  bool insert(const RingElement& x);
  /// True when x lies in the current span (x is not inserted).
  bool contains(const RingElement& x) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  struct PivotLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return canonical_compare(a, b) < 0; }
  };

  Row reduce(Row v) const;

  std::map<Monomial, Row, PivotLess> rows_;
};

/// Scales x to a primitive integer row.
EchelonBasis::Row primitive_row(const RingElement& x);

/// Rank over Q of the given elements.
std::size_t span_rank(const std::vector<RingElement>& xs);

}  // namespace quotcoh
