#include "quotcoh/linear_algebra.hpp"

namespace quotcoh {

namespace {

void make_primitive(EchelonBasis::Row& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [m, c] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [m, c] : row) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// a*v - b*w, both sorted in canonical order.
EchelonBasis::Row combine(const mpz_class& a, const EchelonBasis::Row& v, const mpz_class& b,
                          const EchelonBasis::Row& w) {
  EchelonBasis::Row out;
  out.reserve(v.size() + w.size());
  auto i = v.begin();
  auto j = w.begin();
  while (i != v.end() || j != w.end()) {
    int c = i == v.end() ? 1 : j == w.end() ? -1 : canonical_compare(i->first, j->first);
    if (c < 0) {
      out.emplace_back(i->first, a * i->second);
      ++i;
    } else if (c > 0) {
      out.emplace_back(j->first, -b * j->second);
      ++j;
    } else {
      mpz_class s = a * i->second - b * j->second;
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

EchelonBasis::Row primitive_row(const RingElement& x) {
  mpz_class lcm = 1;
  for (const auto& [m, c] : x.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  EchelonBasis::Row row;
  row.reserve(x.size());
  for (const auto& [m, c] : x.terms()) {
    mpz_class v = c.get_num() * (lcm / c.get_den());
    row.emplace_back(m, std::move(v));
  }
  make_primitive(row);
  return row;
}

EchelonBasis::Row EchelonBasis::reduce(Row v) const {
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) break;
    const Row& pivot = it->second;
    // pivot.front().second * v - v.front().second * pivot kills the lead term
    mpz_class a = pivot.front().second;
    mpz_class b = v.front().second;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    v = combine(a, v, b, pivot);
    make_primitive(v);
  }
  return v;
}

bool EchelonBasis::insert(const RingElement& x) {
  Row v = reduce(primitive_row(x));
  if (v.empty()) return false;
  Monomial lead = v.front().first;
  rows_.emplace(std::move(lead), std::move(v));
  return true;
}

bool EchelonBasis::contains(const RingElement& x) const { return reduce(primitive_row(x)).empty(); }

std::size_t span_rank(const std::vector<RingElement>& xs) {
  EchelonBasis basis;
  for (const auto& x : xs) basis.insert(x);
  return basis.rank();
}

}  // namespace quotcoh
