#pragma once

#include <random>

#include "quotcoh/curve_algebra.hpp"

namespace quotcoh::test {

inline RingElement om(const ContextPtr& c, int i) { return RingElement::omega(c, i); }
inline RingElement D(const ContextPtr& c, int i, int j) { return diagonal(c, i, j); }
inline RingElement pt(const ContextPtr& c, int i) { return RingElement::letter(c, i, Letter::point()); }
inline RingElement al(const ContextPtr& c, int i, int k) { return RingElement::letter(c, i, Letter::alpha(k)); }
inline RingElement be(const ContextPtr& c, int i, int k) { return RingElement::letter(c, i, Letter::beta(k)); }
inline RingElement t(const ContextPtr& c, int a) { return RingElement::t_param(c, a); }
inline RingElement one(const ContextPtr& c) { return RingElement::one(c); }

/// Random homogeneous element of the given degree built from basis monomials.
inline RingElement random_homogeneous(const ContextPtr& c, int degree, std::mt19937_64& rng, int terms = 3) {
  const auto basis = curve_basis(c->genus);
  RingElement out(c);
  for (int attempt = 0; attempt < 200 && static_cast<int>(out.size()) < terms; ++attempt) {
    Monomial m;
    int left = degree;
    for (int i = 0; i < c->factors; ++i) {
      Letter l = basis[rng() % basis.size()];
      if (l.degree() > left) l = Letter::unit();
      m.letters.push_back(l);
      left -= l.degree();
    }
    m.omega.assign(c->factors, 0);
    if (left % 2 != 0) continue;
    for (int k = 0; k < left / 2; ++k) ++m.omega[rng() % c->factors];
    out += RingElement::monomial(c, m, Rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)));
  }
  return out;
}

}  // namespace quotcoh::test
