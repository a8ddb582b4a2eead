#pragma once

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "ciobs/ideal.hpp"
#include "ciobs/polynomial.hpp"

namespace ciobs {
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }
}  // namespace ciobs

namespace ciobs::testing {

inline RingPtr ring_q(std::vector<std::string> vars) {
  return PolyRing::make(CoefField::rationals(), std::move(vars));
}

inline Polynomial P(const RingPtr& ring, const std::string& text) { return Polynomial::parse(text, ring); }

inline IdealPresentation ideal(const RingPtr& ring, std::vector<std::string> gens) {
  return IdealPresentation::parse(ring, gens);
}

/// Random polynomial with small integer coefficients, at most `max_terms`
/// terms and total degree <= max_degree.
inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, unsigned max_degree,
                              unsigned max_terms, int coef_bound = 3) {
  std::uniform_int_distribution<int> coef(-coef_bound, coef_bound);
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::vector<Term> terms;
  const unsigned n = nterms(rng);
  for (unsigned k = 0; k < n; ++k) {
    unsigned d = deg(rng);
    Monomial::Exponents e(ring->nvars(), 0);
    std::uniform_int_distribution<std::size_t> var(0, ring->nvars() - 1);
    for (unsigned i = 0; i < d; ++i) ++e[var(rng)];
    int c = coef(rng);
    if (c == 0) c = 1;
    terms.push_back({Monomial(std::move(e)), Coef(c)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace ciobs::testing
