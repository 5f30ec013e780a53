#pragma once

// Buchberger's algorithm for bivariate ideals over the rationals, in the
// degree order of poly.hpp. Small input sets only; this backs ideal
// construction from user generators and canonical ideal comparison via the
// reduced basis, which is unique for a fixed order.

#include <vector>

#include "kql/poly.hpp"

namespace kql {

Poly normalForm(const Poly& f, const std::vector<Poly>& basis);

std::vector<Poly> buchberger(std::vector<Poly> gens);

// Monic, self-reduced, sorted by leading monomial.
std::vector<Poly> reduceBasis(std::vector<Poly> basis);

inline std::vector<Poly> reducedGroebner(std::vector<Poly> gens) {
  return reduceBasis(buchberger(std::move(gens)));
}

// Monomials outside the leading-term ideal, in order. Throws when the
// staircase is infinite (no pure power of x or of y among the leads).
std::vector<Mono> staircase(const std::vector<Poly>& groebner);

}  // namespace kql
