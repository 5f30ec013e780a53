#pragma once

// Joint spectrum of the commuting ADHM pair: the support cycle of the
// corresponding rank-1 sheaf, as points of the plane with multiplicities.

#include <vector>

#include "kql/adhm.hpp"

namespace kql {

struct SupportPoint {
  Cx x, y;
  int multiplicity = 0;
};

using SupportCycle = std::vector<SupportPoint>;

// Requires an exactly commuting pair (residual zero, j = 0); eigenvalues are
// clustered at radius 10 * tol. Points come back sorted lexicographically.
SupportCycle support_cycle_pair(const Matrix<Cx>& b1, const Matrix<Cx>& b2,
                                double tol = kDefaultTolerance);

template <class S>
SupportCycle support_cycle(const ADHMDatum<S>& d,
                           double tol = kDefaultTolerance) {
  validateGrading(d);
  if (!d.j.isZero(tol))
    throw PreconditionError("support_cycle: needs j = 0");
  Matrix<Cx> b1 = toComplex(d.B1), b2 = toComplex(d.B2);
  Matrix<Cx> comm = b1 * b2 - b2 * b1;
  if (!comm.isZero(tol * std::max(1.0, b1.maxMagnitude() * b2.maxMagnitude())))
    throw PreconditionError("support_cycle: pair does not commute");
  return support_cycle_pair(b1, b2, tol);
}

}  // namespace kql
