#include "kql/monad.hpp"

namespace kql {

// On the chart z = 1 with B = 0 the map b sends (f, g) (x) v to (yf - xg) v,
// so the degree-d piece of the target is V (x) C[x,y]_d and the image comes
// from degree d-1. Cokernel representatives are read off as the non-pivot
// coordinates of the column space; each must carry nonzero weight mod m.
bool invariant_sections_check(const ADHMDatum<Rat>& d, int maxDegree) {
  validateGrading(d);
  if (d.r != 0)
    throw PreconditionError("invariant_sections_check: needs W = 0");
  if (!d.B1.isZero() || !d.B2.isZero())
    throw PreconditionError("invariant_sections_check: needs B = 0");
  for (int w : d.weights)
    if (w == 0)
      throw PreconditionError(
          "invariant_sections_check: trivial summand rejected");
  const int m = d.group.m;
  const int n = d.dimV();
  for (int deg = 0; deg <= maxDegree; ++deg) {
    // target coordinates: (monomial x^p y^{deg-p}, basis vector t)
    const int tdim = (deg + 1) * n;
    const int sdim = deg == 0 ? 0 : 2 * deg * n;
    Matrix<Rat> map(tdim, sdim);
    auto tIndex = [&](int p, int t) { return p * n + t; };
    for (int p = 0; p + 1 <= deg; ++p)
      for (int t = 0; t < n; ++t) {
        const int colX = (p * n + t) * 2;      // e_x copy of x^p y^{deg-1-p}
        const int colY = colX + 1;             // e_y copy
        map.at(tIndex(p, t), colX) = 1;        // multiply by y
        map.at(tIndex(p + 1, t), colY) = -1;   // multiply by -x
      }
    // leading coordinates of the canonical image basis; the remaining
    // coordinates represent the cokernel
    std::vector<bool> pivotRow(tdim, false);
    Echelon<Rat> cols = eliminate(map.transpose());
    for (int c : cols.pivotCols) pivotRow[c] = true;
    for (int p = 0; p <= deg; ++p)
      for (int t = 0; t < n; ++t) {
        if (pivotRow[tIndex(p, t)]) continue;
        const int weight =
            (((p - (deg - p) + d.weights[t]) % m) + m) % m;
        if (weight == 0) return false;
      }
  }
  return true;
}

}  // namespace kql
