#pragma once

// The three-term complex attached to an ADHM datum,
//
//   O(-1) (x) V  --a-->  O (x) (V (x) L (+) W)  --b-->  O(1) (x) V,
//
//   a = [ zB1 - x ]        b = [ -(zB2 - y) | zB1 - x | zi ],
//       [ zB2 - y ]
//       [   zj    ]
//
// stored as matrices of degree-1 forms in (x, y, z). The product b a expands
// to z^2 ([B1,B2] + i j); all other coefficients cancel identically, so the
// complex is a complex exactly on the moment-map fiber. Fiberwise rank checks,
// the Koszul middle-vanishing check, the invariant-sections check, and the
// tangent-space dimension live here as well.

#include <array>
#include <vector>

#include "kql/adhm.hpp"
#include "kql/stability.hpp"

namespace kql {

template <class S>
struct LinForm {
  S cx{}, cy{}, cz{};

  S eval(const S& x, const S& y, const S& z) const {
    return cx * x + cy * y + cz * z;
  }
};

template <class S>
struct MonadData {
  int dimV = 0;
  int r = 0;
  std::vector<std::vector<LinForm<S>>> a;  // (2 dimV + r) x dimV
  std::vector<std::vector<LinForm<S>>> b;  // dimV x (2 dimV + r)

  int middle() const { return 2 * dimV + r; }
};

template <class S>
MonadData<S> build_monad(const ADHMDatum<S>& d) {
  validateGrading(d);
  MonadData<S> md;
  md.dimV = d.dimV();
  md.r = d.r;
  const int v = md.dimV;
  const S one = ScalarTraits<S>::one();
  md.a.assign(md.middle(), std::vector<LinForm<S>>(v));
  md.b.assign(v, std::vector<LinForm<S>>(md.middle()));
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j) {
      md.a[i][j].cz = d.B1.at(i, j);          // zB1 - x
      md.a[v + i][j].cz = d.B2.at(i, j);      // zB2 - y
      md.b[i][j].cz = -d.B2.at(i, j);         // -(zB2 - y)
      md.b[i][v + j].cz = d.B1.at(i, j);      // zB1 - x
    }
  for (int i = 0; i < v; ++i) {
    md.a[i][i].cx = -one;
    md.a[v + i][i].cy = -one;
    md.b[i][i].cy = one;
    md.b[i][v + i].cx = -one;
  }
  for (int t = 0; t < d.r; ++t)
    for (int j = 0; j < v; ++j) {
      md.a[2 * v + t][j].cz = d.j.at(t, j);   // zj
      md.b[j][2 * v + t].cz = d.i.at(j, t);   // zi
    }
  return md;
}

// Coefficient matrices of the quadratic form b*a, keyed x2,y2,z2,xy,xz,yz.
template <class S>
std::array<Matrix<S>, 6> monadProductCoefficients(const MonadData<S>& md) {
  std::array<Matrix<S>, 6> out;
  for (auto& m : out) m = Matrix<S>(md.dimV, md.dimV);
  for (int i = 0; i < md.dimV; ++i)
    for (int j = 0; j < md.dimV; ++j)
      for (int k = 0; k < md.middle(); ++k) {
        const LinForm<S>&p = md.b[i][k], &q = md.a[k][j];
        out[0].at(i, j) += p.cx * q.cx;
        out[1].at(i, j) += p.cy * q.cy;
        out[2].at(i, j) += p.cz * q.cz;
        out[3].at(i, j) += p.cx * q.cy + p.cy * q.cx;
        out[4].at(i, j) += p.cx * q.cz + p.cz * q.cx;
        out[5].at(i, j) += p.cy * q.cz + p.cz * q.cy;
      }
  return out;
}

// b*a = 0 as quadratic forms; equivalently the z^2 coefficient equals the
// ADHM residual and the residual vanishes.
template <class S>
bool monadIsComplex(const MonadData<S>& md, double tol = kDefaultTolerance) {
  auto c = monadProductCoefficients(md);
  for (const auto& m : c)
    if (!m.isZero(tol)) return false;
  return true;
}

template <class S>
Matrix<Cx> evaluateAt(const std::vector<std::vector<LinForm<S>>>& forms,
                      const Cx& x, const Cx& y, const Cx& z) {
  const int rows = static_cast<int>(forms.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(forms[0].size());
  Matrix<Cx> out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      out.at(i, j) = toComplex(forms[i][j].cx) * x +
                     toComplex(forms[i][j].cy) * y +
                     toComplex(forms[i][j].cz) * z;
  return out;
}

struct FiberVerdict {
  bool aInjective = false;
  bool bSurjective = false;
};

template <class S>
FiberVerdict monad_fiber_check(const MonadData<S>& md, const Cx& x, const Cx& y,
                               const Cx& z, double tol = kDefaultTolerance) {
  if (std::abs(x) + std::abs(y) + std::abs(z) == 0.0)
    throw PreconditionError("monad_fiber_check: (0:0:0) is not a point");
  FiberVerdict v;
  v.aInjective = rank(evaluateAt(md.a, x, y, z), tol) == md.dimV;
  v.bSurjective = rank(evaluateAt(md.b, x, y, z), tol) == md.dimV;
  return v;
}

// Middle-cohomology vanishing for data with W = 0 and no weight-0 part:
// rank a(p) + rank b(p) = 2 dimV at each sample point.
template <class S>
bool koszul_middle_check(const ADHMDatum<S>& d,
                         const std::vector<std::array<Cx, 3>>& points,
                         double tol = kDefaultTolerance) {
  if (d.r != 0)
    throw PreconditionError("koszul_middle_check: needs W = 0");
  for (int w : d.weights)
    if (w == 0)
      throw PreconditionError("koszul_middle_check: needs zero weight-0 part");
  MonadData<S> md = build_monad(d);
  for (const auto& p : points) {
    const int ra = rank(evaluateAt(md.a, p[0], p[1], p[2]), tol);
    const int rb = rank(evaluateAt(md.b, p[0], p[1], p[2]), tol);
    if (ra + rb != 2 * md.dimV) return false;
  }
  return true;
}

// Vertex-simple data over a cyclic group have no invariant sections in
// coker(b) on the chart z = 1: in every degree <= D the cokernel is computed
// by elimination and each representative coordinate must carry a nonzero
// weight mod m.
bool invariant_sections_check(const ADHMDatum<Rat>& d, int maxDegree);

// dim ker(d mu) - dim G_v at a stable representation; equals the dimension
// 2 r n of the quiver variety at smooth points.
template <class S>
long tangent_dimension(const QuiverModule<S>& m,
                       double tol = kDefaultTolerance) {
  validateShapes(m);
  if (!residualIsZero(m, tol))
    throw PreconditionError("tangent_dimension: nonzero residual");
  if (!is_stable(m, c_plus_representative(m.dim.v), tol))
    throw PreconditionError("tangent_dimension: input is not stable");
  const int s = m.quiver.dynkinVertices();
  // columns: arrow entries; rows: endomorphism entries at every vertex
  std::vector<int> rowOffset;
  int rows = 0;
  rowOffset.push_back(rows);
  rows += m.dim.inf * m.dim.inf;
  for (int i = 0; i < s; ++i) {
    rowOffset.push_back(rows);
    rows += m.dim.v[i] * m.dim.v[i];
  }
  auto rowBase = [&](int vertex) {
    return vertex == kInfVertex ? 0 : rowOffset[vertex + 1];
  };
  int cols = 0;
  std::vector<int> colOffset;
  for (const Arrow& a : m.quiver.arrows) {
    colOffset.push_back(cols);
    cols += m.dimAt(a.head) * m.dimAt(a.tail);
  }
  Matrix<S> jac(rows, cols);
  for (size_t ai = 0; ai < m.quiver.arrows.size(); ++ai) {
    const Arrow& a = m.quiver.arrows[ai];
    const Arrow& rev = m.quiver.arrows[a.reverse];
    const Matrix<S>& Brev = m.mats[a.reverse];
    const int h = m.dimAt(a.head), t = m.dimAt(a.tail);
    // delta B_a contributes eps(a) dB B_rev at head(a) and eps(rev) B_rev dB
    // at tail(a)
    for (int p = 0; p < h; ++p)
      for (int q = 0; q < t; ++q) {
        const int col = colOffset[ai] + p * t + q;
        for (int j = 0; j < h; ++j) {
          // (E_pq B_rev)(p, j)
          S val = Brev.at(q, j);
          if (a.eps < 0) val = -val;
          const int row = rowBase(a.head) + p * h + j;
          jac.at(row, col) = jac.at(row, col) + val;
        }
        for (int i2 = 0; i2 < t; ++i2) {
          // (B_rev E_pq)(i2, q)
          S val = Brev.at(i2, p);
          if (rev.eps < 0) val = -val;
          const int row = rowBase(a.tail) + i2 * t + q;
          jac.at(row, col) = jac.at(row, col) + val;
        }
      }
  }
  const long kerDim = cols - rank(jac, tol);
  long gDim = static_cast<long>(m.dim.inf) * m.dim.inf - 1;
  for (int i = 0; i < s; ++i)
    gDim += static_cast<long>(m.dim.v[i]) * m.dim.v[i];
  return kerDim - gDim;
}

}  // namespace kql
