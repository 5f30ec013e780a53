#pragma once

// Framed modules over the preprojective algebra, stored per arrow.
//
// A module assigns a space to every vertex (dimension <= 1 at the framing
// vertex) and a matrix to every arrow, mapping the tail space to the head
// space. The preprojective residual at vertex i is
//     sum_{head(a) = i} eps(a) B_a B_abar,
// and a module is a Pi-module exactly when every residual vanishes.

#include <string>
#include <vector>

#include "kql/matrix.hpp"
#include "kql/quiver.hpp"
#include "kql/rng.hpp"

namespace kql {

// One value per vertex, the framing vertex included.
template <class T>
struct PerVertex {
  T inf;
  std::vector<T> dynkin;

  T& at(int vertex) { return vertex == kInfVertex ? inf : dynkin[vertex]; }
  const T& at(int vertex) const {
    return vertex == kInfVertex ? inf : dynkin[vertex];
  }
};

template <class S>
struct QuiverModule {
  FramedQuiver quiver;
  DimVector dim;
  std::vector<Matrix<S>> mats;  // indexed like quiver.arrows

  int dimAt(int vertex) const { return dim.at(vertex); }
};

template <class S>
using SubspaceFamily = PerVertex<Matrix<S>>;  // columns span the subspace

template <class S>
using ModuleHom = PerVertex<Matrix<S>>;  // per-vertex intertwiner blocks

// Moduli-facing operations require dim_inf <= 1 (the framed form); plain
// module algebra (sums, homs) tolerates any framing multiplicity.
template <class S>
void validateShapes(const QuiverModule<S>& m) {
  if (m.dim.inf < 0)
    throw PreconditionError("module: dim_inf must be nonnegative");
  if (static_cast<int>(m.dim.v.size()) != m.quiver.dynkinVertices())
    throw PreconditionError("module: dimension vector length mismatch");
  if (m.mats.size() != m.quiver.arrows.size())
    throw PreconditionError("module: arrow matrix count mismatch");
  for (size_t a = 0; a < m.mats.size(); ++a) {
    const Arrow& ar = m.quiver.arrows[a];
    if (m.mats[a].rows() != m.dimAt(ar.head) ||
        m.mats[a].cols() != m.dimAt(ar.tail))
      throw PreconditionError("module: matrix shape mismatch at arrow " +
                              ar.id);
  }
}

template <class S>
QuiverModule<S> zeroModule(const FramedQuiver& q, const DimVector& dim) {
  QuiverModule<S> m{q, dim, {}};
  m.mats.reserve(q.arrows.size());
  for (const Arrow& a : q.arrows)
    m.mats.push_back(Matrix<S>(dim.at(a.head), dim.at(a.tail)));
  return m;
}

// One-dimensional module supported at a single vertex.
template <class S>
QuiverModule<S> vertexSimple(const FramedQuiver& q, int vertex) {
  DimVector d;
  d.inf = vertex == kInfVertex ? 1 : 0;
  d.v.assign(q.dynkinVertices(), 0);
  if (vertex != kInfVertex) d.v[vertex] = 1;
  return zeroModule<S>(q, d);
}

template <class S>
PerVertex<Matrix<S>> preprojective_residual(const QuiverModule<S>& m) {
  validateShapes(m);
  PerVertex<Matrix<S>> res;
  res.inf = Matrix<S>(m.dim.inf, m.dim.inf);
  res.dynkin.reserve(m.quiver.dynkinVertices());
  for (int i = 0; i < m.quiver.dynkinVertices(); ++i)
    res.dynkin.push_back(Matrix<S>(m.dim.v[i], m.dim.v[i]));
  for (size_t a = 0; a < m.mats.size(); ++a) {
    const Arrow& ar = m.quiver.arrows[a];
    Matrix<S> term = m.mats[a] * m.mats[ar.reverse];
    if (ar.eps < 0) term = -term;
    res.at(ar.head) = res.at(ar.head) + term;
  }
  return res;
}

template <class S>
double residualNorm(const QuiverModule<S>& m) {
  PerVertex<Matrix<S>> res = preprojective_residual(m);
  double norm = res.inf.maxMagnitude();
  for (const Matrix<S>& r : res.dynkin) norm = std::max(norm, r.maxMagnitude());
  return norm;
}

template <class S>
bool residualIsZero(const QuiverModule<S>& m, double tol = kDefaultTolerance) {
  PerVertex<Matrix<S>> res = preprojective_residual(m);
  if (!res.inf.isZero(tol)) return false;
  for (const Matrix<S>& r : res.dynkin)
    if (!r.isZero(tol)) return false;
  return true;
}

// Block-diagonal sum over the same quiver. At most one summand may carry the
// framing dimension; use extendFraming to concatenate framing spaces instead.
template <class S>
QuiverModule<S> direct_sum(const QuiverModule<S>& m1, const QuiverModule<S>& m2) {
  if (!m1.quiver.sameShape(m2.quiver))
    throw PreconditionError("direct_sum: quivers differ");
  if (m1.dim.inf + m2.dim.inf > 1)
    throw PreconditionError("direct_sum: both summands have dim_inf = 1");
  DimVector d;
  d.inf = m1.dim.inf + m2.dim.inf;
  d.v.resize(m1.dim.v.size());
  for (size_t i = 0; i < d.v.size(); ++i) d.v[i] = m1.dim.v[i] + m2.dim.v[i];
  QuiverModule<S> out = zeroModule<S>(m1.quiver, d);
  for (size_t a = 0; a < out.mats.size(); ++a) {
    const Arrow& ar = m1.quiver.arrows[a];
    const int r1 = m1.dimAt(ar.head), c1 = m1.dimAt(ar.tail);
    for (int i = 0; i < r1; ++i)
      for (int j = 0; j < c1; ++j) out.mats[a].at(i, j) = m1.mats[a].at(i, j);
    for (int i = 0; i < m2.dimAt(ar.head); ++i)
      for (int j = 0; j < m2.dimAt(ar.tail); ++j)
        out.mats[a].at(r1 + i, c1 + j) = m2.mats[a].at(i, j);
  }
  return out;
}

// Re-frames a module to a larger framing rank; the new arrow pairs act by 0.
// This is the module-level version of adding trivial summands to the framing.
template <class S>
QuiverModule<S> extendFraming(const QuiverModule<S>& m, int r) {
  if (r < m.quiver.r) throw PreconditionError("extendFraming: r shrinks");
  FramedQuiver q = frame(m.quiver.base, r);
  QuiverModule<S> out = zeroModule<S>(q, m.dim);
  const int nd = static_cast<int>(m.quiver.base.arrows.size());
  for (int a = 0; a < nd; ++a) out.mats[a] = m.mats[a];
  for (int t = 0; t < m.quiver.r; ++t) {
    out.mats[nd + t] = m.mats[nd + t];                            // b_t
    out.mats[nd + r + t] = m.mats[nd + m.quiver.r + t];           // c_t
  }
  return out;
}

// Basis of Hom(m, n): per-vertex blocks g with g_head B_a = B'_a g_tail.
template <class S>
std::vector<ModuleHom<S>> hom_space(const QuiverModule<S>& m,
                                    const QuiverModule<S>& n,
                                    double tol = kDefaultTolerance) {
  if (!m.quiver.sameShape(n.quiver))
    throw PreconditionError("hom_space: quivers differ");
  const int s = m.quiver.dynkinVertices();
  // flatten unknowns g_v (n.dim x m.dim per vertex), vertex order: inf, 0..s-1
  std::vector<int> offset(s + 1, 0);
  int unknowns = m.dim.inf * n.dim.inf;
  for (int i = 0; i < s; ++i) {
    offset[i + 1] = unknowns;
    unknowns += m.dim.v[i] * n.dim.v[i];
  }
  auto varIndex = [&](int vertex, int row, int col) {
    const int base = vertex == kInfVertex ? 0 : offset[vertex + 1];
    return base + row * m.dimAt(vertex) + col;
  };
  int equations = 0;
  for (const Arrow& a : m.quiver.arrows)
    equations += n.dimAt(a.head) * m.dimAt(a.tail);
  Matrix<S> sys(equations, unknowns);
  int eq = 0;
  for (size_t ai = 0; ai < m.quiver.arrows.size(); ++ai) {
    const Arrow& a = m.quiver.arrows[ai];
    const Matrix<S>& B = m.mats[ai];
    const Matrix<S>& Bp = n.mats[ai];
    for (int i = 0; i < n.dimAt(a.head); ++i)
      for (int j = 0; j < m.dimAt(a.tail); ++j) {
        // (g_head B_a - B'_a g_tail)(i,j) = 0
        for (int k = 0; k < m.dimAt(a.head); ++k)
          sys.at(eq, varIndex(a.head, i, k)) =
              sys.at(eq, varIndex(a.head, i, k)) + B.at(k, j);
        for (int k = 0; k < n.dimAt(a.tail); ++k)
          sys.at(eq, varIndex(a.tail, k, j)) =
              sys.at(eq, varIndex(a.tail, k, j)) - Bp.at(i, k);
        ++eq;
      }
  }
  Matrix<S> ker = kernelBasis(sys, tol);
  std::vector<ModuleHom<S>> basis;
  for (int t = 0; t < ker.cols(); ++t) {
    ModuleHom<S> h;
    h.inf = Matrix<S>(n.dim.inf, m.dim.inf);
    for (int i = 0; i < n.dim.inf; ++i)
      for (int j = 0; j < m.dim.inf; ++j)
        h.inf.at(i, j) = ker.at(varIndex(kInfVertex, i, j), t);
    for (int v = 0; v < s; ++v) {
      Matrix<S> g(n.dim.v[v], m.dim.v[v]);
      for (int i = 0; i < n.dim.v[v]; ++i)
        for (int j = 0; j < m.dim.v[v]; ++j)
          g.at(i, j) = ker.at(varIndex(v, i, j), t);
      h.dynkin.push_back(g);
    }
    basis.push_back(h);
  }
  return basis;
}

template <class S>
bool homIsInvertible(const ModuleHom<S>& h, double tol = kDefaultTolerance) {
  if (h.inf.rows() != h.inf.cols() || rank(h.inf, tol) != h.inf.rows())
    return false;
  for (const Matrix<S>& g : h.dynkin)
    if (g.rows() != g.cols() || rank(g, tol) != g.rows()) return false;
  return true;
}

// Isomorphism test. Equal dimensions plus an invertible hom; random linear
// combinations of the hom basis are tried with a caller-supplied seed.
template <class S>
bool is_isomorphic(const QuiverModule<S>& m, const QuiverModule<S>& n,
                   uint64_t seed, double tol = kDefaultTolerance) {
  if (!m.quiver.sameShape(n.quiver)) return false;
  if (!(m.dim == n.dim)) return false;
  std::vector<ModuleHom<S>> basis = hom_space(m, n, tol);
  if (basis.empty()) return m.dim.total() == 0;
  for (const ModuleHom<S>& h : basis)
    if (homIsInvertible(h, tol)) return true;
  Rng rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    ModuleHom<S> h = basis[0];
    auto combine = [&](Matrix<S>& acc, const Matrix<S>& g, long c) {
      acc = acc + g.scaled(scalarFromInt<S>(c));
    };
    long c0 = rng.intIn(-9, 9);
    h.inf = basis[0].inf.scaled(scalarFromInt<S>(c0));
    for (size_t v = 0; v < h.dynkin.size(); ++v)
      h.dynkin[v] = basis[0].dynkin[v].scaled(scalarFromInt<S>(c0));
    for (size_t t = 1; t < basis.size(); ++t) {
      long c = rng.intIn(-9, 9);
      combine(h.inf, basis[t].inf, c);
      for (size_t v = 0; v < h.dynkin.size(); ++v)
        combine(h.dynkin[v], basis[t].dynkin[v], c);
    }
    if (homIsInvertible(h, tol)) return true;
  }
  return false;
}

// Least per-vertex family of subspaces containing the seeds and closed under
// every arrow map.
template <class S>
SubspaceFamily<S> submodule_generated(const QuiverModule<S>& m,
                                      const SubspaceFamily<S>& seeds,
                                      double tol = kDefaultTolerance) {
  SubspaceFamily<S> u;
  u.inf = canonicalSpan(seeds.inf, tol);
  for (const Matrix<S>& s : seeds.dynkin) u.dynkin.push_back(canonicalSpan(s, tol));
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t ai = 0; ai < m.quiver.arrows.size(); ++ai) {
      const Arrow& a = m.quiver.arrows[ai];
      const Matrix<S>& ut = u.at(a.tail);
      if (ut.cols() == 0) continue;
      Matrix<S> img = m.mats[ai] * ut;
      Matrix<S>& uh = u.at(a.head);
      const int before = uh.cols();
      Matrix<S> merged = subspaceSum(uh, img, tol);
      if (merged.cols() != before) {
        uh = merged;
        changed = true;
      }
    }
  }
  return u;
}

// Submodule generated by the full framing component.
template <class S>
SubspaceFamily<S> infinityClosure(const QuiverModule<S>& m,
                                  double tol = kDefaultTolerance) {
  SubspaceFamily<S> seeds;
  seeds.inf = Matrix<S>::identity(m.dim.inf);
  for (int i = 0; i < m.quiver.dynkinVertices(); ++i)
    seeds.dynkin.push_back(Matrix<S>(m.dim.v[i], 0));
  return submodule_generated(m, seeds, tol);
}

// Greatest family U_i (i in Z, zero elsewhere) with B_a U_tail inside U_head
// for arrows inside Z and B_a U_tail = 0 for arrows leaving Z.
template <class S>
SubspaceFamily<S> max_submodule_supported(const QuiverModule<S>& m,
                                          const std::vector<int>& zSet,
                                          double tol = kDefaultTolerance) {
  const int s = m.quiver.dynkinVertices();
  std::vector<bool> inZ(s, false);
  for (int z : zSet) {
    if (z == kInfVertex)
      throw PreconditionError("max_submodule_supported: inf not allowed in Z");
    inZ[z] = true;
  }
  SubspaceFamily<S> u;
  u.inf = Matrix<S>(m.dim.inf, 0);
  for (int i = 0; i < s; ++i)
    u.dynkin.push_back(inZ[i] ? Matrix<S>::identity(m.dim.v[i])
                              : Matrix<S>(m.dim.v[i], 0));
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t ai = 0; ai < m.quiver.arrows.size(); ++ai) {
      const Arrow& a = m.quiver.arrows[ai];
      if (a.tail == kInfVertex || !inZ[a.tail]) continue;
      Matrix<S>& ut = u.dynkin[a.tail];
      if (ut.cols() == 0) continue;
      const Matrix<S>& uh = u.at(a.head);
      // keep the part of ut whose image lands inside uh
      Matrix<S> img = m.mats[ai] * ut;
      Matrix<S> refined;
      if (uh.cols() == 0) {
        refined = ut * kernelBasis(img, tol);
      } else {
        Matrix<S> k = kernelBasis(hstack(img, uh), tol);
        Matrix<S> coeff(ut.cols(), k.cols());
        for (int i = 0; i < ut.cols(); ++i)
          for (int j = 0; j < k.cols(); ++j) coeff.at(i, j) = k.at(i, j);
        refined = ut * coeff;
      }
      refined = canonicalSpan(refined, tol);
      if (refined.cols() != ut.cols()) {
        ut = refined;
        changed = true;
      }
    }
  }
  return u;
}

template <class S>
DimVector familyDims(const SubspaceFamily<S>& u) {
  DimVector d;
  d.inf = u.inf.cols();
  for (const Matrix<S>& b : u.dynkin) d.v.push_back(b.cols());
  return d;
}

// New module on the subspaces of a closed family (exact restriction).
template <class S>
QuiverModule<S> restrictToFamily(const QuiverModule<S>& m,
                                 const SubspaceFamily<S>& u,
                                 double tol = kDefaultTolerance) {
  QuiverModule<S> out;
  out.quiver = m.quiver;
  out.dim = familyDims(u);
  for (size_t ai = 0; ai < m.quiver.arrows.size(); ++ai) {
    const Arrow& a = m.quiver.arrows[ai];
    Matrix<S> img = m.mats[ai] * u.at(a.tail);
    auto x = solve(u.at(a.head), img, tol);
    if (!x) throw PreconditionError("restrictToFamily: family not closed");
    out.mats.push_back(*x);
  }
  return out;
}

// Quotient by a closed family: completes each basis by standard vectors and
// reads off the induced maps on the complement coordinates.
template <class S>
QuiverModule<S> quotientByFamily(const QuiverModule<S>& m,
                                 const SubspaceFamily<S>& u,
                                 double tol = kDefaultTolerance) {
  const int s = m.quiver.dynkinVertices();
  PerVertex<Matrix<S>> full;      // [U | C] complete basis per vertex
  PerVertex<int> subDim;
  auto complete = [&](const Matrix<S>& basis, int ambient) {
    Matrix<S> f = basis;
    for (int j = 0; j < ambient; ++j) {
      Matrix<S> e(ambient, 1);
      e.at(j, 0) = ScalarTraits<S>::one();
      if (!inSpan(e, f, tol)) f = hstack(f, e);
    }
    if (f.cols() != ambient)
      throw PreconditionError("quotientByFamily: completion failed");
    return f;
  };
  full.inf = complete(u.inf, m.dim.inf);
  subDim.inf = u.inf.cols();
  for (int i = 0; i < s; ++i) {
    full.dynkin.push_back(complete(u.dynkin[i], m.dim.v[i]));
    subDim.dynkin.push_back(u.dynkin[i].cols());
  }
  QuiverModule<S> out;
  out.quiver = m.quiver;
  out.dim.inf = m.dim.inf - subDim.inf;
  for (int i = 0; i < s; ++i) out.dim.v.push_back(m.dim.v[i] - subDim.dynkin[i]);
  for (size_t ai = 0; ai < m.quiver.arrows.size(); ++ai) {
    const Arrow& a = m.quiver.arrows[ai];
    auto coords = solve(full.at(a.head), m.mats[ai] * full.at(a.tail), tol);
    if (!coords) throw PreconditionError("quotientByFamily: solve failed");
    const int sh = subDim.at(a.head), st = subDim.at(a.tail);
    Matrix<S> blk(m.dimAt(a.head) - sh, m.dimAt(a.tail) - st);
    for (int i = 0; i < blk.rows(); ++i)
      for (int j = 0; j < blk.cols(); ++j)
        blk.at(i, j) = coords->at(sh + i, st + j);
    out.mats.push_back(blk);
  }
  return out;
}

// Module on the dual spaces with every arrow transposed onto its reverse;
// submodules correspond to quotients of the original.
template <class S>
QuiverModule<S> transposeModule(const QuiverModule<S>& m) {
  QuiverModule<S> out;
  out.quiver = m.quiver;
  out.dim = m.dim;
  out.mats.resize(m.mats.size());
  for (size_t ai = 0; ai < m.mats.size(); ++ai)
    out.mats[ai] = m.mats[m.quiver.arrows[ai].reverse].transpose();
  return out;
}

}  // namespace kql
