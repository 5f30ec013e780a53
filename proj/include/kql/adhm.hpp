#pragma once

// ADHM form of a framed module for cyclic groups: W trivial of dimension r,
// V graded by weights mod m (the embedding diag(zeta, zeta^-1); the basis
// vector e_x of L carries weight +1, e_y weight -1), and equivariant maps
//     B1: raises the weight by 1,   B2: lowers it by 1,
//     i: W -> V landing in weight 0,   j: V -> W vanishing off weight 0.
// The moment-map residual is [B1, B2] + i j; the sign is pinned by the
// convention that commuting B's with i j = 0 give zero.

#include <algorithm>
#include <numeric>
#include <vector>

#include "kql/module.hpp"

namespace kql {

template <class S>
struct ADHMDatum {
  GroupSpec group;  // family A only
  int r = 1;        // dim W; 0 is allowed for unframed data
  std::vector<int> weights;  // weight of each V basis vector, in 0..m-1
  Matrix<S> B1, B2;          // dimV x dimV
  Matrix<S> i;               // dimV x r
  Matrix<S> j;               // r x dimV

  int dimV() const { return static_cast<int>(weights.size()); }
};

template <class S>
void validateGrading(const ADHMDatum<S>& d, double tol = kDefaultTolerance) {
  if (!d.group.isCyclic())
    throw PreconditionError("adhm: only cyclic groups carry this form");
  const int m = d.group.m, n = d.dimV();
  if (d.B1.rows() != n || d.B1.cols() != n || d.B2.rows() != n ||
      d.B2.cols() != n || d.i.rows() != n || d.i.cols() != d.r ||
      d.j.rows() != d.r || d.j.cols() != n)
    throw PreconditionError("adhm: shape mismatch");
  for (int w : d.weights)
    if (w < 0 || w >= m) throw PreconditionError("adhm: weight out of range");
  auto bad = [tol](const S& x) {
    return !ScalarTraits<S>::isZero(x, tol, 1.0);
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (bad(d.B1.at(a, b)) && d.weights[a] != (d.weights[b] + 1) % m)
        throw PreconditionError("adhm: B1 entry violates the grading");
      if (bad(d.B2.at(a, b)) && d.weights[a] != (d.weights[b] + m - 1) % m)
        throw PreconditionError("adhm: B2 entry violates the grading");
    }
  for (int a = 0; a < n; ++a) {
    for (int t = 0; t < d.r; ++t) {
      if (bad(d.i.at(a, t)) && d.weights[a] != 0)
        throw PreconditionError("adhm: i lands outside weight 0");
      if (bad(d.j.at(t, a)) && d.weights[a] != 0)
        throw PreconditionError("adhm: j sees weight != 0");
    }
  }
}

template <class S>
Matrix<S> adhm_residual(const ADHMDatum<S>& d) {
  validateGrading(d);
  return d.B1 * d.B2 - d.B2 * d.B1 + d.i * d.j;
}

// Weight-sorted copy (stable in the original basis order); conversions to
// quiver form assume the basis is grouped by weight.
template <class S>
ADHMDatum<S> sortByWeight(const ADHMDatum<S>& d) {
  const int n = d.dimV();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return d.weights[a] < d.weights[b]; });
  ADHMDatum<S> out;
  out.group = d.group;
  out.r = d.r;
  out.weights.resize(n);
  out.B1 = Matrix<S>(n, n);
  out.B2 = Matrix<S>(n, n);
  out.i = Matrix<S>(n, d.r);
  out.j = Matrix<S>(d.r, n);
  for (int a = 0; a < n; ++a) {
    out.weights[a] = d.weights[perm[a]];
    for (int b = 0; b < n; ++b) {
      out.B1.at(a, b) = d.B1.at(perm[a], perm[b]);
      out.B2.at(a, b) = d.B2.at(perm[a], perm[b]);
    }
    for (int t = 0; t < d.r; ++t) {
      out.i.at(a, t) = d.i.at(perm[a], t);
      out.j.at(t, a) = d.j.at(t, perm[a]);
    }
  }
  return out;
}

// The x/y role tags on the arrows make the translation between the two forms
// a pure bookkeeping step; eps is folded into the weight-raising and framing
// arrows so that the two residuals match block for block.
template <class S>
ADHMDatum<S> quiver_to_adhm(const QuiverModule<S>& mod) {
  validateShapes(mod);
  const GroupSpec& g = mod.quiver.group();
  if (!g.isCyclic())
    throw PreconditionError("quiver_to_adhm: unsupported family (cyclic only)");
  const int m = g.m;
  ADHMDatum<S> d;
  d.group = g;
  d.r = mod.quiver.r;
  std::vector<int> blockStart(m + 1, 0);
  for (int k = 0; k < m; ++k) blockStart[k + 1] = blockStart[k] + mod.dim.v[k];
  const int n = blockStart[m];
  for (int k = 0; k < m; ++k)
    for (int t = 0; t < mod.dim.v[k]; ++t) d.weights.push_back(k);
  d.B1 = Matrix<S>(n, n);
  d.B2 = Matrix<S>(n, n);
  d.i = Matrix<S>(n, d.r);
  d.j = Matrix<S>(d.r, n);
  for (size_t ai = 0; ai < mod.quiver.arrows.size(); ++ai) {
    const Arrow& a = mod.quiver.arrows[ai];
    const Matrix<S>& B = mod.mats[ai];
    switch (a.role) {
      case ArrowRole::DynkinX:
      case ArrowRole::DynkinY: {
        Matrix<S>* target = a.role == ArrowRole::DynkinX ? &d.B1 : &d.B2;
        const int sign = a.role == ArrowRole::DynkinX ? a.eps : 1;
        for (int i = 0; i < B.rows(); ++i)
          for (int j = 0; j < B.cols(); ++j)
            target->at(blockStart[a.head] + i, blockStart[a.tail] + j) =
                sign < 0 ? -B.at(i, j) : B.at(i, j);
        break;
      }
      case ArrowRole::FrameOut: {
        const int t = a.id[0] == 'b' ? std::stoi(a.id.substr(1)) : 0;
        for (int i = 0; i < B.rows(); ++i)
          d.i.at(blockStart[0] + i, t) =
              a.eps < 0 ? -B.at(i, 0) : B.at(i, 0);
        break;
      }
      case ArrowRole::FrameBack: {
        const int t = a.id[0] == 'c' ? std::stoi(a.id.substr(1)) : 0;
        for (int j = 0; j < B.cols(); ++j)
          d.j.at(t, blockStart[0] + j) = B.at(0, j);
        break;
      }
      case ArrowRole::DynkinPlain:
        throw PreconditionError("quiver_to_adhm: untagged arrow");
    }
  }
  validateGrading(d);
  return d;
}

template <class S>
QuiverModule<S> adhm_to_quiver(const ADHMDatum<S>& din, const FramedQuiver& q) {
  validateGrading(din);
  if (!q.group().isCyclic() || q.group().m != din.group.m || q.r != din.r)
    throw PreconditionError("adhm_to_quiver: quiver does not match the datum");
  ADHMDatum<S> d = sortByWeight(din);
  const int m = d.group.m;
  DimVector dim;
  dim.inf = 1;
  dim.v.assign(m, 0);
  for (int w : d.weights) ++dim.v[w];
  std::vector<int> blockStart(m + 1, 0);
  for (int k = 0; k < m; ++k) blockStart[k + 1] = blockStart[k] + dim.v[k];
  QuiverModule<S> mod = zeroModule<S>(q, dim);
  for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const Arrow& a = q.arrows[ai];
    Matrix<S>& B = mod.mats[ai];
    switch (a.role) {
      case ArrowRole::DynkinX:
      case ArrowRole::DynkinY: {
        const Matrix<S>& src = a.role == ArrowRole::DynkinX ? d.B1 : d.B2;
        const int sign = a.role == ArrowRole::DynkinX ? a.eps : 1;
        for (int i = 0; i < B.rows(); ++i)
          for (int j = 0; j < B.cols(); ++j) {
            const S& x = src.at(blockStart[a.head] + i, blockStart[a.tail] + j);
            B.at(i, j) = sign < 0 ? -x : x;
          }
        break;
      }
      case ArrowRole::FrameOut: {
        const int t = std::stoi(a.id.substr(1));
        for (int i = 0; i < B.rows(); ++i) {
          const S& x = d.i.at(blockStart[0] + i, t);
          B.at(i, 0) = a.eps < 0 ? -x : x;
        }
        break;
      }
      case ArrowRole::FrameBack: {
        const int t = std::stoi(a.id.substr(1));
        for (int j = 0; j < B.cols(); ++j) B.at(0, j) = d.j.at(t, blockStart[0] + j);
        break;
      }
      case ArrowRole::DynkinPlain:
        throw PreconditionError("adhm_to_quiver: untagged arrow");
    }
  }
  return mod;
}

}  // namespace kql
