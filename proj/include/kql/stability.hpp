#pragma once

// Stability parameters with a positivity set, stability verdicts, the
// concentrated module, and R/S-equivalence.
//
// Supported parameters have theta_i >= 0 at every Dynkin vertex, theta_i > 0
// exactly on the positivity set, and theta_inf fixed by theta(1, v) = 0.
// For a module M of dimension (1, v') with theta(M) = 0 and zero residual:
//
//   stable      <=>  the submodule generated by the framing component is all
//                    of M, and the largest submodule supported on the zero
//                    set of theta vanishes;
//   semistable  <=>  the framing-generated submodule is full at every
//                    positivity-set vertex.
//
// Both claims follow from splitting candidate submodules U by dim_inf U:
// when dim_inf U = 1 then theta(U) = -theta(M/U) <= 0, so stability forces U
// to contain everything generated from the framing line; when dim_inf U = 0
// then theta(U) >= 0 with equality exactly for U supported on the zero set.
// The brute-force destabilizer search in the test suite cross-validates this.

#include <optional>
#include <vector>

#include "kql/module.hpp"

namespace kql {

struct StabilityParameter {
  Rat thetaInf;
  std::vector<Rat> theta;        // per Dynkin vertex
  std::vector<int> positivity;   // vertices with theta_i > 0

  Rat of(const DimVector& d) const {
    Rat acc = thetaInf * d.inf;
    for (size_t i = 0; i < theta.size(); ++i) acc += theta[i] * d.v[i];
    return acc;
  }
};

inline Rat theta_of(const StabilityParameter& t, const DimVector& d) {
  return t.of(d);
}

// theta_0 = (-n, 1, 0, ..., 0)
inline StabilityParameter theta_zero(int vertices, int n) {
  StabilityParameter t;
  t.thetaInf = Rat(-n);
  t.theta.assign(vertices, Rat(0));
  t.theta[0] = 1;
  t.positivity = {0};
  return t;
}

// Representative of the chamber C+: theta_i = 1 on every Dynkin vertex.
inline StabilityParameter c_plus_representative(const std::vector<int>& v) {
  StabilityParameter t;
  t.theta.assign(v.size(), Rat(1));
  Rat s(0);
  for (int x : v) s += x;
  t.thetaInf = -s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i) t.positivity.push_back(i);
  return t;
}

// theta_I: 1 on I, 0 on the other Dynkin vertices, theta_inf balancing.
inline StabilityParameter theta_I(const std::vector<int>& I,
                                  const std::vector<int>& v) {
  StabilityParameter t;
  t.theta.assign(v.size(), Rat(0));
  Rat s(0);
  for (int i : I) {
    if (i < 0 || i >= static_cast<int>(v.size()))
      throw InputError("theta_I: vertex out of range");
    t.theta[i] = 1;
    s += v[i];
  }
  t.thetaInf = -s;
  t.positivity = I;
  std::sort(t.positivity.begin(), t.positivity.end());
  t.positivity.erase(std::unique(t.positivity.begin(), t.positivity.end()),
                     t.positivity.end());
  return t;
}

inline void requireSupportedShape(const StabilityParameter& t) {
  for (const Rat& x : t.theta)
    if (x < 0)
      throw PreconditionError("stability: parameter outside the supported "
                              "positivity-set family");
  for (size_t i = 0; i < t.theta.size(); ++i) {
    const bool pos = std::find(t.positivity.begin(), t.positivity.end(),
                               static_cast<int>(i)) != t.positivity.end();
    if (pos != (t.theta[i] > 0))
      throw PreconditionError("stability: positivity set inconsistent");
  }
}

template <class S>
std::vector<int> zeroSet(const QuiverModule<S>& m, const StabilityParameter& t) {
  std::vector<int> z;
  for (int i = 0; i < m.quiver.dynkinVertices(); ++i)
    if (t.theta[i] == 0) z.push_back(i);
  return z;
}

template <class S>
void requirePiModule(const QuiverModule<S>& m, double tol = kDefaultTolerance) {
  if (!residualIsZero(m, tol))
    throw PreconditionError("stability: nonzero preprojective residual");
}

template <class S>
bool is_stable(const QuiverModule<S>& m, const StabilityParameter& t,
               double tol = kDefaultTolerance) {
  requireSupportedShape(t);
  requirePiModule(m, tol);
  if (m.dim.inf != 1)
    throw PreconditionError("is_stable: needs dim_inf = 1");
  if (t.of(m.dim) != 0) return false;
  SubspaceFamily<S> closure = infinityClosure(m, tol);
  if (!(familyDims(closure) == m.dim)) return false;
  SubspaceFamily<S> zpart = max_submodule_supported(m, zeroSet(m, t), tol);
  return familyDims(zpart).total() == 0;
}

template <class S>
bool is_semistable(const QuiverModule<S>& m, const StabilityParameter& t,
                   double tol = kDefaultTolerance) {
  requireSupportedShape(t);
  requirePiModule(m, tol);
  if (m.dim.inf != 1)
    throw PreconditionError("is_semistable: needs dim_inf = 1");
  if (t.of(m.dim) != 0) return false;
  SubspaceFamily<S> closure = infinityClosure(m, tol);
  DimVector cd = familyDims(closure);
  for (int p : t.positivity)
    if (cd.v[p] != m.dim.v[p]) return false;
  return true;
}

// A destabilizing submodule when one exists: either the proper submodule
// generated by the framing line or a nonzero submodule on the zero set.
// strict = true looks for theta(U) < 0 (semistability violations).
template <class S>
std::optional<SubspaceFamily<S>> destabilizer(const QuiverModule<S>& m,
                                              const StabilityParameter& t,
                                              bool strict,
                                              double tol = kDefaultTolerance) {
  requireSupportedShape(t);
  SubspaceFamily<S> closure = infinityClosure(m, tol);
  DimVector cd = familyDims(closure);
  if (!(cd == m.dim)) {
    const Rat val = t.of(cd);
    if (!strict || val < 0) return closure;
  }
  if (!strict) {
    SubspaceFamily<S> zpart = max_submodule_supported(m, zeroSet(m, t), tol);
    if (familyDims(zpart).total() != 0) return zpart;
  }
  return std::nullopt;
}

// Restrict to the framing-generated submodule, then quotient away submodules
// supported where theta_0 vanishes until none remain. Each quotient step
// removes vertex-simple factors only, so the dimension at vertex 0 survives.
template <class S>
QuiverModule<S> concentrate(const QuiverModule<S>& m,
                            double tol = kDefaultTolerance) {
  const int n = m.dim.inf == 1 ? m.dim.v[0] : 0;
  StabilityParameter t0 = theta_zero(m.quiver.dynkinVertices(), n);
  if (!is_semistable(m, t0, tol))
    throw PreconditionError("concentrate: input is not theta_0-semistable");
  QuiverModule<S> cur = restrictToFamily(m, infinityClosure(m, tol), tol);
  std::vector<int> z;
  for (int i = 1; i < m.quiver.dynkinVertices(); ++i) z.push_back(i);
  for (;;) {
    SubspaceFamily<S> u = max_submodule_supported(cur, z, tol);
    if (familyDims(u).total() == 0) break;
    cur = quotientByFamily(cur, u, tol);
  }
  return cur;
}

// Concentrated module plus the vertex-simple multiplicities that were split
// off; the multiplicity vector vanishes at the framing vertex and at 0.
template <class S>
std::pair<QuiverModule<S>, DimVector> polystable_theta0(
    const QuiverModule<S>& m, double tol = kDefaultTolerance) {
  QuiverModule<S> con = concentrate(m, tol);
  DimVector mult;
  mult.inf = m.dim.inf - con.dim.inf;
  for (size_t i = 0; i < m.dim.v.size(); ++i)
    mult.v.push_back(m.dim.v[i] - con.dim.v[i]);
  return {con, mult};
}

template <class S>
bool r_equivalent(const QuiverModule<S>& m, const QuiverModule<S>& n,
                  uint64_t seed, double tol = kDefaultTolerance) {
  return is_isomorphic(concentrate(m, tol), concentrate(n, tol), seed, tol);
}

template <class S>
bool s_equivalent(const QuiverModule<S>& m, const QuiverModule<S>& n,
                  uint64_t seed, double tol = kDefaultTolerance) {
  if (!(m.dim == n.dim)) return false;
  return r_equivalent(m, n, seed, tol);
}

// dim m <= (1, n delta) with n = dim_0 m, componentwise.
template <class S>
bool dimension_bound_check(const QuiverModule<S>& m) {
  if (m.dim.inf != 1)
    throw PreconditionError("dimension_bound_check: needs dim_inf = 1");
  const CharacterTable ct = character_table(m.quiver.group());
  const std::vector<int> d = delta(ct);
  const int n = m.dim.v[0];
  for (size_t i = 0; i < m.dim.v.size(); ++i)
    if (m.dim.v[i] > n * d[i]) return false;
  return true;
}

}  // namespace kql
