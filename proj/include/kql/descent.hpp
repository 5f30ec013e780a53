#pragma once

// Type-A invariant-ring descent. The invariant ring of the cyclic group of
// order m is C[u, v, w]/(uv - w^m) with u = x^m, v = y^m, w = xy; an
// equivariant ideal I descends to I cap C[x,y]^Gamma. The descended ideal is
// modeled exactly as the cyclic subalgebra of C[x,y]/I generated by the
// class of 1 under the three invariant multiplication operators, so its
// colength needs no degree truncation.

#include <map>
#include <string>
#include <vector>

#include "kql/ideal.hpp"

namespace kql {

struct InvariantRingPresentation {
  int m = 1;

  Poly u() const { return Poly::monomial(Mono{m, 0}); }
  Poly v() const { return Poly::monomial(Mono{0, m}); }
  Poly w() const { return Poly::monomial(Mono{1, 1}); }
  // u*v - w^m vanishes identically in C[x,y]
  bool relationHolds() const { return (u() * v() - wPow(m)).isZero(); }
  Poly wPow(int e) const { return Poly::monomial(Mono{e, e}); }
};

inline InvariantRingPresentation invariant_presentation(int m) {
  if (m < 1) throw InputError("invariant_presentation: m must be >= 1");
  return InvariantRingPresentation{m};
}

// Normal monomial u^a v^b w^c with 0 <= c < m (w^m rewrites to uv); as an
// x,y-monomial this is x^{ma+c} y^{mb+c}.
struct RMono {
  int a = 0, b = 0, c = 0;

  Mono toXY(int m) const { return Mono{m * a + c, m * b + c}; }
  bool operator==(const RMono& o) const = default;
};

struct RMonoOrder {
  int m;
  bool operator()(const RMono& p, const RMono& q) const {
    return MonoOrder{}(p.toXY(m), q.toXY(m));
  }
};

class RPoly {
 public:
  explicit RPoly(int m) : m_(m), terms_(RMonoOrder{m}) {}
  int m() const { return m_; }
  bool isZero() const { return terms_.empty(); }
  const std::map<RMono, Rat, RMonoOrder>& terms() const { return terms_; }
  void add(const RMono& mono, const Rat& c);
  RMono leadMono() const;
  Poly toXY() const;
  std::string toString() const;
  bool operator==(const RPoly& o) const {
    return m_ == o.m_ && terms_ == o.terms_;
  }

 private:
  int m_;
  std::map<RMono, Rat, RMonoOrder> terms_;
};

struct InvariantIdeal {
  int m = 1;
  std::vector<RPoly> gens;       // corner generators, canonical
  std::vector<RMono> standard;   // staircase of the quotient
  int colength = 0;

  bool operator==(const InvariantIdeal& o) const {
    return m == o.m && standard == o.standard && gens == o.gens;
  }
};

InvariantIdeal descend_ideal(const EquivariantIdeal& I);

inline int colength(const InvariantIdeal& J) { return J.colength; }

// Ideal-level invariance of the descent under R-equivalence: both modules
// concentrate to the same framed ideal downstairs.
template <class S>
bool d_invariance_check(const QuiverModule<S>& m1, const QuiverModule<S>& m2,
                        uint64_t seed, double tol = kDefaultTolerance);

}  // namespace kql

#include "kql/stability.hpp"

namespace kql {

template <class S>
bool d_invariance_check(const QuiverModule<S>& m1, const QuiverModule<S>& m2,
                        uint64_t seed, double tol) {
  if constexpr (!ScalarTraits<S>::exact) {
    throw PreconditionError("d_invariance_check: exact scalars required");
  } else {
    if (m1.quiver.r != 1 || m2.quiver.r != 1)
      throw PreconditionError("d_invariance_check: needs r = 1");
    if (!m1.quiver.group().isCyclic())
      throw PreconditionError("d_invariance_check: cyclic groups only");
    if (!r_equivalent(m1, m2, seed, tol))
      throw PreconditionError(
          "d_invariance_check: modules are not R-equivalent");
    auto descendOf = [&](const QuiverModule<S>& m) {
      QuiverModule<S> con = concentrate(m, tol);
      return descend_ideal(adhm_to_ideal(quiver_to_adhm(con)));
    };
    return descendOf(m1) == descendOf(m2);
  }
}

}  // namespace kql
