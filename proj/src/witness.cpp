#include "kql/witness.hpp"

namespace kql {

std::vector<Poly> orbit_ideal_generators(const std::pair<Rat, Rat>& p, int m) {
  const Rat &a = p.first, &b = p.second;
  if (a == 0 && b == 0)
    throw InputError("witness: no orbit may include the origin");
  auto power = [](const Rat& base, int e) {
    Rat acc(1);
    for (int t = 0; t < e; ++t) acc *= base;
    return acc;
  };
  std::vector<Poly> gens;
  if (a == 0) {
    // orbit {(0, zeta^-t b)}: x = 0, y^m = b^m
    gens.push_back(Poly::monomial(Mono{1, 0}));
    Poly g = Poly::monomial(Mono{0, m});
    g.add(Mono{0, 0}, -power(b, m));
    gens.push_back(g);
  } else if (b == 0) {
    gens.push_back(Poly::monomial(Mono{0, 1}));
    Poly g = Poly::monomial(Mono{m, 0});
    g.add(Mono{0, 0}, -power(a, m));
    gens.push_back(g);
  } else {
    // x^m = a^m together with y = (ab/a^m) x^{m-1}: on the orbit y = ab/x
    Poly g1 = Poly::monomial(Mono{m, 0});
    g1.add(Mono{0, 0}, -power(a, m));
    Poly g2 = Poly::monomial(Mono{0, 1});
    g2.add(Mono{m - 1, 0}, -(a * b) / power(a, m));
    gens.push_back(g1);
    gens.push_back(g2);
  }
  return gens;
}

namespace {

bool sameOrbit(const std::pair<Rat, Rat>& p, const std::pair<Rat, Rat>& q,
               int m) {
  auto power = [](const Rat& base, int e) {
    Rat acc(1);
    for (int t = 0; t < e; ++t) acc *= base;
    return acc;
  };
  if ((p.first == 0) != (q.first == 0)) return false;
  if ((p.second == 0) != (q.second == 0)) return false;
  return power(p.first, m) == power(q.first, m) &&
         power(p.second, m) == power(q.second, m) &&
         p.first * p.second == q.first * q.second;
}

}  // namespace

EquivariantIdeal free_orbit_ideal(const std::vector<std::pair<Rat, Rat>>& pts,
                                  int m) {
  if (pts.empty()) throw InputError("witness: need at least one point");
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (sameOrbit(pts[i], pts[j], m))
        throw InputError("witness: orbits collide");
  EquivariantIdeal acc = ideal_from_generators(orbit_ideal_generators(pts[0], m), m);
  if (acc.colength() != m)
    throw PreconditionError("witness: orbit ideal has wrong colength");
  for (size_t t = 1; t < pts.size(); ++t) {
    EquivariantIdeal next =
        ideal_from_generators(orbit_ideal_generators(pts[t], m), m);
    if (next.colength() != m)
      throw PreconditionError("witness: orbit ideal has wrong colength");
    acc = ideal_from_model(intersectModels(acc.model, next.model));
  }
  if (acc.colength() != static_cast<int>(pts.size()) * m)
    throw PreconditionError("witness: orbit union has wrong colength");
  return acc;
}

QuiverModule<Rat> witness_module(const std::vector<std::pair<Rat, Rat>>& pts,
                                 const GroupSpec& g, int r) {
  if (!g.isCyclic()) throw InputError("witness: cyclic groups only");
  if (r < 1) throw InputError("witness: r must be >= 1");
  EquivariantIdeal I = free_orbit_ideal(pts, g.m);
  ADHMDatum<Rat> d = ideal_to_adhm(I);
  // extend the framing by r-1 trivial summands
  d.r = r;
  Matrix<Rat> i(d.dimV(), r), j(r, d.dimV());
  for (int t = 0; t < d.dimV(); ++t) i.at(t, 0) = d.i.at(t, 0);
  d.i = i;
  d.j = j;
  const CharacterTable ct = character_table(g);
  const FramedQuiver q = frame(mckay_quiver(ct), r);
  return adhm_to_quiver(d, q);
}

}  // namespace kql
