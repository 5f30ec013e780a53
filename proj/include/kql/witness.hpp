#pragma once

// Witness modules: the framed module of the ideal of n distinct free orbits,
// extended to framing rank r by trivial summands. These are the explicit
// theta_0-stable points used throughout the test corpus.

#include <utility>
#include <vector>

#include "kql/ideal.hpp"
#include "kql/module.hpp"

namespace kql {

// Vanishing ideal of the orbit of (a, b) under diag(zeta, zeta^-1), as
// weight-homogeneous rational generators. The point must not be the origin.
std::vector<Poly> orbit_ideal_generators(const std::pair<Rat, Rat>& p, int m);

// Ideal of the union of the orbits of the given points; orbits must be
// pairwise disjoint and free (no origin).
EquivariantIdeal free_orbit_ideal(const std::vector<std::pair<Rat, Rat>>& pts,
                                  int m);

QuiverModule<Rat> witness_module(const std::vector<std::pair<Rat, Rat>>& pts,
                                 const GroupSpec& g, int r);

}  // namespace kql
