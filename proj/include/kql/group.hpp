#pragma once

// Finite subgroups of SL(2,C) of ADE type, with built-in character data.
//
// Families and their extended Dynkin diagrams:
//   A(m)  cyclic of order m (m >= 1; A(1) is the trivial group)  ->  affine A_{m-1}
//   D(m)  binary dihedral of order 4(m-2) (m >= 4)               ->  affine D_m
//   E6    binary tetrahedral, order 24                           ->  affine E6
//   E7    binary octahedral, order 48                            ->  affine E7
//   E8    binary icosahedral, order 120                          ->  affine E8
//
// Canonical vertex orders (fixed so that emitted files are stable):
//   A(m): rho_k = weight-k character of diag(zeta, zeta^-1), k = 0..m-1.
//   D(m): trivial; (a->1, b->-1); the two characters with a->-1 (chi(b) real
//         descending, then imaginary part descending); then the 2-dimensional
//         phi_1..phi_{k-1}, k = m-2.
//   E6:   1, 1', 1'', 2, 2', 2'', 3 with 1' the cube-character taking omega
//         on the class of order-3 elements listed first.
//   E7:   1, 1', 2, 2', 2'', 3, 3', 4 (2 = defining, 2' = 2 (x) sign,
//         2'' = pullback of the S4 two, 3' adjacent to 2).
//   E8:   1, 2, 2', 3, 3', 4, 4', 5, 6 (unprimed = symmetric powers of the
//         defining representation, primed = their Galois partners).

#include <string>
#include <vector>

#include "kql/rational.hpp"

namespace kql {

enum class Family { A, D, E6, E7, E8 };

struct GroupSpec {
  Family family = Family::A;
  int m = 1;  // order for A, Dynkin index for D, ignored for E types

  int order() const;
  int vertexCount() const;  // irreps = vertices of the affine diagram
  std::string name() const;
  void validate() const;
  bool isCyclic() const { return family == Family::A; }

  static GroupSpec parse(const std::string& s);
};

struct CharacterTable {
  GroupSpec group;
  std::vector<int> dims;                  // per irrep, rho_0 first
  std::vector<int> classSizes;            // per conjugacy class
  std::vector<std::vector<Cx>> chi;       // [irrep][class]
  std::vector<Cx> chiL;                   // character of the tautological L

  int irreps() const { return static_cast<int>(dims.size()); }
  int classes() const { return static_cast<int>(classSizes.size()); }

  // Class-weighted inner product <a, b> = (1/|G|) sum |c| a(c) conj(b(c)).
  Cx inner(const std::vector<Cx>& a, const std::vector<Cx>& b) const;
};

CharacterTable character_table(const GroupSpec& g);

// Checks orthonormality of the rows and realness of chi_L; throws on failure.
void validateCharacterTable(const CharacterTable& ct, double tol = 1e-6);

}  // namespace kql
