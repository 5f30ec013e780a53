#pragma once

// Gamma-invariant finite-colength ideals of C[x,y] for cyclic groups, kept
// together with their quotient-ring model: V = C[x,y]/I with the two
// multiplication operators and the class of 1. The model makes membership,
// colength, intersection, and the canonical reduced Groebner basis exact
// linear algebra, with no degree-truncation heuristics.

#include <vector>

#include "kql/adhm.hpp"
#include "kql/groebner.hpp"
#include "kql/matrix.hpp"
#include "kql/poly.hpp"

namespace kql {

struct IdealModel {
  int m = 1;                 // cyclic group order
  std::vector<int> weights;  // per basis vector of V
  Matrix<Rat> mulX, mulY;    // commuting multiplication operators
  Matrix<Rat> one;           // class of 1, dimV x 1

  int dim() const { return static_cast<int>(weights.size()); }
};

struct EquivariantIdeal {
  int m = 1;
  std::vector<Poly> gens;       // reduced Groebner basis, canonical
  std::vector<Mono> standard;   // staircase monomials, canonical order
  IdealModel model;

  int colength() const { return model.dim(); }
  bool operator==(const EquivariantIdeal& o) const {
    return m == o.m && gens == o.gens;
  }
};

// f(x,y) evaluated on the model applied to the class of 1; zero iff f in I.
Matrix<Rat> evalOnModel(const Poly& f, const IdealModel& model);
bool idealContains(const EquivariantIdeal& I, const Poly& f);

// From explicit generators (each must be weight-homogeneous mod m; finite
// colength required). Runs Buchberger.
EquivariantIdeal ideal_from_generators(const std::vector<Poly>& gens, int m);

// From any cyclic model (closure of `one` under mulX/mulY must be all of V);
// extracts the staircase and the reduced Groebner basis FGLM-style.
EquivariantIdeal ideal_from_model(const IdealModel& model);

// The unit ideal (V = 0).
EquivariantIdeal unit_ideal(int m);

// Quotient-ring model as an ADHM datum: B = multiplication, i = class of 1,
// j = 0, framing rank 1.
ADHMDatum<Rat> ideal_to_adhm(const EquivariantIdeal& I);

// Inverse at rank 1: I = { f : f(B1,B2) i = 0 }, extracted degree by degree.
// The default bound dimV + 1 always suffices for the reduced basis.
EquivariantIdeal adhm_to_ideal(const ADHMDatum<Rat>& d, int degreeBound = -1);

// Weight multiplicities of the staircase basis, as a vector over the Dynkin
// vertices of A(m).
std::vector<int> isotypic_decomposition(const EquivariantIdeal& I);

// Model of the intersection: cyclic closure of (1,1) in the direct sum.
IdealModel intersectModels(const IdealModel& a, const IdealModel& b);

}  // namespace kql
