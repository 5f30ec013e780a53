#include <doctest.h>

#include <functional>

#include "kql/ideal.hpp"
#include "kql/witness.hpp"

using namespace kql;

namespace {

// Gamma-invariant monomial ideals of colength c are staircases, i.e.
// partitions of c; every monomial ideal is automatically invariant.
std::vector<std::vector<Poly>> monomialIdealsOfColength(int c) {
  std::vector<std::vector<int>> partitions;
  std::vector<int> cur;
  // partitions of c as weakly decreasing column heights
  std::function<void(int, int)> rec = [&](int rest, int maxPart) {
    if (rest == 0) {
      partitions.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxPart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(c, c);
  std::vector<std::vector<Poly>> out;
  for (const auto& part : partitions) {
    // column heights part[0] >= part[1] >= ...: standard monomials are
    // x^i y^j with j < part[i]; corner generators follow
    std::vector<Poly> gens;
    const int width = static_cast<int>(part.size());
    gens.push_back(Poly::monomial(Mono{width, 0}));
    for (int i = 0; i < width; ++i) {
      const int prev = i == 0 ? -1 : part[i];
      if (i == 0)
        gens.push_back(Poly::monomial(Mono{0, part[0]}));
      else if (part[i] < part[i - 1])
        gens.push_back(Poly::monomial(Mono{i, part[i]}));
      (void)prev;
    }
    out.push_back(gens);
  }
  return out;
}

}  // namespace

TEST_CASE("poly parsing and printing") {
  const Poly p = Poly::parse("x^2 - 3/2*x*y + y^3");
  CHECK(p.degree() == 3);
  CHECK(Poly::parse(p.toString()) == p);
  CHECK(Poly::parse("0").isZero());
  CHECK(Poly::parse("2x y") == Poly::parse("2*x*y"));
  CHECK_THROWS_AS(Poly::parse("x +"), InputError);
  CHECK_THROWS_AS(Poly::parse("z"), InputError);
}

TEST_CASE("weight homogeneity") {
  CHECK(*Poly::parse("x^2").homogeneousWeight(2) == 0);
  CHECK(*Poly::parse("x*y + 3").homogeneousWeight(5) == 0);
  CHECK(!Poly::parse("x + y").homogeneousWeight(3).has_value());
  CHECK(*Poly::parse("x + y").homogeneousWeight(2) == 1);
}

TEST_CASE("groebner basics") {
  // already a reduced basis
  auto gb = reducedGroebner({Poly::parse("x^2"), Poly::parse("y")});
  CHECK(gb.size() == 2);
  CHECK(staircase(gb).size() == 2);
  // S-pair reduction discovers the lower-degree element
  auto gb2 = reducedGroebner(
      {Poly::parse("x^2 - 1"), Poly::parse("x*y - 1"), Poly::parse("y^2 - 1")});
  // V(x^2-1, xy-1, y^2-1) = {(1,1), (-1,-1)}: colength 2
  CHECK(staircase(gb2).size() == 2);
  CHECK_THROWS_AS(staircase(reducedGroebner({Poly::parse("x")})),
                  PreconditionError);
}

TEST_CASE("worked example: I = (x^2, y) over A(2)") {
  const EquivariantIdeal I =
      ideal_from_generators({Poly::parse("x^2"), Poly::parse("y")}, 2);
  CHECK(I.colength() == 2);
  CHECK(I.standard == std::vector<Mono>{Mono{0, 0}, Mono{1, 0}});
  const ADHMDatum<Rat> d = ideal_to_adhm(I);
  CHECK(d.weights == std::vector<int>{0, 1});
  CHECK(d.B1.at(1, 0) == 1);
  CHECK(d.B1.at(0, 0) == 0);
  CHECK(d.B1.at(0, 1) == 0);
  CHECK(d.B1.at(1, 1) == 0);
  CHECK(d.B2.isZero());
  CHECK(d.i.at(0, 0) == 1);
  CHECK(d.i.at(1, 0) == 0);
  // isotypic decomposition (1, 1) = delta
  CHECK(isotypic_decomposition(I) == std::vector<int>{1, 1});
}

TEST_CASE("trivial group point ideal") {
  const EquivariantIdeal I =
      ideal_from_generators({Poly::parse("x"), Poly::parse("y")}, 1);
  const ADHMDatum<Rat> d = ideal_to_adhm(I);
  CHECK(d.dimV() == 1);
  CHECK(d.B1.isZero());
  CHECK(d.B2.isZero());
  CHECK(d.i.at(0, 0) == 1);
  CHECK(isotypic_decomposition(I) == std::vector<int>{1});
}

TEST_CASE("ideal weight validation") {
  CHECK_THROWS_AS(ideal_from_generators({Poly::parse("x + y")}, 3), InputError);
}

TEST_CASE("adhm_to_ideal inverts ideal_to_adhm exhaustively (colength <= 6)") {
  for (int m : {1, 2, 3}) {
    for (int c = 1; c <= 6; ++c) {
      for (const auto& gens : monomialIdealsOfColength(c)) {
        // filter: generators must be weight homogeneous (monomials always are)
        const EquivariantIdeal I = ideal_from_generators(gens, m);
        CHECK(I.colength() == c);
        const EquivariantIdeal back = adhm_to_ideal(ideal_to_adhm(I));
        CHECK(back == I);
        CHECK(back.standard == I.standard);
        // staircase generators: the reduced basis of a monomial ideal is its
        // minimal monomial generating set
        for (const Poly& g : back.gens) CHECK(g.terms().size() == 1);
      }
    }
  }
}

TEST_CASE("unit ideal and V = 0") {
  const EquivariantIdeal I = ideal_from_generators({Poly::parse("1")}, 2);
  CHECK(I.colength() == 0);
  ADHMDatum<Rat> d = ideal_to_adhm(I);
  CHECK(d.dimV() == 0);
  CHECK(adhm_to_ideal(d).colength() == 0);
}

TEST_CASE("free orbit ideals") {
  // A(2), orbit of (1,2): points (1,2), (-1,-2)
  const EquivariantIdeal I = free_orbit_ideal({{Rat(1), Rat(2)}}, 2);
  CHECK(I.colength() == 2);
  CHECK(isotypic_decomposition(I) == std::vector<int>{1, 1});
  for (const Poly& g : I.gens) {
    // generators vanish on both orbit points
    auto evalAt = [&](const Rat& a, const Rat& b) {
      Rat acc(0);
      for (const auto& [mono, coeff] : g.terms()) {
        Rat term = coeff;
        for (int t = 0; t < mono.px; ++t) term *= a;
        for (int t = 0; t < mono.py; ++t) term *= b;
        acc += term;
      }
      return acc;
    };
    CHECK(evalAt(Rat(1), Rat(2)) == 0);
    CHECK(evalAt(Rat(-1), Rat(-2)) == 0);
  }

  // eigenvalues of mulX on the orbit model are +-1 (evaluation at the orbit)
  const ADHMDatum<Rat> d = ideal_to_adhm(I);
  const Matrix<Rat> sq = d.B1 * d.B1;
  CHECK(sq == Matrix<Rat>::identity(2));

  // unions of orbits intersect exactly
  const EquivariantIdeal u =
      free_orbit_ideal({{Rat(1), Rat(2)}, {Rat(3), Rat(1)}}, 2);
  CHECK(u.colength() == 4);
  CHECK(isotypic_decomposition(u) == std::vector<int>{2, 2});
}

TEST_CASE("isotypic decomposition of free orbits is n delta") {
  for (int m = 1; m <= 4; ++m) {
    std::vector<std::pair<Rat, Rat>> pts;
    for (int n = 1; n <= 3; ++n) {
      pts.push_back({Rat(n), Rat(n + 1)});
      const EquivariantIdeal I = free_orbit_ideal(pts, m);
      CHECK(I.colength() == n * m);
      const std::vector<int> iso = isotypic_decomposition(I);
      for (int k = 0; k < m; ++k) CHECK(iso[k] == n);
    }
  }
}

TEST_CASE("orbit edge cases") {
  CHECK_THROWS_AS(free_orbit_ideal({{Rat(0), Rat(0)}}, 2), InputError);
  CHECK_THROWS_AS(free_orbit_ideal({{Rat(1), Rat(2)}, {Rat(-1), Rat(-2)}}, 2),
                  InputError);
  // axis orbits work
  const EquivariantIdeal I = free_orbit_ideal({{Rat(0), Rat(2)}}, 3);
  CHECK(I.colength() == 3);
  const EquivariantIdeal I2 = free_orbit_ideal({{Rat(2), Rat(0)}}, 3);
  CHECK(I2.colength() == 3);
}

TEST_CASE("adhm_to_ideal guards") {
  const EquivariantIdeal I =
      ideal_from_generators({Poly::parse("x^2"), Poly::parse("y")}, 2);
  ADHMDatum<Rat> d = ideal_to_adhm(I);
  ADHMDatum<Rat> withJ = d;
  withJ.j.at(0, 0) = 1;
  CHECK_THROWS_AS(adhm_to_ideal(withJ), PreconditionError);
  ADHMDatum<Rat> r2 = d;
  r2.r = 2;
  r2.i = hstack(d.i, Matrix<Rat>(2, 1));
  r2.j = Matrix<Rat>(2, 2);
  CHECK_THROWS_AS(adhm_to_ideal(r2), PreconditionError);
  // non-cyclic model (i = 0) rejected
  ADHMDatum<Rat> acyclic = d;
  acyclic.i = Matrix<Rat>(2, 1);
  CHECK_THROWS_AS(adhm_to_ideal(acyclic), PreconditionError);
}
