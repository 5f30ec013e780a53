#include <doctest.h>

#include "kql/quiver.hpp"

using namespace kql;

TEST_CASE("character tables satisfy the type invariants") {
  for (const char* name : {"A1", "A2", "A3", "A4", "A5", "A6", "D4", "D5",
                           "D6", "D7", "E6", "E7", "E8"}) {
    const GroupSpec g = GroupSpec::parse(name);
    const CharacterTable ct = character_table(g);  // validates internally
    CHECK(ct.irreps() == g.vertexCount());
    CHECK(ct.dims[0] == 1);
  }
}

TEST_CASE("trivial and small cyclic tables") {
  CHECK(character_table(GroupSpec::parse("A1")).irreps() == 1);
  const CharacterTable z2 = character_table(GroupSpec::parse("A2"));
  CHECK(z2.irreps() == 2);
  CHECK(z2.dims == std::vector<int>{1, 1});
  long sq = 0;
  for (int d : character_table(GroupSpec::parse("E8")).dims) sq += d * d;
  CHECK(sq == 120);
  CHECK(character_table(GroupSpec::parse("E8")).irreps() == 9);
}

TEST_CASE("character_table rejects bad orders") {
  CHECK_THROWS_AS(character_table(GroupSpec{Family::A, 0}), InputError);
  CHECK_THROWS_AS(character_table(GroupSpec{Family::D, 3}), InputError);
  CHECK_THROWS_AS(GroupSpec::parse("A0"), InputError);
  CHECK_THROWS_AS(GroupSpec::parse("Q8"), InputError);
}

TEST_CASE("mckay quiver matches the affine diagrams") {
  for (const char* name : {"A1", "A2", "A3", "A4", "A5", "A6", "D4", "D5",
                           "E6", "E7", "E8"}) {
    const GroupSpec g = GroupSpec::parse(name);
    const CharacterTable ct = character_table(g);
    const McKayQuiver q = mckay_quiver(ct);
    CHECK(q.mult == expectedAffineAdjacency(g));
    // delta spans the kernel of the affine Cartan matrix
    const std::vector<int> d = delta(ct);
    const std::vector<int> cd = affineCartanApply(q, d);
    for (int x : cd) CHECK(x == 0);
  }
}

TEST_CASE("affine A1 doubled edge and Jordan quiver") {
  const McKayQuiver a2 = mckay_quiver(character_table(GroupSpec::parse("A2")));
  CHECK(a2.vertices == 2);
  CHECK(a2.mult[0][1] == 2);
  CHECK(a2.mult[1][0] == 2);
  const McKayQuiver a1 = mckay_quiver(character_table(GroupSpec::parse("A1")));
  CHECK(a1.vertices == 1);
  CHECK(a1.mult[0][0] == 2);  // two loops
  CHECK(a1.arrows.size() == 2);
}

TEST_CASE("epsilon flips across every reverse pair") {
  for (const char* name : {"A1", "A2", "A3", "D4", "E6"}) {
    const McKayQuiver q = mckay_quiver(character_table(GroupSpec::parse(name)));
    const FramedQuiver f = frame(q, 2);
    for (const Arrow& a : f.arrows) {
      const Arrow& rev = f.arrows[a.reverse];
      CHECK(a.eps != rev.eps);
      CHECK(rev.reverse == f.findArrow(a.id));
      CHECK(a.tail == rev.head);
      CHECK(a.head == rev.tail);
    }
  }
}

TEST_CASE("framing arrow counts") {
  const McKayQuiver a2 = mckay_quiver(character_table(GroupSpec::parse("A2")));
  CHECK(frame(a2, 1).arrows.size() == 4 + 2);
  CHECK(frame(a2, 3).arrows.size() == 4 + 6);
  const McKayQuiver a1 = mckay_quiver(character_table(GroupSpec::parse("A1")));
  CHECK(frame(a1, 1).arrows.size() == 2 + 2);  // classical ADHM shape
  CHECK_THROWS_AS(frame(a2, 0), InputError);
}

TEST_CASE("cyclic arrow roles pair x with y on each edge") {
  for (int m : {1, 2, 3, 5}) {
    const McKayQuiver q =
        mckay_quiver(character_table(GroupSpec{Family::A, m}));
    for (const Arrow& a : q.arrows) {
      const Arrow& rev = q.arrows[a.reverse];
      const bool ax = a.role == ArrowRole::DynkinX;
      const bool rx = rev.role == ArrowRole::DynkinX;
      CHECK(ax != rx);
      if (ax) CHECK(a.head == (a.tail + 1) % m);
    }
  }
}

TEST_CASE("delta values per family") {
  CHECK(delta(character_table(GroupSpec::parse("A1"))) == std::vector<int>{1});
  CHECK(delta(character_table(GroupSpec::parse("A2"))) ==
        std::vector<int>{1, 1});
  // E8 dimensions as a multiset
  std::vector<int> e8 = delta(character_table(GroupSpec::parse("E8")));
  std::sort(e8.begin(), e8.end());
  CHECK(e8 == std::vector<int>{1, 2, 2, 3, 3, 4, 4, 5, 6});
  CHECK(delta(character_table(GroupSpec::parse("D4"))) ==
        std::vector<int>{1, 1, 1, 1, 2});
}

TEST_CASE("larger binary dihedral diagrams") {
  for (const char* name : {"D6", "D7"}) {
    const GroupSpec g = GroupSpec::parse(name);
    const CharacterTable ct = character_table(g);
    const McKayQuiver q = mckay_quiver(ct);
    CHECK(q.mult == expectedAffineAdjacency(g));
    for (int x : affineCartanApply(q, delta(ct))) CHECK(x == 0);
  }
}
