#include <doctest.h>

#include "kql/monad.hpp"
#include "kql/stability.hpp"
#include "kql/witness.hpp"

using namespace kql;

TEST_CASE("witness modules are theta_0-stable with dimension (1, n delta)") {
  const GroupSpec g{Family::A, 2};
  QuiverModule<Rat> w = witness_module({{Rat(1), Rat(2)}}, g, 1);
  CHECK(w.dim == DimVector{1, {1, 1}});
  CHECK(residualIsZero(w));
  CHECK(is_stable(w, theta_zero(2, 1)));

  QuiverModule<Rat> w2 =
      witness_module({{Rat(1), Rat(2)}, {Rat(3), Rat(1)}}, g, 1);
  CHECK(w2.dim == DimVector{1, {2, 2}});
  CHECK(residualIsZero(w2));
  CHECK(is_stable(w2, theta_zero(2, 2)));
}

TEST_CASE("witness moment map vanishes exactly for A(2), A(3), n <= 3, r <= 2") {
  for (int m : {2, 3}) {
    std::vector<std::pair<Rat, Rat>> pts;
    for (int n = 1; n <= 3; ++n) {
      pts.push_back({Rat(n), Rat(n * n + 1)});
      for (int r = 1; r <= 2; ++r) {
        QuiverModule<Rat> w = witness_module(pts, GroupSpec{Family::A, m}, r);
        CHECK(w.dim.inf == 1);
        for (int k = 0; k < m; ++k) CHECK(w.dim.v[k] == n);
        auto res = preprojective_residual(w);
        CHECK(res.inf.isZero());
        for (const auto& blk : res.dynkin) CHECK(blk.isZero());
      }
    }
  }
}

TEST_CASE("higher framing rank stays stable and matches the r = 1 module") {
  const GroupSpec g{Family::A, 2};
  QuiverModule<Rat> w1 = witness_module({{Rat(1), Rat(2)}}, g, 1);
  QuiverModule<Rat> w2 = witness_module({{Rat(1), Rat(2)}}, g, 2);
  CHECK(w2.quiver.r == 2);
  CHECK(is_stable(w2, theta_zero(2, 1)));
  CHECK(is_stable(w2, c_plus_representative(w2.dim.v)));
  // the framing extension of w1 is exactly w2
  QuiverModule<Rat> ext = extendFraming(w1, 2);
  CHECK(ext.dim == w2.dim);
  for (size_t a = 0; a < ext.mats.size(); ++a) CHECK(ext.mats[a] == w2.mats[a]);
}

TEST_CASE("witness input validation") {
  const GroupSpec g{Family::A, 2};
  CHECK_THROWS_AS(witness_module({{Rat(0), Rat(0)}}, g, 1), InputError);
  CHECK_THROWS_AS(witness_module({{Rat(1), Rat(2)}, {Rat(-1), Rat(-2)}}, g, 1),
                  InputError);
  CHECK_THROWS_AS(witness_module({{Rat(1), Rat(2)}}, g, 0), InputError);
  CHECK_THROWS_AS(witness_module({{Rat(1), Rat(2)}}, GroupSpec{Family::E6, 0}, 1),
                  InputError);
}

TEST_CASE("witness modules feed the full monad pipeline") {
  QuiverModule<Rat> w = witness_module({{Rat(1), Rat(2)}, {Rat(2), Rat(5)}},
                                       GroupSpec{Family::A, 3}, 2);
  const ADHMDatum<Rat> d = quiver_to_adhm(w);
  CHECK(monadIsComplex(build_monad(d)));
  CHECK(tangent_dimension(w) == 2 * 2 * 2);
}
