#include <doctest.h>

#include "kql/stability.hpp"
#include "kql/witness.hpp"
#include "support/oracles.hpp"

using namespace kql;
using namespace kql::testsupport;

namespace {

FramedQuiver quiverA(int m, int r) {
  return frame(mckay_quiver(character_table(GroupSpec{Family::A, m})), r);
}

QuiverModule<Rat> witnessA2() {
  return witness_module({{Rat(1), Rat(2)}}, GroupSpec{Family::A, 2}, 1);
}

}  // namespace

TEST_CASE("theta_of on the printed parameters") {
  const StabilityParameter t0 = theta_zero(2, 1);
  CHECK(t0.thetaInf == Rat(-1));
  CHECK(t0.theta == std::vector<Rat>{1, 0});
  // theta_0 (1, n delta) = 0
  CHECK(t0.of(DimVector{1, {1, 1}}) == 0);
  // vertex simple at 0 pairs to 1, other Dynkin simples to 0
  CHECK(t0.of(DimVector{0, {1, 0}}) == 1);
  CHECK(t0.of(DimVector{0, {0, 1}}) == 0);
  CHECK(theta_zero(2, 3).thetaInf == Rat(-3));

  const StabilityParameter cp = c_plus_representative({1, 1});
  for (const Rat& x : cp.theta) CHECK(x > 0);
  CHECK(cp.of(DimVector{1, {1, 1}}) == 0);

  const StabilityParameter tI = theta_I({0}, {1, 1});
  CHECK(tI.positivity == std::vector<int>{0});
  CHECK(tI.theta[0] > 0);
  CHECK(tI.theta[1] == 0);
}

TEST_CASE("stability of the empty and witness modules") {
  // n = 0: no proper nonzero submodules at all
  const FramedQuiver q = quiverA(2, 1);
  const QuiverModule<Rat> empty = zeroModule<Rat>(q, DimVector{1, {0, 0}});
  for (const StabilityParameter& t :
       {theta_zero(2, 0), c_plus_representative({0, 0}), theta_I({1}, {0, 0})}) {
    CHECK(is_stable(empty, t));
    CHECK(is_semistable(empty, t));
  }

  QuiverModule<Rat> w = witnessA2();
  CHECK(is_stable(w, theta_zero(2, 1)));
  CHECK(is_stable(w, c_plus_representative({1, 1})));

  // adding a Dynkin vertex simple keeps semistability, kills stability
  QuiverModule<Rat> sum = direct_sum(w, vertexSimple<Rat>(q, 1));
  CHECK(is_semistable(sum, theta_zero(2, 1)));
  CHECK(!is_stable(sum, theta_zero(2, 1)));
}

TEST_CASE("stability rejects bad inputs") {
  QuiverModule<Rat> w = witnessA2();
  for (size_t a = 0; a < w.mats.size(); ++a)
    if (w.quiver.arrows[a].role == ArrowRole::DynkinX) {
      w.mats[a].at(0, 0) += 1;
      break;
    }
  CHECK_THROWS_AS(is_stable(w, theta_zero(2, 1)), PreconditionError);

  StabilityParameter bad = theta_zero(2, 1);
  bad.theta[1] = -1;  // negative Dynkin entry: outside the supported family
  CHECK_THROWS_AS(is_stable(witnessA2(), bad), PreconditionError);
}

TEST_CASE("concentrate") {
  const FramedQuiver q = quiverA(2, 1);
  QuiverModule<Rat> w = witnessA2();
  // already concentrated
  QuiverModule<Rat> c = concentrate(w);
  CHECK(c.dim == w.dim);
  CHECK(is_isomorphic(c, w, 21));
  // a trivial summand at vertex 1 is removed again
  QuiverModule<Rat> sum = direct_sum(w, vertexSimple<Rat>(q, 1));
  QuiverModule<Rat> c2 = concentrate(sum);
  CHECK(c2.dim == w.dim);
  CHECK(is_isomorphic(c2, w, 21));
  CHECK(c2.dim.v[0] == sum.dim.v[0]);  // dim_0 preserved
  // idempotent and theta_0-stable
  CHECK(is_isomorphic(concentrate(c2), c2, 22));
  CHECK(is_stable(c2, theta_zero(2, c2.dim.v[0])));
  // the n = 0 framed module is already concentrated
  const QuiverModule<Rat> sInf = vertexSimple<Rat>(q, kInfVertex);
  CHECK(concentrate(sInf).dim == sInf.dim);
  // a non-semistable input is rejected: transposing kills the framing arrows
  CHECK_THROWS_AS(concentrate(transposeModule(w)), PreconditionError);
}

TEST_CASE("polystable decomposition records the stripped simples") {
  const FramedQuiver q = quiverA(2, 1);
  QuiverModule<Rat> w = witnessA2();
  auto [con0, mult0] = polystable_theta0(w);
  CHECK(mult0.total() == 0);
  QuiverModule<Rat> sum = direct_sum(w, vertexSimple<Rat>(q, 1));
  auto [con1, mult1] = polystable_theta0(sum);
  CHECK(mult1.inf == 0);
  CHECK(mult1.v == std::vector<int>{0, 1});
}

TEST_CASE("r- and s-equivalence") {
  const FramedQuiver q = quiverA(2, 1);
  QuiverModule<Rat> w = witnessA2();
  QuiverModule<Rat> sum = direct_sum(w, vertexSimple<Rat>(q, 1));
  CHECK(r_equivalent(w, sum, 31));
  CHECK(!s_equivalent(w, sum, 31));  // dimensions differ
  CHECK(r_equivalent(w, w, 31));
  CHECK(s_equivalent(w, w, 31));
  QuiverModule<Rat> other =
      witness_module({{Rat(3), Rat(1)}}, GroupSpec{Family::A, 2}, 1);
  CHECK(!r_equivalent(w, other, 31));
}

TEST_CASE("r-equivalence is an equivalence relation on a small corpus") {
  const FramedQuiver q = quiverA(2, 1);
  QuiverModule<Rat> w = witnessA2();
  std::vector<QuiverModule<Rat>> corpus = {
      w, direct_sum(w, vertexSimple<Rat>(q, 1)),
      direct_sum(direct_sum(w, vertexSimple<Rat>(q, 1)), vertexSimple<Rat>(q, 1)),
      witness_module({{Rat(3), Rat(1)}}, GroupSpec{Family::A, 2}, 1)};
  for (size_t i = 0; i < corpus.size(); ++i)
    CHECK(r_equivalent(corpus[i], corpus[i], 40 + i));
  for (size_t i = 0; i < corpus.size(); ++i)
    for (size_t j = 0; j < corpus.size(); ++j)
      CHECK(r_equivalent(corpus[i], corpus[j], 41) ==
            r_equivalent(corpus[j], corpus[i], 42));
  // transitivity spot check on the chain w ~ w+S1 ~ w+2S1
  CHECK(r_equivalent(corpus[0], corpus[1], 43));
  CHECK(r_equivalent(corpus[1], corpus[2], 43));
  CHECK(r_equivalent(corpus[0], corpus[2], 43));
}

TEST_CASE("dimension bound") {
  QuiverModule<Rat> w = witnessA2();
  CHECK(dimension_bound_check(concentrate(w)));
  const FramedQuiver q = quiverA(2, 1);
  CHECK(dimension_bound_check(zeroModule<Rat>(q, DimVector{1, {0, 0}})));
  // overweight dims cannot be theta_0-stable
  Rng rng(55);
  QuiverModule<Rat> fat =
      testsupport::randomPiModule(q, DimVector{1, {1, 3}}, rng);
  CHECK(!dimension_bound_check(fat));
  CHECK(!is_stable(fat, theta_zero(2, 1)));
}

TEST_CASE("verdicts agree with the brute-force oracle") {
  Rng rng(777);
  const FramedQuiver q = quiverA(2, 1);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    DimVector d;
    d.inf = 1;
    d.v = {static_cast<int>(rng.intIn(0, 2)), static_cast<int>(rng.intIn(0, 2))};
    QuiverModule<Rat> m = randomPiModule(q, d, rng);
    const int n = d.v[0];
    for (const StabilityParameter& t :
         {theta_zero(2, n), c_plus_representative(d.v), theta_I({0}, d.v)}) {
      const bool s = is_stable(m, t);
      const bool ss = is_semistable(m, t);
      CHECK(!(s && !ss));
      // any claimed instability must come with a verifiable certificate
      if (t.of(m.dim) == 0) {
        if (!s) {
          auto cert = destabilizer(m, t, false);
          REQUIRE(cert.has_value());
          CHECK(verifyDestabilizer(m, *cert, t, false));
        }
        if (!ss) {
          auto cert = destabilizer(m, t, true);
          REQUIRE(cert.has_value());
          CHECK(verifyDestabilizer(m, *cert, t, true));
        }
      }
      const OracleVerdict o = stabilityOracle(m, t, rng);
      CHECK(o.stable == s);
      CHECK(o.semistable == ss);
      ++checked;
    }
  }
  CHECK(checked >= 150);
}

TEST_CASE("theta-stable implies theta_0-semistable on the corpus") {
  Rng rng(991);
  const FramedQuiver q = quiverA(2, 1);
  for (int trial = 0; trial < 40; ++trial) {
    DimVector d;
    d.inf = 1;
    const int n = static_cast<int>(rng.intIn(0, 2));
    d.v = {n, static_cast<int>(rng.intIn(0, 2))};
    QuiverModule<Rat> m = randomPiModule(q, d, rng);
    if (is_stable(m, c_plus_representative(d.v)))
      CHECK(is_semistable(m, theta_zero(2, n)));
  }
}

TEST_CASE("theta_I on {0} is theta_zero up to positive scale") {
  const StabilityParameter tI = theta_I({0}, {2, 2});
  const StabilityParameter t0 = theta_zero(2, 2);
  CHECK(tI.positivity == t0.positivity);
  // proportional: cross-multiplied entries match
  CHECK(tI.theta[0] * t0.thetaInf == t0.theta[0] * tI.thetaInf);
  CHECK(tI.theta[1] == 0);
  CHECK(t0.theta[1] == 0);
}

TEST_CASE("complex-scalar verdicts match the rational ones") {
  Rng rng(1212);
  const FramedQuiver q = quiverA(2, 1);
  for (int trial = 0; trial < 20; ++trial) {
    DimVector d;
    d.inf = 1;
    d.v = {static_cast<int>(rng.intIn(0, 2)), static_cast<int>(rng.intIn(0, 2))};
    QuiverModule<Rat> m = randomPiModule(q, d, rng);
    QuiverModule<Cx> c;
    c.quiver = m.quiver;
    c.dim = m.dim;
    for (const auto& mat : m.mats) c.mats.push_back(toComplex(mat));
    for (const StabilityParameter& t :
         {theta_zero(2, d.v[0]), c_plus_representative(d.v)}) {
      CHECK(is_stable(c, t) == is_stable(m, t));
      CHECK(is_semistable(c, t) == is_semistable(m, t));
    }
  }
}

TEST_CASE("concentrate works over complex scalars") {
  QuiverModule<Rat> w = witnessA2();
  QuiverModule<Rat> sum = direct_sum(w, vertexSimple<Rat>(w.quiver, 1));
  QuiverModule<Cx> c;
  c.quiver = sum.quiver;
  c.dim = sum.dim;
  for (const auto& mat : sum.mats) c.mats.push_back(toComplex(mat));
  QuiverModule<Cx> con = concentrate(c);
  CHECK(con.dim == w.dim);
  CHECK(is_stable(con, theta_zero(2, 1)));
}

TEST_CASE("oracle agreement holds over A(3) as well") {
  Rng rng(2024);
  const FramedQuiver q = quiverA(3, 1);
  for (int trial = 0; trial < 12; ++trial) {
    DimVector d;
    d.inf = 1;
    d.v = {static_cast<int>(rng.intIn(0, 1)), static_cast<int>(rng.intIn(0, 1)),
           static_cast<int>(rng.intIn(0, 1))};
    QuiverModule<Rat> m = randomPiModule(q, d, rng);
    for (const StabilityParameter& t :
         {theta_zero(3, d.v[0]), c_plus_representative(d.v),
          theta_I({0, 2}, d.v)}) {
      const OracleVerdict o = stabilityOracle(m, t, rng);
      CHECK(o.stable == is_stable(m, t));
      CHECK(o.semistable == is_semistable(m, t));
    }
  }
}
