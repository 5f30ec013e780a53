#include <doctest.h>

#include "kql/json_io.hpp"
#include "kql/witness.hpp"

using namespace kql;

TEST_CASE("module JSON round-trips byte-stably") {
  QuiverModule<Rat> w = witness_module({{Rat(1), Rat(2)}, {Rat(3), Rat(1)}},
                                       GroupSpec{Family::A, 2}, 2);
  const Json j = toJson(w);
  const std::string dump = j.dump(2);
  AnyModule back = moduleFromJson(Json::parse(dump));
  REQUIRE(std::holds_alternative<QuiverModule<Rat>>(back));
  const QuiverModule<Rat>& m = std::get<QuiverModule<Rat>>(back);
  CHECK(m.dim == w.dim);
  for (size_t a = 0; a < w.mats.size(); ++a) CHECK(m.mats[a] == w.mats[a]);
  CHECK(toJson(m).dump(2) == dump);
}

TEST_CASE("complex module JSON round-trips") {
  QuiverModule<Rat> w =
      witness_module({{Rat(1), Rat(2)}}, GroupSpec{Family::A, 2}, 1);
  QuiverModule<Cx> c;
  c.quiver = w.quiver;
  c.dim = w.dim;
  for (const auto& mat : w.mats) c.mats.push_back(toComplex(mat));
  const std::string dump = toJson(c).dump(2);
  AnyModule back = moduleFromJson(Json::parse(dump));
  REQUIRE(std::holds_alternative<QuiverModule<Cx>>(back));
  CHECK(toJson(std::get<QuiverModule<Cx>>(back)).dump(2) == dump);
}

TEST_CASE("adhm JSON round-trips") {
  QuiverModule<Rat> w =
      witness_module({{Rat(1), Rat(2)}}, GroupSpec{Family::A, 3}, 1);
  const ADHMDatum<Rat> d = quiver_to_adhm(w);
  const std::string dump = toJson(d).dump(2);
  AnyADHM back = adhmFromJson(Json::parse(dump));
  REQUIRE(std::holds_alternative<ADHMDatum<Rat>>(back));
  const ADHMDatum<Rat>& d2 = std::get<ADHMDatum<Rat>>(back);
  CHECK(d2.weights == d.weights);
  CHECK(d2.B1 == d.B1);
  CHECK(toJson(d2).dump(2) == dump);
}

TEST_CASE("theta and ideal JSON round-trips") {
  const StabilityParameter t = theta_I({0, 1}, {2, 2, 2});
  const StabilityParameter t2 = thetaFromJson(Json::parse(toJson(t).dump()));
  CHECK(t2.thetaInf == t.thetaInf);
  CHECK(t2.theta == t.theta);
  CHECK(t2.positivity == t.positivity);

  const EquivariantIdeal I =
      ideal_from_generators({Poly::parse("x^2"), Poly::parse("y")}, 2);
  const EquivariantIdeal I2 = idealFromJson(Json::parse(toJson(I).dump()));
  CHECK(I2 == I);
  CHECK(toJson(I2).dump() == toJson(I).dump());
}

TEST_CASE("schema violations point at the offending field") {
  Json j = toJson(witness_module({{Rat(1), Rat(2)}}, GroupSpec{Family::A, 2}, 1));
  j["schema"] = "kql/0";
  CHECK_THROWS_AS(moduleFromJson(j), InputError);
  Json ok = toJson(witness_module({{Rat(1), Rat(2)}}, GroupSpec{Family::A, 2}, 1));
  Json badDim = ok;
  badDim["dim"]["v"] = std::vector<int>{1};
  CHECK_THROWS_AS(moduleFromJson(badDim), InputError);
  Json badArrow = ok;
  badArrow["arrows"]["zz"] = badArrow["arrows"]["a0"];
  CHECK_THROWS_AS(moduleFromJson(badArrow), InputError);
  Json badEntry = ok;
  badEntry["arrows"]["a0"]["entries"][0][0] = "not-a-rational";
  CHECK_THROWS_AS(moduleFromJson(badEntry), InputError);
}

TEST_CASE("monad and support JSON emit stable shapes") {
  QuiverModule<Rat> w =
      witness_module({{Rat(1), Rat(2)}}, GroupSpec{Family::A, 2}, 1);
  const MonadData<Rat> md = build_monad(quiver_to_adhm(w));
  const Json j = toJson(md);
  CHECK(j["dims"] == Json::array({2, 5, 2}));
  CHECK(j["a"].size() == 5);
  const Json s = toJson(support_cycle(quiver_to_adhm(w)));
  CHECK(s["points"].size() == 2);
}
