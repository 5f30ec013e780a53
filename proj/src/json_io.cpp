#include "kql/json_io.hpp"

namespace kql {

namespace {

Json cxToJson(const Cx& z) { return Json::array({z.real(), z.imag()}); }

Cx cxFromJson(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw InputError("complex entry: expected [re, im]");
  return Cx(j[0].get<double>(), j[1].get<double>());
}

Json entryToJson(const Rat& r) { return ratToString(r); }
Json entryToJson(const Cx& z) { return cxToJson(z); }

template <class S>
Json matrixToJson(const Matrix<S>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(entryToJson(m.at(i, j)));
    rows.push_back(row);
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

template <class S>
S entryFromJson(const Json& j);

template <>
Rat entryFromJson<Rat>(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return ratFromString(j.get<std::string>());
  throw InputError("rational entry: expected \"p/q\" string");
}

template <>
Cx entryFromJson<Cx>(const Json& j) {
  if (j.is_number()) return Cx(j.get<double>(), 0.0);
  return cxFromJson(j);
}

template <class S>
Matrix<S> matrixFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw InputError("matrix: expected {rows, cols, entries}");
  Matrix<S> m(j["rows"].get<int>(), j["cols"].get<int>());
  const Json& e = j["entries"];
  if (static_cast<int>(e.size()) != m.rows())
    throw InputError("matrix: entry row count mismatch");
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(e[i].size()) != m.cols())
      throw InputError("matrix: entry col count mismatch");
    for (int c = 0; c < m.cols(); ++c) m.at(i, c) = entryFromJson<S>(e[i][c]);
  }
  return m;
}

void requireSchema(const Json& j) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  if (!j.contains("schema") || j["schema"] != kSchema)
    throw InputError("schema: expected \"kql/1\"");
}

const char* roleName(ArrowRole r) {
  switch (r) {
    case ArrowRole::DynkinX:
      return "x";
    case ArrowRole::DynkinY:
      return "y";
    case ArrowRole::DynkinPlain:
      return "edge";
    case ArrowRole::FrameOut:
      return "frame";
    case ArrowRole::FrameBack:
      return "frame_back";
  }
  return "?";
}

Json arrowsToJson(const std::vector<Arrow>& arrows) {
  Json out = Json::array();
  for (const Arrow& a : arrows)
    out.push_back(Json{{"id", a.id},
                       {"tail", a.tail},
                       {"head", a.head},
                       {"eps", a.eps},
                       {"reverse", arrows[a.reverse].id},
                       {"role", roleName(a.role)}});
  return out;
}

template <class S>
Json moduleToJsonImpl(const QuiverModule<S>& m, const char* scalars) {
  Json arrows = Json::object();
  for (size_t a = 0; a < m.mats.size(); ++a)
    arrows[m.quiver.arrows[a].id] = matrixToJson(m.mats[a]);
  return Json{{"schema", kSchema},
              {"group", toJson(m.quiver.group())},
              {"r", m.quiver.r},
              {"dim", Json{{"inf", m.dim.inf}, {"v", m.dim.v}}},
              {"arrows", arrows},
              {"scalars", scalars}};
}

template <class S>
QuiverModule<S> moduleFromJsonImpl(const Json& j) {
  const GroupSpec g = groupFromJson(j.at("group"));
  const int r = j.at("r").get<int>();
  if (r < 1) throw InputError("module: r must be >= 1");
  FramedQuiver q = frame(mckay_quiver(character_table(g)), r);
  DimVector dim;
  dim.inf = j.at("dim").at("inf").get<int>();
  dim.v = j.at("dim").at("v").get<std::vector<int>>();
  if (static_cast<int>(dim.v.size()) != q.dynkinVertices())
    throw InputError("module: dim.v has wrong length");
  QuiverModule<S> m = zeroModule<S>(q, dim);
  const Json& arrows = j.at("arrows");
  for (auto it = arrows.begin(); it != arrows.end(); ++it) {
    const int a = q.findArrow(it.key());
    m.mats[a] = matrixFromJson<S>(it.value());
  }
  try {
    validateShapes(m);
  } catch (const PreconditionError& e) {
    throw InputError(std::string("module: ") + e.what());
  }
  return m;
}

template <class S>
Json adhmToJsonImpl(const ADHMDatum<S>& d, const char* scalars) {
  return Json{{"schema", kSchema},
              {"group", toJson(d.group)},
              {"r", d.r},
              {"weights", d.weights},
              {"B1", matrixToJson(d.B1)},
              {"B2", matrixToJson(d.B2)},
              {"i", matrixToJson(d.i)},
              {"j", matrixToJson(d.j)},
              {"scalars", scalars}};
}

template <class S>
ADHMDatum<S> adhmFromJsonImpl(const Json& j) {
  ADHMDatum<S> d;
  d.group = groupFromJson(j.at("group"));
  d.r = j.at("r").get<int>();
  d.weights = j.at("weights").get<std::vector<int>>();
  d.B1 = matrixFromJson<S>(j.at("B1"));
  d.B2 = matrixFromJson<S>(j.at("B2"));
  d.i = matrixFromJson<S>(j.at("i"));
  d.j = matrixFromJson<S>(j.at("j"));
  try {
    validateGrading(d);
  } catch (const PreconditionError& e) {
    throw InputError(std::string("adhm: ") + e.what());
  }
  return d;
}

template <class S>
Json monadToJsonImpl(const MonadData<S>& md, const char* scalars) {
  auto grid = [](const std::vector<std::vector<LinForm<S>>>& forms) {
    Json rows = Json::array();
    for (const auto& row : forms) {
      Json r = Json::array();
      for (const LinForm<S>& f : row)
        r.push_back(Json::array(
            {entryToJson(f.cx), entryToJson(f.cy), entryToJson(f.cz)}));
      rows.push_back(r);
    }
    return rows;
  };
  return Json{{"schema", kSchema},
              {"dims", Json::array({md.dimV, md.middle(), md.dimV})},
              {"a", grid(md.a)},
              {"b", grid(md.b)},
              {"scalars", scalars}};
}

bool scalarsAreRational(const Json& j) {
  const std::string s = j.value("scalars", "rational");
  if (s == "rational") return true;
  if (s == "complex") return false;
  throw InputError("scalars: expected \"rational\" or \"complex\"");
}

}  // namespace

Json toJson(const GroupSpec& g) {
  Json out{{"name", g.name()}};
  return out;
}

GroupSpec groupFromJson(const Json& j) {
  if (j.is_string()) return GroupSpec::parse(j.get<std::string>());
  if (j.is_object() && j.contains("name"))
    return GroupSpec::parse(j["name"].get<std::string>());
  throw InputError("group: expected a name like \"A2\"");
}

Json toJson(const CharacterTable& ct) {
  Json chi = Json::array();
  for (const auto& row : ct.chi) {
    Json r = Json::array();
    for (const Cx& v : row) r.push_back(cxToJson(v));
    chi.push_back(r);
  }
  Json l = Json::array();
  for (const Cx& v : ct.chiL) l.push_back(cxToJson(v));
  return Json{{"schema", kSchema},
              {"group", toJson(ct.group)},
              {"order", ct.group.order()},
              {"dims", ct.dims},
              {"class_sizes", ct.classSizes},
              {"characters", chi},
              {"tautological_character", l}};
}

Json toJson(const McKayQuiver& q) {
  return Json{{"schema", kSchema},
              {"group", toJson(q.group)},
              {"vertices", q.vertices},
              {"adjacency", q.mult},
              {"arrows", arrowsToJson(q.arrows)}};
}

Json toJson(const FramedQuiver& q) {
  Json base = toJson(q.base);
  base["r"] = q.r;
  base["arrows"] = arrowsToJson(q.arrows);
  return base;
}

Json toJson(const QuiverModule<Rat>& m) { return moduleToJsonImpl(m, "rational"); }
Json toJson(const QuiverModule<Cx>& m) { return moduleToJsonImpl(m, "complex"); }

AnyModule moduleFromJson(const Json& j) {
  requireSchema(j);
  if (scalarsAreRational(j)) return moduleFromJsonImpl<Rat>(j);
  return moduleFromJsonImpl<Cx>(j);
}

Json toJson(const ADHMDatum<Rat>& d) { return adhmToJsonImpl(d, "rational"); }
Json toJson(const ADHMDatum<Cx>& d) { return adhmToJsonImpl(d, "complex"); }

AnyADHM adhmFromJson(const Json& j) {
  requireSchema(j);
  if (scalarsAreRational(j)) return adhmFromJsonImpl<Rat>(j);
  return adhmFromJsonImpl<Cx>(j);
}

Json toJson(const StabilityParameter& t) {
  Json theta = Json::array();
  for (const Rat& x : t.theta) theta.push_back(ratToString(x));
  return Json{{"schema", kSchema},
              {"theta_inf", ratToString(t.thetaInf)},
              {"theta", theta},
              {"positivity_set", t.positivity}};
}

StabilityParameter thetaFromJson(const Json& j) {
  requireSchema(j);
  StabilityParameter t;
  t.thetaInf = ratFromString(j.at("theta_inf").get<std::string>());
  for (const Json& x : j.at("theta"))
    t.theta.push_back(entryFromJson<Rat>(x));
  t.positivity = j.at("positivity_set").get<std::vector<int>>();
  requireSupportedShape(t);
  return t;
}

Json toJson(const MonadData<Rat>& md) { return monadToJsonImpl(md, "rational"); }
Json toJson(const MonadData<Cx>& md) { return monadToJsonImpl(md, "complex"); }

Json toJson(const EquivariantIdeal& I) {
  Json gens = Json::array();
  for (const Poly& g : I.gens) gens.push_back(g.toString());
  Json weights = Json::array();
  for (const Poly& g : I.gens) weights.push_back(*g.homogeneousWeight(I.m));
  return Json{{"schema", kSchema},
              {"group_order", I.m},
              {"generators", gens},
              {"generator_weights", weights},
              {"colength", I.colength()},
              {"isotypic", isotypic_decomposition(I)}};
}

EquivariantIdeal idealFromJson(const Json& j) {
  requireSchema(j);
  const int m = j.at("group_order").get<int>();
  std::vector<Poly> gens;
  for (const Json& g : j.at("generators"))
    gens.push_back(Poly::parse(g.get<std::string>()));
  try {
    return ideal_from_generators(gens, m);
  } catch (const PreconditionError& e) {
    throw InputError(std::string("ideal: ") + e.what());
  }
}

Json toJson(const InvariantIdeal& J) {
  Json gens = Json::array();
  for (const RPoly& g : J.gens) gens.push_back(g.toString());
  return Json{{"schema", kSchema},
              {"m", J.m},
              {"relation", "u*v = w^" + std::to_string(J.m)},
              {"generators", gens},
              {"colength", J.colength}};
}

Json toJson(const SupportCycle& c) {
  Json pts = Json::array();
  for (const SupportPoint& p : c)
    pts.push_back(Json::array({cxToJson(p.x), cxToJson(p.y), p.multiplicity}));
  return Json{{"schema", kSchema}, {"points", pts}};
}

AnyADHM adhmFromModuleOrAdhmJson(const Json& j) {
  requireSchema(j);
  if (j.contains("B1")) return adhmFromJson(j);
  AnyModule m = moduleFromJson(j);
  if (std::holds_alternative<QuiverModule<Rat>>(m))
    return quiver_to_adhm(std::get<QuiverModule<Rat>>(m));
  return quiver_to_adhm(std::get<QuiverModule<Cx>>(m));
}

}  // namespace kql
