// kql: framed McKay quivers, preprojective modules, stability, monads, and
// invariant-ring descent for Kleinian singularities of type ADE.
//
// Every subcommand reads JSON (stdin or --in), writes machine-readable JSON
// to stdout and a one-line human summary to stderr. Exit codes: 0 success or
// verdict true, 1 verdict false or failed check, 2 invalid input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kql/json_io.hpp"
#include "kql/witness.hpp"

using namespace kql;

namespace {

struct Io {
  std::string inPath;

  Json read() const {
    std::string text;
    if (inPath.empty() || inPath == "-") {
      std::stringstream buf;
      buf << std::cin.rdbuf();
      text = buf.str();
    } else {
      std::ifstream f(inPath);
      if (!f) throw InputError("cannot open input file '" + inPath + "'");
      std::stringstream buf;
      buf << f.rdbuf();
      text = buf.str();
    }
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("input is not valid JSON: ") + e.what());
    }
  }
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json readFile(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("'" + path + "' is not valid JSON: ") +
                     e.what());
  }
}

std::vector<std::pair<Rat, Rat>> parsePoints(const std::string& s) {
  std::vector<std::pair<Rat, Rat>> pts;
  size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && (std::isspace((unsigned char)s[pos]) || s[pos] == ';'))
      ++pos;
  };
  skip();
  while (pos < s.size()) {
    if (s[pos] != '(') throw InputError("points: expected '(' in '" + s + "'");
    const size_t close = s.find(')', pos);
    if (close == std::string::npos) throw InputError("points: missing ')'");
    const std::string body = s.substr(pos + 1, close - pos - 1);
    const size_t comma = body.find(',');
    if (comma == std::string::npos)
      throw InputError("points: expected '(a,b)' in '" + s + "'");
    auto trim = [](std::string t) {
      while (!t.empty() && std::isspace((unsigned char)t.front())) t.erase(t.begin());
      while (!t.empty() && std::isspace((unsigned char)t.back())) t.pop_back();
      return t;
    };
    pts.emplace_back(ratFromString(trim(body.substr(0, comma))),
                     ratFromString(trim(body.substr(comma + 1))));
    pos = close + 1;
    skip();
  }
  if (pts.empty()) throw InputError("points: none given");
  return pts;
}

StabilityParameter thetaFromSpec(const std::string& spec,
                                 const std::vector<int>& v, int vertices) {
  if (spec == "zero") return theta_zero(vertices, v.empty() ? 0 : v[0]);
  if (spec == "cplus") return c_plus_representative(v);
  if (spec.rfind("I=", 0) == 0) {
    std::vector<int> I;
    std::stringstream ss(spec.substr(2));
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) I.push_back(std::stoi(tok));
    if (I.empty()) throw InputError("theta: empty positivity set");
    return theta_I(I, v);
  }
  throw InputError("theta: expected zero | cplus | I=<v1,v2,...>");
}

template <class Fn>
int withModule(const Json& j, Fn&& fn) {
  AnyModule any = moduleFromJson(j);
  if (std::holds_alternative<QuiverModule<Rat>>(any))
    return fn(std::get<QuiverModule<Rat>>(any));
  return fn(std::get<QuiverModule<Cx>>(any));
}

int runMckay(const std::string& group, int r, bool wantTable) {
  const GroupSpec g = GroupSpec::parse(group);
  const CharacterTable ct = character_table(g);
  if (wantTable) {
    emit(toJson(ct));
    std::cerr << g.name() << ": " << ct.irreps() << " irreducibles, |G| = "
              << g.order() << "\n";
    return 0;
  }
  const McKayQuiver q = mckay_quiver(ct);
  Json out;
  if (r > 0) {
    out = toJson(frame(q, r));
  } else {
    out = toJson(q);
  }
  out["delta"] = delta(ct);
  emit(out);
  std::cerr << g.name() << ": " << q.vertices << " vertices, "
            << q.arrows.size() << " Dynkin arrows"
            << (r > 0 ? " + " + std::to_string(2 * r) + " framing arrows" : "")
            << "\n";
  return 0;
}

int runCheckModule(const Io& io, double tol) {
  const Json j = io.read();
  return withModule(j, [&](const auto& m) {
    const double norm = residualNorm(m);
    const bool zero = residualIsZero(m, tol);
    emit(Json{{"schema", kSchema},
              {"residual_zero", zero},
              {"residual_norm", norm}});
    std::cerr << (zero ? "moment map residual is zero"
                       : "nonzero moment map residual")
              << " (max entry " << norm << ")\n";
    return zero ? 0 : 1;
  });
}

int runStability(const Io& io, const std::string& thetaSpec, bool semi,
                 int nOverride, double tol) {
  const Json j = io.read();
  return withModule(j, [&](const auto& m) {
    std::vector<int> ctx = m.dim.v;
    if (nOverride >= 0 && thetaSpec == "zero") ctx[0] = nOverride;
    const StabilityParameter t =
        thetaFromSpec(thetaSpec, ctx, m.quiver.dynkinVertices());
    const bool stable = is_stable(m, t, tol);
    const bool semistable = stable || is_semistable(m, t, tol);
    emit(Json{{"schema", kSchema},
              {"theta", toJson(t)},
              {"stable", stable},
              {"semistable", semistable}});
    std::cerr << "theta(" << thetaSpec << "): "
              << (stable ? "stable"
                         : semistable ? "semistable, not stable" : "unstable")
              << "\n";
    const bool verdict = semi ? semistable : stable;
    return verdict ? 0 : 1;
  });
}

int runConcentrate(const Io& io, double tol) {
  const Json j = io.read();
  return withModule(j, [&](const auto& m) {
    auto [con, mult] = polystable_theta0(m, tol);
    emit(toJson(con));
    std::cerr << "concentrated module has dimension (1";
    for (int x : con.dim.v) std::cerr << ", " << x;
    std::cerr << "); stripped simple multiplicities:";
    for (int x : mult.v) std::cerr << " " << x;
    std::cerr << "\n";
    return 0;
  });
}

int runRequiv(const Io& io, const std::string& otherPath,
              const std::string& mode, uint64_t seed, double tol) {
  const Json j1 = io.read();
  const Json j2 = readFile(otherPath);
  AnyModule a1 = moduleFromJson(j1), a2 = moduleFromJson(j2);
  if (a1.index() != a2.index())
    throw InputError("requiv: modules use different scalar kinds");
  auto run = [&](const auto& m1, const auto& m2) {
    const bool r = r_equivalent(m1, m2, seed, tol);
    const bool s = r && s_equivalent(m1, m2, seed, tol);
    emit(Json{{"schema", kSchema}, {"r_equivalent", r}, {"s_equivalent", s}});
    std::cerr << (r ? "R-equivalent" : "not R-equivalent") << ", "
              << (s ? "S-equivalent" : "not S-equivalent") << "\n";
    return (mode == "s" ? s : r) ? 0 : 1;
  };
  if (std::holds_alternative<QuiverModule<Rat>>(a1))
    return run(std::get<QuiverModule<Rat>>(a1), std::get<QuiverModule<Rat>>(a2));
  return run(std::get<QuiverModule<Cx>>(a1), std::get<QuiverModule<Cx>>(a2));
}

int runMonadCheck(const Io& io, int samples, uint64_t seed, double tol) {
  const Json j = io.read();
  AnyADHM any = adhmFromModuleOrAdhmJson(j);
  auto run = [&](const auto& d) {
    auto md = build_monad(d);
    const bool complexOk = monadIsComplex(md, tol);
    Rng rng(seed);
    bool fibersOk = true;
    int tested = 0;
    for (int t = 0; t < samples && fibersOk; ++t) {
      const FiberVerdict v = monad_fiber_check(
          md, rng.unitComplex(), rng.unitComplex(), rng.unitComplex(), tol);
      fibersOk = v.aInjective && v.bSurjective;
      ++tested;
    }
    const int zSamples = std::max(1, samples / 10);
    for (int t = 0; t < zSamples && fibersOk; ++t) {
      const FiberVerdict v = monad_fiber_check(md, rng.unitComplex(),
                                               rng.unitComplex(), Cx(0), tol);
      fibersOk = v.aInjective && v.bSurjective;
      ++tested;
    }
    emit(Json{{"schema", kSchema},
              {"complex", complexOk},
              {"fibers_ok", fibersOk},
              {"points_tested", tested}});
    std::cerr << "b*a " << (complexOk ? "vanishes" : "does not vanish")
              << " symbolically; fibers "
              << (fibersOk ? "pass" : "fail") << " at " << tested
              << " points\n";
    return complexOk && fibersOk ? 0 : 1;
  };
  if (std::holds_alternative<ADHMDatum<Rat>>(any))
    return run(std::get<ADHMDatum<Rat>>(any));
  return run(std::get<ADHMDatum<Cx>>(any));
}

int runIdeal2Adhm(const Io& io) {
  const EquivariantIdeal I = idealFromJson(io.read());
  emit(toJson(ideal_to_adhm(I)));
  std::cerr << "quotient model of colength " << I.colength() << "\n";
  return 0;
}

int runAdhm2Ideal(const Io& io, int degreeBound) {
  AnyADHM any = adhmFromModuleOrAdhmJson(io.read());
  if (!std::holds_alternative<ADHMDatum<Rat>>(any))
    throw InputError("adhm2ideal: exact rational input required");
  const EquivariantIdeal I =
      adhm_to_ideal(std::get<ADHMDatum<Rat>>(any), degreeBound);
  emit(toJson(I));
  std::cerr << "ideal with " << I.gens.size() << " generators, colength "
            << I.colength() << "\n";
  return 0;
}

int runDescend(const Io& io) {
  const EquivariantIdeal I = idealFromJson(io.read());
  const InvariantIdeal J = descend_ideal(I);
  emit(toJson(J));
  std::cerr << "descended ideal has colength " << J.colength << "\n";
  return 0;
}

int runWitness(const std::string& group, const std::string& pointSpec, int r) {
  const GroupSpec g = GroupSpec::parse(group);
  const QuiverModule<Rat> w = witness_module(parsePoints(pointSpec), g, r);
  emit(toJson(w));
  std::cerr << "witness module of dimension (1";
  for (int x : w.dim.v) std::cerr << ", " << x;
  std::cerr << ") with framing rank " << r << "\n";
  return 0;
}

int runTangentDim(const Io& io, double tol) {
  const Json j = io.read();
  return withModule(j, [&](const auto& m) {
    const long dim = tangent_dimension(m, tol);
    emit(Json{{"schema", kSchema}, {"tangent_dimension", dim}});
    std::cerr << "tangent dimension " << dim << "\n";
    return 0;
  });
}

int runSupport(const Io& io, double tol) {
  AnyADHM any = adhmFromModuleOrAdhmJson(io.read());
  auto run = [&](const auto& d) {
    const SupportCycle c = support_cycle(d, tol);
    emit(toJson(c));
    int total = 0;
    for (const SupportPoint& p : c) total += p.multiplicity;
    std::cerr << c.size() << " support points, total multiplicity " << total
              << "\n";
    return 0;
  };
  if (std::holds_alternative<ADHMDatum<Rat>>(any))
    return run(std::get<ADHMDatum<Rat>>(any));
  return run(std::get<ADHMDatum<Cx>>(any));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Framed McKay quivers, preprojective modules, and framed "
               "sheaf data for Kleinian singularities"};
  app.require_subcommand(1);

  std::string group = "A2", pointSpec, thetaSpec = "zero", otherPath, mode = "r";
  Io io;
  int rMckay = 0, rWitness = 1, samples = 200, degreeBound = -1, nOverride = -1;
  bool semi = false, wantTable = false;
  double tol = kDefaultTolerance;
  uint64_t seed = 1;

  auto addIo = [&](CLI::App* cmd) {
    cmd->add_option("--in", io.inPath, "input JSON path (default: stdin)");
    cmd->add_option("--tol", tol, "rank tolerance for complex scalars");
  };

  CLI::App* mckay = app.add_subcommand("mckay", "McKay quiver of an ADE group");
  mckay->add_option("--group", group, "group name: A<m>, D<m>, E6, E7, E8")
      ->required();
  mckay->add_option("--r", rMckay, "emit the framed quiver with this framing rank");
  mckay->add_flag("--table", wantTable, "emit the character table instead");

  CLI::App* check = app.add_subcommand("check-module",
                                       "verify the preprojective relations");
  addIo(check);

  CLI::App* stab = app.add_subcommand("stability", "stability verdict");
  addIo(stab);
  stab->add_option("--theta", thetaSpec, "zero | cplus | I=<v1,v2,...>");
  stab->add_flag("--semi", semi, "exit by the semistability verdict");
  stab->add_option("--n", nOverride,
                   "context n for theta zero (default: dim_0 of the module)");

  CLI::App* conc = app.add_subcommand("concentrate",
                                      "concentrated module of a semistable one");
  addIo(conc);

  CLI::App* req = app.add_subcommand("requiv", "R/S-equivalence of two modules");
  addIo(req);
  req->add_option("--other", otherPath, "second module JSON path")->required();
  req->add_option("--mode", mode, "verdict for the exit code: r | s");
  req->add_option("--seed", seed, "seed for randomized isomorphism testing");

  CLI::App* monad = app.add_subcommand("monad-check",
                                       "complex property and fiber ranks");
  addIo(monad);
  monad->add_option("--samples", samples, "random fiber points");
  monad->add_option("--seed", seed, "sampling seed")->required();

  CLI::App* i2a = app.add_subcommand("ideal2adhm", "quotient model of an ideal");
  addIo(i2a);

  CLI::App* a2i = app.add_subcommand("adhm2ideal",
                                     "annihilator ideal of a rank-1 datum");
  addIo(a2i);
  a2i->add_option("--degree-bound", degreeBound, "generator degree cap");

  CLI::App* desc = app.add_subcommand("descend",
                                      "intersect with the invariant ring");
  addIo(desc);

  CLI::App* wit = app.add_subcommand("witness", "module of free orbit ideals");
  wit->add_option("--group", group, "cyclic group A<m>")->required();
  wit->add_option("--points", pointSpec, "orbit representatives \"(a,b);(c,d)\"")
      ->required();
  wit->add_option("--r", rWitness, "framing rank");

  CLI::App* tan = app.add_subcommand("tangent-dim",
                                     "moment-map tangent dimension");
  addIo(tan);

  CLI::App* sup = app.add_subcommand("support", "support cycle of a datum");
  addIo(sup);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (mckay->parsed()) return runMckay(group, rMckay, wantTable);
    if (check->parsed()) return runCheckModule(io, tol);
    if (stab->parsed()) return runStability(io, thetaSpec, semi, nOverride, tol);
    if (conc->parsed()) return runConcentrate(io, tol);
    if (req->parsed()) return runRequiv(io, otherPath, mode, seed, tol);
    if (monad->parsed()) return runMonadCheck(io, samples, seed, tol);
    if (i2a->parsed()) return runIdeal2Adhm(io);
    if (a2i->parsed()) return runAdhm2Ideal(io, degreeBound);
    if (desc->parsed()) return runDescend(io);
    if (wit->parsed()) return runWitness(group, pointSpec, rWitness);
    if (tan->parsed()) return runTangentDim(io, tol);
    if (sup->parsed()) return runSupport(io, tol);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
