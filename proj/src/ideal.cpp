#include "kql/ideal.hpp"

#include <algorithm>
#include <map>

namespace kql {

Matrix<Rat> evalOnModel(const Poly& f, const IdealModel& model) {
  // cache of monomial evaluations built by increasing degree
  std::map<Mono, Matrix<Rat>, MonoOrder> cache;
  cache[Mono{0, 0}] = model.one;
  auto eval = [&](const Mono& m) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    Matrix<Rat> v = model.one;
    for (int t = 0; t < m.px; ++t) v = model.mulX * v;
    for (int t = 0; t < m.py; ++t) v = model.mulY * v;
    cache[m] = v;
    return v;
  };
  Matrix<Rat> acc(model.dim(), 1);
  for (const auto& [mono, c] : f.terms()) acc = acc + eval(mono).scaled(c);
  return acc;
}

bool idealContains(const EquivariantIdeal& I, const Poly& f) {
  return evalOnModel(f, I.model).isZero();
}

namespace {

void validateWeights(const std::vector<Poly>& gens, int m) {
  for (const Poly& g : gens)
    if (!g.homogeneousWeight(m))
      throw InputError(
          "ideal: generator '" + g.toString() +
          "' is not weight-homogeneous mod " + std::to_string(m));
}

IdealModel modelFromGroebner(const std::vector<Poly>& gb,
                             const std::vector<Mono>& standard, int m) {
  IdealModel model;
  model.m = m;
  const int n = static_cast<int>(standard.size());
  for (const Mono& mo : standard) model.weights.push_back(mo.weight(m));
  std::map<Mono, int, MonoOrder> index;
  for (int t = 0; t < n; ++t) index[standard[t]] = t;
  model.mulX = Matrix<Rat>(n, n);
  model.mulY = Matrix<Rat>(n, n);
  model.one = Matrix<Rat>(n, 1);
  if (n > 0) model.one.at(index.at(Mono{0, 0}), 0) = 1;
  auto fill = [&](Matrix<Rat>& target, const Mono& shift) {
    for (int c = 0; c < n; ++c) {
      Poly nf = normalForm(Poly::monomial(standard[c] * shift), gb);
      for (const auto& [mono, coeff] : nf.terms())
        target.at(index.at(mono), c) = coeff;
    }
  };
  fill(model.mulX, Mono{1, 0});
  fill(model.mulY, Mono{0, 1});
  return model;
}

}  // namespace

EquivariantIdeal ideal_from_generators(const std::vector<Poly>& gens, int m) {
  if (m < 1) throw InputError("ideal: group order must be >= 1");
  validateWeights(gens, m);
  EquivariantIdeal I;
  I.m = m;
  I.gens = reducedGroebner(gens);
  if (I.gens.empty())
    throw PreconditionError("ideal: zero ideal has infinite colength");
  if (I.gens.size() == 1 && I.gens[0].degree() == 0) {
    return unit_ideal(m);
  }
  I.standard = staircase(I.gens);
  I.model = modelFromGroebner(I.gens, I.standard, m);
  return I;
}

EquivariantIdeal unit_ideal(int m) {
  EquivariantIdeal I;
  I.m = m;
  I.gens = {Poly(Rat(1))};
  I.model.m = m;
  I.model.mulX = Matrix<Rat>(0, 0);
  I.model.mulY = Matrix<Rat>(0, 0);
  I.model.one = Matrix<Rat>(0, 1);
  return I;
}

EquivariantIdeal ideal_from_model(const IdealModel& model) {
  EquivariantIdeal I;
  I.m = model.m;
  I.model = model;
  const int n = model.dim();
  if (n == 0) return unit_ideal(model.m);

  // FGLM scan: walk monomials in order; a monomial whose evaluation is
  // independent of the previous standard ones joins the staircase, otherwise
  // its normal form yields a reduced-basis element (unless a previous lead
  // already divides it).
  std::map<Mono, bool, MonoOrder> queued;
  queued[Mono{0, 0}] = true;
  Matrix<Rat> basisEvals(n, 0);
  std::vector<Mono> leads;
  while (!queued.empty()) {
    const Mono mono = queued.begin()->first;
    queued.erase(queued.begin());
    bool divisible = false;
    for (const Mono& l : leads)
      if (l.divides(mono)) {
        divisible = true;
        break;
      }
    if (divisible) continue;
    Matrix<Rat> v = evalOnModel(Poly::monomial(mono), I.model);
    auto coords = solve(basisEvals, v);
    if (coords) {
      // dependent: reduced basis element mono - sum coords * standard
      Poly g = Poly::monomial(mono);
      for (int t = 0; t < static_cast<int>(I.standard.size()); ++t)
        g.add(I.standard[t], -coords->at(t, 0));
      I.gens.push_back(g);
      leads.push_back(mono);
    } else {
      I.standard.push_back(mono);
      basisEvals = hstack(basisEvals, v);
      queued[mono * Mono{1, 0}] = true;
      queued[mono * Mono{0, 1}] = true;
    }
  }
  if (static_cast<int>(I.standard.size()) != n)
    throw PreconditionError("ideal_from_model: model is not cyclic");
  std::sort(I.gens.begin(), I.gens.end(), [](const Poly& a, const Poly& b) {
    return MonoOrder{}(a.leadMono(), b.leadMono());
  });
  // rebuild the model on the staircase basis so it is canonical
  I.model = modelFromGroebner(I.gens, I.standard, model.m);
  return I;
}

ADHMDatum<Rat> ideal_to_adhm(const EquivariantIdeal& I) {
  ADHMDatum<Rat> d;
  d.group = GroupSpec{Family::A, I.m};
  d.r = 1;
  d.weights = I.model.weights;
  d.B1 = I.model.mulX;
  d.B2 = I.model.mulY;
  d.i = I.model.one;
  d.j = Matrix<Rat>(1, d.dimV());
  validateGrading(d);
  return d;
}

EquivariantIdeal adhm_to_ideal(const ADHMDatum<Rat>& d, int degreeBound) {
  validateGrading(d);
  if (d.r != 1) throw PreconditionError("adhm_to_ideal: needs r = 1");
  if (!d.j.isZero()) throw PreconditionError("adhm_to_ideal: needs j = 0");
  IdealModel model;
  model.m = d.group.m;
  model.weights = d.weights;
  model.mulX = d.B1;
  model.mulY = d.B2;
  model.one = d.i;
  const int bound = degreeBound < 0 ? d.dimV() + 1 : degreeBound;
  EquivariantIdeal I = ideal_from_model(model);  // throws if not cyclic
  for (const Poly& g : I.gens)
    if (g.degree() > bound)
      throw PreconditionError("adhm_to_ideal: generator beyond degree bound");
  return I;
}

std::vector<int> isotypic_decomposition(const EquivariantIdeal& I) {
  std::vector<int> counts(I.m, 0);
  for (int w : I.model.weights) ++counts[w];
  return counts;
}

IdealModel intersectModels(const IdealModel& a, const IdealModel& b) {
  if (a.m != b.m) throw PreconditionError("intersect: group orders differ");
  const int na = a.dim(), nb = b.dim(), n = na + nb;
  Matrix<Rat> X(n, n), Y(n, n), seed(n, 1);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < na; ++j) {
      X.at(i, j) = a.mulX.at(i, j);
      Y.at(i, j) = a.mulY.at(i, j);
    }
    seed.at(i, 0) = a.one.at(i, 0);
  }
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < nb; ++j) {
      X.at(na + i, na + j) = b.mulX.at(i, j);
      Y.at(na + i, na + j) = b.mulY.at(i, j);
    }
    seed.at(na + i, 0) = b.one.at(i, 0);
  }
  // cyclic closure of (1,1); weight-pure basis vectors arise monomial by
  // monomial exactly as in the FGLM scan
  std::map<Mono, bool, MonoOrder> queue;
  queue[Mono{0, 0}] = true;
  Matrix<Rat> basis(n, 0);
  std::vector<int> weights;
  while (!queue.empty()) {
    const Mono mono = queue.begin()->first;
    queue.erase(queue.begin());
    Matrix<Rat> v = seed;
    for (int t = 0; t < mono.px; ++t) v = X * v;
    for (int t = 0; t < mono.py; ++t) v = Y * v;
    if (inSpan(v, basis)) continue;
    basis = hstack(basis, v);
    weights.push_back(mono.weight(a.m));
    queue[mono * Mono{1, 0}] = true;
    queue[mono * Mono{0, 1}] = true;
  }
  IdealModel out;
  out.m = a.m;
  out.weights = weights;
  auto restrict = [&](const Matrix<Rat>& op) {
    auto sol = solve(basis, op * basis);
    if (!sol) throw PreconditionError("intersect: closure not invariant");
    return *sol;
  };
  out.mulX = restrict(X);
  out.mulY = restrict(Y);
  auto oneCoords = solve(basis, seed);
  if (!oneCoords) throw PreconditionError("intersect: seed escaped closure");
  out.one = *oneCoords;
  return out;
}

}  // namespace kql
