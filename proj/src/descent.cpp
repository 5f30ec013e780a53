#include "kql/descent.hpp"

#include <sstream>

namespace kql {

void RPoly::add(const RMono& mono, const Rat& c) {
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(mono, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RMono RPoly::leadMono() const {
  if (isZero()) throw PreconditionError("leadMono of zero invariant poly");
  return terms_.rbegin()->first;
}

Poly RPoly::toXY() const {
  Poly out;
  for (const auto& [mono, c] : terms_) out.add(mono.toXY(m_), c);
  return out;
}

std::string RPoly::toString() const {
  if (isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rat c = it->second;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    const RMono& mo = it->first;
    const bool hasVars = mo.a > 0 || mo.b > 0 || mo.c > 0;
    if (c != 1 || !hasVars) {
      out << c.get_str();
      if (hasVars) out << "*";
    }
    bool sep = false;
    auto piece = [&](const char* name, int e) {
      if (e == 0) return;
      if (sep) out << "*";
      out << name;
      if (e > 1) out << "^" << e;
      sep = true;
    };
    piece("u", mo.a);
    piece("v", mo.b);
    piece("w", mo.c);
  }
  return out.str();
}

namespace {

// product of normal monomials with the rewrite w^m -> uv
RMono rmul(const RMono& p, const RMono& q, int m) {
  int c = p.c + q.c;
  const int carry = c / m;
  c %= m;
  return RMono{p.a + q.a + carry, p.b + q.b + carry, c};
}

bool rdivides(const RMono& d, const RMono& mo, int m) {
  const Mono a = d.toXY(m), b = mo.toXY(m);
  return a.divides(b);
}

}  // namespace

InvariantIdeal descend_ideal(const EquivariantIdeal& I) {
  const int m = I.m;
  InvariantIdeal J;
  J.m = m;
  const IdealModel& model = I.model;
  const int n = model.dim();
  if (n == 0) {
    J.colength = 0;
    RPoly one(m);
    one.add(RMono{0, 0, 0}, 1);
    J.gens.push_back(one);
    return J;
  }

  Matrix<Rat> U = model.mulX, V = model.mulY, W = model.mulX * model.mulY;
  for (int t = 1; t < m; ++t) {
    U = U * model.mulX;
    V = V * model.mulY;
  }
  auto evalR = [&](const RMono& mo) {
    Matrix<Rat> acc = model.one;
    for (int t = 0; t < mo.a; ++t) acc = U * acc;
    for (int t = 0; t < mo.b; ++t) acc = V * acc;
    for (int t = 0; t < mo.c; ++t) acc = W * acc;
    return acc;
  };

  // staircase scan over normal monomials of the invariant ring
  std::map<RMono, bool, RMonoOrder> queue{RMonoOrder{m}};
  queue.emplace(RMono{0, 0, 0}, true);
  Matrix<Rat> basisEvals(n, 0);
  std::vector<RMono> leads;
  while (!queue.empty()) {
    const RMono mono = queue.begin()->first;
    queue.erase(queue.begin());
    bool divisible = false;
    for (const RMono& l : leads)
      if (rdivides(l, mono, m)) {
        divisible = true;
        break;
      }
    if (divisible) continue;
    Matrix<Rat> vec = evalR(mono);
    auto coords = solve(basisEvals, vec);
    if (coords) {
      RPoly g(m);
      g.add(mono, 1);
      for (int t = 0; t < static_cast<int>(J.standard.size()); ++t)
        g.add(J.standard[t], -coords->at(t, 0));
      J.gens.push_back(g);
      leads.push_back(mono);
    } else {
      J.standard.push_back(mono);
      basisEvals = hstack(basisEvals, vec);
      queue.emplace(rmul(mono, RMono{1, 0, 0}, m), true);
      queue.emplace(rmul(mono, RMono{0, 1, 0}, m), true);
      if (m > 1) queue.emplace(rmul(mono, RMono{0, 0, 1}, m), true);
    }
  }
  J.colength = static_cast<int>(J.standard.size());
  // every generator must map into I downstairs
  for (const RPoly& g : J.gens)
    if (!evalOnModel(g.toXY(), model).isZero())
      throw PreconditionError("descend: generator escaped the source ideal");
  return J;
}

}  // namespace kql
