#include "kql/groebner.hpp"

#include <algorithm>
#include <deque>

namespace kql {

Poly normalForm(const Poly& f, const std::vector<Poly>& basis) {
  Poly rem;
  Poly cur = f;
  while (!cur.isZero()) {
    const Mono lm = cur.leadMono();
    bool reduced = false;
    for (const Poly& g : basis) {
      if (g.isZero()) continue;
      if (g.leadMono().divides(lm)) {
        const Rat c = cur.leadCoeff() / g.leadCoeff();
        cur = cur - g.timesMono(lm.quotientBy(g.leadMono()), c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add(lm, cur.leadCoeff());
      cur.add(lm, -cur.leadCoeff());
    }
  }
  return rem;
}

std::vector<Poly> buchberger(std::vector<Poly> gens) {
  std::vector<Poly> basis;
  for (Poly& g : gens)
    if (!g.isZero()) basis.push_back(g.monic());
  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const Mono li = basis[i].leadMono(), lj = basis[j].leadMono();
    const Mono l = lcm(li, lj);
    // product criterion: coprime leads give a trivially reducible S-pair
    if (l.degree() == li.degree() + lj.degree()) continue;
    Poly s = basis[i].timesMono(l.quotientBy(li)) -
             basis[j].timesMono(l.quotientBy(lj));
    Poly r = normalForm(s, basis);
    if (r.isZero()) continue;
    r = r.monic();
    for (size_t t = 0; t < basis.size(); ++t) pairs.emplace_back(t, basis.size());
    basis.push_back(r);
  }
  return basis;
}

std::vector<Poly> reduceBasis(std::vector<Poly> basis) {
  // drop elements whose lead is divisible by another lead
  std::vector<Poly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (basis[j].isZero() || basis[i].isZero()) continue;
      const Mono li = basis[i].leadMono(), lj = basis[j].leadMono();
      if (lj.divides(li) && !(li == lj && j > i)) {
        keep = false;
        break;
      }
    }
    if (keep && !basis[i].isZero()) minimal.push_back(basis[i].monic());
  }
  // full tail reduction
  std::vector<Poly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = normalForm(minimal[i], others);
    if (!r.isZero()) reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
    return MonoOrder{}(a.leadMono(), b.leadMono());
  });
  return reduced;
}

std::vector<Mono> staircase(const std::vector<Poly>& groebner) {
  if (groebner.empty())
    throw PreconditionError("staircase: zero ideal has infinite colength");
  int xPow = -1, yPow = -1;
  for (const Poly& g : groebner) {
    const Mono l = g.leadMono();
    if (l.py == 0) xPow = xPow < 0 ? l.px : std::min(xPow, l.px);
    if (l.px == 0) yPow = yPow < 0 ? l.py : std::min(yPow, l.py);
  }
  if (xPow < 0 || yPow < 0)
    throw PreconditionError("staircase: ideal does not have finite colength");
  std::vector<Mono> out;
  for (int px = 0; px < xPow; ++px)
    for (int py = 0; py < yPow; ++py) {
      const Mono m{px, py};
      bool inside = false;
      for (const Poly& g : groebner)
        if (g.leadMono().divides(m)) {
          inside = true;
          break;
        }
      if (!inside) out.push_back(m);
    }
  std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) {
    return MonoOrder{}(a, b);
  });
  return out;
}

}  // namespace kql
