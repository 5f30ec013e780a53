#pragma once

// Sparse bivariate polynomials over the rationals, with the degree order
// used everywhere (total degree, ties broken by x-exponent descending) and
// the mod-m weight grading wt(x^p y^q) = p - q.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kql/rational.hpp"

namespace kql {

struct Mono {
  int px = 0;
  int py = 0;

  int degree() const { return px + py; }
  int weight(int m) const { return ((px - py) % m + m) % m; }
  bool divides(const Mono& o) const { return px <= o.px && py <= o.py; }
  Mono operator*(const Mono& o) const { return {px + o.px, py + o.py}; }
  Mono quotientBy(const Mono& o) const { return {px - o.px, py - o.py}; }
  bool operator==(const Mono& o) const = default;
};

// Degree order; among equal degrees, higher x-exponent is larger.
struct MonoOrder {
  bool operator()(const Mono& a, const Mono& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.px < b.px;
  }
};

inline Mono lcm(const Mono& a, const Mono& b) {
  return {std::max(a.px, b.px), std::max(a.py, b.py)};
}

class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& c) {
    if (c != 0) terms_[Mono{0, 0}] = c;
  }
  static Poly monomial(const Mono& m, const Rat& c = Rat(1)) {
    Poly p;
    if (c != 0) p.terms_[m] = c;
    return p;
  }

  bool isZero() const { return terms_.empty(); }
  int degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
  }
  const std::map<Mono, Rat, MonoOrder>& terms() const { return terms_; }

  Mono leadMono() const {
    if (isZero()) throw PreconditionError("leadMono of zero polynomial");
    return terms_.rbegin()->first;
  }
  Rat leadCoeff() const {
    if (isZero()) throw PreconditionError("leadCoeff of zero polynomial");
    return terms_.rbegin()->second;
  }

  void add(const Mono& m, const Rat& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (c != 0) terms_[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly operator+(const Poly& o) const {
    Poly out = *this;
    for (const auto& [m, c] : o.terms_) out.add(m, c);
    return out;
  }
  Poly operator-(const Poly& o) const {
    Poly out = *this;
    for (const auto& [m, c] : o.terms_) out.add(m, -c);
    return out;
  }
  Poly operator*(const Poly& o) const {
    Poly out;
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) out.add(m1 * m2, c1 * c2);
    return out;
  }
  Poly scaled(const Rat& c) const {
    Poly out;
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_[m] = k * c;
    return out;
  }
  Poly timesMono(const Mono& m, const Rat& c = Rat(1)) const {
    Poly out;
    if (c == 0) return out;
    for (const auto& [mm, k] : terms_) out.terms_[mm * m] = k * c;
    return out;
  }
  Poly monic() const {
    if (isZero()) return *this;
    return scaled(Rat(1) / leadCoeff());
  }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  // All terms share the same weight mod m; returns it, or nullopt.
  std::optional<int> homogeneousWeight(int m) const;

  std::string toString() const;
  static Poly parse(const std::string& s);  // e.g. "x^2 - 3/2*x*y + y^3"

 private:
  std::map<Mono, Rat, MonoOrder> terms_;
};

}  // namespace kql
