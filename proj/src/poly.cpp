#include "kql/poly.hpp"

#include <cctype>
#include <sstream>

namespace kql {

std::optional<int> Poly::homogeneousWeight(int m) const {
  if (isZero()) return 0;
  int w = terms_.begin()->first.weight(m);
  for (const auto& [mono, c] : terms_)
    if (mono.weight(m) != w) return std::nullopt;
  return w;
}

std::string Poly::toString() const {
  if (isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  // leading term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Mono& m = it->first;
    Rat c = it->second;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
      first = false;
    } else {
      if (c < 0) {
        out << " - ";
        c = -c;
      } else {
        out << " + ";
      }
    }
    const bool hasVars = m.px > 0 || m.py > 0;
    if (c != 1 || !hasVars) {
      out << c.get_str();
      if (hasVars) out << "*";
    }
    if (m.px > 0) {
      out << "x";
      if (m.px > 1) out << "^" << m.px;
    }
    if (m.py > 0) {
      if (m.px > 0) out << "*";
      out << "y";
      if (m.py > 1) out << "^" << m.py;
    }
  }
  return out.str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& str) : s(str) {}

  void skipSpace() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skipSpace();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skipSpace();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& why) {
    throw InputError("polynomial parse error at position " +
                     std::to_string(pos) + " in '" + s + "': " + why);
  }

  long integer() {
    skipSpace();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected an integer");
    return std::stol(s.substr(start, pos - start));
  }

  // factor := integer [/ integer] | x [^ k] | y [^ k] | '(' expr ')'
  Poly factor() {
    skipSpace();
    if (pos >= s.size()) fail("unexpected end");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = integer();
      Rat r(num);
      if (eat('/')) {
        long den = integer();
        if (den == 0) fail("zero denominator");
        r = Rat(num, den);
        r.canonicalize();
      }
      return Poly(r);
    }
    if (c == 'x' || c == 'y') {
      ++pos;
      int e = 1;
      if (eat('^')) e = static_cast<int>(integer());
      if (e < 0) fail("negative exponent");
      Mono m;
      (c == 'x' ? m.px : m.py) = e;
      return Poly::monomial(m);
    }
    if (c == '(') {
      ++pos;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    fail("unexpected character");
  }

  Poly term() {
    Poly p = factor();
    for (;;) {
      skipSpace();
      if (eat('*')) {
        p = p * factor();
        continue;
      }
      char c = peek();
      if (c == 'x' || c == 'y' || c == '(') {  // implicit product
        p = p * factor();
        continue;
      }
      return p;
    }
  }

  Poly expr() {
    Poly acc;
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    for (;;) {
      Poly t = term();
      acc = negate ? acc - t : acc + t;
      skipSpace();
      if (eat('-')) {
        negate = true;
      } else if (eat('+')) {
        negate = false;
      } else {
        return acc;
      }
    }
  }
};

}  // namespace

Poly Poly::parse(const std::string& s) {
  Parser p(s);
  Poly out = p.expr();
  p.skipSpace();
  if (p.pos != s.size()) p.fail("trailing input");
  return out;
}

}  // namespace kql
