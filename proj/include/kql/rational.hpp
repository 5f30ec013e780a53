#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace kql {

using Rat = mpq_class;
using Cx = std::complex<double>;

// Errors caused by bad user input (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Errors caused by violated mathematical preconditions.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

inline Rat ratFromString(const std::string& s) {
  try {
    Rat r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw InputError("cannot parse rational '" + s + "'");
  }
}

inline std::string ratToString(const Rat& r) { return r.get_str(); }

inline double toDouble(const Rat& r) { return r.get_d(); }
inline Cx toComplex(const Rat& r) { return Cx(r.get_d(), 0.0); }
inline Cx toComplex(const Cx& z) { return z; }

}  // namespace kql
