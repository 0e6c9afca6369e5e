#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ncb {

using Q = mpq_class;
using Z = mpz_class;

/// Parse "num", "num/den" or "-num/den" into a canonical rational.
inline Q q_parse(const std::string& s) {
  Q q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

inline std::string q_str(const Q& q) { return q.get_str(); }

inline Q q_pow(const Q& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("0^negative");
    return 1 / q_pow(base, -e);
  }
  Q r = 1, b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct arithmetic_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct unsupported_point_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct indeterminate_orbit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ncb
