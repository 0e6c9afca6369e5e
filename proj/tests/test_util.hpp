#pragma once

#include "ncb/blowup.hpp"
#include "ncb/config.hpp"

namespace ncbtest {

using namespace ncb;

inline Config default_config() { return Config::defaults(); }

/// Rank-2 curve y^2 + y = x^3 + x^2 - 2x with translation (0,0); the point
/// (-1,1) generates an independent subgroup, giving genuinely distinct
/// sigma-orbits over Q.
inline Config rank2_config() {
  Config cfg = Config::defaults();
  cfg.a1 = 0;
  cfg.a2 = 1;
  cfg.a3 = 1;
  cfg.a4 = -2;
  cfg.a6 = 0;
  cfg.translation = CurvePoint(Q(0), Q(0));
  cfg.points.clear();
  Curve c = cfg.curve();
  cfg.points["t"] = cfg.translation;
  cfg.points["p"] = c.multiple(-3, cfg.translation);
  cfg.points["u"] = CurvePoint(Q(-1), Q(1));  // off the t-line
  cfg.sample_g = cfg.translation;
  cfg.sample_h = CurvePoint::at_infinity();
  return cfg;
}

/// Brute-force virtual-effectiveness oracle: scan [x]_n for n <= window and
/// report whether some tail [m, window] is all effective, with the least
/// such m.
struct VeffOracle {
  bool verdict = false;
  long n0 = 0;
};

inline VeffOracle veff_oracle(const Geometry& g, const Divisor& x, long window = 30) {
  std::vector<bool> eff;
  for (long n = 0; n <= window; ++n) eff.push_back(cumulative(g, x, n).is_effective());
  long m = window + 1;
  for (long n = window; n >= 0 && eff[n]; --n) m = n;
  VeffOracle o;
  // demand a stable tail of at least a third of the window
  o.verdict = m <= window - window / 3;
  o.n0 = m;
  return o;
}

}  // namespace ncbtest
