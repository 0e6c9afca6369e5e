#pragma once

#include <map>

#include "ncb/curve.hpp"

namespace ncb {

/// Finite integer combination of curve points; zero coefficients are never
/// stored.
class Divisor {
 public:
  Divisor() = default;

  static Divisor point(const CurvePoint& p, long coeff = 1) {
    Divisor d;
    d.set(p, coeff);
    return d;
  }

  long coeff(const CurvePoint& p) const {
    auto it = m_.find(p);
    return it == m_.end() ? 0 : it->second;
  }
  void set(const CurvePoint& p, long c) {
    if (c == 0) m_.erase(p);
    else m_[p] = c;
  }
  void add_to(const CurvePoint& p, long c) { set(p, coeff(p) + c); }

  const std::map<CurvePoint, long>& support() const { return m_; }
  bool empty() const { return m_.empty(); }
  long degree() const;
  bool is_effective() const;

  Divisor operator+(const Divisor& o) const;
  Divisor operator-(const Divisor& o) const;
  Divisor operator-() const;
  Divisor operator*(long n) const;
  bool operator==(const Divisor& o) const { return m_ == o.m_; }
  bool operator<(const Divisor& o) const { return m_ < o.m_; }

  /// Coefficientwise max / min (0 where absent).
  static Divisor sup(const Divisor& a, const Divisor& b);
  static Divisor inf(const Divisor& a, const Divisor& b);

  /// a <= b coefficientwise.
  static bool leq(const Divisor& a, const Divisor& b);

  std::string str() const;

 private:
  std::map<CurvePoint, long> m_;
};

/// The restriction of a divisor to one sigma-orbit: integer coefficients
/// indexed by the twist exponent relative to the representative, which sits
/// at index 0 and is the lowest occurring index.
struct OrbitProfile {
  CurvePoint rep;
  std::map<long, long> coeffs;

  long width() const {
    return coeffs.empty() ? 0 : coeffs.rbegin()->first - coeffs.begin()->first + 1;
  }
  long sum() const;
};

/// Certificate returned by is_virtually_effective.
struct VeffCertificate {
  bool verdict = false;
  long n0 = 0;  // when true: [x]_n effective for all n >= n0, n0 least such
  // when false: a coefficient of [x]_n that stays negative for large n
  long witness_n = 0;
  CurvePoint witness_point;
  long witness_coeff = 0;
};

struct VeffDecomposition {
  Divisor u, v;
  long k = 0;  // v <= [u]_k
};

/// Divisor x^{sigma^j}: every support point twisted, coefficients kept.
Divisor twist(const Geometry& g, const Divisor& x, long j);

/// [x]_n = x + x^sigma + ... + x^{sigma^{n-1}}, with [x]_0 = 0.
Divisor cumulative(const Geometry& g, const Divisor& x, long n);

/// Group the support into sigma-orbits. Throws indeterminate_orbit_error
/// when two support points are related by a twist beyond the cap.
std::vector<OrbitProfile> decompose_orbits(const Geometry& g, const Divisor& x);

VeffCertificate is_virtually_effective(const Geometry& g, const Divisor& x);

/// Write x = u - v + v^sigma with u, v effective and v <= [u]_k, via the
/// minimal-u greedy sweep. Requires x virtually effective.
VeffDecomposition decompose_virtually_effective(const Geometry& g, const Divisor& x);

/// One representative per orbit with coefficient e_p = sum of the orbit's
/// coefficients. Negative orbit sums are rejected.
Divisor normalized_divisor(const Geometry& g, const Divisor& x);

}  // namespace ncb
