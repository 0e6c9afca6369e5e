#include "ncb/divisor.hpp"

#include <algorithm>
#include <sstream>

namespace ncb {

long Divisor::degree() const {
  long d = 0;
  for (const auto& [p, c] : m_) d += c;
  return d;
}

bool Divisor::is_effective() const {
  return std::all_of(m_.begin(), m_.end(), [](const auto& e) { return e.second >= 0; });
}

Divisor Divisor::operator+(const Divisor& o) const {
  Divisor r = *this;
  for (const auto& [p, c] : o.m_) r.add_to(p, c);
  return r;
}

Divisor Divisor::operator-(const Divisor& o) const {
  Divisor r = *this;
  for (const auto& [p, c] : o.m_) r.add_to(p, -c);
  return r;
}

Divisor Divisor::operator-() const {
  Divisor r;
  for (const auto& [p, c] : m_) r.set(p, -c);
  return r;
}

Divisor Divisor::operator*(long n) const {
  Divisor r;
  if (n != 0)
    for (const auto& [p, c] : m_) r.set(p, n * c);
  return r;
}

Divisor Divisor::sup(const Divisor& a, const Divisor& b) {
  Divisor r = a;
  for (const auto& [p, c] : b.m_) r.set(p, std::max(a.coeff(p), c));
  for (const auto& [p, c] : a.m_)
    if (b.coeff(p) == 0) r.set(p, std::max(c, 0L));
  return r;
}

Divisor Divisor::inf(const Divisor& a, const Divisor& b) { return -sup(-a, -b); }

bool Divisor::leq(const Divisor& a, const Divisor& b) {
  for (const auto& [p, c] : a.m_)
    if (c > b.coeff(p)) return false;
  for (const auto& [p, c] : b.m_)
    if (a.coeff(p) > c) return false;
  return true;
}

std::string Divisor::str() const {
  if (m_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : m_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c << "*";
    os << p.str();
  }
  return os.str();
}

long OrbitProfile::sum() const {
  long s = 0;
  for (const auto& [i, c] : coeffs) s += c;
  return s;
}

Divisor twist(const Geometry& g, const Divisor& x, long j) {
  Divisor r;
  for (const auto& [p, c] : x.support()) r.add_to(g.sigma_twist(p, j), c);
  return r;
}

Divisor cumulative(const Geometry& g, const Divisor& x, long n) {
  if (n < 0) throw input_error("cumulative needs n >= 0");
  Divisor r;
  for (long i = 0; i < n; ++i) r = r + twist(g, x, i);
  return r;
}

std::vector<OrbitProfile> decompose_orbits(const Geometry& g, const Divisor& x) {
  struct Group {
    CurvePoint base;
    std::map<long, long> coeffs;  // offset relative to base
  };
  std::vector<Group> groups;
  for (const auto& [p, c] : x.support()) {
    bool placed = false;
    for (auto& grp : groups) {
      // p = base^{sigma^j}
      if (auto j = g.orbit_offset(grp.base, p)) {
        grp.coeffs[*j] += c;
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back(Group{p, {{0, c}}});
  }
  std::vector<OrbitProfile> out;
  for (auto& grp : groups) {
    OrbitProfile prof;
    long lo = grp.coeffs.begin()->first;
    prof.rep = g.sigma_twist(grp.base, lo);
    for (const auto& [i, c] : grp.coeffs)
      if (c != 0) prof.coeffs[i - lo] = c;
    if (!prof.coeffs.empty()) out.push_back(std::move(prof));
  }
  return out;
}

namespace {

std::vector<long> dense_profile(const OrbitProfile& p) {
  long w = p.width();
  std::vector<long> a(w, 0);
  for (const auto& [i, c] : p.coeffs) a[i] = c;
  return a;
}

// Least n such that every window sum of length >= n is nonnegative, or -1
// when no such n exists. For n > width the window sums stabilise to the
// prefix sums, the suffix sums and the total, so scanning up to width + 1
// settles the question.
long stable_threshold(const std::vector<long>& a) {
  long w = static_cast<long>(a.size());
  auto windows_ok = [&](long n) {
    // coefficients of [x]_n on this orbit: sums over [j-n+1, j]
    for (long j = 0; j < w + n; ++j) {
      long s = 0;
      for (long i = std::max<long>(0, j - n + 1); i <= std::min(w - 1, j); ++i) s += a[i];
      if (s < 0) return false;
    }
    return true;
  };
  if (!windows_ok(w + 1)) return -1;
  long n0 = w + 1;
  for (long n = w; n >= 0; --n) {
    if (!windows_ok(n)) break;
    n0 = n;
  }
  return n0;
}

}  // namespace

VeffCertificate is_virtually_effective(const Geometry& g, const Divisor& x) {
  VeffCertificate cert;
  auto orbits = decompose_orbits(g, x);
  long n0 = 0;
  for (const auto& orb : orbits) {
    auto a = dense_profile(orb);
    long w = static_cast<long>(a.size());
    // prefix and suffix sums decide the verdict
    long run = 0;
    long bad_prefix = -1, bad_suffix = -1;
    for (long j = 0; j < w; ++j) {
      run += a[j];
      if (run < 0 && bad_prefix < 0) bad_prefix = j;
    }
    run = 0;
    for (long j = w - 1; j >= 0; --j) {
      run += a[j];
      if (run < 0 && bad_suffix < 0) bad_suffix = j;
    }
    if (bad_prefix >= 0 || bad_suffix >= 0) {
      cert.verdict = false;
      long n = w + g.orbit_cap() + 1;  // any n > width exhibits the defect
      cert.witness_n = n;
      if (bad_prefix >= 0) {
        long s = 0;
        for (long i = 0; i <= bad_prefix; ++i) s += a[i];
        cert.witness_point = g.sigma_twist(orb.rep, bad_prefix);
        cert.witness_coeff = s;
      } else {
        long s = 0;
        for (long i = bad_suffix; i < w; ++i) s += a[i];
        cert.witness_point = g.sigma_twist(orb.rep, bad_suffix + n - 1);
        cert.witness_coeff = s;
      }
      return cert;
    }
    long t = stable_threshold(a);
    if (t < 0) throw consistency_error("threshold missing despite good prefix/suffix sums");
    n0 = std::max(n0, t);
  }
  cert.verdict = true;
  cert.n0 = n0;
  return cert;
}

VeffDecomposition decompose_virtually_effective(const Geometry& g, const Divisor& x) {
  auto cert = is_virtually_effective(g, x);
  if (!cert.verdict)
    throw input_error("divisor is not virtually effective: " + x.str());
  VeffDecomposition out;
  long kmax = 0;
  for (const auto& orb : decompose_orbits(g, x)) {
    auto a = dense_profile(orb);
    long w = static_cast<long>(a.size());
    long vprev = 0;
    for (long j = 0; j < w; ++j) {
      long u = std::max<long>(0, a[j] - vprev);
      long v = vprev - a[j] + u;
      if (u != 0) out.u.add_to(g.sigma_twist(orb.rep, j), u);
      if (v != 0) out.v.add_to(g.sigma_twist(orb.rep, j), v);
      vprev = v;
    }
    if (vprev != 0) throw consistency_error("greedy sweep left a remainder");
    kmax = std::max(kmax, w);
  }
  out.k = kmax;
  return out;
}

Divisor normalized_divisor(const Geometry& g, const Divisor& x) {
  Divisor d;
  for (const auto& orb : decompose_orbits(g, x)) {
    long e = orb.sum();
    if (e < 0)
      throw input_error("negative orbit sum " + std::to_string(e) + " at " + orb.rep.str());
    if (e > 0) d.add_to(orb.rep, e);
  }
  return d;
}

}  // namespace ncb
