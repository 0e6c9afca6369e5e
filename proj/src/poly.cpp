#include "ncb/poly.hpp"

#include <sstream>

namespace ncb {

Poly Poly::monomial(long deg, const Q& coeff) {
  if (coeff == 0) return Poly();
  std::vector<Q> c(deg + 1, Q(0));
  c[deg] = coeff;
  return Poly(std::move(c));
}

Poly Poly::operator-() const {
  std::vector<Q> c(c_);
  for (auto& v : c) v = -v;
  return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Q> c(std::max(c_.size(), o.c_.size()), Q(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Q> c(c_.size() + o.c_.size() - 1, Q(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(c));
}

Poly Poly::operator*(const Q& s) const {
  if (s == 0) return Poly();
  std::vector<Q> c(c_);
  for (auto& v : c) v *= s;
  return Poly(std::move(c));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  if (b.is_zero()) throw arithmetic_error("polynomial division by zero");
  std::vector<Q> r = a.c_;
  long db = b.degree();
  std::vector<Q> q(a.degree() >= db ? a.degree() - db + 1 : 0, Q(0));
  Q lb = b.leading();
  for (long i = static_cast<long>(r.size()) - 1; i >= db; --i) {
    if (r[i] == 0) continue;
    Q f = r[i] / lb;
    q[i - db] = f;
    for (long j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
  }
  quo = Poly(std::move(q));
  rem = Poly(std::move(r));
}

Q Poly::eval(const Q& x0) const {
  Q r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x0 + *it;
  return r;
}

long Poly::root_multiplicity(const Q& x0, Poly* cofactor) const {
  if (is_zero()) throw arithmetic_error("root multiplicity of zero polynomial");
  Poly p = *this, lin(std::vector<Q>{-x0, 1});
  long m = 0;
  while (p.eval(x0) == 0) {
    Poly q, r;
    divmod(p, lin, q, r);
    p = q;
    ++m;
  }
  if (cofactor) *cofactor = p;
  return m;
}

std::vector<Q> Poly::taylor(const Q& x0, long count) const {
  // repeated synthetic division by (x - x0)
  std::vector<Q> work = c_, out;
  out.reserve(count);
  for (long k = 0; k < count; ++k) {
    if (work.empty()) {
      out.push_back(Q(0));
      continue;
    }
    Q rem = 0;
    for (long i = static_cast<long>(work.size()) - 1; i >= 0; --i) {
      Q tmp = work[i] + rem * x0;
      work[i] = rem;
      rem = tmp;
    }
    out.push_back(rem);
    work.erase(work.begin());
  }
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (Q(1) / leading());
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Q& v = c_[i];
    if (v == 0) continue;
    if (!first) os << (v > 0 ? " + " : " - ");
    else if (v < 0) os << "-";
    first = false;
    Q a = abs(v);
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    a = b;
    b = r;
  }
  return a.monic();
}

RatFn::RatFn(Poly num, Poly den) {
  if (den.is_zero()) throw arithmetic_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(Q(1));
    return;
  }
  Poly g = poly_gcd(num, den);
  if (g.degree() > 0) {
    Poly q, r;
    Poly::divmod(num, g, q, r);
    num = q;
    Poly::divmod(den, g, q, r);
    den = q;
  }
  Q lead = den.leading();
  num_ = num * (Q(1) / lead);
  den_ = den * (Q(1) / lead);
}

RatFn RatFn::operator-() const {
  RatFn r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFn RatFn::operator+(const RatFn& o) const {
  return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const { return *this + (-o); }

RatFn RatFn::operator*(const RatFn& o) const {
  return RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::operator/(const RatFn& o) const { return *this * o.inv(); }

RatFn RatFn::inv() const {
  if (is_zero()) throw arithmetic_error("inverse of zero");
  return RatFn(den_, num_);
}

std::string RatFn::str(const std::string& var) const {
  if (den_ == Poly(Q(1))) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace ncb
