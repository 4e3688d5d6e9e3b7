#include "bethe/algebra/poly.hpp"

#include <stdexcept>

namespace bethe {

Poly::Poly(const Scalar& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::x() { return monomial(Scalar(1), 1); }

Poly Poly::monomial(const Scalar& c, int deg) {
  if (deg < 0) throw std::invalid_argument("negative degree");
  Poly p;
  if (c.is_zero()) return p;
  p.c_.assign(deg + 1, Scalar());
  p.c_[deg] = c;
  return p;
}

Poly Poly::from_roots(const std::vector<Scalar>& roots) {
  Poly p(1);
  for (const Scalar& r : roots) p *= Poly(std::vector<Scalar>{-r, Scalar(1)});
  return p;
}

Scalar Poly::coeff(int i) const {
  if (i < 0 || i >= int(c_.size())) return Scalar();
  return c_[i];
}

const Scalar& Poly::lead() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Scalar& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.c_.size() == 1) return b * a.c_[0];
  if (b.c_.size() == 1) return a * b.c_[0];
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  if (s.is_one()) return *this;
  for (Scalar& c : c_) c *= s;
  return *this;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Poly result(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < d.degree()) return {Poly(), *this};
  int dd = d.degree();
  Scalar inv = d.lead().inverse();
  std::vector<Scalar> rem = c_;
  std::vector<Scalar> q(degree() - dd + 1);
  for (int k = degree() - dd; k >= 0; --k) {
    Scalar coef = rem[k + dd] * inv;
    q[k] = coef;
    if (coef.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      if (d.c_[j].is_zero()) continue;
      rem[k + j] -= coef * d.c_[j];
    }
  }
  rem.resize(dd);
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& d) const {
  if (d.c_.size() == 1) return *this * d.c_[0].inverse();
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

bool Poly::divisible_by(const Poly& d) const { return divmod(d).second.is_zero(); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

Poly Poly::derivative() const {
  std::vector<Scalar> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(Scalar(i) * c_[i]);
  return Poly(std::move(d));
}

Scalar Poly::eval(const Scalar& v) const {
  Scalar r;
  for (int i = degree(); i >= 0; --i) r = r * v + c_[i];
  return r;
}

Poly Poly::translate(const Scalar& a) const {
  if (a.is_zero() || c_.size() <= 1) return *this;
  std::vector<Scalar> b = c_;
  int n = degree();
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) b[j] += a * b[j + 1];
  return Poly(std::move(b));
}

Poly Poly::substitute(int param, const Scalar& value) const {
  std::vector<Scalar> r;
  r.reserve(c_.size());
  for (const Scalar& c : c_) r.push_back(c.substitute(param, value));
  return Poly(std::move(r));
}

bool Poly::depends_on(int param) const {
  for (const Scalar& c : c_)
    if (c.depends_on(param)) return true;
  return false;
}

std::string Poly::to_string(const std::vector<std::string>& names, const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = c_[k];
    if (c.is_zero()) continue;
    std::string cs = c.to_string(names);
    bool compound = c.is_compound();
    std::string term;
    if (k == 0) {
      term = compound ? "(" + cs + ")" : cs;
    } else {
      std::string mono = k == 1 ? var : var + "^" + std::to_string(k);
      if (c.is_one())
        term = mono;
      else if ((-c).is_one())
        term = "-" + mono;
      else
        term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
    }
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

namespace {

int param_level(const Poly& p) {
  int l = 0;
  for (const Scalar& c : p.coeffs()) l = std::max(l, c.level());
  return l;
}

// True when a specialization of the outermost parameter that keeps both degrees already
// makes a and b coprime; then they are coprime over the parameter field too.
bool coprime_by_specialization(const Poly& a, const Poly& b) {
  int level = std::max(param_level(a), param_level(b));
  if (level == 0 || a.is_zero() || b.is_zero()) return false;
  int var = level - 1, tries = 0;
  for (long v : {3L, -2L, 5L, 7L, -11L, 13L, 17L}) {
    Poly a0, b0;
    try {
      a0 = a.substitute(var, Scalar(v));
      b0 = b.substitute(var, Scalar(v));
    } catch (const std::domain_error&) {
      continue;
    }
    if (a0.degree() != a.degree() || b0.degree() != b.degree()) continue;
    if (gcd(a0, b0).degree() == 0) return true;
    if (++tries == 2) break;
  }
  return false;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.degree() > 0 && b.degree() > 0 && coprime_by_specialization(a, b)) return Poly(1);
  Poly u = a, v = b;
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    if (v.is_constant()) return Poly(1);
    Poly r = u.divmod(v).second;
    u = std::move(v);
    v = r.monic();
  }
  return u.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return (a * b.exact_div(gcd(a, b))).monic();
}

}  // namespace bethe
