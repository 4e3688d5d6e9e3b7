#include "bethe/algebra/ratfunc.hpp"

#include <stdexcept>

namespace bethe {

namespace {

// Assumes gcd(num, den) = 1; only fixes the leading coefficient of den.
void normalize_lead(Poly& num, Poly& den) {
  const Scalar& lc = den.lead();
  if (lc.is_one()) return;
  Scalar inv = lc.inverse();
  num *= inv;
  den *= inv;
}

}  // namespace

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant() && !num_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  normalize_lead(num_, den_);
}

const Poly& RatFunc::as_poly() const {
  if (!den_.is_one()) throw std::domain_error("rational function is not a polynomial");
  return num_;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = RatFunc(num_ + o.num_, den_);
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  Poly a = o.den_.exact_div(g), b = den_.exact_div(g);
  return *this = RatFunc(num_ * a + o.num_ * b, den_ * a);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  Poly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (!d2.is_one()) {
    Poly g = gcd(n1, d2);
    if (!g.is_one()) {
      n1 = n1.exact_div(g);
      d2 = d2.exact_div(g);
    }
  }
  if (!d1.is_one()) {
    Poly g = gcd(n2, d1);
    if (!g.is_one()) {
      n2 = n2.exact_div(g);
      d1 = d1.exact_div(g);
    }
  }
  num_ = n1 * n2;
  den_ = d1 * d2;
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero rational function");
  RatFunc r;
  r.num_ = den_;
  r.den_ = num_;
  normalize_lead(r.num_, r.den_);
  return r;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  return r;
}

Scalar RatFunc::eval(const Scalar& v) const {
  Scalar d = den_.eval(v);
  if (d.is_zero()) throw std::domain_error("evaluation at a pole");
  return num_.eval(v) / d;
}

RatFunc RatFunc::shift(int k, const Scalar& h) const {
  if (k == 0) return *this;
  RatFunc r;
  r.num_ = num_.shift(k, h);
  r.den_ = den_.shift(k, h);
  return r;
}

RatFunc RatFunc::substitute(int param, const Scalar& value) const {
  return RatFunc(num_.substitute(param, value), den_.substitute(param, value));
}

bool RatFunc::depends_on(int param) const {
  return num_.depends_on(param) || den_.depends_on(param);
}

std::string RatFunc::to_string(const std::vector<std::string>& names) const {
  std::string n = num_.to_string(names);
  if (den_.is_one()) return n;
  auto wrap = [](const std::string& s) {
    return s.find_first_of("+-*/ ", 1) == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(n) + "/" + wrap(den_.to_string(names));
}

}  // namespace bethe
