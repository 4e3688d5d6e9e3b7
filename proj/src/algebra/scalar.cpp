#include "bethe/algebra/scalar.hpp"

#include <algorithm>

#include "bethe/algebra/poly.hpp"

namespace bethe {

namespace detail {
struct ParamFrac {
  int var;
  Poly num, den;
};
}  // namespace detail

// ---------------------------------------------------------------- Quad

namespace {

long merge_radicand(const Quad& a, const Quad& b) {
  if (a.is_rational()) return b.radicand();
  if (b.is_rational()) return a.radicand();
  if (a.radicand() != b.radicand())
    throw std::domain_error("arithmetic between different quadratic fields");
  return a.radicand();
}

std::optional<mpq_class> rational_sqrt(const mpq_class& v) {
  if (sgn(v) < 0) return std::nullopt;
  mpz_class n = v.get_num(), d = v.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

Quad::Quad(const mpq_class& a, const mpq_class& b, long d) : a_(a), b_(b), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) == 0) d_ = 0;
}

Quad Quad::operator-() const { return Quad(-a_, -b_, d_); }

Quad& Quad::operator+=(const Quad& o) {
  long d = merge_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  d_ = sgn(b_) == 0 ? 0 : d;
  return *this;
}

Quad& Quad::operator-=(const Quad& o) {
  long d = merge_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  d_ = sgn(b_) == 0 ? 0 : d;
  return *this;
}

Quad& Quad::operator*=(const Quad& o) {
  if (is_rational() && o.is_rational()) {
    a_ *= o.a_;
    return *this;
  }
  long d = merge_radicand(*this, o);
  mpq_class a = a_ * o.a_ + mpq_class(d) * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = sgn(b_) == 0 ? 0 : d;
  return *this;
}

Quad Quad::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return Quad(mpq_class(1) / a_);
  mpq_class norm = a_ * a_ - mpq_class(d_) * b_ * b_;
  return Quad(a_ / norm, -b_ / norm, d_);
}

Quad& Quad::operator/=(const Quad& o) {
  if (o.is_rational()) {
    if (sgn(o.a_) == 0) throw std::domain_error("division by zero");
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

std::optional<Quad> Quad::sqrt(long d) const {
  if (!is_rational() && d != d_) throw std::domain_error("sqrt outside the configured field");
  if (is_zero()) return Quad();
  if (is_rational()) {
    if (auto r = rational_sqrt(a_)) return Quad(*r);
    if (d != 0)
      if (auto r = rational_sqrt(a_ / mpq_class(d))) return Quad(mpq_class(0), *r, d);
    return std::nullopt;
  }
  // (u + v r)^2 = u^2 + d v^2 + 2uv r
  auto disc = rational_sqrt(a_ * a_ - mpq_class(d) * b_ * b_);
  if (!disc) return std::nullopt;
  for (int sign : {1, -1}) {
    mpq_class u2 = (a_ + sign * *disc) / 2;
    auto u = rational_sqrt(u2);
    if (!u || sgn(*u) == 0) continue;
    mpq_class v = b_ / (2 * *u);
    Quad cand(*u, v, d);
    if (cand * cand == *this) return cand;
  }
  return std::nullopt;
}

std::string Quad::to_string() const {
  if (is_rational()) return a_.get_str();
  std::string rad;
  if (b_ == 1)
    rad = "r";
  else if (b_ == -1)
    rad = "-r";
  else
    rad = b_.get_str() + "*r";
  if (sgn(a_) == 0) return rad;
  if (rad[0] == '-') return a_.get_str() + rad;
  return a_.get_str() + "+" + rad;
}

// ---------------------------------------------------------------- Scalar

namespace {

using detail::ParamFrac;

// Builds num/den in parameter `var` without reducing; collapses constants.
Scalar make_raw(int var, Poly num, Poly den);

Scalar make_reduced(int var, Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  if (num.is_zero()) return Scalar();
  if (!den.is_constant() && !num.is_constant()) {
    Poly g = gcd(num, den);
    if (!g.is_one()) {
      num = num.exact_div(g);
      den = den.exact_div(g);
    }
  }
  Scalar lc = den.lead();
  if (!lc.is_one()) {
    Scalar inv = lc.inverse();
    num *= inv;
    den *= inv;
  }
  return make_raw(var, std::move(num), std::move(den));
}

}  // namespace

// Friend-free access to the representation lives in this helper.
struct ScalarAccess {
  static Scalar build(int var, Poly num, Poly den) {
    Scalar s;
    s.f_ = std::make_shared<const ParamFrac>(ParamFrac{var, std::move(num), std::move(den)});
    return s;
  }
  static const ParamFrac* frac(const Scalar& s) { return s.f_.get(); }
};

namespace {

Scalar make_raw(int var, Poly num, Poly den) {
  if (num.is_zero()) return Scalar();
  if (den.is_one() && num.is_constant()) return num.coeff(0);
  return ScalarAccess::build(var, std::move(num), std::move(den));
}

std::pair<Poly, Poly> lift(const Scalar& s, int var) {
  const ParamFrac* f = ScalarAccess::frac(s);
  if (f && f->var == var) return {f->num, f->den};
  return {Poly(s), Poly(1)};
}

}  // namespace

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("division by zero");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::param(int index) {
  if (index < 0) throw std::invalid_argument("negative parameter index");
  return ScalarAccess::build(index, Poly::x(), Poly(1));
}

Scalar Scalar::from_fraction(int var, const Poly& num, const Poly& den) {
  for (const Poly* p : {&num, &den})
    for (const Scalar& c : p->coeffs())
      if (c.level() > var)
        throw std::invalid_argument("fraction coefficients involve an outer parameter");
  return make_reduced(var, num, den);
}

int Scalar::level() const { return f_ ? f_->var + 1 : 0; }

bool Scalar::is_one() const { return !f_ && q_.is_rational() && q_.rational_part() == 1; }

bool Scalar::depends_on(int param) const {
  if (!f_ || f_->var < param) return false;
  if (f_->var == param) return true;
  return f_->num.depends_on(param) || f_->den.depends_on(param);
}

const Quad& Scalar::constant() const {
  if (f_) throw std::logic_error("scalar depends on a parameter");
  return q_;
}

std::pair<Poly, Poly> Scalar::as_fraction(int var) const {
  if (level() > var + 1) throw std::logic_error("parameter is not outermost");
  return lift(*this, var);
}

Scalar Scalar::substitute(int param, const Scalar& value) const {
  if (!f_ || f_->var < param) return *this;
  if (f_->var == param) {
    Scalar d = f_->den.eval(value);
    if (d.is_zero()) throw std::domain_error("parameter specialization hits a pole");
    return f_->num.eval(value) / d;
  }
  Poly n = f_->num.substitute(param, value), d = f_->den.substitute(param, value);
  Scalar t = Scalar::param(f_->var);
  Scalar dv = d.eval(t);
  if (dv.is_zero()) throw std::domain_error("parameter specialization hits a pole");
  return n.eval(t) / dv;
}

Scalar Scalar::operator-() const {
  if (!f_) return Scalar(-q_);
  return make_raw(f_->var, -f_->num, f_->den);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  int la = level(), lb = o.level();
  if (la == 0 && lb == 0) {
    q_ += o.q_;
    return *this;
  }
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int L = std::max(la, lb), v = L - 1;
  auto [n1, d1] = lift(*this, v);
  auto [n2, d2] = lift(o, v);
  if (la != lb) {
    // one side is constant in the outer parameter, so the sum stays reduced
    if (la == L)
      *this = make_raw(v, n1 + n2 * d1, d1);
    else
      *this = make_raw(v, n1 * d2 + n2, d2);
    return *this;
  }
  if (d1 == d2)
    *this = make_reduced(v, n1 + n2, d1);
  else
    *this = make_reduced(v, n1 * d2 + n2 * d1, d1 * d2);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  int la = level(), lb = o.level();
  if (la == 0 && lb == 0) {
    q_ *= o.q_;
    return *this;
  }
  if (is_zero() || o.is_zero()) return *this = Scalar();
  int L = std::max(la, lb), v = L - 1;
  auto [n1, d1] = lift(*this, v);
  auto [n2, d2] = lift(o, v);
  if (la != lb) {
    if (la == L)
      *this = make_raw(v, n1 * o, d1);
    else
      *this = make_raw(v, n2 * *this, d2);
    return *this;
  }
  Poly g1 = gcd(n1, d2), g2 = gcd(n2, d1);
  if (!g1.is_one()) {
    n1 = n1.exact_div(g1);
    d2 = d2.exact_div(g1);
  }
  if (!g2.is_one()) {
    n2 = n2.exact_div(g2);
    d1 = d1.exact_div(g2);
  }
  *this = make_raw(v, n1 * n2, d1 * d2);
  return *this;
}

Scalar Scalar::inverse() const {
  if (!f_) return Scalar(q_.inverse());
  Scalar lc = f_->num.lead();
  Scalar inv = lc.inverse();
  return make_raw(f_->var, f_->den * inv, f_->num * inv);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (!f_ && !o.f_) {
    q_ /= o.q_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.f_ == b.f_) return a.f_ ? true : a.q_ == b.q_;
  if (!a.f_ || !b.f_) return false;
  return a.f_->var == b.f_->var && a.f_->num == b.f_->num && a.f_->den == b.f_->den;
}

namespace {

std::string param_name(const std::vector<std::string>& names, int v) {
  if (v < int(names.size())) return names[v];
  return "p" + std::to_string(v);
}

bool has_inner_operator(const std::string& s) {
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && i > 0 && (ch == '+' || ch == '-' || ch == '/' || ch == ' ')) return true;
  }
  return false;
}

std::string wrap(const std::string& s) { return has_inner_operator(s) ? "(" + s + ")" : s; }

}  // namespace

std::string Scalar::to_string(const std::vector<std::string>& names) const {
  if (!f_) return q_.to_string();
  std::string var = param_name(names, f_->var);
  std::string num = f_->num.to_string(names, var);
  if (f_->den.is_one()) return num;
  return wrap(num) + "/" + wrap(f_->den.to_string(names, var));
}

bool Scalar::is_compound() const {
  if (!f_ && q_.is_rational()) return false;
  return has_inner_operator(to_string());
}

}  // namespace bethe
