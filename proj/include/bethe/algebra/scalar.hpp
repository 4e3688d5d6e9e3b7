#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bethe {

/// Element a + b*sqrt(d) of Q(sqrt d). An element with b == 0 is compatible with every d.
class Quad {
 public:
  Quad() = default;
  Quad(long v) : a_(v) {}
  Quad(const mpq_class& a) : a_(a) { a_.canonicalize(); }
  Quad(const mpq_class& a, const mpq_class& b, long d);

  static Quad root(long d) { return Quad(mpq_class(0), mpq_class(1), d); }

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& radical_part() const { return b_; }
  long radicand() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  Quad operator-() const;
  Quad& operator+=(const Quad& o);
  Quad& operator-=(const Quad& o);
  Quad& operator*=(const Quad& o);
  Quad& operator/=(const Quad& o);
  Quad inverse() const;

  friend Quad operator+(Quad a, const Quad& b) { return a += b; }
  friend Quad operator-(Quad a, const Quad& b) { return a -= b; }
  friend Quad operator*(Quad a, const Quad& b) { return a *= b; }
  friend Quad operator/(Quad a, const Quad& b) { return a /= b; }
  friend bool operator==(const Quad& a, const Quad& b) {
    return a.a_ == b.a_ && a.b_ == b.b_ && (sgn(a.b_) == 0 || a.d_ == b.d_);
  }

  /// Square root inside Q(sqrt d) when it exists.
  std::optional<Quad> sqrt(long d) const;

  std::string to_string() const;

 private:
  mpq_class a_{0}, b_{0};
  long d_ = 0;
};

class Poly;

namespace detail {
struct ParamFrac;
}

/// Exact scalar of the tower Q -> Q(sqrt d) -> rational functions in up to two parameters.
/// Parameter k is adjoined on top of parameters 0..k-1; a value is always stored at the
/// lowest level that contains it, which makes structural equality canonical.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : q_(long(v)) {}
  Scalar(long v) : q_(v) {}
  Scalar(const mpq_class& v) : q_(v) {}
  Scalar(const Quad& q) : q_(q) {}

  static Scalar rational(long num, long den);
  static Scalar param(int index);
  static Scalar root(long d) { return Scalar(Quad::root(d)); }
  /// num/den as a rational function of parameter `var`; coefficients must not involve
  /// parameters >= var.
  static Scalar from_fraction(int var, const Poly& num, const Poly& den);

  /// 0 for constants, k+1 when parameter k is the outermost one present.
  int level() const;
  bool is_zero() const { return !f_ && q_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return !f_; }
  bool depends_on(int param) const;
  const Quad& constant() const;

  /// (numerator, denominator) as polynomials in parameter `var`, which must be the
  /// outermost parameter present (or absent).
  std::pair<Poly, Poly> as_fraction(int var) const;

  Scalar substitute(int param, const Scalar& value) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;
  Scalar pow(int e) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Text in the scalar syntax ("3/2", "1/2*r", "(c+1)/(c-2)"); `names` labels parameters.
  std::string to_string(const std::vector<std::string>& names = {}) const;
  /// True when to_string needs parentheses to be used as a product factor.
  bool is_compound() const;

 private:
  friend struct ScalarAccess;
  Quad q_;
  std::shared_ptr<const detail::ParamFrac> f_;
};

}  // namespace bethe
