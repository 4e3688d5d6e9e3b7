#include "bethe/algebra/roots.hpp"

#include <map>
#include <stdexcept>

namespace bethe {

namespace {

using Factors = std::map<mpz_class, int>;

Factors factorize(mpz_class n) {
  Factors f;
  if (n < 0) n = -n;
  for (mpz_class p = 2; p * p <= n && p < 1000000; ++p) {
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  }
  // a leftover above the trial bound may be composite; its divisors are then incomplete,
  // which only means some rational roots stay in the remainder
  if (n > 1) ++f[n];
  return f;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> ds{1};
  for (const auto& [p, e] : factorize(n)) {
    size_t k = ds.size();
    mpz_class pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < k; ++j) ds.push_back(ds[j] * pk);
    }
  }
  return ds;
}

bool all_rational(const Poly& p) {
  for (const Scalar& c : p.coeffs())
    if (!c.constant().is_rational()) return false;
  return true;
}

Quad conjugate(const Quad& q) { return Quad(q.rational_part(), -q.radical_part(), q.radicand()); }

// Integer coefficients of a rational polynomial, up to a positive factor.
std::vector<mpz_class> integer_coeffs(const Poly& p) {
  mpz_class l = 1;
  for (const Scalar& c : p.coeffs())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.constant().rational_part().get_den().get_mpz_t());
  std::vector<mpz_class> out;
  for (const Scalar& c : p.coeffs()) {
    mpq_class v = c.constant().rational_part() * l;
    out.push_back(v.get_num());
  }
  return out;
}

std::vector<Scalar> rational_candidates(const Poly& rational) {
  std::vector<mpz_class> c = integer_coeffs(rational);
  std::vector<Scalar> out;
  if (sgn(c.front()) == 0) out.push_back(Scalar(0));
  size_t lo = 0;
  while (lo < c.size() && sgn(c[lo]) == 0) ++lo;
  if (lo + 1 >= c.size()) return out;
  for (const mpz_class& a : divisors(c[lo]))
    for (const mpz_class& b : divisors(c.back())) {
      mpq_class v(a, b);
      v.canonicalize();
      out.push_back(Scalar(v));
      out.push_back(Scalar(mpq_class(-v)));
    }
  return out;
}

}  // namespace

bool is_integer(const Scalar& s) {
  if (!s.is_constant() || !s.constant().is_rational()) return false;
  return s.constant().rational_part().get_den() == 1;
}

long squarefree_part(const mpq_class& v) {
  if (sgn(v) == 0) throw std::invalid_argument("squarefree part of zero");
  mpz_class n = v.get_num() * v.get_den();
  long sign = sgn(n) < 0 ? -1 : 1;
  mpz_class out = 1;
  for (const auto& [p, e] : factorize(n))
    if (e % 2) out *= p;
  if (!out.fits_slong_p()) throw std::overflow_error("squarefree part does not fit a long");
  return sign * out.get_si();
}

std::string RootSplit::needed_extension() const {
  if (complete()) return "none";
  if (remainder.degree() == 2 && remainder.coeff(0).is_constant() && remainder.coeff(1).is_constant()) {
    Scalar disc = remainder.coeff(1) * remainder.coeff(1) - Scalar(4) * remainder.coeff(0);
    if (disc.constant().is_rational())
      return "sqrt(" + std::to_string(squarefree_part(disc.constant().rational_part())) + ")";
  }
  return "splitting field of " + remainder.to_string();
}

RootSplit find_roots(const Poly& p, std::optional<long> radical) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  for (const Scalar& c : p.coeffs())
    if (!c.is_constant()) throw std::invalid_argument("root finding needs numeric coefficients");
  RootSplit out;
  Poly rest = p.monic();

  Poly rational = rest;
  if (!all_rational(rest)) {
    std::vector<Scalar> conj;
    for (const Scalar& c : rest.coeffs()) conj.push_back(Scalar(conjugate(c.constant())));
    rational = rest * Poly(conj);
  }
  for (const Scalar& r : rational_candidates(rational)) {
    while (rest.degree() > 0 && rest.eval(r).is_zero()) {
      out.roots.push_back(r);
      rest = rest.exact_div(Poly({-r, Scalar(1)}));
    }
  }

  if (rest.degree() == 1) {
    out.roots.push_back(-rest.coeff(0));
    rest = Poly(1);
  } else if (rest.degree() == 2) {
    Scalar b = rest.coeff(1), c = rest.coeff(0);
    Scalar disc = b * b - Scalar(4) * c;
    std::optional<Quad> sq;
    try {
      sq = disc.constant().sqrt(radical.value_or(0));
    } catch (const std::domain_error&) {
    }
    if (sq) {
      Scalar s(*sq), half = Scalar::rational(1, 2);
      out.roots.push_back((-b + s) * half);
      out.roots.push_back((-b - s) * half);
      rest = Poly(1);
    }
  }
  out.remainder = rest;
  return out;
}

}  // namespace bethe
