#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bethe/algebra/poly.hpp"

namespace bethe {

/// Roots found in the numeric field, with multiplicity, and the monic cofactor that
/// could not be split.
struct RootSplit {
  std::vector<Scalar> roots;
  Poly remainder = Poly(1);
  bool complete() const { return remainder.degree() <= 0; }
  /// Human readable hint about the extension the remainder needs.
  std::string needed_extension() const;
};

/// Splits a polynomial with constant coefficients over Q or Q(sqrt d). Rational roots are
/// found by the rational root test, what remains is solved when it is at most quadratic.
RootSplit find_roots(const Poly& p, std::optional<long> radical = std::nullopt);

/// The squarefree part of a nonzero integer-valued rational (sign kept), i.e. the d with
/// sqrt(v) in Q(sqrt d).
long squarefree_part(const mpq_class& v);

bool is_integer(const Scalar& s);

}  // namespace bethe
