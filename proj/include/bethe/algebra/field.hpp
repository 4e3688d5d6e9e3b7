#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bethe/algebra/ratfunc.hpp"

namespace bethe {

/// Configuration of the coefficient field: Q(sqrt d) extended by named parameters,
/// together with the shift step h.
struct FieldSpec {
  std::optional<long> radical;
  std::vector<std::string> params;
  Scalar h = Scalar(1);

  /// Throws std::invalid_argument when d is not squarefree, d in {0,1}, names repeat,
  /// there are more than two parameters, or h is zero.
  void validate() const;

  /// sqrt(d); throws if no radical is configured.
  Scalar root() const;
  Scalar param(const std::string& name) const;
  int param_index(const std::string& name) const;

  Scalar parse_scalar(const std::string& text) const;
  /// Accepts expressions in x as well ("x^2 - 2*x + 1/2").
  RatFunc parse_ratfunc(const std::string& text) const;
  Poly parse_poly(const std::string& text) const;

  std::string format(const Scalar& s) const { return s.to_string(params); }
  std::string format(const Poly& p) const { return p.to_string(params); }
  std::string format(const RatFunc& f) const { return f.to_string(params); }
};

bool is_squarefree(long d);

}  // namespace bethe
