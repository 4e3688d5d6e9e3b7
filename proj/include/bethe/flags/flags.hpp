#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bethe/population/population.hpp"

namespace bethe {

/// Weakly increasing nonnegative integers.
using Partition = std::vector<int>;

/// b_i >= a_i for all i; both must have the same number of parts.
bool dominates(const Partition& b, const Partition& a);
/// Smallest partition with distinct parts dominating a (a is sorted first).
Partition dominant(Partition a);

struct FunctionSpace {
  std::vector<RatFunc> basis;

  int dim() const { return int(basis.size()); }
  bool independent() const;
  /// Members of the span with the given coefficients.
  RatFunc combine(const std::vector<Scalar>& coeffs) const;
};

/// c_1 < ... < c_r with a triangular basis vanishing at z - jh for j = 1..c_i.
/// Probes z - h, ..., z - depth*h and throws std::domain_error on a pole or when the
/// exponents are not determined within the window.
Partition discrete_exponents(const FunctionSpace& v, const Scalar& z, const Scalar& h, int depth);

/// max weight entry + r + 2
int probe_depth(const WeightData& w, int r);

Poly pi_ab(const WeightData& w, int a, int b);

/// Dominant of A_k ⊔ B_k for the k-th weight, ascending.
Partition dominant_ab(const Weight& lambda, int m, int a, int b);
/// 𝒯_1..𝒯_{a+b} built from those dominants at the points z_k + lambda_{m+1}^{(k)} h.
std::vector<Poly> script_t(const WeightData& w, int a, int b);

struct IdentityCheck {
  bool holds = false;
  std::string detail;
};

/// T^s_i against T_{sigma(i)} shifted times the ratio of pi polynomials, for every i.
IdentityCheck t_relation_check(const WeightData& w, const ParitySeq& s);
/// pi_{a,b} prod_{j<=a} 𝒯_j[j] = prod_{i<=a} T_{m-a+i}[b+i] T_{m+1}[i-1]
IdentityCheck pi_identity_check(const WeightData& w, int a, int b);

/// y_m conditions used by the generating map. The infinite conditions are checked over
/// |k| <= window.
struct TechnicalReport {
  bool simple_roots = true;
  bool coprime_to_shifts = true;
  bool avoids_z_lattice = true;
  int window = 0;
  bool holds() const { return simple_roots && coprime_to_shifts && avoids_z_lattice; }
};
TechnicalReport technical_conditions(const Poly& ym, const WeightData& w, int window);

struct KernelOptions {
  std::uint32_t rng_seed = 1;
  /// Bosonic reproductions tried before giving up; negative means 8(m+n).
  int max_attempts = -1;
  /// Values of the family parameter used to read witnesses off family nodes.
  std::vector<ProjParam> family_samples = {std::nullopt, Scalar(0), Scalar(1), Scalar(2), Scalar(-1), Scalar(3)};
};

struct KernelSpaces {
  FunctionSpace V, U;
  /// The standard-parity node the spaces were read from (parameter free).
  BetheNode base;
  Poly ym;
  bool v_polynomial = false, u_polynomial = false;
  /// V ∩ U = 0
  bool trivial_intersection = false;
  int attempts = 0;
  TechnicalReport technical;
};

class KernelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// V = ker D0 and U = ker D1 from the witnesses of standard-parity nodes, completed by
/// sampled bosonic reproductions. Throws KernelError when the attempt cap is reached.
KernelSpaces kernel_spaces(const PopulationGraph& g, const WeightData& w, const KernelOptions& opt = {});
KernelSpaces kernel_spaces(const BetheNode& node, const WeightData& w, const KernelOptions& opt = {});

/// Ordered homogeneous basis w_1..w_{m+n}; w_i is even when parity[i] = 1.
struct SuperFlag {
  ParitySeq parity;
  std::vector<RatFunc> basis;

  /// w_i = v_{s_i^+ + 1} for s_i = 1 and w_i = u_{s_i^- + 1} for s_i = -1.
  static SuperFlag associated(const std::vector<RatFunc>& v, const std::vector<RatFunc>& u, const ParitySeq& s);
  std::vector<RatFunc> v_basis() const;
  std::vector<RatFunc> u_basis() const;
};

/// The complete factorization with factors 1 - ln'(Wr(..)/Wr(..)[1]) tau.
/// Throws std::domain_error when a Wronskian vanishes.
FactoredRatOp flag_factorization(const SuperFlag& f, const Scalar& h);

/// Wr(v, u)[1] pi_{a,b} y_m[a+b] T-ratio; throws std::domain_error when it is not a polynomial.
Poly y_ab(const std::vector<RatFunc>& v, const std::vector<RatFunc>& u, const WeightData& w, const Poly& ym);

/// beta^s(F), every component monic. Throws std::domain_error for a degenerate flag.
BetheNode generating_map(const SuperFlag& f, const WeightData& w, const Poly& ym);

/// How a node was found in a population: by key, inside a family, or (for sampled graphs
/// that cannot list the component) by solving the equations with the population operator.
enum class Membership { None, Node, Family, Operator };
Membership population_membership(const PopulationGraph& g, const WeightData& w, const BetheNode& node);

struct FlagCheck {
  ParitySeq parity;
  /// "symbolic", "c=<value>" or "random <k>"
  std::string label;
  Membership membership = Membership::None;
  bool operator_equal = false;
  std::string message;
  bool passed() const { return membership != Membership::None && operator_equal; }
};

struct BijectionReport {
  std::vector<FlagCheck> checks;
  bool passed() const;
  std::vector<std::string> failures() const;
};

struct BijectionOptions {
  std::uint32_t rng_seed = 7;
  /// Random flags per parity.
  int random_flags = 5;
  /// Projective values of the flag coordinate; used with a symbolic flag when the field
  /// carries the family parameter.
  std::vector<ProjParam> specializations = {Scalar(0), Scalar(1), std::nullopt, Scalar(2), Scalar(-1)};
};

/// For every parity: generating-map images lie in the population and the flag
/// factorization equals the operator of the image.
BijectionReport bijection_check(const PopulationGraph& g, const WeightData& w, const KernelSpaces& k,
                                const BijectionOptions& opt = {});

}  // namespace bethe
