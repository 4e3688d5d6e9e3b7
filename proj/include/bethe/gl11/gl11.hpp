#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bethe/algebra/linalg.hpp"
#include "bethe/algebra/ratfunc.hpp"

namespace bethe {

/// gl(1|1) chain with h = 1: site k carries the weight (a_k, b_k) at z_k.
struct Gl11Weights {
  std::vector<Scalar> a, b, z;

  int p() const { return int(z.size()); }
  /// Throws std::invalid_argument on size mismatch or a degenerate site (a_k + b_k = 0).
  void validate() const;
  /// prod (x - z_k + a_k)
  Poly phi() const;
  /// prod (x - z_k - b_k)
  Poly psi() const;
  /// gcd(phi, psi) = 1
  bool irreducible() const;
  /// z_i - z_j - a_i - b_j != 0 for all i != j
  bool pairwise_irreducible() const;
  bool typical() const;

  /// p sites with weight (1, 0) at z = 0.
  static Gl11Weights homogeneous(int p);
};

/// Amplitudes over v_{e_1} ⊗ ... ⊗ v_{e_p}, lexicographic in (e_1..e_p) with e_1 most
/// significant; index bit set means e_k = 2.
using StateVector = std::vector<Scalar>;

/// Number of lowered factors mod 2.
int state_parity(int index);

/// 2^p x 2^p matrix with entries in K(x).
struct TensorOperator {
  std::vector<std::vector<RatFunc>> m;

  static TensorOperator zero(int dim);
  static TensorOperator identity(int dim);
  int dim() const { return int(m.size()); }
  /// Entries evaluated at x = v; throws std::domain_error at a pole.
  Matrix at(const Scalar& v) const;
  std::vector<RatFunc> apply(const StateVector& w) const;

  friend TensorOperator operator+(const TensorOperator& a, const TensorOperator& b);
  friend TensorOperator operator-(const TensorOperator& a, const TensorOperator& b);
  friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b);
  friend TensorOperator operator*(const RatFunc& c, const TensorOperator& a);
  friend bool operator==(const TensorOperator& a, const TensorOperator& b) { return a.m == b.m; }
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
StateVector mat_apply(const Matrix& a, const StateVector& w);

/// Entries L_ij(x), i, j in {1, 2}, of the monodromy on the tensor product.
struct Monodromy {
  TensorOperator L[2][2];
  const TensorOperator& operator()(int i, int j) const { return L[i - 1][j - 1]; }
};

Monodromy monodromy(const Gl11Weights& w);

/// q_1 L_11 - q_2 L_22; the periodic chain when twist is empty.
TensorOperator transfer(const Gl11Weights& w, const std::vector<Scalar>& twist = {});

/// The raising generator: the coefficient of 1/x in L_21(x).
Matrix raising(const Gl11Weights& w);
/// Kernel of the raising generator.
std::vector<StateVector> singular_subspace(const Gl11Weights& w);

struct DivisorSolution {
  Poly y;
  std::vector<Scalar> roots;
};

/// All monic divisors of phi - psi, each with its roots. Throws std::domain_error naming the
/// needed extension when phi - psi does not split over the field.
std::vector<DivisorSolution> divisor_solutions(const Gl11Weights& w, std::optional<long> radical = std::nullopt);

/// c_0 L_12(t_1) ... L_12(t_l) |0> with c_0 = prod (t_i - z_k).
StateVector bethe_vector(const std::vector<Scalar>& t, const Gl11Weights& w);

/// (y[1]/y)(phi - psi) prod (x - z_k)^{-1}
RatFunc bethe_eigenvalue(const Poly& y, const Gl11Weights& w);

/// The eigenvalue of op on w when w is an eigenvector; empty otherwise (or when w = 0).
std::optional<RatFunc> eigenvalue_on(const TensorOperator& op, const StateVector& w);

/// B(w1, w2) = B_lambda(w1, R w2) as a Gram matrix in the tensor basis.
struct ShapovalovForm {
  Matrix gram;
  Scalar operator()(const StateVector& w1, const StateVector& w2) const;
};

/// Throws std::domain_error when some R(z_i - z_j) has a pole.
ShapovalovForm shapovalov(const Gl11Weights& w);
/// The tensor form B_lambda alone (diagonal, with the Koszul signs).
Matrix tensor_shapovalov(const Gl11Weights& w);

struct NormCheck {
  Scalar lhs, rhs;
  bool equal = false;
};

/// B(w~, w~) against the closed product formula.
NormCheck norm_check(const std::vector<Scalar>& t, const Gl11Weights& w);

struct CompletenessReport {
  std::vector<DivisorSolution> solutions;
  std::vector<StateVector> vectors;
  std::vector<RatFunc> eigenvalues;
  int expected = 0;
  int singular_dim = 0;
  bool nonzero = false, singular = false, eigen = false, orthogonal = false, independent = false,
       spanning = false, norms = false;
  std::vector<std::string> problems;
  bool passed() const;
};

CompletenessReport completeness_report(const Gl11Weights& w, std::optional<long> radical = std::nullopt);

struct Spectrum {
  int p = 0;
  /// Radicand of the field used (empty for Q).
  std::optional<long> radical;
  std::vector<RatFunc> closed_form, computed;
  bool matches = false, simple = false;
};

/// Spectrum of the transfer matrix on the singular subspace of the homogeneous chain,
/// computed from Bethe vectors and compared with the closed form. p <= 4.
Spectrum homogeneous_spectrum(int p);

}  // namespace bethe
