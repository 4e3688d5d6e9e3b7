#include "bethe/gl11/gl11.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "bethe/algebra/roots.hpp"

namespace bethe {

void Gl11Weights::validate() const {
  if (a.size() != z.size() || b.size() != z.size()) throw std::invalid_argument("gl(1|1) weights and points differ in number");
  if (z.empty()) throw std::invalid_argument("gl(1|1) chain without sites");
  for (int k = 0; k < p(); ++k)
    if ((a[k] + b[k]).is_zero()) throw std::invalid_argument("degenerate gl(1|1) weight at site " + std::to_string(k + 1));
}

Poly Gl11Weights::phi() const {
  Poly r(1);
  for (int k = 0; k < p(); ++k) r *= Poly::x() - Poly(z[k] - a[k]);
  return r;
}

Poly Gl11Weights::psi() const {
  Poly r(1);
  for (int k = 0; k < p(); ++k) r *= Poly::x() - Poly(z[k] + b[k]);
  return r;
}

bool Gl11Weights::irreducible() const { return gcd(phi(), psi()).degree() == 0; }

bool Gl11Weights::pairwise_irreducible() const {
  for (int i = 0; i < p(); ++i)
    for (int j = 0; j < p(); ++j)
      if (i != j && (z[i] - z[j] - a[i] - b[j]).is_zero()) return false;
  return true;
}

bool Gl11Weights::typical() const {
  Scalar s;
  for (int k = 0; k < p(); ++k) s += a[k] + b[k];
  return !s.is_zero();
}

Gl11Weights Gl11Weights::homogeneous(int p) {
  Gl11Weights w;
  w.a.assign(p, Scalar(1));
  w.b.assign(p, Scalar(0));
  w.z.assign(p, Scalar(0));
  return w;
}

int state_parity(int index) { return std::popcount(unsigned(index)) % 2; }

TensorOperator TensorOperator::zero(int dim) {
  TensorOperator t;
  t.m.assign(dim, std::vector<RatFunc>(dim));
  return t;
}

TensorOperator TensorOperator::identity(int dim) {
  TensorOperator t = zero(dim);
  for (int i = 0; i < dim; ++i) t.m[i][i] = RatFunc(1);
  return t;
}

Matrix TensorOperator::at(const Scalar& v) const {
  Matrix r(dim(), std::vector<Scalar>(dim()));
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (!m[i][j].is_zero()) r[i][j] = m[i][j].eval(v);
  return r;
}

std::vector<RatFunc> TensorOperator::apply(const StateVector& w) const {
  std::vector<RatFunc> r(dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (!w[j].is_zero() && !m[i][j].is_zero()) r[i] += m[i][j] * RatFunc(w[j]);
  return r;
}

TensorOperator operator+(const TensorOperator& a, const TensorOperator& b) {
  TensorOperator r = a;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.m[i][j] += b.m[i][j];
  return r;
}

TensorOperator operator-(const TensorOperator& a, const TensorOperator& b) {
  TensorOperator r = a;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.m[i][j] -= b.m[i][j];
  return r;
}

TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
  int d = a.dim();
  TensorOperator r = TensorOperator::zero(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      if (a.m[i][k].is_zero()) continue;
      for (int j = 0; j < d; ++j)
        if (!b.m[k][j].is_zero()) r.m[i][j] += a.m[i][k] * b.m[k][j];
    }
  return r;
}

TensorOperator operator*(const RatFunc& c, const TensorOperator& a) {
  TensorOperator r = a;
  for (auto& row : r.m)
    for (RatFunc& e : row) e *= c;
  return r;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Matrix r(n, std::vector<Scalar>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

StateVector mat_apply(const Matrix& a, const StateVector& w) {
  StateVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < w.size(); ++j)
      if (!a[i][j].is_zero() && !w[j].is_zero()) r[i] += a[i][j] * w[j];
  return r;
}

namespace {

// gl(1|1) generators on L_(a,b): v_1 even, v_2 = e_21 v_1 odd.
using Small = std::vector<std::vector<Scalar>>;

Small generator(int i, int j, const Scalar& a, const Scalar& b) {
  Small e(2, std::vector<Scalar>(2));
  if (i == 1 && j == 1) e = {{a, Scalar(0)}, {Scalar(0), a - Scalar(1)}};
  if (i == 2 && j == 2) e = {{b, Scalar(0)}, {Scalar(0), b + Scalar(1)}};
  if (i == 2 && j == 1) e[1][0] = Scalar(1);
  if (i == 1 && j == 2) e[0][1] = a + b;
  return e;
}

int grade(int i) { return i == 1 ? 0 : 1; }

// L_ij(x) = delta_ij + (-1)^{|j|} e_ji / (x - z) on one site.
std::vector<std::vector<RatFunc>> site_entry(int i, int j, const Scalar& a, const Scalar& b, const Scalar& z) {
  Small e = generator(j, i, a, b);
  RatFunc inv(Poly(1), Poly::x() - Poly(z));
  if (grade(j) == 1) inv = -inv;
  std::vector<std::vector<RatFunc>> r(2, std::vector<RatFunc>(2));
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v) {
      if (!e[u][v].is_zero()) r[u][v] = RatFunc(e[u][v]) * inv;
      if (i == j && u == v) r[u][v] += RatFunc(1);
    }
  return r;
}

// (A ⊗ B)(v ⊗ w) = (-1)^{|B||v|} A v ⊗ B w, with B acting on the new last site.
TensorOperator graded_tensor(const TensorOperator& a, const std::vector<std::vector<RatFunc>>& b, int b_parity) {
  int d = a.dim();
  TensorOperator r = TensorOperator::zero(2 * d);
  for (int r1 = 0; r1 < d; ++r1)
    for (int c1 = 0; c1 < d; ++c1) {
      if (a.m[r1][c1].is_zero()) continue;
      bool flip = b_parity == 1 && state_parity(c1) == 1;
      for (int r2 = 0; r2 < 2; ++r2)
        for (int c2 = 0; c2 < 2; ++c2) {
          if (b[r2][c2].is_zero()) continue;
          RatFunc e = a.m[r1][c1] * b[r2][c2];
          r.m[2 * r1 + r2][2 * c1 + c2] = flip ? -e : e;
        }
    }
  return r;
}

Matrix mat_add(Matrix a, const Matrix& b, const Scalar& c) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j)
      if (!b[i][j].is_zero()) a[i][j] += c * b[i][j];
  return a;
}

}  // namespace

Monodromy monodromy(const Gl11Weights& w) {
  w.validate();
  Monodromy out;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) out.L[i - 1][j - 1].m = site_entry(i, j, w.a[0], w.b[0], w.z[0]);
  // L_ij -> sum_l (-1)^{(|i|+|l|)(|l|+|j|)} L_il ⊗ L_lj, one site at a time
  for (int k = 1; k < w.p(); ++k) {
    Monodromy next;
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        TensorOperator sum = TensorOperator::zero(2 << k);
        for (int l = 1; l <= 2; ++l) {
          TensorOperator t = graded_tensor(out(i, l), site_entry(l, j, w.a[k], w.b[k], w.z[k]), grade(l) ^ grade(j));
          if ((grade(i) ^ grade(l)) & (grade(l) ^ grade(j))) t = RatFunc(-1) * t;
          sum = sum + t;
        }
        next.L[i - 1][j - 1] = sum;
      }
    out = next;
  }
  return out;
}

TensorOperator transfer(const Gl11Weights& w, const std::vector<Scalar>& twist) {
  Monodromy L = monodromy(w);
  if (twist.empty()) return L(1, 1) - L(2, 2);
  if (twist.size() != 2) throw std::invalid_argument("gl(1|1) twist needs two multipliers");
  return RatFunc(twist[0]) * L(1, 1) - RatFunc(twist[1]) * L(2, 2);
}

Matrix raising(const Gl11Weights& w) {
  Monodromy L = monodromy(w);
  const TensorOperator& l21 = L(2, 1);
  int d = l21.dim();
  Matrix r(d, std::vector<Scalar>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const RatFunc& f = l21.m[i][j];
      if (f.is_zero()) continue;
      int gap = f.den().degree() - f.num().degree();
      if (gap < 1) throw std::logic_error("L_21 does not vanish at infinity");
      if (gap == 1) r[i][j] = f.num().lead() / f.den().lead();
    }
  return r;
}

std::vector<StateVector> singular_subspace(const Gl11Weights& w) {
  Matrix e = raising(w);
  return kernel(e, int(e.size()));
}

std::vector<DivisorSolution> divisor_solutions(const Gl11Weights& w, std::optional<long> radical) {
  w.validate();
  Poly f = w.phi() - w.psi();
  if (f.is_zero()) throw std::domain_error("phi = psi: every polynomial is a solution");
  RootSplit s = find_roots(f, radical);
  if (!s.complete()) throw std::domain_error("phi - psi does not split: " + s.needed_extension());
  // distinct roots with multiplicities
  std::vector<std::pair<Scalar, int>> mult;
  for (const Scalar& r : s.roots) {
    auto it = std::find_if(mult.begin(), mult.end(), [&](const auto& e) { return e.first == r; });
    if (it == mult.end())
      mult.push_back({r, 1});
    else
      ++it->second;
  }
  std::vector<DivisorSolution> out{{Poly(1), {}}};
  for (const auto& [r, k] : mult) {
    std::vector<DivisorSolution> next;
    for (const DivisorSolution& d : out)
      for (int e = 0; e <= k; ++e) {
        DivisorSolution n = d;
        for (int i = 0; i < e; ++i) n.roots.push_back(r);
        n.y = Poly::from_roots(n.roots);
        next.push_back(std::move(n));
      }
    out = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const DivisorSolution& x, const DivisorSolution& y) { return x.y.degree() < y.y.degree(); });
  return out;
}

StateVector bethe_vector(const std::vector<Scalar>& t, const Gl11Weights& w) {
  Monodromy L = monodromy(w);
  Poly c(1);
  for (const Scalar& z : w.z) c *= Poly::x() - Poly(z);
  // prod (x - z_k) L_12(x) has polynomial entries
  TensorOperator b = RatFunc(c) * L(1, 2);
  int d = b.dim();
  StateVector v(d);
  v[0] = Scalar(1);
  for (auto it = t.rbegin(); it != t.rend(); ++it) v = mat_apply(b.at(*it), v);
  return v;
}

RatFunc bethe_eigenvalue(const Poly& y, const Gl11Weights& w) {
  Poly den(1);
  for (const Scalar& z : w.z) den *= Poly::x() - Poly(z);
  return RatFunc(y.shift(1, Scalar(1)), y) * RatFunc(w.phi() - w.psi(), den);
}

std::optional<RatFunc> eigenvalue_on(const TensorOperator& op, const StateVector& w) {
  std::vector<RatFunc> img = op.apply(w);
  int j = -1;
  for (size_t i = 0; i < w.size(); ++i)
    if (!w[i].is_zero()) {
      j = int(i);
      break;
    }
  if (j < 0) return std::nullopt;
  RatFunc e = img[j] / RatFunc(w[j]);
  for (size_t i = 0; i < w.size(); ++i)
    if (img[i] != e * RatFunc(w[i])) return std::nullopt;
  return e;
}

Matrix tensor_shapovalov(const Gl11Weights& w) {
  w.validate();
  int d = 1 << w.p();
  Matrix g(d, std::vector<Scalar>(d));
  for (int s = 0; s < d; ++s) {
    Scalar v(1);
    int odd = 0;
    for (int k = 0; k < w.p(); ++k)
      if ((s >> (w.p() - 1 - k)) & 1) {
        v *= -(w.a[k] + w.b[k]);
        ++odd;
      }
    // B(v ⊗ w, v' ⊗ w') = (-1)^{|w||v'|} B(v, v') B(w, w')
    if ((odd * (odd - 1) / 2) % 2 == 1) v = -v;
    g[s][s] = v;
  }
  return g;
}

namespace {

// R^{(i,j)}(u) for sites i < j.
Matrix r_matrix(const Gl11Weights& w, int i, int j, const Scalar& u) {
  const Scalar &ai = w.a[i], &bi = w.b[i], &aj = w.a[j], &bj = w.b[j];
  Scalar den = ai + bj - u;
  if (den.is_zero()) throw std::domain_error("R-matrix pole for sites " + std::to_string(i + 1) + "," + std::to_string(j + 1));
  Scalar inv = den.inverse();
  int p = w.p();
  // matrix unit E_rs on one site, Koszul sign from the sites before it
  auto unit = [&](int r, int s, int site) {
    int dim = 1 << p;
    Matrix m(dim, std::vector<Scalar>(dim));
    int bit = p - 1 - site;
    for (int c = 0; c < dim; ++c) {
      if (((c >> bit) & 1) != s - 1) continue;
      int sign = r != s && state_parity(c >> (bit + 1)) == 1 ? -1 : 1;
      m[(c & ~(1 << bit)) | ((r - 1) << bit)][c] = Scalar(sign);
    }
    return m;
  };
  auto ee = [&](int r, int s, int t, int v) { return mat_mul(unit(r, s, i), unit(t, v, j)); };
  int dim = 1 << p;
  Matrix R(dim, std::vector<Scalar>(dim));
  R = mat_add(R, ee(1, 1, 1, 1), Scalar(1));
  R = mat_add(R, ee(2, 2, 2, 2), -(bi + aj + u) * inv);
  R = mat_add(R, ee(1, 1, 2, 2), (bj - bi - u) * inv);
  R = mat_add(R, ee(2, 2, 1, 1), (ai - aj - u) * inv);
  R = mat_add(R, ee(1, 2, 2, 1), -(ai + bi) * inv);
  R = mat_add(R, ee(2, 1, 1, 2), (aj + bj) * inv);
  return R;
}

}  // namespace

ShapovalovForm shapovalov(const Gl11Weights& w) {
  Matrix b = tensor_shapovalov(w);
  int d = 1 << w.p();
  Matrix R(d, std::vector<Scalar>(d));
  for (int i = 0; i < d; ++i) R[i][i] = Scalar(1);
  for (int i = 0; i < w.p(); ++i)
    for (int j = i + 1; j < w.p(); ++j) R = mat_mul(R, r_matrix(w, i, j, w.z[i] - w.z[j]));
  return {mat_mul(b, R)};
}

Scalar ShapovalovForm::operator()(const StateVector& w1, const StateVector& w2) const {
  StateVector g = mat_apply(gram, w2);
  Scalar s;
  for (size_t i = 0; i < w1.size(); ++i)
    if (!w1[i].is_zero()) s += w1[i] * g[i];
  return s;
}

NormCheck norm_check(const std::vector<Scalar>& t, const Gl11Weights& w) {
  NormCheck n;
  StateVector v = bethe_vector(t, w);
  n.lhs = shapovalov(w)(v, v);
  int l = int(t.size());
  Scalar r((l * (l + 1) / 2) % 2 == 1 ? -1 : 1);
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      Scalar q = (t[i] - t[j] - Scalar(1)) / (t[i] - t[j]);
      r *= q * q;
    }
  for (int i = 0; i < l; ++i) {
    Scalar sum;
    for (int k = 0; k < w.p(); ++k) {
      Scalar f = (t[i] - w.z[k] + w.a[k]) * (t[i] - w.z[k] - w.b[k]);
      r *= f;
      sum += (w.a[k] + w.b[k]) / f;
    }
    r *= sum;
  }
  n.rhs = r;
  n.equal = n.lhs == n.rhs;
  return n;
}

bool CompletenessReport::passed() const {
  return nonzero && singular && eigen && orthogonal && independent && spanning && norms &&
         int(solutions.size()) == expected;
}

CompletenessReport completeness_report(const Gl11Weights& w, std::optional<long> radical) {
  w.validate();
  if (!w.typical()) throw std::invalid_argument("completeness needs a + b != 0");
  CompletenessReport rep;
  rep.expected = 1 << (w.p() - 1);
  rep.solutions = divisor_solutions(w, radical);
  TensorOperator T = transfer(w);
  Matrix e = raising(w);
  ShapovalovForm B = shapovalov(w);
  rep.nonzero = rep.singular = rep.eigen = rep.norms = true;
  for (const DivisorSolution& s : rep.solutions) {
    StateVector v = bethe_vector(s.roots, w);
    std::string name = "y = " + s.y.to_string();
    if (std::all_of(v.begin(), v.end(), [](const Scalar& c) { return c.is_zero(); })) {
      rep.nonzero = false;
      rep.problems.push_back(name + ": zero Bethe vector");
    }
    StateVector ev = mat_apply(e, v);
    if (!std::all_of(ev.begin(), ev.end(), [](const Scalar& c) { return c.is_zero(); })) {
      rep.singular = false;
      rep.problems.push_back(name + ": not singular");
    }
    std::optional<RatFunc> E = eigenvalue_on(T, v);
    if (!E || *E != bethe_eigenvalue(s.y, w)) {
      rep.eigen = false;
      rep.problems.push_back(name + ": eigenvalue mismatch");
    }
    rep.eigenvalues.push_back(E ? *E : RatFunc());
    try {
      if (!norm_check(s.roots, w).equal) {
        rep.norms = false;
        rep.problems.push_back(name + ": norm formula mismatch");
      }
    } catch (const std::domain_error& err) {
      rep.norms = false;
      rep.problems.push_back(name + ": " + err.what());
    }
    rep.vectors.push_back(std::move(v));
  }
  rep.orthogonal = true;
  for (size_t i = 0; i < rep.vectors.size(); ++i)
    for (size_t j = i + 1; j < rep.vectors.size(); ++j)
      if (!B(rep.vectors[i], rep.vectors[j]).is_zero()) {
        rep.orthogonal = false;
        rep.problems.push_back("Bethe vectors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                               " are not orthogonal");
      }
  rep.independent = rank(rep.vectors) == int(rep.vectors.size());
  rep.singular_dim = int(singular_subspace(w).size());
  rep.spanning = rep.independent && rep.singular && int(rep.vectors.size()) == rep.singular_dim;
  return rep;
}

Spectrum homogeneous_spectrum(int p) {
  Spectrum sp;
  sp.p = p;
  // theta, a primitive p-th root of unity
  Scalar theta;
  switch (p) {
    case 1: theta = Scalar(1); break;
    case 2: theta = Scalar(-1); break;
    case 3:
      sp.radical = -3;
      theta = (Scalar(-1) + Scalar::root(-3)) / Scalar(2);
      break;
    case 4:
      sp.radical = -1;
      theta = Scalar::root(-1);
      break;
    default: throw std::invalid_argument("homogeneous spectrum is available for p <= 4");
  }
  Gl11Weights w = Gl11Weights::homogeneous(p);
  RatFunc base(w.phi() - w.psi(), Poly::x().pow(p));
  std::vector<Scalar> vartheta;
  Scalar power = theta;
  for (int i = 1; i < p; ++i) {
    vartheta.push_back((power - Scalar(1)).inverse());
    power *= theta;
  }
  for (int mask = 0; mask < (1 << (p - 1)); ++mask) {
    RatFunc f = base;
    for (int i = 0; i < p - 1; ++i)
      if ((mask >> i) & 1) f *= RatFunc(Poly::x() - Poly(vartheta[i] + Scalar(1)), Poly::x() - Poly(vartheta[i]));
    sp.closed_form.push_back(f);
  }
  TensorOperator T = transfer(w);
  for (const DivisorSolution& s : divisor_solutions(w, sp.radical)) {
    std::optional<RatFunc> e = eigenvalue_on(T, bethe_vector(s.roots, w));
    if (e) sp.computed.push_back(*e);
  }
  auto contains = [](const std::vector<RatFunc>& v, const RatFunc& f) {
    return std::find(v.begin(), v.end(), f) != v.end();
  };
  sp.matches = sp.computed.size() == sp.closed_form.size() &&
               std::all_of(sp.closed_form.begin(), sp.closed_form.end(), [&](const RatFunc& f) { return contains(sp.computed, f); });
  sp.simple = true;
  for (size_t i = 0; i < sp.computed.size(); ++i)
    for (size_t j = i + 1; j < sp.computed.size(); ++j)
      if (sp.computed[i] == sp.computed[j]) sp.simple = false;
  return sp;
}

}  // namespace bethe
