#include "bethe/model/node.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bethe/algebra/roots.hpp"

namespace bethe {

namespace {

std::string idx(int i) { return std::to_string(i); }

bool coprime(const Poly& a, const Poly& b) { return gcd(a, b).degree() <= 0; }

Scalar twist_at(const BetheNode& node, int a) { return node.twisted() ? node.twist[a - 1] : Scalar(1); }

}  // namespace

BetheNode::BetheNode(ParitySeq parity_, std::vector<Poly> y_, std::vector<Scalar> twist_)
    : parity(std::move(parity_)), y(std::move(y_)), twist(std::move(twist_)) {
  if (int(y.size()) != parity.size() - 1)
    throw std::invalid_argument("node needs m + n - 1 polynomials");
  if (!twist.empty() && int(twist.size()) != parity.size())
    throw std::invalid_argument("node twist needs m + n entries");
  for (Poly& p : y) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial in a node");
    p = p.monic();
  }
}

Poly BetheNode::y_at(int i) const {
  if (i == 0 || i == parity.size()) return Poly(1);
  return y.at(i - 1);
}

std::vector<int> BetheNode::degrees() const {
  std::vector<int> l;
  for (const Poly& p : y) l.push_back(p.degree());
  return l;
}

bool BaeReport::solved() const {
  if (!violations.empty()) return false;
  for (const BaeResidual& r : residuals)
    if (!r.value.is_one()) return false;
  return true;
}

Poly bosonic_rhs(const BetheNode& node, const TData& t, int i, const Scalar& h) {
  const ParitySeq& s = node.parity;
  if (s[i] != s[i + 1]) throw std::invalid_argument("bosonic equation needs s_i = s_{i+1}");
  return t.ratio[i - 1] * node.y_at(i - 1).shift(-s[i], h) * node.y_at(i + 1);
}

Poly fermionic_rhs(const BetheNode& node, const TData& t, int i, const Scalar& h) {
  const ParitySeq& s = node.parity;
  if (s[i] == s[i + 1]) throw std::invalid_argument("fermionic equation needs s_i != s_{i+1}");
  Poly a = *t.phi[i - 1] * node.y_at(i - 1).shift(-s[i], h) * node.y_at(i + 1);
  Poly b = *t.psi[i - 1] * node.y_at(i - 1) * node.y_at(i + 1).shift(-s[i], h);
  return twist_at(node, i) * a - twist_at(node, i + 1) * b;
}

SkewFamily bosonic_solutions(const BetheNode& node, const TData& t, int i, const Scalar& h) {
  int s = node.parity[i];
  const Poly& y = node.y_at(i);
  Poly c = bosonic_rhs(node, t, i, h);
  Scalar q(1);
  if (node.twisted()) q = twist_at(node, i) / twist_at(node, i + 1);
  int bound = std::max(c.degree() - y.degree() + 1, y.degree());
  return solve_skew_linear(q * y, -y.shift(-s, h), c, s, bound, h);
}

std::vector<DirectionStatus> reproduction_conditions(const BetheNode& node, const WeightData& w) {
  TData t = compute_T(node.parity, w);
  std::vector<DirectionStatus> out;
  for (int i = 1; i < node.parity.size(); ++i) {
    DirectionStatus st{i, node.parity[i] == node.parity[i + 1], false, ""};
    if (st.bosonic) {
      SkewFamily f = bosonic_solutions(node, t, i, w.h);
      st.solvable = f.consistent;
      st.detail = f.consistent ? "polynomial solution exists" : "no polynomial solution";
    } else {
      Poly rhs = fermionic_rhs(node, t, i, w.h);
      st.solvable = rhs.divisible_by(node.y_at(i));
      st.detail = rhs.is_zero() ? "right side vanishes identically"
                  : st.solvable ? "y_" + idx(i) + " divides the right side"
                                : "y_" + idx(i) + " does not divide the right side";
    }
    out.push_back(st);
  }
  return out;
}

bool satisfies_bae(const BetheNode& node, const WeightData& w) {
  for (const DirectionStatus& d : reproduction_conditions(node, w))
    if (!d.solvable) return false;
  return true;
}

BaeReport bae_residuals(const BetheNode& node, const WeightData& w, const RootLists& t) {
  const ParitySeq& s = node.parity;
  int N = s.size();
  const Scalar& h = w.h;
  if (int(t.size()) != N - 1) throw std::invalid_argument("root lists do not match the node");
  for (int i = 1; i < N; ++i)
    if (Poly::from_roots(t[i - 1]) != node.y_at(i))
      throw std::invalid_argument("roots of color " + idx(i) + " do not match y_" + idx(i));
  std::vector<Weight> ls;
  for (const Weight& l : w.weights) ls.push_back(weight_transform(l, s));
  TData td = compute_T(s, w);

  BaeReport rep;
  auto divide = [](Scalar& acc, const Scalar& num, const Scalar& den, const std::string& what) {
    if (den.is_zero()) throw std::domain_error("vanishing denominator: " + what);
    acc *= num / den;
  };
  for (int i = 1; i < N; ++i) {
    const std::vector<Scalar>& ti = t[i - 1];
    for (size_t j = 0; j < ti.size(); ++j) {
      const Scalar& x = ti[j];
      Scalar v = node.twisted() ? twist_at(node, i) / twist_at(node, i + 1) : Scalar(1);
      for (int k = 0; k < w.p(); ++k) {
        long a = long(s[i]) * ls[k][i - 1], b = long(s[i + 1]) * ls[k][i];
        if (a == b) continue;
        divide(v, x - w.z[k] + Scalar(a) * h, x - w.z[k] + Scalar(b) * h,
               "t - z_" + idx(k + 1) + " at color " + idx(i));
      }
      if (i > 1)
        for (const Scalar& r : t[i - 2])
          divide(v, x - r + Scalar(s[i]) * h, x - r, "t^(" + idx(i) + ") - t^(" + idx(i - 1) + ")");
      if (s[i] == s[i + 1])
        for (size_t r = 0; r < ti.size(); ++r)
          if (r != j)
            divide(v, x - ti[r] - Scalar(s[i]) * h, x - ti[r] + Scalar(s[i + 1]) * h,
                   "same-color pair at color " + idx(i));
      if (i + 1 < N)
        for (const Scalar& r : t[i])
          divide(v, x - r, x - r - Scalar(s[i + 1]) * h, "t^(" + idx(i) + ") - t^(" + idx(i + 1) + ")");
      rep.residuals.push_back({i, int(j) + 1, v});
    }
    if (s[i] != s[i + 1] && !ti.empty()) {
      Poly f = fermionic_rhs(node, td, i, h);
      if (!f.is_zero() && !f.divisible_by(node.y_at(i)))
        rep.violations.push_back("color " + idx(i) +
                                 ": root multiplicity exceeds the multiplicity in the equation");
    }
  }
  return rep;
}

std::optional<RootLists> split_roots(const BetheNode& node, std::optional<long> radical) {
  RootLists out;
  for (const Poly& p : node.y) {
    RootSplit r = find_roots(p, radical);
    if (!r.complete()) return std::nullopt;
    out.push_back(r.roots);
  }
  return out;
}

GenericityReport is_generic(const BetheNode& node, const WeightData& w) {
  const ParitySeq& s = node.parity;
  const Scalar& h = w.h;
  TData t = compute_T(s, w);
  GenericityReport rep;
  auto fail = [&](const std::string& msg) {
    rep.generic = false;
    rep.diagnostics.push_back(msg);
  };
  for (int i = 1; i < s.size(); ++i) {
    const Poly& y = node.y_at(i);
    std::string name = "y_" + idx(i);
    if (s[i] == s[i + 1]) {
      if (!coprime(y, y.derivative())) fail("clause (i): " + name + " has a repeated root");
      if (!coprime(y, y.shift(1, h))) fail("clause (i): " + name + " shares a root with " + name + "[1]");
    }
    Poly prev = node.y_at(i - 1), next = node.y_at(i + 1);
    if (!coprime(y, prev)) fail("clause (ii): " + name + " shares a root with y_" + idx(i - 1));
    if (!coprime(y, prev.shift(-s[i], h)))
      fail("clause (ii): " + name + " shares a root with y_" + idx(i - 1) + "[-s_" + idx(i) + "]");
    if (!coprime(y, next.shift(s[i + 1], h)))
      fail("clause (ii): " + name + " shares a root with y_" + idx(i + 1) + "[s_" + idx(i + 1) + "]");
    if (!coprime(y, t.ratio[i - 1]))
      fail("clause (iii): " + name + " shares a root with the T-ratio at " + idx(i));
  }
  return rep;
}

KernelWitnesses kernel_witnesses(const BetheNode& node, const WeightData& w) {
  if (!node.parity.is_standard()) throw std::invalid_argument("kernel witnesses need the standard parity");
  int m = w.m;
  const Scalar& h = w.h;
  TData t = compute_T(node.parity, w);
  KernelWitnesses k;
  if (m > 0) k.v = RatFunc(t.T[m - 1] * node.y_at(m - 1).shift(-1, h), node.y_at(m));
  if (w.n > 0) k.u = RatFunc(node.y_at(m + 1).shift(-1, h), t.T[m].shift(-1, h) * node.y_at(m));
  return k;
}

RatFunc eigenvalue(const BetheNode& node, const WeightData& w) {
  const ParitySeq& s = node.parity;
  const Scalar& h = w.h;
  TData t = compute_T(s, w);
  RatFunc e;
  for (int a = 1; a <= s.size(); ++a) {
    int sa = s[a];
    const Poly& T = t.T[a - 1];
    Poly prev = node.y_at(a - 1), cur = node.y_at(a);
    RatFunc term(T * prev.shift(-sa, h) * cur.shift(sa, h), T.shift(sa, h) * prev * cur);
    e += RatFunc(Scalar(sa) * twist_at(node, a)) * term;
  }
  return e;
}

}  // namespace bethe
