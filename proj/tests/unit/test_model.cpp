#include <algorithm>
#include <set>

#include "bethe/algebra/roots.hpp"
#include "bethe/model/node.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace testsupport;

namespace {

WeightData gl2_data() {
  WeightData w;
  w.m = 2;
  w.n = 0;
  w.weights = {{1, 0}, {1, 0}};
  w.z = {Scalar(0), Scalar(5)};
  return w;
}

WeightData gl11_data(std::vector<Weight> ws, std::vector<Scalar> z) {
  WeightData w;
  w.m = 1;
  w.n = 1;
  w.weights = std::move(ws);
  w.z = std::move(z);
  return w;
}

Weight random_weight(Gen& g, int m, int n) {
  Weight w;
  int top = 3;
  for (int i = 0; i < m; ++i) {
    top = g.integer(0, top);
    w.push_back(top);
  }
  int lm = m ? w[m - 1] : 0;
  top = 3;
  for (int j = 1; j <= n; ++j) {
    top = j > lm ? 0 : g.integer(0, top);
    w.push_back(top);
  }
  return w;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("parity_data examples") {
  ParityData std3 = parity_data(ParitySeq({1, 1, -1}));
  CHECK(std3.sigma == std::vector<int>{1, 2, 3});
  ParityData d = parity_data(ParitySeq({1, -1, 1}));
  CHECK(d.sigma == std::vector<int>{1, 3, 2});
  CHECK(d.plus == std::vector<int>{1, 1, 0});
  CHECK(d.minus == std::vector<int>{0, 0, 1});
  ParityData plus = parity_data(ParitySeq({1, 1, 1, 1}));
  CHECK(plus.sigma == std::vector<int>{1, 2, 3, 4});
  CHECK(plus.minus == std::vector<int>{0, 0, 0, 0});
  CHECK_THROWS(ParitySeq({1, 0, -1}));
}

TEST_CASE("parity sequences enumerate with the standard one first") {
  std::vector<ParitySeq> s = ParitySeq::all(2, 1);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == ParitySeq({1, 1, -1}));
  CHECK(s[1] == ParitySeq({1, -1, 1}));
  CHECK(s[2] == ParitySeq({-1, 1, 1}));
  CHECK(ParitySeq({1, -1, 1}).swapped(1) == ParitySeq({-1, 1, 1}));
  CHECK(ParitySeq::all(3, 3).size() == 20);
}

TEST_CASE("property: boxed parity identities for all m + n <= 6") {
  for (int N = 1; N <= 6; ++N)
    for (int m = 0; m <= N; ++m)
      for (const ParitySeq& s : ParitySeq::all(m, N - m)) {
        ParityData d = parity_data(s);
        std::vector<int> sorted = d.sigma;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < N; ++i) REQUIRE(sorted[i] == i + 1);
        for (int i = 1; i <= N; ++i) {
          int sg = d.sigma[i - 1];
          if (s[i] == 1) {
            CHECK(d.plus[i - 1] == m - sg);
            CHECK(d.minus[i - 1] == i - sg);
          } else {
            CHECK(d.plus[i - 1] == sg - i);
            CHECK(d.minus[i - 1] == sg - m - 1);
          }
        }
      }
}

TEST_CASE("weight validation") {
  CHECK_NOTHROW(validate_weight({1, 1, 0}, 2, 1));
  CHECK_NOTHROW(validate_weight({1, 2}, 1, 1));
  CHECK_NOTHROW(validate_weight({2, 2, 2, 2}, 2, 2));
  CHECK_THROWS(validate_weight({2, 1, 2, 2}, 2, 2));
  CHECK_THROWS(validate_weight({0, 1}, 1, 1));
  CHECK_THROWS(validate_weight({1, 1, 1}, 1, 2));
  CHECK_THROWS(validate_weight({0, 1, 0}, 2, 1));
  CHECK_THROWS(validate_weight({1, -1}, 2, 0));
  CHECK_THROWS(validate_weight({1, 1}, 2, 1));
  WeightData w = gl21_weights();
  CHECK_NOTHROW(w.validate());
  CHECK(w.h_generic());
  CHECK(w.typical());
  w.twist = {Scalar(2), Scalar(3), Scalar(2)};
  CHECK_THROWS(w.validate());
  WeightData clash = gl2_data();
  clash.z = {Scalar(0), Scalar(3)};
  CHECK_FALSE(clash.h_generic());
}

TEST_CASE("weight_transform examples") {
  CHECK(weight_transform({1, 1, 0}, ParitySeq({1, 1, -1})) == Weight{1, 1, 0});
  CHECK(weight_transform({1, 1, 0}, ParitySeq({1, -1, 1})) == Weight{1, 1, 0});
  CHECK(weight_transform({1, 1, 0}, ParitySeq({-1, 1, 1})) == Weight{2, 0, 0});
}

TEST_CASE("compute_T on the gl(2|1) data") {
  FieldSpec f = gl21_field();
  WeightData w = gl21_weights();
  std::vector<ParitySeq> s = ParitySeq::all(2, 1);
  Poly t1 = P("x^3 + 3*x^2 + x - 1", f);
  CHECK(compute_T(s[0], w).T == std::vector<Poly>{t1, t1, Poly(1)});
  CHECK(compute_T(s[1], w).T == std::vector<Poly>{t1, P("x^3 - 3*x^2 + x + 1", f), Poly(1)});
  CHECK(compute_T(s[2], w).T ==
        std::vector<Poly>{P("(x-1)*(x-2)*(x^2-2*x-1)*(x^2-4*x+2)", f), Poly(1), Poly(1)});
  WeightData zero = w;
  zero.weights = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  for (const ParitySeq& p : s)
    for (const Poly& t : compute_T(p, zero).T) CHECK(t.is_one());
}

TEST_CASE("property: T ratios are polynomials and the standard transform is the identity") {
  Gen g(31);
  for (int trial = 0; trial < 40; ++trial) {
    int m = g.integer(1, 3), n = g.integer(0, 3);
    WeightData w;
    w.m = m;
    w.n = n;
    int p = g.integer(1, 3);
    for (int k = 0; k < p; ++k) {
      w.weights.push_back(random_weight(g, m, n));
      w.z.push_back(g.rational(9, 3) + Scalar::rational(k, 7));
    }
    REQUIRE_NOTHROW(w.validate());
    for (const Weight& l : w.weights) CHECK(weight_transform(l, ParitySeq::standard(m, n)) == l);
    for (const ParitySeq& s : ParitySeq::all(m, n)) {
      TData t = compute_T(s, w);
      for (int i = 1; i < m + n; ++i) {
        if (s[i] == s[i + 1]) CHECK(t.T[i - 1].divisible_by(t.T[i]));
        CHECK_FALSE(t.ratio[i - 1].is_zero());
      }
    }
  }
}

TEST_CASE("bae_residuals examples") {
  WeightData w = gl2_data();
  BetheNode node(ParitySeq({1, 1}), {P("x - 2")});
  BaeReport r = bae_residuals(node, w, {{Scalar(2)}});
  REQUIRE(r.residuals.size() == 1);
  CHECK(r.residuals[0].value.is_one());
  CHECK(r.solved());

  BetheNode empty(ParitySeq({1, 1}), {Poly(1)});
  CHECK(bae_residuals(empty, w, {{}}).residuals.empty());

  WeightData w11 = gl11_data({{1, 0}, {1, 1}}, {Scalar(0), Scalar(4)});
  BetheNode n11(ParitySeq({1, -1}), {P("x - 1")});
  BaeReport r11 = bae_residuals(n11, w11, {{Scalar(1)}});
  CHECK(r11.residuals[0].value.is_one());
  CHECK(r11.solved());

  // a wrong root fails, and roots that disagree with y are rejected
  BetheNode wrong(ParitySeq({1, 1}), {P("x - 3")});
  CHECK_FALSE(bae_residuals(wrong, w, {{Scalar(3)}}).solved());
  CHECK_THROWS_AS(bae_residuals(node, w, {{Scalar(3)}}), std::invalid_argument);
  // t = 0 makes the remaining denominator t - z_1 vanish
  BetheNode pole(ParitySeq({1, 1}), {P("x")});
  CHECK_THROWS_AS(bae_residuals(pole, w, {{Scalar(0)}}), std::domain_error);
}

TEST_CASE("odd multiplicity condition") {
  // phi - psi = 3x - 3 has the simple root 1; a double root there violates the condition
  WeightData w11 = gl11_data({{1, 0}, {1, 1}}, {Scalar(0), Scalar(4)});
  BetheNode twice(ParitySeq({1, -1}), {P("(x - 1)^2")});
  BaeReport r = bae_residuals(twice, w11, {{Scalar(1), Scalar(1)}});
  for (const BaeResidual& x : r.residuals) CHECK(x.value.is_one());
  CHECK_FALSE(r.violations.empty());
  CHECK_FALSE(r.solved());
  CHECK_FALSE(satisfies_bae(twice, w11));
}

TEST_CASE("residuals agree with the polynomial form on small gl2 data") {
  // roots chosen from the divisors of the linear BAE and random corruptions of them
  WeightData w = gl2_data();
  for (int t = -3; t <= 6; ++t) {
    BetheNode node(ParitySeq({1, 1}), {Poly({Scalar(-t), Scalar(1)})});
    if (!is_generic(node, w).generic || t == 0 || t == 5) continue;
    CHECK(bae_residuals(node, w, {{Scalar(t)}}).solved() == satisfies_bae(node, w));
  }
}

TEST_CASE("the gl(2|1) population tuples satisfy the polynomial form symbolically") {
  FieldSpec f = gl21_field();
  WeightData w = gl21_weights();
  std::vector<ParitySeq> s = ParitySeq::all(2, 1);
  Poly fam = P("4*x^3 - (6+3*c)*x^2 + 3*c*x + c + 1", f);
  BetheNode n0(s[0], {P("x - c", f), Poly(1)});
  BetheNode n1(s[1], {P("x - c", f), fam});
  BetheNode n2(s[2], {P("6*(x-1)^4 - 9*(x-1)^2 + 1", f), fam});
  CHECK(satisfies_bae(n0, w));
  CHECK(satisfies_bae(n1, w));
  CHECK(satisfies_bae(n2, w));
  BetheNode bad(s[1], {P("x - c", f), P("x^3", f)});
  CHECK_FALSE(satisfies_bae(bad, w));
  CHECK(eigenvalue(n0, w) == eigenvalue(n1, w));
  CHECK(eigenvalue(n1, w) == eigenvalue(n2, w));
}

TEST_CASE("is_generic examples") {
  WeightData w = gl21_weights();
  CHECK(is_generic(BetheNode(ParitySeq({1, 1, -1}), {Poly(1), Poly(1)}), w).generic);
  WeightData g2 = gl2_data();
  GenericityReport a = is_generic(BetheNode(ParitySeq({1, 1}), {P("x*(x-1)")}), g2);
  CHECK_FALSE(a.generic);
  REQUIRE_FALSE(a.diagnostics.empty());
  CHECK(a.diagnostics[0].find("clause (i)") != std::string::npos);
  GenericityReport b = is_generic(BetheNode(ParitySeq({1, 1}), {P("x+1")}), g2);
  CHECK_FALSE(b.generic);
  CHECK(b.diagnostics[0].find("clause (iii)") != std::string::npos);
  GenericityReport c = is_generic(BetheNode(ParitySeq({1, 1}), {P("(x-2)^2")}), g2);
  CHECK_FALSE(c.generic);
}

TEST_CASE("eigenvalue examples") {
  WeightData w11 = gl11_data({{1, 0}}, {Scalar(0)});
  CHECK(eigenvalue(BetheNode(ParitySeq({1, -1}), {Poly(1)}), w11) == F("1/x"));
  WeightData g2 = gl2_data();
  CHECK(eigenvalue(BetheNode(ParitySeq({1, 1}), {P("x-2")}), g2) ==
        F("(x+1)*(x-4)*(x-3)/(x*(x-5)*(x-2)) + (x-1)/(x-2)"));
  WeightData tw = w11;
  tw.twist = {Scalar(3), Scalar(5)};
  CHECK(eigenvalue(BetheNode(ParitySeq({1, -1}), {Poly(1)}, tw.twist), tw) == F("3*(x+1)/x - 5"));
}

TEST_CASE("weight_at_infinity examples") {
  WeightData g2 = gl2_data();
  CHECK(weight_at_infinity(ParitySeq({1, 1}), g2, {1}) == Weight{1, 1});
  CHECK(weight_at_infinity(ParitySeq({1, 1}), g2, {0}) == Weight{2, 0});
  // across a fermionic step, compared in standard coordinates
  WeightData w11 = gl11_data({{1, 0}, {1, 1}}, {Scalar(0), Scalar(4)});
  ParitySeq s({1, -1}), st({-1, 1});
  Weight before = to_standard_coordinates(weight_at_infinity(s, w11, {1}), s);
  Weight after = to_standard_coordinates(weight_at_infinity(st, w11, {0}), st);
  ParityData d = parity_data(s);
  Weight alpha(2, 0);
  alpha[d.sigma[0] - 1] += 1;
  alpha[d.sigma[1] - 1] -= 1;
  CHECK(before == Weight{after[0] + alpha[0], after[1] + alpha[1]});
}

TEST_CASE("root splitting") {
  FieldSpec r2 = gl21_field();
  RootSplit a = find_roots(P("x^2 - 2", r2), 2);
  CHECK(a.complete());
  CHECK(std::set<std::string>{a.roots[0].to_string(), a.roots[1].to_string()} ==
        std::set<std::string>{"r", "-r"});
  FieldSpec gi;
  gi.radical = -1;
  RootSplit b = find_roots(P("4*x^3 + 6*x^2 + 4*x + 1"), -1);
  CHECK(b.complete());
  CHECK(b.roots.size() == 3);
  for (const Scalar& r : b.roots) CHECK(P("4*x^3 + 6*x^2 + 4*x + 1").eval(r).is_zero());
  RootSplit c = find_roots(P("x^2 + 1"));
  CHECK_FALSE(c.complete());
  CHECK(c.needed_extension() == "sqrt(-1)");
  RootSplit d = find_roots(P("(x - 1)*(x - r)*(x + 3*r)", r2), 2);
  CHECK(d.complete());
  CHECK(d.roots.size() == 3);
  RootSplit e = find_roots(P("(x - 2/3)^2*(x + 5)"));
  CHECK(e.roots.size() == 3);
  CHECK(find_roots(P("x^3 - 2")).remainder.degree() == 3);
}

}  // TEST_SUITE
