#include <doctest.h>

#include "bethe/algebra/linalg.hpp"
#include "bethe/algebra/roots.hpp"
#include "bethe/gl11/gl11.hpp"
#include "bethe/model/node.hpp"
#include "support.hpp"

using namespace testsupport;

namespace {

Gl11Weights chain(std::vector<Scalar> a, std::vector<Scalar> b, std::vector<Scalar> z) {
  Gl11Weights w;
  w.a = std::move(a);
  w.b = std::move(b);
  w.z = std::move(z);
  return w;
}

/// Nondegenerate random chain; points are integers so reducible data shows up.
Gl11Weights random_chain(Gen& g, int p, bool integer_z = false) {
  Gl11Weights w;
  for (int k = 0; k < p; ++k) {
    Scalar a, b;
    do {
      a = g.rational(3, 2);
      b = g.rational(3, 2);
    } while ((a + b).is_zero());
    w.a.push_back(a);
    w.b.push_back(b);
    w.z.push_back(integer_z ? Scalar(g.integer(-3, 3)) : g.rational(9, 7));
  }
  return w;
}

Matrix sub(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) r[i][j] -= b[i][j];
  return r;
}

Matrix scale(const Scalar& c, Matrix a) {
  for (auto& row : a)
    for (Scalar& e : row) e *= c;
  return a;
}

bool is_zero(const Matrix& m) {
  for (const auto& row : m)
    for (const Scalar& e : row)
      if (!e.is_zero()) return false;
  return true;
}

StateVector basis_state(int dim, int i) {
  StateVector v(dim);
  v[i] = Scalar(1);
  return v;
}

int grade(int i) { return i == 1 ? 0 : 1; }

}  // namespace

TEST_SUITE("gl11") {
  TEST_CASE("one site acts on the vacuum by phi and psi") {
    Gl11Weights w = Gl11Weights::homogeneous(1);
    Monodromy L = monodromy(w);
    StateVector vac = basis_state(2, 0);
    auto l11 = L(1, 1).apply(vac), l22 = L(2, 2).apply(vac);
    CHECK(l11[0] == F("(x+1)/x"));
    CHECK(l11[1].is_zero());
    CHECK(l22[0] == RatFunc(1));
    CHECK(transfer(w).apply(vac)[0] == F("1/x"));
    CHECK(w.phi() == P("x+1"));
    CHECK(w.psi() == P("x"));
  }

  TEST_CASE("vacuum eigenvalue is (phi - psi)/prod(x - z)") {
    Gen g(3);
    for (int trial = 0; trial < 10; ++trial) {
      Gl11Weights w = random_chain(g, g.integer(1, 3));
      Poly den(1);
      for (const Scalar& z : w.z) den *= Poly::x() - Poly(z);
      auto e = eigenvalue_on(transfer(w), basis_state(1 << w.p(), 0));
      REQUIRE(e);
      CHECK(*e == RatFunc(w.phi() - w.psi(), den));
    }
  }

  TEST_CASE("exchange relations") {
    Gen g(11);
    for (int trial = 0; trial < 6; ++trial) {
      Gl11Weights w = random_chain(g, g.integer(1, 3));
      Monodromy L = monodromy(w);
      Scalar x1 = g.rational(9, 5) + Scalar::rational(1, 11), x2 = g.rational(9, 5) + Scalar::rational(1, 13);
      if (x1 == x2 || (x1 - x2 - Scalar(1)).is_zero() || (x2 - x1 - Scalar(1)).is_zero() ||
          (x2 - x1 + Scalar(1)).is_zero())
        continue;
      auto at = [&](int i, int j, const Scalar& x) { return L(i, j).at(x); };
      for (int i = 1; i <= 2; ++i) {
        CHECK(is_zero(sub(mat_mul(at(i, i, x1), at(i, i, x2)), mat_mul(at(i, i, x2), at(i, i, x1)))));
        int j = 3 - i;
        Scalar si(grade(i) ? -1 : 1);
        Scalar c = (x1 - x2 - si) / (x2 - x1 - si);
        CHECK(is_zero(sub(mat_mul(at(i, j, x1), at(i, j, x2)), scale(c, mat_mul(at(i, j, x2), at(i, j, x1))))));
        for (int k = 1; k <= 2; ++k) {
          Matrix lhs = mat_mul(at(k, k, x1), at(i, j, x2));
          Matrix rhs = scale((x1 - x2 - si) / (x1 - x2), mat_mul(at(i, j, x2), at(k, k, x1)));
          Matrix extra = scale(si / (x1 - x2), mat_mul(at(i, j, x1), at(k, k, x2)));
          for (size_t r = 0; r < rhs.size(); ++r)
            for (size_t s = 0; s < rhs.size(); ++s) rhs[r][s] += extra[r][s];
          CHECK_MESSAGE(is_zero(sub(lhs, rhs)), "k=", k, " i=", i, " p=", w.p());
        }
      }
    }
  }

  TEST_CASE("transfer matrices commute, twisted or not") {
    Gen g(5);
    for (int trial = 0; trial < 4; ++trial) {
      Gl11Weights w = random_chain(g, 3);
      std::vector<Scalar> twist = trial % 2 ? std::vector<Scalar>{} : std::vector<Scalar>{Scalar(2), Scalar(-3)};
      TensorOperator T = transfer(w, twist);
      std::vector<std::pair<Scalar, Scalar>> pts = {{Scalar(7), Scalar(-5)},
                                                    {Scalar::rational(1, 3), Scalar::rational(9, 2)},
                                                    {Scalar(11), Scalar::rational(-2, 7)}};
      for (auto [u, v] : pts) {
        Matrix a = T.at(u), b = T.at(v);
        CHECK(is_zero(sub(mat_mul(a, b), mat_mul(b, a))));
      }
    }
  }

  TEST_CASE("divisor solutions") {
    auto hom = divisor_solutions(Gl11Weights::homogeneous(2));
    REQUIRE(hom.size() == 2);
    CHECK(hom[0].y == Poly(1));
    CHECK(hom[1].y == P("x+1/2"));
    Gl11Weights w = chain({Scalar(1), Scalar(2), Scalar(1)}, {Scalar(0), Scalar(1), Scalar(3)},
                          {Scalar(0), Scalar(5), Scalar(-4)});
    Poly f = w.phi() - w.psi();
    auto sols = divisor_solutions(w, std::nullopt);
    if (find_roots(f).complete()) {
      CHECK(sols.size() == 4);
      for (const auto& s : sols) CHECK(f.divmod(s.y).second.is_zero());
    }
    CHECK_THROWS_AS(divisor_solutions(Gl11Weights::homogeneous(3)), std::domain_error);
    CHECK(divisor_solutions(Gl11Weights::homogeneous(3), -3).size() == 4);
  }

  TEST_CASE("Bethe vector eigenvalue on the homogeneous chain") {
    Gl11Weights w = Gl11Weights::homogeneous(2);
    StateVector v = bethe_vector({Scalar::rational(-1, 2)}, w);
    auto e = eigenvalue_on(transfer(w), v);
    REQUIRE(e);
    CHECK(*e == F("(2*x-1)/x^2"));
    CHECK(*e == bethe_eigenvalue(P("x+1/2"), w));
  }

  TEST_CASE("site Shapovalov values") {
    Gl11Weights w = chain({Scalar(2)}, {Scalar(3)}, {Scalar(0)});
    ShapovalovForm B = shapovalov(w);
    CHECK(B(basis_state(2, 0), basis_state(2, 0)) == Scalar(1));
    CHECK(B(basis_state(2, 1), basis_state(2, 1)) == Scalar(-5));
    CHECK(B(basis_state(2, 0), basis_state(2, 1)).is_zero());
    Gen g(2);
    Gl11Weights w3 = random_chain(g, 3);
    CHECK(shapovalov(w3)(basis_state(8, 0), basis_state(8, 0)) == Scalar(1));
  }

  TEST_CASE("contravariance of the form") {
    Gen g(17);
    for (int trial = 0; trial < 5; ++trial) {
      Gl11Weights w = random_chain(g, g.integer(1, 3));
      ShapovalovForm B;
      try {
        B = shapovalov(w);
      } catch (const std::domain_error&) {
        continue;
      }
      Monodromy L = monodromy(w);
      Scalar x = g.rational(9, 5) + Scalar::rational(1, 17);
      int d = 1 << w.p();
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
          Matrix X = L(i, j).at(x);
          Matrix iX = L(j, i).at(x);
          if (i == 2 && j == 1) iX = scale(Scalar(-1), iX);
          int px = (grade(i) + grade(j)) % 2;
          for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
              StateVector w1 = basis_state(d, r), w2 = basis_state(d, c);
              Scalar lhs = B(mat_apply(X, w1), w2);
              Scalar rhs = B(w1, mat_apply(iX, w2));
              if (px && state_parity(r)) rhs = -rhs;
              CHECK_MESSAGE(lhs == rhs, "i=", i, " j=", j, " r=", r, " c=", c, " p=", w.p());
            }
        }
    }
  }

  TEST_CASE("irreducibility criteria agree") {
    Gen g(23);
    int reducible = 0;
    for (int trial = 0; trial < 60; ++trial) {
      Gl11Weights w;
      for (int k = 0, p = g.integer(1, 3); k < p; ++k) {
        int a = g.integer(-2, 2), b;
        do b = g.integer(-2, 2);
        while (a + b == 0);
        w.a.push_back(Scalar(a));
        w.b.push_back(Scalar(b));
        w.z.push_back(Scalar(g.integer(-2, 2)));
      }
      CHECK(w.irreducible() == w.pairwise_irreducible());
      if (!w.irreducible()) ++reducible;
      try {
        ShapovalovForm B = shapovalov(w);
        if (w.irreducible()) CHECK(rank(B.gram) == 1 << w.p());
      } catch (const std::domain_error&) {
        CHECK_FALSE(w.irreducible());
      }
    }
    CHECK(reducible > 0);
  }

  TEST_CASE("Bethe vectors are singular eigenvectors with the product norm") {
    Gen g(29);
    for (int trial = 0; trial < 6; ++trial) {
      Gl11Weights w = random_chain(g, g.integer(1, 3));
      if (!w.typical() || !w.irreducible()) continue;
      Poly f = w.phi() - w.psi();
      RootSplit rs = find_roots(f);
      if (!rs.complete()) continue;
      for (const auto& s : divisor_solutions(w)) {
        StateVector v = bethe_vector(s.roots, w);
        CHECK(std::any_of(v.begin(), v.end(), [](const Scalar& c) { return !c.is_zero(); }));
        StateVector ev = mat_apply(raising(w), v);
        CHECK(std::all_of(ev.begin(), ev.end(), [](const Scalar& c) { return c.is_zero(); }));
        auto e = eigenvalue_on(transfer(w), v);
        REQUIRE(e);
        CHECK(*e == bethe_eigenvalue(s.y, w));
        NormCheck n = norm_check(s.roots, w);
        CHECK_MESSAGE(n.equal, n.lhs.to_string(), " vs ", n.rhs.to_string());
      }
    }
  }

  TEST_CASE("completeness for p <= 3") {
    Gen g(31);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 8; ++trial) {
      int p = 1 + trial % 3;
      Gl11Weights w = random_chain(g, p);
      if (!w.typical() || !w.irreducible()) continue;
      RootSplit rs = find_roots(w.phi() - w.psi());
      if (!rs.complete()) continue;
      CompletenessReport rep = completeness_report(w);
      bool distinct = true;
      for (size_t i = 0; i < rs.roots.size(); ++i)
        for (size_t j = i + 1; j < rs.roots.size(); ++j) distinct = distinct && rs.roots[i] != rs.roots[j];
      if (!distinct) continue;
      ++checked;
      CHECK_MESSAGE(rep.passed(), (rep.problems.empty() ? std::string() : rep.problems.front()));
      CHECK(rep.singular_dim == rep.expected);
    }
    CHECK(checked >= 2);
  }

  TEST_CASE("homogeneous spectrum") {
    for (int p = 1; p <= 4; ++p) {
      Spectrum sp = homogeneous_spectrum(p);
      CHECK(sp.matches);
      CHECK(sp.simple);
      CHECK(int(sp.closed_form.size()) == 1 << (p - 1));
    }
    CHECK(homogeneous_spectrum(3).radical == -3);
    CHECK_FALSE(homogeneous_spectrum(2).radical);
  }

  TEST_CASE("homogeneous chains are complete") {
    // degrees up to 3 exercise the norm sign for l = 2, 3
    for (auto [p, radical] : std::vector<std::pair<int, std::optional<long>>>{{2, std::nullopt}, {3, -3}, {4, -1}}) {
      CompletenessReport rep = completeness_report(Gl11Weights::homogeneous(p), radical);
      CHECK_MESSAGE(rep.passed(), p, (rep.problems.empty() ? std::string() : rep.problems.front()));
      CHECK(int(rep.vectors.size()) == 1 << (p - 1));
    }
  }

  TEST_CASE("eigenvalues agree with the model formula") {
    Gen g(37);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
      WeightData d = g.weights(1, 1, g.integer(1, 3), 3);
      Gl11Weights w;
      bool ok = true;
      for (int k = 0; k < d.p(); ++k) {
        ok = ok && d.weights[k][0] + d.weights[k][1] != 0;
        w.a.push_back(Scalar(d.weights[k][0]));
        w.b.push_back(Scalar(d.weights[k][1]));
        w.z.push_back(d.z[k]);
      }
      if (!ok || !w.typical() || !find_roots(w.phi() - w.psi()).complete()) continue;
      TensorOperator T = transfer(w);
      for (const auto& s : divisor_solutions(w)) {
        auto e = eigenvalue_on(T, bethe_vector(s.roots, w));
        REQUIRE(e);
        CHECK(*e == eigenvalue(BetheNode(ParitySeq::standard(1, 1), {s.y}), d));
        ++checked;
      }
    }
    CHECK(checked >= 5);
  }

  TEST_CASE("twisted transfer on the vacuum") {
    Gl11Weights w = Gl11Weights::homogeneous(2);
    auto e = eigenvalue_on(transfer(w, {Scalar(3), Scalar(2)}), basis_state(4, 0));
    REQUIRE(e);
    CHECK(*e == RatFunc(Poly(Scalar(3)) * w.phi() - Poly(Scalar(2)) * w.psi(), Poly::x().pow(2)));
    CHECK_THROWS_AS(transfer(w, {Scalar(1)}), std::invalid_argument);
  }

  TEST_CASE("atypical and degenerate data") {
    Gl11Weights w = chain({Scalar(1), Scalar(-1)}, {Scalar(1), Scalar(-1)}, {Scalar(0), Scalar(3)});
    CHECK_FALSE(w.typical());
    CHECK_THROWS_AS(completeness_report(w), std::invalid_argument);
    CHECK_THROWS_AS(chain({Scalar(1)}, {Scalar(-1)}, {Scalar(0)}).validate(), std::invalid_argument);
  }
}
