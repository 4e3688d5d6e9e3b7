#include "bethe/algebra/wronskian.hpp"

#include <algorithm>
#include <stdexcept>

#include "bethe/algebra/linalg.hpp"

namespace bethe {

RatFunc dlog(const RatFunc& f, const Scalar& h) {
  if (f.is_zero()) throw std::domain_error("dlog of zero");
  return f / f.shift(1, h);
}

RatFunc casorati(int sign, const std::vector<RatFunc>& gs, const Scalar& h) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("casorati sign must be +1 or -1");
  int r = int(gs.size());
  if (r == 0) return RatFunc(1);
  if (r == 1) return gs[0];
  std::vector<std::vector<RatFunc>> m(r, std::vector<RatFunc>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m[i][j] = gs[j].shift(-sign * i, h);
  return determinant(m);
}

RatFunc wr_pair(int s, const RatFunc& g1, const RatFunc& g2, const Scalar& h) {
  return g1 * g2.shift(-s, h) - g2 * g1.shift(-s, h);
}

SkewFamily solve_skew_linear(const Poly& a, const Poly& b, const Poly& c, int s, int deg_bound,
                             const Scalar& h) {
  if (deg_bound < 0) throw std::invalid_argument("negative degree bound");
  int cols = deg_bound + 1;
  std::vector<Poly> images;
  int rows = std::max(0, c.degree() + 1);
  for (int k = 0; k < cols; ++k) {
    Poly xk = Poly::monomial(Scalar(1), k);
    Poly img = a * xk.shift(-s, h) + b * xk;
    rows = std::max(rows, img.degree() + 1);
    images.push_back(std::move(img));
  }
  Matrix m(rows, std::vector<Scalar>(cols));
  std::vector<Scalar> rhs(rows);
  for (int k = 0; k < cols; ++k)
    for (int i = 0; i <= images[k].degree(); ++i) m[i][k] = images[k].coeffs()[i];
  for (int i = 0; i <= c.degree(); ++i) rhs[i] = c.coeffs()[i];
  LinearSolution sol = solve_linear(m, rhs, cols);
  SkewFamily out;
  if (!sol.consistent) return out;
  out.consistent = true;
  out.particular = Poly(sol.particular);
  for (auto& v : sol.kernel) out.homogeneous.push_back(Poly(v));
  return out;
}

int rank_over_constants(const std::vector<RatFunc>& gs) {
  Poly common(1);
  for (const RatFunc& g : gs)
    if (!g.den().is_one()) common = lcm(common, g.den());
  std::vector<Poly> ps;
  int width = 0;
  for (const RatFunc& g : gs) {
    ps.push_back(g.num() * common.exact_div(g.den()));
    width = std::max(width, ps.back().degree() + 1);
  }
  Matrix m;
  for (const Poly& p : ps) {
    std::vector<Scalar> row(width);
    for (int i = 0; i <= p.degree(); ++i) row[i] = p.coeffs()[i];
    m.push_back(std::move(row));
  }
  return rank(m);
}

bool indep_over_constants(const std::vector<RatFunc>& gs) {
  return rank_over_constants(gs) == int(gs.size());
}

}  // namespace bethe
