#pragma once

#include <vector>

#include "bethe/algebra/ratfunc.hpp"

namespace bethe {

/// f(x - k*h)
inline RatFunc shift(const RatFunc& f, int k, const Scalar& h = Scalar(1)) { return f.shift(k, h); }
inline Poly shift(const Poly& f, int k, const Scalar& h = Scalar(1)) { return f.shift(k, h); }

/// Discrete logarithmic derivative f / f[1].
RatFunc dlog(const RatFunc& f, const Scalar& h = Scalar(1));

/// det(g_j(x + sign*(i-1)*h)), i,j = 1..r. sign = -1 is the plain Wronskian Wr.
RatFunc casorati(int sign, const std::vector<RatFunc>& gs, const Scalar& h = Scalar(1));
inline RatFunc wronskian(const std::vector<RatFunc>& gs, const Scalar& h = Scalar(1)) {
  return casorati(-1, gs, h);
}

/// g1 g2[-s] - g2 g1[-s]
RatFunc wr_pair(int s, const RatFunc& g1, const RatFunc& g2, const Scalar& h = Scalar(1));

struct SkewFamily {
  bool consistent = false;
  Poly particular;
  std::vector<Poly> homogeneous;
};

/// All w with deg w <= deg_bound and A w[-s] + B w = C.
SkewFamily solve_skew_linear(const Poly& a, const Poly& b, const Poly& c, int s, int deg_bound,
                             const Scalar& h = Scalar(1));

/// Rank over the constant field of the span of gs.
int rank_over_constants(const std::vector<RatFunc>& gs);
bool indep_over_constants(const std::vector<RatFunc>& gs);

}  // namespace bethe
