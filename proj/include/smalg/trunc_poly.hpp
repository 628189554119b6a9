#ifndef SMALG_TRUNC_POLY_HPP
#define SMALG_TRUNC_POLY_HPP

#include <vector>

#include "smalg/errors.hpp"
#include "smalg/rational.hpp"

namespace smalg {

/// Polynomial algebra truncated by the relation x^(n+1) = 1: products are
/// ordinary polynomial products with every exponent reduced mod n + 1.
/// Polynomials are coefficient vectors, constant term first, length <= n + 1.
struct TruncPolyAlgebra {
  int bound;  // the relation is x^(bound+1) = 1

  explicit TruncPolyAlgebra(int n) : bound(n) {
    if (n < 0) throw SizeGuard("TruncPolyAlgebra: bound must be >= 0");
  }

  int period() const { return bound + 1; }
};

using TruncPoly = std::vector<Rat>;

inline TruncPoly trunc_poly_add(const TruncPolyAlgebra& alg, const TruncPoly& p,
                                const TruncPoly& q) {
  TruncPoly r(alg.period(), Rat(0));
  for (std::size_t i = 0; i < p.size(); ++i) r[i % alg.period()] += p[i];
  for (std::size_t i = 0; i < q.size(); ++i) r[i % alg.period()] += q[i];
  return r;
}

inline TruncPoly trunc_poly_mul(const TruncPolyAlgebra& alg, const TruncPoly& p,
                                const TruncPoly& q) {
  if (static_cast<int>(p.size()) > alg.period() ||
      static_cast<int>(q.size()) > alg.period())
    throw SizeGuard("trunc_poly_mul: operand degree exceeds bound");
  TruncPoly r(alg.period(), Rat(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      r[(i + j) % alg.period()] += p[i] * q[j];
  return r;
}

inline TruncPoly trunc_poly_scale(const TruncPolyAlgebra& alg, const Rat& c,
                                  const TruncPoly& p) {
  TruncPoly r(alg.period(), Rat(0));
  for (std::size_t i = 0; i < p.size(); ++i) r[i % alg.period()] = c * p[i];
  return r;
}

}  // namespace smalg

#endif  // SMALG_TRUNC_POLY_HPP
