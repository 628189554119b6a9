#ifndef SMALG_POLYQUOT_HPP
#define SMALG_POLYQUOT_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smalg/errors.hpp"
#include "smalg/finite.hpp"

namespace smalg {

/// Polynomials over Z_p as coefficient vectors, constant term first.
using PolyZp = std::vector<int>;

namespace polydetail {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline PolyZp trim(PolyZp a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline int degree(const PolyZp& a) { return static_cast<int>(a.size()) - 1; }

inline PolyZp add(const PolyZp& a, const PolyZp& b, int p) {
  PolyZp r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    int v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = v % p;
  }
  return trim(r);
}

inline PolyZp sub(const PolyZp& a, const PolyZp& b, int p) {
  PolyZp r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    int v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
    r[i] = ((v % p) + p) % p;
  }
  return trim(r);
}

inline PolyZp mul(const PolyZp& a, const PolyZp& b, int p) {
  if (a.empty() || b.empty()) return {};
  PolyZp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return trim(r);
}

inline int inv_mod(int a, int p) {
  a = ((a % p) + p) % p;
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw NonPrimeModulus("no inverse of " + std::to_string(a) + " mod " +
                        std::to_string(p));
}

/// Division with remainder; divisor must be nonzero.
inline std::pair<PolyZp, PolyZp> divmod(PolyZp a, const PolyZp& b, int p) {
  if (b.empty()) throw ZeroDegree("polynomial division by zero");
  int lead_inv = inv_mod(b.back(), p);
  PolyZp q;
  while (degree(a) >= degree(b)) {
    int shift = degree(a) - degree(b);
    int coef = (a.back() * lead_inv) % p;
    if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, 0);
    q[shift] = (q[shift] + coef) % p;
    PolyZp t(shift, 0);
    t.push_back(coef);
    a = sub(a, mul(t, b, p), p);
  }
  return {trim(q), a};
}

inline PolyZp poly_gcd(PolyZp a, PolyZp b, int p) {
  while (!b.empty()) {
    PolyZp r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    int s = inv_mod(a.back(), p);
    for (int& c : a) c = (c * s) % p;
  }
  return a;
}

inline std::string poly_str(const PolyZp& a) {
  if (a.empty()) return "0";
  std::string s;
  for (int i = degree(a); i >= 0; --i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || a[i] != 1) s += std::to_string(a[i]);
    if (i >= 1) {
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace polydetail

/// Z_p[x]/(f): exact modular polynomial arithmetic with p^deg(f) residues.
class PolyModRing {
public:
  /// f is given constant-term-first. A non-monic f with invertible leading
  /// coefficient is scaled monic; p must be prime.
  PolyModRing(int p, PolyZp f) : p_(p), f_(polydetail::trim(std::move(f))) {
    if (!polydetail::is_prime(p_))
      throw NonPrimeModulus(std::to_string(p_) + " is not prime");
    for (int& c : f_) c = ((c % p_) + p_) % p_;
    f_ = polydetail::trim(f_);
    if (polydetail::degree(f_) < 1)
      throw ZeroDegree("modulus polynomial must have degree >= 1");
    if (f_.back() != 1) {
      int s = polydetail::inv_mod(f_.back(), p_);
      for (int& c : f_) c = (c * s) % p_;
    }
  }

  int p() const { return p_; }
  const PolyZp& modulus() const { return f_; }
  int degree() const { return polydetail::degree(f_); }

  long long element_count() const {
    long long n = 1;
    for (int i = 0; i < degree(); ++i) n *= p_;
    return n;
  }

  PolyZp reduce(const PolyZp& a) const {
    PolyZp r = polydetail::divmod(polydetail::trim(a), f_, p_).second;
    for (int& c : r) c = ((c % p_) + p_) % p_;
    return polydetail::trim(r);
  }

  PolyZp add(const PolyZp& a, const PolyZp& b) const {
    return polydetail::add(reduce(a), reduce(b), p_);
  }
  PolyZp mul(const PolyZp& a, const PolyZp& b) const {
    return reduce(polydetail::mul(reduce(a), reduce(b), p_));
  }

  /// Element with index code in [0, p^d): base-p digits are coefficients.
  PolyZp element(long long code) const {
    PolyZp e;
    for (int i = 0; i < degree(); ++i) {
      e.push_back(static_cast<int>(code % p_));
      code /= p_;
    }
    return polydetail::trim(e);
  }

  long long index_of(const PolyZp& a) const {
    PolyZp r = reduce(a);
    long long code = 0;
    for (int i = degree() - 1; i >= 0; --i)
      code = code * p_ + (i < static_cast<int>(r.size()) ? r[i] : 0);
    return code;
  }

  /// Inverse via extended Euclid when gcd(a, f) is a unit.
  std::optional<PolyZp> inverse(const PolyZp& a) const {
    PolyZp r0 = f_, r1 = reduce(a);
    if (r1.empty()) return std::nullopt;
    PolyZp t0 = {}, t1 = {1};
    while (!r1.empty()) {
      auto [q, r] = polydetail::divmod(r0, r1, p_);
      PolyZp t2 = polydetail::sub(t0, polydetail::mul(q, t1, p_), p_);
      r0 = std::move(r1);
      r1 = std::move(r);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (polydetail::degree(r0) != 0) return std::nullopt;
    int s = polydetail::inv_mod(r0[0], p_);
    for (int& c : t0) c = (c * s) % p_;
    return reduce(t0);
  }

  /// Full Cayley tables; guarded for small element counts.
  FiniteRingTable to_table(long long guard = 256) const {
    long long n = element_count();
    if (n > guard) throw SizeGuard("PolyModRing table of " + std::to_string(n));
    FiniteRingTable t;
    for (long long i = 0; i < n; ++i)
      t.labels.push_back(polydetail::poly_str(element(i)));
    t.add.assign(n, std::vector<ElementId>(n));
    t.mul.assign(n, std::vector<ElementId>(n));
    for (long long i = 0; i < n; ++i)
      for (long long j = 0; j < n; ++j) {
        t.add[i][j] = static_cast<ElementId>(index_of(add(element(i), element(j))));
        t.mul[i][j] = static_cast<ElementId>(index_of(mul(element(i), element(j))));
      }
    return t;
  }

private:
  int p_;
  PolyZp f_;
};

inline PolyModRing build_poly_quotient(int p, PolyZp f) {
  return PolyModRing(p, std::move(f));
}

/// Exhaustive monic-divisor search up to deg f / 2; returns a factor when
/// reducible.
inline std::pair<bool, std::optional<std::pair<PolyZp, PolyZp>>> is_irreducible(
    int p, const PolyZp& f_in) {
  PolyModRing ring(p, f_in);  // validates + normalizes monic
  const PolyZp& f = ring.modulus();
  int d = polydetail::degree(f);
  for (int dd = 1; dd <= d / 2; ++dd) {
    long long count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      PolyZp g;
      long long c = code;
      for (int i = 0; i < dd; ++i) { g.push_back(static_cast<int>(c % p)); c /= p; }
      g.push_back(1);  // monic of degree dd
      auto [q, r] = polydetail::divmod(f, g, p);
      if (r.empty()) return {false, std::make_pair(g, q)};
    }
  }
  return {true, std::nullopt};
}

/// Field test for the quotient; returns a zero-divisor pair when false.
inline std::pair<bool, std::optional<std::pair<PolyZp, PolyZp>>>
quotient_is_field(const PolyModRing& ring) {
  auto [irred, factors] = is_irreducible(ring.p(), ring.modulus());
  if (irred) return {true, std::nullopt};
  // nonzero residues multiplying to zero in the quotient
  return {false, std::make_pair(ring.reduce(factors->first),
                                ring.reduce(factors->second))};
}

inline std::string poly_to_string(const PolyZp& a) {
  return polydetail::poly_str(a);
}

}  // namespace smalg

#endif  // SMALG_POLYQUOT_HPP
