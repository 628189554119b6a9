#ifndef SMALG_CONSTRUCTORS_HPP
#define SMALG_CONSTRUCTORS_HPP

#include <numeric>
#include <string>
#include <vector>

#include "smalg/errors.hpp"
#include "smalg/finite.hpp"

namespace smalg {

/// Z_n with addition and multiplication mod n.
inline FiniteRingTable build_zn(int n) {
  if (n < 1) throw SizeGuard("build_zn: n must be >= 1");
  FiniteRingTable r;
  for (int i = 0; i < n; ++i) r.labels.push_back(std::to_string(i));
  r.add.assign(n, std::vector<ElementId>(n));
  r.mul.assign(n, std::vector<ElementId>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      r.add[i][j] = (i + j) % n;
      r.mul[i][j] = (i * j) % n;
    }
  return r;
}

/// Cyclic group of order n, written additively.
inline FiniteMagma cyclic(int n) {
  if (n < 1) throw SizeGuard("cyclic: n must be >= 1");
  return build_zn(n).additive();
}

/// Dihedral group of order 2m: elements r^j and s r^j with s^2 = r^m = 1,
/// s r s = r^{-1}. Index = j + m * flip.
inline FiniteMagma dihedral(int m) {
  if (m < 1) throw SizeGuard("dihedral: m must be >= 1");
  int n = 2 * m;
  FiniteMagma g;
  for (int f = 0; f < 2; ++f)
    for (int j = 0; j < m; ++j)
      g.labels.push_back((f ? "sr^" : "r^") + std::to_string(j));
  g.op.assign(n, std::vector<ElementId>(n));
  auto id = [m](int j, int f) { return j + m * f; };
  for (int f1 = 0; f1 < 2; ++f1)
    for (int j1 = 0; j1 < m; ++j1)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int j2 = 0; j2 < m; ++j2) {
          // (s^f1 r^j1)(s^f2 r^j2) = s^(f1^f2) r^(±j1 + j2)
          int j = ((f2 ? -j1 : j1) + j2) % m;
          if (j < 0) j += m;
          g.op[id(j1, f1)][id(j2, f2)] = id(j, f1 ^ f2);
        }
  return g;
}

namespace detail {

inline std::vector<std::vector<int>> all_maps(int n, bool bijective) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  while (true) {
    bool keep = true;
    if (bijective) {
      std::vector<bool> seen(n, false);
      for (int v : cur) {
        if (seen[v]) { keep = false; break; }
        seen[v] = true;
      }
    }
    if (keep) out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == n - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

inline std::string map_label(const std::vector<int>& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(f[i] + 1);
  }
  return s + "]";
}

/// Composition is left-first: (f o g)(x) = g(f(x)).
inline FiniteMagma maps_magma(std::vector<std::vector<int>> maps) {
  FiniteMagma m;
  for (const auto& f : maps) m.labels.push_back(map_label(f));
  int k = static_cast<int>(maps.size());
  m.op.assign(k, std::vector<ElementId>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<int> comp(maps[i].size());
      for (std::size_t x = 0; x < comp.size(); ++x)
        comp[x] = maps[j][maps[i][x]];
      auto it = std::find(maps.begin(), maps.end(), comp);
      m.op[i][j] = static_cast<ElementId>(it - maps.begin());
    }
  return m;
}

}  // namespace detail

/// Symmetric group S_k as permutation tables, left-first composition.
inline FiniteMagma symmetric_group(int k) {
  if (k < 1 || k > 6) throw SizeGuard("symmetric_group: need 1 <= k <= 6");
  return detail::maps_magma(detail::all_maps(k, true));
}

/// Full transformation semigroup S(n): all n^n self-maps of {1..n},
/// left-first composition (f o g)(x) = g(f(x)).
inline FiniteMagma symmetric_semigroup(int n) {
  if (n < 1 || n > 5) throw SizeGuard("symmetric_semigroup: need 1 <= n <= 5");
  return detail::maps_magma(detail::all_maps(n, false));
}

/// k x k matrix ring over a finite coefficient ring, materialized as tables.
inline FiniteRingTable matrix_ring(const FiniteRingTable& coeff, int k) {
  if (k < 1 || k > 2) throw SizeGuard("matrix_ring: need 1 <= k <= 2");
  coeff.validate();
  int q = coeff.size();
  int cells = k * k;
  long long count = 1;
  for (int i = 0; i < cells; ++i) {
    count *= q;
    if (count > 4096) throw SizeGuard("matrix_ring: table too large");
  }
  int n = static_cast<int>(count);
  auto decode = [&](int code) {
    std::vector<int> m(cells);
    for (int i = 0; i < cells; ++i) { m[i] = code % q; code /= q; }
    return m;
  };
  auto encode = [&](const std::vector<int>& m) {
    int code = 0;
    for (int i = cells - 1; i >= 0; --i) code = code * q + m[i];
    return code;
  };
  FiniteRingTable r;
  for (int c = 0; c < n; ++c) {
    auto m = decode(c);
    std::string lab = "(";
    for (int i = 0; i < cells; ++i) {
      if (i) lab += ",";
      lab += coeff.labels[m[i]];
    }
    r.labels.push_back(lab + ")");
  }
  r.add.assign(n, std::vector<ElementId>(n));
  r.mul.assign(n, std::vector<ElementId>(n));
  for (int a = 0; a < n; ++a) {
    auto ma = decode(a);
    for (int b = 0; b < n; ++b) {
      auto mb = decode(b);
      std::vector<int> s(cells), p(cells);
      for (int i = 0; i < cells; ++i) s[i] = coeff.add[ma[i]][mb[i]];
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          int acc = -1;
          for (int t = 0; t < k; ++t) {
            int term = coeff.mul[ma[i * k + t]][mb[t * k + j]];
            acc = (acc < 0) ? term : coeff.add[acc][term];
          }
          p[i * k + j] = acc;
        }
      r.add[a][b] = encode(s);
      r.mul[a][b] = encode(p);
    }
  }
  return r;
}

/// (Z_n, +, o) with a o b = a: the left-absorbing near-ring family.
inline FiniteRingTable trivial_mul_near_ring(int n) {
  FiniteRingTable r = build_zn(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r.mul[a][b] = a;
  return r;
}

/// Wraps user-supplied meet/join tables as a semiring (add = join,
/// mul = meet by convention); the semiring axioms are verified.
inline FiniteRingTable lattice_semiring(std::vector<std::string> labels,
                                        std::vector<std::vector<ElementId>> join,
                                        std::vector<std::vector<ElementId>> meet) {
  FiniteRingTable r{std::move(labels), std::move(join), std::move(meet)};
  AxiomReport rep = check_semiring(r);
  if (!rep.ok())
    throw AxiomFailure("lattice_semiring: tables violate " +
                       rep.violations.front().axiom);
  return r;
}

}  // namespace smalg

#endif  // SMALG_CONSTRUCTORS_HPP
