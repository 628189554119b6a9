#ifndef SMALG_FINITE_HPP
#define SMALG_FINITE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "smalg/errors.hpp"

namespace smalg {

using ElementId = int;
using Subset = std::vector<ElementId>;  // sorted, no duplicates

struct Violation {
  std::string axiom;
  std::vector<ElementId> witness;
};

/// Result of a brute-force axiom scan. Violations are collected up to a
/// cap so reports stay reproducible; `truncated` marks a hit cap.
struct AxiomReport {
  std::string claimed_class;
  std::vector<Violation> violations;
  bool truncated = false;
  int cap = 16;

  AxiomReport() = default;
  explicit AxiomReport(std::string cls, int c = 16)
      : claimed_class(std::move(cls)), cap(c) {}

  bool ok() const { return violations.empty(); }

  // returns false once the cap is reached, so scans can bail out early
  bool add(const std::string& axiom, std::vector<ElementId> witness) {
    if (static_cast<int>(violations.size()) >= cap) {
      truncated = true;
      return false;
    }
    violations.push_back({axiom, std::move(witness)});
    return static_cast<int>(violations.size()) < cap;
  }
};

/// Finite set with one binary operation given as a full Cayley table.
/// Rows index the left operand.
struct FiniteMagma {
  std::vector<std::string> labels;
  std::vector<std::vector<ElementId>> op;

  int size() const { return static_cast<int>(op.size()); }
  ElementId at(ElementId a, ElementId b) const { return op[a][b]; }

  void validate() const {
    int n = size();
    if (static_cast<int>(labels.size()) != n)
      throw TableShape("label count " + std::to_string(labels.size()) +
                       " != table size " + std::to_string(n));
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(op[i].size()) != n)
        throw TableShape("row " + std::to_string(i) + " has " +
                         std::to_string(op[i].size()) + " entries, expected " +
                         std::to_string(n));
      for (int j = 0; j < n; ++j)
        if (op[i][j] < 0 || op[i][j] >= n)
          throw TableShape("entry (" + std::to_string(i) + "," +
                           std::to_string(j) + ") out of range");
    }
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != n)
      throw TableShape("labels are not distinct");
  }

  bool is_closed(const Subset& s) const {
    for (ElementId a : s)
      for (ElementId b : s)
        if (!std::binary_search(s.begin(), s.end(), op[a][b])) return false;
    return true;
  }

  /// Restriction to a closed subset; element i of the result is s[i].
  FiniteMagma restrict_to(const Subset& s) const {
    if (!is_closed(s)) throw NotClosed("subset is not closed under op");
    int m = static_cast<int>(s.size());
    FiniteMagma r;
    r.labels.reserve(m);
    for (ElementId e : s) r.labels.push_back(labels[e]);
    r.op.assign(m, std::vector<ElementId>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        ElementId p = op[s[i]][s[j]];
        r.op[i][j] = static_cast<ElementId>(
            std::lower_bound(s.begin(), s.end(), p) - s.begin());
      }
    return r;
  }
};

/// Finite set with two operations (addition rows/cols, multiplication
/// rows/cols), both total over the same index range.
struct FiniteRingTable {
  std::vector<std::string> labels;
  std::vector<std::vector<ElementId>> add;
  std::vector<std::vector<ElementId>> mul;

  int size() const { return static_cast<int>(add.size()); }

  FiniteMagma additive() const { return FiniteMagma{labels, add}; }
  FiniteMagma multiplicative() const { return FiniteMagma{labels, mul}; }

  void validate() const {
    additive().validate();
    if (mul.size() != add.size())
      throw TableShape("add/mul table sizes differ");
    multiplicative().validate();
  }

  bool is_closed(const Subset& s) const {
    return additive().is_closed(s) && multiplicative().is_closed(s);
  }

  FiniteRingTable restrict_to(const Subset& s) const {
    FiniteMagma a = additive().restrict_to(s);
    FiniteMagma m = multiplicative().restrict_to(s);
    return FiniteRingTable{a.labels, a.op, m.op};
  }
};

inline std::optional<ElementId> find_identity(const FiniteMagma& m) {
  int n = m.size();
  for (ElementId e = 0; e < n; ++e) {
    bool ok = true;
    for (ElementId a = 0; a < n && ok; ++a)
      ok = m.at(e, a) == a && m.at(a, e) == a;
    if (ok) return e;
  }
  return std::nullopt;
}

inline std::optional<ElementId> find_inverse(const FiniteMagma& m, ElementId a,
                                             ElementId e) {
  for (ElementId b = 0; b < m.size(); ++b)
    if (m.at(a, b) == e && m.at(b, a) == e) return b;
  return std::nullopt;
}

inline AxiomReport check_semigroup(const FiniteMagma& m, int cap = 16) {
  m.validate();
  AxiomReport rep{"semigroup"};
  rep.cap = cap;
  int n = m.size();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      for (ElementId c = 0; c < n; ++c)
        if (m.at(m.at(a, b), c) != m.at(a, m.at(b, c)))
          if (!rep.add("associativity", {a, b, c})) return rep;
  return rep;
}

inline AxiomReport check_commutative(const FiniteMagma& m, int cap = 16) {
  m.validate();
  AxiomReport rep{"commutative magma"};
  rep.cap = cap;
  int n = m.size();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = a + 1; b < n; ++b)
      if (m.at(a, b) != m.at(b, a))
        if (!rep.add("commutativity", {a, b})) return rep;
  return rep;
}

inline AxiomReport check_monoid(const FiniteMagma& m, int cap = 16) {
  AxiomReport rep = check_semigroup(m, cap);
  rep.claimed_class = "monoid";
  if (!find_identity(m)) rep.add("identity", {});
  return rep;
}

inline AxiomReport check_group(const FiniteMagma& m, int cap = 16) {
  AxiomReport rep = check_semigroup(m, cap);
  rep.claimed_class = "group";
  auto e = find_identity(m);
  if (!e) {
    rep.add("identity", {});
    return rep;
  }
  for (ElementId a = 0; a < m.size(); ++a)
    if (!find_inverse(m, a, *e))
      if (!rep.add("inverse", {a})) return rep;
  return rep;
}

namespace detail {

inline void scan_distributivity(const FiniteRingTable& r, AxiomReport& rep,
                                bool left, bool right) {
  int n = r.size();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      for (ElementId c = 0; c < n; ++c) {
        if (left && r.mul[a][r.add[b][c]] != r.add[r.mul[a][b]][r.mul[a][c]])
          if (!rep.add("left_distributivity", {a, b, c})) return;
        if (right && r.mul[r.add[a][b]][c] != r.add[r.mul[a][c]][r.mul[b][c]])
          if (!rep.add("right_distributivity", {a, b, c})) return;
      }
}

}  // namespace detail

/// (R,+) abelian group, (R,·) semigroup, both distributive laws.
inline AxiomReport check_ring(const FiniteRingTable& r, int cap = 16) {
  r.validate();
  AxiomReport rep{"ring"};
  rep.cap = cap;
  for (const auto& v : check_group(r.additive(), cap).violations)
    rep.add("add_" + v.axiom, v.witness);
  for (const auto& v : check_commutative(r.additive(), cap).violations)
    rep.add("add_" + v.axiom, v.witness);
  for (const auto& v : check_semigroup(r.multiplicative(), cap).violations)
    rep.add("mul_" + v.axiom, v.witness);
  detail::scan_distributivity(r, rep, true, true);
  return rep;
}

inline AxiomReport check_commutative_ring(const FiniteRingTable& r, int cap = 16) {
  AxiomReport rep = check_ring(r, cap);
  rep.claimed_class = "commutative ring";
  for (const auto& v : check_commutative(r.multiplicative(), cap).violations)
    rep.add("mul_" + v.axiom, v.witness);
  return rep;
}

/// (S,+) commutative monoid, (S,·) semigroup, both distributive laws.
inline AxiomReport check_semiring(const FiniteRingTable& r, int cap = 16) {
  r.validate();
  AxiomReport rep{"semiring"};
  rep.cap = cap;
  for (const auto& v : check_monoid(r.additive(), cap).violations)
    rep.add("add_" + v.axiom, v.witness);
  for (const auto& v : check_commutative(r.additive(), cap).violations)
    rep.add("add_" + v.axiom, v.witness);
  for (const auto& v : check_semigroup(r.multiplicative(), cap).violations)
    rep.add("mul_" + v.axiom, v.witness);
  detail::scan_distributivity(r, rep, true, true);
  return rep;
}

/// Commutative strict semiring with unit and no zero divisors.
inline AxiomReport check_semifield(const FiniteRingTable& r, int cap = 16) {
  AxiomReport rep = check_semiring(r, cap);
  rep.claimed_class = "semifield";
  for (const auto& v : check_commutative(r.multiplicative(), cap).violations)
    rep.add("mul_" + v.axiom, v.witness);
  if (!find_identity(r.multiplicative())) rep.add("unit", {});
  auto zero = find_identity(r.additive());
  if (zero) {
    int n = r.size();
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) {
        if (r.add[a][b] == *zero && (a != *zero || b != *zero))
          if (!rep.add("strictness", {a, b})) return rep;
        if (a != *zero && b != *zero && r.mul[a][b] == *zero)
          if (!rep.add("zero_divisor", {a, b})) return rep;
      }
  }
  return rep;
}

/// Commutative ring with 1 != 0 in which every nonzero element is invertible.
inline AxiomReport check_field(const FiniteRingTable& r, int cap = 16) {
  AxiomReport rep = check_commutative_ring(r, cap);
  rep.claimed_class = "field";
  auto zero = find_identity(r.additive());
  auto one = find_identity(r.multiplicative());
  if (!one) {
    rep.add("unit", {});
    return rep;
  }
  if (zero && *zero == *one && r.size() > 1) rep.add("unit_distinct", {});
  if (zero && r.size() >= 2) {
    for (ElementId a = 0; a < r.size(); ++a) {
      if (a == *zero) continue;
      if (!find_inverse(r.multiplicative(), a, *one))
        if (!rep.add("mul_inverse", {a})) return rep;
    }
    // a zero-divisor pair is the standard non-field witness
    for (ElementId a = 0; a < r.size(); ++a)
      for (ElementId b = 0; b < r.size(); ++b)
        if (a != *zero && b != *zero && r.mul[a][b] == *zero)
          if (!rep.add("zero_divisor", {a, b})) return rep;
  }
  return rep;
}

/// (N,+) group, (N,·) semigroup, right distributivity only.
inline AxiomReport check_near_ring(const FiniteRingTable& r, int cap = 16) {
  r.validate();
  AxiomReport rep{"near-ring"};
  rep.cap = cap;
  for (const auto& v : check_group(r.additive(), cap).violations)
    rep.add("add_" + v.axiom, v.witness);
  for (const auto& v : check_semigroup(r.multiplicative(), cap).violations)
    rep.add("mul_" + v.axiom, v.witness);
  detail::scan_distributivity(r, rep, false, true);
  return rep;
}

/// (N,+) semigroup, (N,·) semigroup, right distributivity only.
inline AxiomReport check_seminear_ring(const FiniteRingTable& r, int cap = 16) {
  r.validate();
  AxiomReport rep{"seminear-ring"};
  rep.cap = cap;
  for (const auto& v : check_semigroup(r.additive(), cap).violations)
    rep.add("add_" + v.axiom, v.witness);
  for (const auto& v : check_semigroup(r.multiplicative(), cap).violations)
    rep.add("mul_" + v.axiom, v.witness);
  detail::scan_distributivity(r, rep, false, true);
  return rep;
}

namespace detail {

inline Subset close_under(const std::vector<const FiniteMagma*>& ops,
                          Subset seed) {
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  std::set<ElementId> cur(seed.begin(), seed.end());
  std::vector<ElementId> frontier(cur.begin(), cur.end());
  while (!frontier.empty()) {
    std::vector<ElementId> next;
    for (const FiniteMagma* m : ops)
      for (ElementId a : cur)
        for (ElementId b : frontier) {
          for (ElementId p : {m->at(a, b), m->at(b, a)})
            if (cur.insert(p).second) next.push_back(p);
        }
    frontier = std::move(next);
  }
  return Subset(cur.begin(), cur.end());
}

inline std::vector<Subset> enumerate_closed(
    const std::vector<const FiniteMagma*>& ops, int n,
    std::optional<std::size_t> max_count) {
  std::set<Subset> found;
  std::vector<Subset> work;
  auto push = [&](Subset s) {
    if (found.insert(s).second) {
      if (max_count && found.size() > *max_count)
        throw CapacityExceeded("closed-subset count exceeds " +
                               std::to_string(*max_count));
      work.push_back(std::move(s));
    }
  };
  for (ElementId x = 0; x < n; ++x) push(close_under(ops, {x}));
  while (!work.empty()) {
    Subset c = std::move(work.back());
    work.pop_back();
    for (ElementId x = 0; x < n; ++x) {
      if (std::binary_search(c.begin(), c.end(), x)) continue;
      Subset g = c;
      g.push_back(x);
      push(close_under(ops, std::move(g)));
    }
  }
  std::vector<Subset> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace detail

/// All nonempty op-closed subsets, as closures of generator sets.
/// Order: by size, then lexicographic.
inline std::vector<Subset> enumerate_closed_subsets(
    const FiniteMagma& m, std::optional<std::size_t> max_count = std::nullopt) {
  m.validate();
  return detail::enumerate_closed({&m}, m.size(), max_count);
}

/// All nonempty subsets closed under both ring operations.
inline std::vector<Subset> enumerate_biclosed_subsets(
    const FiniteRingTable& r,
    std::optional<std::size_t> max_count = std::nullopt) {
  r.validate();
  FiniteMagma a = r.additive();
  FiniteMagma m = r.multiplicative();
  return detail::enumerate_closed({&a, &m}, r.size(), max_count);
}

/// Closure of a generator set under the magma operation.
inline Subset closure(const FiniteMagma& m, const Subset& generators) {
  return detail::close_under({&m}, generators);
}

inline bool is_subgroup(const FiniteMagma& g, const Subset& h) {
  if (h.empty() || !g.is_closed(h)) return false;
  return check_group(g.restrict_to(h)).ok();
}

/// True iff gHg^{-1} = H for every g. Requires h to be a subgroup.
inline bool is_normal(const FiniteMagma& g, const Subset& h) {
  if (!check_group(g).ok()) throw NotASubgroup("ambient magma is not a group");
  if (!is_subgroup(g, h)) throw NotASubgroup("subset is not a subgroup");
  ElementId e = *find_identity(g);
  for (ElementId x = 0; x < g.size(); ++x) {
    ElementId xi = *find_inverse(g, x, e);
    for (ElementId a : h) {
      ElementId conj = g.at(g.at(x, a), xi);
      if (!std::binary_search(h.begin(), h.end(), conj)) return false;
    }
  }
  return true;
}

}  // namespace smalg

#endif  // SMALG_FINITE_HPP
