#ifndef SMALG_IDEALS_HPP
#define SMALG_IDEALS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "smalg/errors.hpp"
#include "smalg/finite.hpp"
#include "smalg/lattice_set.hpp"

namespace smalg {

struct IdealClassification {
  bool prime = false;
  bool maximal = false;
  bool minimal = false;
  bool principal = false;
  std::optional<std::string> generator;
};

/// A verified relative-ideal witness: the subset, the reference subset it
/// is taken relative to, and the absorption pairs that were checked.
struct RelativeIdealWitness {
  Subset ideal;
  Subset reference;
  std::vector<std::pair<ElementId, ElementId>> absorption_pairs;
};

namespace idealdetail {

inline bool contains(const Subset& s, ElementId x) {
  return std::binary_search(s.begin(), s.end(), x);
}

/// Smallest ideal of a finite commutative ring containing g.
inline Subset principal_ideal(const FiniteRingTable& r, ElementId g) {
  std::set<ElementId> cur{g};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElementId> snapshot(cur.begin(), cur.end());
    for (ElementId a : snapshot) {
      for (ElementId b : snapshot)
        if (cur.insert(r.add[a][b]).second) grew = true;
      for (ElementId x = 0; x < r.size(); ++x)
        if (cur.insert(r.mul[x][a]).second) grew = true;
    }
  }
  return Subset(cur.begin(), cur.end());
}

inline bool is_ideal_subset(const FiniteRingTable& r, const Subset& s) {
  if (s.empty() || !r.additive().is_closed(s)) return false;
  for (ElementId a : s)
    for (ElementId x = 0; x < r.size(); ++x)
      if (!contains(s, r.mul[x][a]) || !contains(s, r.mul[a][x])) return false;
  return true;
}

}  // namespace idealdetail

/// All ideals of a finite commutative ring: additive subgroups closed
/// under ring absorption. Deterministic order (size, then lexicographic).
inline std::vector<Subset> enumerate_ideals(const FiniteRingTable& r) {
  AxiomReport rep = check_ring(r);
  if (!rep.ok()) throw AxiomFailure("enumerate_ideals: not a ring");
  std::vector<Subset> out;
  for (const Subset& s : enumerate_closed_subsets(r.additive()))
    if (idealdetail::is_ideal_subset(r, s)) out.push_back(s);
  return out;
}

/// Prime / maximal / minimal / principal flags by brute-force containment
/// and product checks. "Minimal" means minimal among nonzero proper
/// ideals, "maximal" means maximal among proper ideals; {0} and the whole
/// ring never carry these flags.
inline IdealClassification classify_ideal(const FiniteRingTable& r,
                                          const Subset& ideal) {
  if (!idealdetail::is_ideal_subset(r, ideal))
    throw NotAnIdeal("subset is not an ideal of the ring");
  auto ideals = enumerate_ideals(r);
  int n = r.size();
  ElementId zero = *find_identity(r.additive());
  bool is_zero = ideal.size() == 1 && ideal[0] == zero;
  bool is_whole = static_cast<int>(ideal.size()) == n;

  IdealClassification c;
  // prime: xy in I implies x in I or y in I, I proper
  if (!is_whole) {
    c.prime = true;
    for (ElementId x = 0; x < n && c.prime; ++x)
      for (ElementId y = 0; y < n && c.prime; ++y)
        if (idealdetail::contains(ideal, r.mul[x][y]) &&
            !idealdetail::contains(ideal, x) &&
            !idealdetail::contains(ideal, y))
          c.prime = false;
  }
  if (!is_whole) {
    c.maximal = true;
    for (const Subset& j : ideals)
      if (static_cast<int>(j.size()) < n && j.size() > ideal.size() &&
          std::includes(j.begin(), j.end(), ideal.begin(), ideal.end()))
        c.maximal = false;
  }
  if (!is_zero && !is_whole) {
    c.minimal = true;
    for (const Subset& j : ideals)
      if (!(j.size() == 1 && j[0] == zero) && j.size() < ideal.size() &&
          std::includes(ideal.begin(), ideal.end(), j.begin(), j.end()))
        c.minimal = false;
  }
  for (ElementId g : ideal)
    if (idealdetail::principal_ideal(r, g) == ideal) {
      c.principal = true;
      c.generator = r.labels[g];
      break;
    }
  if (is_zero && !c.principal) {
    c.principal = true;
    c.generator = r.labels[zero];
  }
  return c;
}

/// Symbolic classification of the ideal nZ in Z: maximal <=> prime <=> n
/// prime; always principal; never minimal.
inline IdealClassification classify_nZ(std::int64_t n) {
  if (n < 1) throw Unsupported("classify_nZ: n must be >= 1");
  if (n == 1) throw Unsupported("classify_nZ: 1Z = Z is not a proper ideal");
  bool prime = true;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) { prime = false; break; }
  IdealClassification c;
  c.prime = prime;
  c.maximal = prime;
  c.minimal = false;
  c.principal = true;
  c.generator = std::to_string(n);
  return c;
}

/// Searches the ideals of r for one containing a strictly proper subset
/// that is a field; Def-level S-ideal witness.
struct SIdealWitness {
  Subset ideal;
  Subset field_subset;
};

inline std::optional<SIdealWitness> find_s_ideal(const FiniteRingTable& r) {
  for (const Subset& ideal : enumerate_ideals(r)) {
    if (ideal.size() >= static_cast<std::size_t>(r.size())) continue;
    FiniteRingTable restr = r.restrict_to(ideal);
    for (const Subset& sub : enumerate_biclosed_subsets(restr)) {
      if (sub.size() >= ideal.size() || sub.size() < 2) continue;
      if (check_field(restr.restrict_to(sub)).ok()) {
        Subset field;
        for (ElementId i : sub) field.push_back(ideal[i]);
        return SIdealWitness{ideal, field};
      }
    }
  }
  return std::nullopt;
}

/// S-definite ideals of r relative to the field subset B: subsets S with
/// (S,+) an abelian group and s*b in S for every s in S, b in B.
inline std::vector<RelativeIdealWitness> find_s_definite_ideals(
    const FiniteRingTable& r, const Subset& field_subset) {
  if (!r.is_closed(field_subset) ||
      !check_field(r.restrict_to(field_subset)).ok())
    throw NotAField("reference subset is not a field under the ring ops");
  std::vector<RelativeIdealWitness> out;
  for (const Subset& s : enumerate_closed_subsets(r.additive())) {
    FiniteMagma restr = r.additive().restrict_to(s);
    if (!check_group(restr).ok() || !check_commutative(restr).ok()) continue;
    bool absorbed = true;
    std::vector<std::pair<ElementId, ElementId>> pairs;
    for (ElementId a : s) {
      for (ElementId b : field_subset) {
        if (!idealdetail::contains(s, r.mul[a][b])) { absorbed = false; break; }
        pairs.emplace_back(a, b);
      }
      if (!absorbed) break;
    }
    if (absorbed) out.push_back({s, field_subset, std::move(pairs)});
  }
  return out;
}

/// T*P and P*T contained in P, decided by the lattice algebra.
inline bool verify_semigroup_ideal(const LatticeSet& t, const LatticeSet& p) {
  if (!is_closed_mul(t)) throw AxiomFailure("T is not a semigroup under *");
  if (!subset_of(p, t)) throw NotSubset("P is not a subset of T");
  return subset_of(set_product(t, p), p) && subset_of(set_product(p, t), p);
}

/// Classification of an mZ-style ideal P inside a symbolic semigroup T
/// (Z+, Z\{0} and scaled variants): maximal <=> prime <=> |m| prime;
/// always principal; never minimal.
inline IdealClassification classify_group_side(const LatticeSet& p,
                                               const LatticeSet& t) {
  if (!verify_semigroup_ideal(t, p))
    throw NotAnIdeal("P is not an ideal of T under the lattice algebra");
  if (!p.is_lattice() || !t.is_lattice())
    throw Unsupported("classification needs lattice operands");
  // relative scale of P inside T
  Rat m = p.scale() / t.scale();
  if (!m.is_integer() || m.num() < 1)
    throw Unsupported("relative scale is not a positive integer");
  std::int64_t mm = m.num();
  IdealClassification c;
  if (mm >= 2) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= mm; ++d)
      if (mm % d == 0) { prime = false; break; }
    c.prime = prime;
    c.maximal = prime;
  }
  c.minimal = false;
  c.principal = true;
  c.generator = p.scale().str();
  return c;
}

/// pZ-style ideal classification for a subring of a symbolic field; the
/// report mirrors classify_nZ and notes that no minimal S-definite
/// special ideals exist.
struct FieldSideReport {
  IdealClassification classification;
  bool minimal_exists = false;  // Q over Z has no minimal such ideal
};

inline FieldSideReport field_side_ideals(const LatticeSet& subring,
                                         std::int64_t n) {
  if (!(subring == LatticeSet::z()) &&
      !(subring.is_lattice() && subring.sign() == LatticeSign::All &&
        subring.scale().is_integer()))
    throw Unsupported("supported subrings of Q are Z and nZ");
  return FieldSideReport{classify_nZ(n), false};
}

}  // namespace smalg

#endif  // SMALG_IDEALS_HPP
