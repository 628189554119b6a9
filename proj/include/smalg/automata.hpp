#ifndef SMALG_AUTOMATA_HPP
#define SMALG_AUTOMATA_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smalg/constructors.hpp"
#include "smalg/detect.hpp"
#include "smalg/errors.hpp"
#include "smalg/finite.hpp"

namespace smalg {

/// (Z_n, +, o) with a o b = a, verified against the near-ring axioms
/// (right distributivity is the law this family satisfies).
struct NearRingZn {
  int n;
  FiniteRingTable table;
};

inline NearRingZn build_near_ring_zn(int n) {
  NearRingZn nr{n, trivial_mul_near_ring(n)};
  AxiomReport rep = check_near_ring(nr.table);
  if (!rep.ok()) throw AxiomFailure("a o b = a family failed near-ring check");
  return nr;
}

/// Both N-group identities, (n + n1)p = np + n1p and (n n1)p = n(n1 p),
/// scanned over all triples.
inline AxiomReport check_n_group(const FiniteRingTable& near_ring,
                                 const FiniteMagma& p_group,
                                 const std::vector<std::vector<ElementId>>& mu,
                                 int cap = 16) {
  AxiomReport rep{"n-group"};
  rep.cap = cap;
  int nn = near_ring.size();
  int np = p_group.size();
  if (static_cast<int>(mu.size()) != nn)
    throw TableShape("action table rows != near-ring size");
  for (const auto& row : mu)
    if (static_cast<int>(row.size()) != np)
      throw TableShape("action table cols != group size");
  for (const auto& v : check_group(p_group, cap).violations)
    rep.add("group_" + v.axiom, v.witness);
  for (const auto& v : check_commutative(p_group, cap).violations)
    rep.add("group_" + v.axiom, v.witness);
  for (ElementId a = 0; a < nn; ++a)
    for (ElementId b = 0; b < nn; ++b)
      for (ElementId p = 0; p < np; ++p) {
        if (mu[near_ring.add[a][b]][p] != p_group.at(mu[a][p], mu[b][p]))
          if (!rep.add("sum_action", {a, b, p})) return rep;
        if (mu[near_ring.mul[a][b]][p] != mu[a][mu[b][p]])
          if (!rep.add("product_action", {a, b, p})) return rep;
      }
  return rep;
}

/// Bounded freeness check for the additive semigroup generated by P:
/// searches multisets of total size <= bound for two distinct multisets
/// with equal component sums.
struct FreenessResult {
  bool free = true;   // no collision within the bound (bounded verdict)
  int bound = 0;
  std::vector<int> multiset_a;  // generator multiplicities, on collision
  std::vector<int> multiset_b;
  std::vector<long long> sum;
};

inline FreenessResult freeness_check(
    const std::vector<std::vector<long long>>& generators, int bound = 12) {
  for (const auto& g : generators) {
    bool all_zero = true;
    for (long long c : g) {
      if (c < 0) throw Unsupported("generators must be componentwise nonnegative");
      if (c != 0) all_zero = false;
    }
    if (all_zero) throw Unsupported("generators must not be all zero");
  }
  FreenessResult res;
  res.bound = bound;
  int k = static_cast<int>(generators.size());
  if (k == 0) return res;
  std::size_t dim = generators[0].size();
  std::map<std::vector<long long>, std::vector<int>> seen;
  // enumerate multiplicity vectors of total size 1..bound
  std::vector<int> mult(k, 0);
  std::function<bool(int, int)> rec = [&](int idx, int remaining) -> bool {
    if (idx == k) {
      int total = 0;
      for (int m : mult) total += m;
      if (total == 0) return false;
      std::vector<long long> sum(dim, 0);
      for (int i = 0; i < k; ++i)
        for (std::size_t d = 0; d < dim; ++d)
          sum[d] += static_cast<long long>(mult[i]) * generators[i][d];
      auto [it, inserted] = seen.emplace(sum, mult);
      if (!inserted && it->second != mult) {
        res.free = false;
        res.multiset_a = it->second;
        res.multiset_b = mult;
        res.sum = sum;
        return true;
      }
      return false;
    }
    for (int m = 0; m <= remaining; ++m) {
      mult[idx] = m;
      if (rec(idx + 1, remaining - m)) return true;
    }
    mult[idx] = 0;
    return false;
  };
  rec(0, bound);
  return res;
}

/// Finite semiautomaton: states x letters -> states, word extension
/// folds letterwise left to right.
struct SemiAutomaton {
  int states = 0;
  std::vector<std::string> alphabet;
  std::vector<std::vector<ElementId>> transition;  // [state][letter]

  void validate() const {
    if (static_cast<int>(transition.size()) != states)
      throw TableShape("transition rows != state count");
    for (const auto& row : transition) {
      if (row.size() != alphabet.size())
        throw TableShape("transition cols != alphabet size");
      for (ElementId s : row)
        if (s < 0 || s >= states) throw TableShape("transition target out of range");
    }
  }

  ElementId step(ElementId z, int letter) const {
    if (letter < 0 || letter >= static_cast<int>(alphabet.size()))
      throw UnknownLetter("letter index " + std::to_string(letter));
    return transition[z][letter];
  }
};

/// run: state trace of length |word| + 1, starting at `start`.
inline std::vector<ElementId> run(const SemiAutomaton& sa, ElementId start,
                                  const std::vector<int>& word) {
  sa.validate();
  std::vector<ElementId> trace{start};
  for (int letter : word) trace.push_back(sa.step(trace.back(), letter));
  return trace;
}

/// Semiautomaton on states Z_m with inputs acting by addition mod m.
inline SemiAutomaton build_semiautomaton_add_mod(int m,
                                                 const std::vector<long long>& p) {
  if (m < 1) throw SizeGuard("state count must be >= 1");
  SemiAutomaton sa;
  sa.states = m;
  for (long long v : p) sa.alphabet.push_back(std::to_string(v));
  sa.transition.assign(m, std::vector<ElementId>(p.size()));
  for (int z = 0; z < m; ++z)
    for (std::size_t i = 0; i < p.size(); ++i)
      sa.transition[z][i] = static_cast<ElementId>(((z + p[i]) % m + m) % m);
  return sa;
}

inline SemiAutomaton build_semiautomaton_table(
    int states, std::vector<std::string> alphabet,
    std::vector<std::vector<ElementId>> transition) {
  SemiAutomaton sa{states, std::move(alphabet), std::move(transition)};
  sa.validate();
  return sa;
}

/// Automaton: a semiautomaton with an output map lambda: states x P -> S.
struct Automaton {
  SemiAutomaton base;
  std::vector<std::string> outputs;
  std::vector<std::vector<int>> lambda;  // [state][letter] -> output index

  void validate() const {
    base.validate();
    if (static_cast<int>(lambda.size()) != base.states)
      throw TableShape("lambda rows != state count");
    for (const auto& row : lambda) {
      if (row.size() != base.alphabet.size())
        throw TableShape("lambda cols != alphabet size");
      for (int o : row)
        if (o < 0 || o >= static_cast<int>(outputs.size()))
          throw TableShape("lambda output out of range");
    }
  }
};

struct IoTrace {
  std::vector<ElementId> states;
  std::vector<int> outputs;
};

inline IoTrace run_io(const Automaton& a, ElementId start,
                      const std::vector<int>& word) {
  a.validate();
  IoTrace t;
  t.states.push_back(start);
  for (int letter : word) {
    if (letter < 0 || letter >= static_cast<int>(a.base.alphabet.size()))
      throw UnknownLetter("letter index " + std::to_string(letter));
    t.outputs.push_back(a.lambda[t.states.back()][letter]);
    t.states.push_back(a.base.transition[t.states.back()][letter]);
  }
  return t;
}

/// Construction gate: the s-near definite special automaton family is
/// only built over a near-ring that passes the detector. Finite
/// (Z_n, +, o) members never do; the symbolic (Z, +, o) member does.
struct GatedAutomaton {
  bool gate_passed = false;
  std::string gate_evidence;
  std::optional<Automaton> automaton;
};

inline GatedAutomaton build_s_near_definite_automaton(
    const AnyStructure& near_ring, int states,
    const std::vector<long long>& inputs,
    const std::vector<std::vector<int>>& lambda_table,
    const std::vector<std::string>& outputs) {
  GatedAutomaton ga;
  DetectResult r =
      detect(near_ring, Property::SDefiniteSpecialNearRing,
             std::holds_alternative<SymbolicName>(near_ring)
                 ? DetectMode::Catalog
                 : DetectMode::Exhaustive);
  if (!r.found()) {
    ga.gate_evidence = "underlying near-ring is not s-definite special";
    return ga;
  }
  ga.gate_passed = true;
  ga.gate_evidence = "witness " + r.certificate->witness_text;
  Automaton a;
  a.base = build_semiautomaton_add_mod(states, inputs);
  a.outputs = outputs;
  a.lambda = lambda_table;
  a.validate();
  ga.automaton = std::move(a);
  return ga;
}

}  // namespace smalg

#endif  // SMALG_AUTOMATA_HPP
