#ifndef SMALG_GROUP_RING_HPP
#define SMALG_GROUP_RING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smalg/errors.hpp"
#include "smalg/finite.hpp"

namespace smalg {

/// Coefficient ring for group/semigroup rings: Z (n == 0) or Z_n.
struct CoeffRing {
  int n = 0;  // 0 means Z

  std::int64_t reduce(std::int64_t v) const {
    if (n == 0) return v;
    return ((v % n) + n) % n;
  }
  bool is_finite() const { return n > 0; }
};

/// Finitely-supported sum of basis elements; zero coefficients never stored.
struct SupportedSum {
  std::map<ElementId, std::int64_t> terms;

  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const SupportedSum&, const SupportedSum&) = default;

  std::string str(const std::vector<std::string>& labels) const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [g, c] : terms) {
      if (!s.empty()) s += " + ";
      if (c != 1) s += std::to_string(c) + "*";
      s += labels[g];
    }
    return s;
  }
};

/// Lazy group-ring / semigroup-ring algebra over a finite associative base.
class GroupRingAlgebra {
public:
  GroupRingAlgebra(CoeffRing coeff, FiniteMagma base)
      : coeff_(coeff), base_(std::move(base)) {
    AxiomReport rep = check_semigroup(base_);
    if (!rep.ok())
      throw AxiomFailure("group ring base is not associative");
  }

  const FiniteMagma& base() const { return base_; }
  const CoeffRing& coeff() const { return coeff_; }

  SupportedSum make(std::map<ElementId, std::int64_t> terms) const {
    SupportedSum s;
    for (auto& [g, c] : terms) {
      if (g < 0 || g >= base_.size())
        throw TableShape("basis id out of range");
      std::int64_t v = coeff_.reduce(c);
      if (v != 0) s.terms[g] = v;
    }
    return s;
  }

  SupportedSum add(const SupportedSum& a, const SupportedSum& b) const {
    SupportedSum r = a;
    for (const auto& [g, c] : b.terms) {
      std::int64_t v = coeff_.reduce(r.terms[g] + c);
      if (v == 0) r.terms.erase(g);
      else r.terms[g] = v;
    }
    return r;
  }

  /// Convolution: (sum a_g g)(sum b_h h) = sum (a_g b_h)(g h).
  SupportedSum mul(const SupportedSum& a, const SupportedSum& b) const {
    std::map<ElementId, std::int64_t> acc;
    for (const auto& [g, cg] : a.terms)
      for (const auto& [h, ch] : b.terms)
        acc[base_.at(g, h)] += cg * ch;
    SupportedSum r;
    for (auto& [g, c] : acc) {
      std::int64_t v = coeff_.reduce(c);
      if (v != 0) r.terms[g] = v;
    }
    return r;
  }

  std::optional<SupportedSum> one() const {
    auto e = find_identity(base_);
    if (!e) return std::nullopt;
    return make({{*e, 1}});
  }

  /// All elements, when |coeff|^|base| is below the guard.
  std::vector<SupportedSum> enumerate(long long guard = 65536) const {
    if (!coeff_.is_finite())
      throw SizeGuard("cannot enumerate over Z coefficients");
    long long total = 1;
    for (int i = 0; i < base_.size(); ++i) {
      total *= coeff_.n;
      if (total > guard)
        throw SizeGuard("group ring enumeration exceeds guard");
    }
    std::vector<SupportedSum> out;
    for (long long code = 0; code < total; ++code) {
      long long c = code;
      std::map<ElementId, std::int64_t> terms;
      for (int g = 0; g < base_.size(); ++g) {
        terms[g] = c % coeff_.n;
        c /= coeff_.n;
      }
      out.push_back(make(std::move(terms)));
    }
    return out;
  }

private:
  CoeffRing coeff_;
  FiniteMagma base_;
};

inline GroupRingAlgebra group_ring(CoeffRing coeff, FiniteMagma base) {
  return GroupRingAlgebra(coeff, std::move(base));
}
inline GroupRingAlgebra semigroup_ring(CoeffRing coeff, FiniteMagma base) {
  return GroupRingAlgebra(coeff, std::move(base));
}

}  // namespace smalg

#endif  // SMALG_GROUP_RING_HPP
