#ifndef SMALG_LATTICE_SET_HPP
#define SMALG_LATTICE_SET_HPP

#include <optional>
#include <string>

#include "smalg/errors.hpp"
#include "smalg/rational.hpp"

namespace smalg {

/// Named dense subsets of Q.
enum class DenseKind { Q, QNonZero, QPos, QNonNeg };

/// Index domain of a lattice q*{k}: Pos = k > 0, Neg = k < 0,
/// NonZero = k != 0, All = every integer (0 included).
enum class LatticeSign { Pos, Neg, NonZero, All };

/// Named ambient structure fixing which operation cosets/products use.
enum class SymbolicAmbient { QNonZeroMul, QAdd, ZRing, QField };

inline bool ambient_multiplicative(SymbolicAmbient a) {
  return a != SymbolicAmbient::QAdd;
}

/// Exact symbolic subset of Q: a dense named set, a scaled integer
/// lattice {q*k} with sign restriction and optional adjoined zero, or the
/// singleton {0}. Canonical form is unique per represented set.
class LatticeSet {
public:
  enum class Tag { Dense, Lattice, Zero };

  static LatticeSet dense(DenseKind k) {
    LatticeSet s;
    s.tag_ = Tag::Dense;
    s.dense_ = k;
    return s;
  }

  static LatticeSet lattice(Rat scale, LatticeSign sign, bool with_zero) {
    if (!scale.is_positive())
      throw Unsupported("lattice scale must be positive (sign is separate)");
    LatticeSet s;
    s.tag_ = Tag::Lattice;
    s.scale_ = scale;
    s.sign_ = sign;
    s.with_zero_ = with_zero;
    s.normalize();
    return s;
  }

  static LatticeSet zero() {
    LatticeSet s;
    s.tag_ = Tag::Zero;
    return s;
  }

  // Common named sets.
  static LatticeSet z_pos() { return lattice(Rat(1), LatticeSign::Pos, false); }
  static LatticeSet z_nonneg() { return lattice(Rat(1), LatticeSign::Pos, true); }
  static LatticeSet z() { return lattice(Rat(1), LatticeSign::All, false); }
  static LatticeSet z_nonzero() { return lattice(Rat(1), LatticeSign::NonZero, false); }
  static LatticeSet nz_pos(std::int64_t n) { return lattice(Rat(n), LatticeSign::Pos, false); }

  Tag tag() const { return tag_; }
  bool is_dense() const { return tag_ == Tag::Dense; }
  bool is_lattice() const { return tag_ == Tag::Lattice; }
  bool is_zero_singleton() const { return tag_ == Tag::Zero; }
  DenseKind dense_kind() const { return dense_; }
  const Rat& scale() const { return scale_; }
  LatticeSign sign() const { return sign_; }
  bool with_zero() const { return with_zero_; }

  friend bool operator==(const LatticeSet& a, const LatticeSet& b) {
    if (a.tag_ != b.tag_) return false;
    switch (a.tag_) {
      case Tag::Dense: return a.dense_ == b.dense_;
      case Tag::Lattice:
        return a.scale_ == b.scale_ && a.sign_ == b.sign_ &&
               a.with_zero_ == b.with_zero_;
      case Tag::Zero: return true;
    }
    return false;
  }
  friend bool operator!=(const LatticeSet& a, const LatticeSet& b) {
    return !(a == b);
  }

  bool contains_zero() const {
    switch (tag_) {
      case Tag::Zero: return true;
      case Tag::Dense:
        return dense_ == DenseKind::Q || dense_ == DenseKind::QNonNeg;
      case Tag::Lattice:
        return with_zero_ || sign_ == LatticeSign::All;
    }
    return false;
  }

  /// True when -x is in the set whenever x is.
  bool negation_closed() const {
    switch (tag_) {
      case Tag::Zero: return true;
      case Tag::Dense:
        return dense_ == DenseKind::Q || dense_ == DenseKind::QNonZero;
      case Tag::Lattice:
        return sign_ == LatticeSign::NonZero || sign_ == LatticeSign::All;
    }
    return false;
  }

  /// Canonical textual form: "q*Z{+|-|!0|}" with optional ",0", dense
  /// names "Q", "Q+", "Q0", "Q!0", or "0" for the zero singleton.
  std::string str() const {
    switch (tag_) {
      case Tag::Zero: return "0";
      case Tag::Dense:
        switch (dense_) {
          case DenseKind::Q: return "Q";
          case DenseKind::QNonZero: return "Q!0";
          case DenseKind::QPos: return "Q+";
          case DenseKind::QNonNeg: return "Q0";
        }
        break;
      case Tag::Lattice: {
        std::string s;
        if (scale_ != Rat(1)) s = scale_.str() + "*";
        s += "Z";
        switch (sign_) {
          case LatticeSign::Pos: s += "+"; break;
          case LatticeSign::Neg: s += "-"; break;
          case LatticeSign::NonZero: s += "!0"; break;
          case LatticeSign::All: break;
        }
        if (with_zero_) s += ",0";
        return s;
      }
    }
    return "?";
  }

  /// Parses the canonical textual form; "q*" may be written "q" directly
  /// before "Z" (e.g. "2Z+").
  static LatticeSet parse(const std::string& text) {
    if (text == "0") return zero();
    if (text == "Q") return dense(DenseKind::Q);
    if (text == "Q!0") return dense(DenseKind::QNonZero);
    if (text == "Q+") return dense(DenseKind::QPos);
    if (text == "Q0") return dense(DenseKind::QNonNeg);
    auto zpos = text.find('Z');
    if (zpos == std::string::npos)
      throw Malformed("LatticeSet: cannot parse '" + text + "'");
    Rat scale(1);
    if (zpos > 0) {
      std::string pre = text.substr(0, zpos);
      if (!pre.empty() && pre.back() == '*') pre.pop_back();
      if (!pre.empty()) scale = Rat::parse(pre);
    }
    std::string suf = text.substr(zpos + 1);
    bool wz = false;
    if (suf.size() >= 2 && suf.substr(suf.size() - 2) == ",0") {
      wz = true;
      suf = suf.substr(0, suf.size() - 2);
    }
    LatticeSign sign;
    if (suf == "+") sign = LatticeSign::Pos;
    else if (suf == "-") sign = LatticeSign::Neg;
    else if (suf == "!0") sign = LatticeSign::NonZero;
    else if (suf.empty()) sign = LatticeSign::All;
    else throw Malformed("LatticeSet: bad sign suffix in '" + text + "'");
    return lattice(scale, sign, wz);
  }

private:
  void normalize() {
    if (tag_ != Tag::Lattice) return;
    if (sign_ == LatticeSign::All) with_zero_ = false;
    if (sign_ == LatticeSign::NonZero && with_zero_) {
      sign_ = LatticeSign::All;
      with_zero_ = false;
    }
  }

  Tag tag_ = Tag::Zero;
  DenseKind dense_ = DenseKind::Q;
  Rat scale_ = Rat(1);
  LatticeSign sign_ = LatticeSign::Pos;
  bool with_zero_ = false;
};

inline bool member(const LatticeSet& s, const Rat& x) {
  switch (s.tag()) {
    case LatticeSet::Tag::Zero: return x.is_zero();
    case LatticeSet::Tag::Dense:
      switch (s.dense_kind()) {
        case DenseKind::Q: return true;
        case DenseKind::QNonZero: return !x.is_zero();
        case DenseKind::QPos: return x.is_positive();
        case DenseKind::QNonNeg: return !x.is_negative();
      }
      return false;
    case LatticeSet::Tag::Lattice: {
      if (x.is_zero()) return s.contains_zero();
      Rat t = x / s.scale();
      if (!t.is_integer()) return false;
      switch (s.sign()) {
        case LatticeSign::Pos: return t.is_positive();
        case LatticeSign::Neg: return t.is_negative();
        case LatticeSign::NonZero: return true;  // t nonzero here
        case LatticeSign::All: return true;
      }
      return false;
    }
  }
  return false;
}

namespace latdetail {

inline LatticeSign flip(LatticeSign s) {
  switch (s) {
    case LatticeSign::Pos: return LatticeSign::Neg;
    case LatticeSign::Neg: return LatticeSign::Pos;
    default: return s;
  }
}

// product of nonzero index domains (zero handled separately)
inline LatticeSign sign_product(LatticeSign a, LatticeSign b) {
  if (a == LatticeSign::All || b == LatticeSign::All) return LatticeSign::All;
  if (a == LatticeSign::NonZero || b == LatticeSign::NonZero)
    return LatticeSign::NonZero;
  if (a == b) return LatticeSign::Pos;  // Pos*Pos or Neg*Neg
  return LatticeSign::Neg;
}

}  // namespace latdetail

/// aH = {a*h : h in H} (multiplicative ambient) or {a+h : h in H}
/// (additive ambient, supported only where the result stays canonical).
inline LatticeSet left_coset(const Rat& a, const LatticeSet& h,
                             SymbolicAmbient ambient) {
  if (ambient_multiplicative(ambient)) {
    if (a.is_zero()) throw ZeroScalar("coset scalar must be nonzero");
    switch (h.tag()) {
      case LatticeSet::Tag::Zero: return LatticeSet::zero();
      case LatticeSet::Tag::Dense:
        switch (h.dense_kind()) {
          case DenseKind::Q: return h;
          case DenseKind::QNonZero: return h;
          case DenseKind::QPos:
          case DenseKind::QNonNeg:
            if (a.is_positive()) return h;
            throw Unsupported("negative dense half-line is not representable");
        }
        break;
      case LatticeSet::Tag::Lattice: {
        LatticeSign s = a.is_negative() ? latdetail::flip(h.sign()) : h.sign();
        return LatticeSet::lattice(a.abs() * h.scale(), s, h.with_zero());
      }
    }
    throw Unsupported("left_coset: unsupported operand");
  }
  // additive translation: only the cases that land back on the table
  if (h.tag() == LatticeSet::Tag::Zero) {
    if (a.is_zero()) return LatticeSet::zero();
    throw Unsupported("additive coset of {0} by nonzero scalar");
  }
  if (h.is_dense() && h.dense_kind() == DenseKind::Q) return h;
  if (h.is_lattice() && h.sign() == LatticeSign::All &&
      (a / h.scale()).is_integer())
    return h;
  throw Unsupported("additive coset leaves the representable family");
}

/// Elementwise product set AB = {a*b}.
inline LatticeSet set_product(const LatticeSet& a, const LatticeSet& b) {
  using Tag = LatticeSet::Tag;
  if (a.tag() == Tag::Zero || b.tag() == Tag::Zero) return LatticeSet::zero();

  if (a.is_lattice() && b.is_lattice()) {
    LatticeSign s = latdetail::sign_product(a.sign(), b.sign());
    bool z = a.contains_zero() || b.contains_zero();
    if (s == LatticeSign::All) z = false;
    return LatticeSet::lattice(a.scale() * b.scale(), s, z);
  }

  // order so that dense comes first
  const LatticeSet& d = a.is_dense() ? a : b;
  const LatticeSet& o = a.is_dense() ? b : a;

  if (o.is_dense()) {
    DenseKind x = d.dense_kind(), y = o.dense_kind();
    auto has = [](DenseKind k, DenseKind t) { return k == t; };
    if (has(x, DenseKind::Q) || has(y, DenseKind::Q))
      return LatticeSet::dense(DenseKind::Q);
    if (x == y) return LatticeSet::dense(x);
    bool zero = (x == DenseKind::QNonNeg) || (y == DenseKind::QNonNeg);
    bool neg = (x == DenseKind::QNonZero) || (y == DenseKind::QNonZero);
    if (neg && zero) return LatticeSet::dense(DenseKind::Q);
    if (neg) return LatticeSet::dense(DenseKind::QNonZero);
    return LatticeSet::dense(zero ? DenseKind::QNonNeg : DenseKind::QPos);
  }

  // dense * lattice
  bool lat_zero = o.contains_zero();
  bool lat_has_neg =
      o.sign() == LatticeSign::Neg || o.sign() == LatticeSign::NonZero ||
      o.sign() == LatticeSign::All;
  bool lat_has_pos = o.sign() != LatticeSign::Neg;
  switch (d.dense_kind()) {
    case DenseKind::Q:
      return LatticeSet::dense(DenseKind::Q);
    case DenseKind::QNonZero:
      if (lat_zero) return LatticeSet::dense(DenseKind::Q);
      return LatticeSet::dense(DenseKind::QNonZero);
    case DenseKind::QPos:
      if (lat_has_neg && lat_has_pos)
        return LatticeSet::dense(lat_zero ? DenseKind::Q : DenseKind::QNonZero);
      if (lat_has_neg)
        throw Unsupported("product is a negative dense set");
      return LatticeSet::dense(lat_zero ? DenseKind::QNonNeg : DenseKind::QPos);
    case DenseKind::QNonNeg:
      if (lat_has_neg && lat_has_pos) return LatticeSet::dense(DenseKind::Q);
      if (lat_has_neg)
        throw Unsupported("product is a nonpositive dense set");
      return LatticeSet::dense(DenseKind::QNonNeg);
  }
  throw Unsupported("set_product: unsupported operand combination");
}

/// True iff s*s is contained in s.
inline bool is_closed_mul(const LatticeSet& s) {
  switch (s.tag()) {
    case LatticeSet::Tag::Zero: return true;
    case LatticeSet::Tag::Dense: return true;
    case LatticeSet::Tag::Lattice:
      return s.scale().is_integer() && s.sign() != LatticeSign::Neg;
  }
  return false;
}

/// True iff s+s is contained in s.
inline bool is_closed_add(const LatticeSet& s) {
  switch (s.tag()) {
    case LatticeSet::Tag::Zero: return true;
    case LatticeSet::Tag::Dense: return s.dense_kind() != DenseKind::QNonZero;
    case LatticeSet::Tag::Lattice:
      return s.sign() != LatticeSign::NonZero;
  }
  return false;
}

/// HxK = {h*x*k}. Requires both operands to be multiplicative semigroups.
inline LatticeSet double_coset(const LatticeSet& h, const Rat& x,
                               const LatticeSet& k) {
  if (x.is_zero()) throw ZeroScalar("double coset scalar must be nonzero");
  if (!is_closed_mul(h) || !is_closed_mul(k))
    throw AxiomFailure("double coset operands must be semigroups under *");
  return left_coset(x, set_product(h, k), SymbolicAmbient::QNonZeroMul);
}

/// Exact intersection; nullopt means the empty set.
inline std::optional<LatticeSet> intersect(const LatticeSet& a,
                                           const LatticeSet& b) {
  using Tag = LatticeSet::Tag;
  if (a.tag() == Tag::Zero)
    return b.contains_zero() ? std::optional<LatticeSet>(a) : std::nullopt;
  if (b.tag() == Tag::Zero)
    return a.contains_zero() ? std::optional<LatticeSet>(b) : std::nullopt;

  if (a.is_dense() && b.is_dense()) {
    DenseKind x = a.dense_kind(), y = b.dense_kind();
    if (x == DenseKind::Q) return b;
    if (y == DenseKind::Q) return a;
    if (x == y) return a;
    // remaining pairs among {QNonZero, QPos, QNonNeg} all meet in QPos
    return LatticeSet::dense(DenseKind::QPos);
  }

  if (a.is_dense() || b.is_dense()) {
    const LatticeSet& d = a.is_dense() ? a : b;
    const LatticeSet& l = a.is_dense() ? b : a;
    bool zero = l.contains_zero() && d.contains_zero();
    bool pos = l.sign() != LatticeSign::Neg;
    bool neg = l.sign() == LatticeSign::Neg || l.sign() == LatticeSign::NonZero ||
               l.sign() == LatticeSign::All;
    switch (d.dense_kind()) {
      case DenseKind::Q: break;
      case DenseKind::QNonZero: break;
      case DenseKind::QPos:
      case DenseKind::QNonNeg: neg = false; break;
    }
    if (!pos && !neg) return zero ? std::optional<LatticeSet>(LatticeSet::zero())
                                  : std::nullopt;
    LatticeSign s = pos && neg ? LatticeSign::NonZero
                               : (pos ? LatticeSign::Pos : LatticeSign::Neg);
    return LatticeSet::lattice(l.scale(), s, zero);
  }

  // lattice /\ lattice
  Rat scale = rat_lcm(a.scale(), b.scale());
  bool pos_a = a.sign() != LatticeSign::Neg;
  bool neg_a = a.sign() == LatticeSign::Neg || a.sign() == LatticeSign::NonZero ||
               a.sign() == LatticeSign::All;
  bool pos_b = b.sign() != LatticeSign::Neg;
  bool neg_b = b.sign() == LatticeSign::Neg || b.sign() == LatticeSign::NonZero ||
               b.sign() == LatticeSign::All;
  bool pos = pos_a && pos_b;
  bool neg = neg_a && neg_b;
  bool zero = a.contains_zero() && b.contains_zero();
  if (!pos && !neg)
    return zero ? std::optional<LatticeSet>(LatticeSet::zero()) : std::nullopt;
  LatticeSign s = pos && neg ? LatticeSign::NonZero
                             : (pos ? LatticeSign::Pos : LatticeSign::Neg);
  return LatticeSet::lattice(scale, s, zero);
}

inline bool subset_of(const LatticeSet& a, const LatticeSet& b) {
  auto i = intersect(a, b);
  return i.has_value() && *i == a;
}

}  // namespace smalg

#endif  // SMALG_LATTICE_SET_HPP
