#ifndef SMALG_LINEAR_HPP
#define SMALG_LINEAR_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "smalg/errors.hpp"
#include "smalg/rational.hpp"

namespace smalg {

using VecQ = std::vector<Rat>;
using MatQ = std::vector<std::vector<Rat>>;  // row-major

/// Per-coordinate component set of a semivector space inside Q^n.
enum class Component { Zo, Qo, Q, Zero };  // Zo = Z+ u {0}, Qo = Q+ u {0}

/// Scalar semifield acting on the space.
enum class SemiField { Zo, Qo };

struct SemiVecDescriptor {
  std::vector<Component> components;
  SemiField scalars = SemiField::Zo;

  int dim() const { return static_cast<int>(components.size()); }
};

inline bool component_member(Component c, const Rat& x) {
  switch (c) {
    case Component::Zo: return x.is_integer() && !x.is_negative();
    case Component::Qo: return !x.is_negative();
    case Component::Q: return true;
    case Component::Zero: return x.is_zero();
  }
  return false;
}

inline bool lattice_member(const SemiVecDescriptor& w, const VecQ& v) {
  if (static_cast<int>(v.size()) != w.dim()) return false;
  for (int i = 0; i < w.dim(); ++i)
    if (!component_member(w.components[i], v[i])) return false;
  return true;
}

inline bool scalar_member(SemiField f, const Rat& a) {
  if (a.is_negative()) return false;
  return f == SemiField::Qo || a.is_integer();
}

struct LinearViolation {
  std::string axiom;
  std::string witness;
};

struct LinearReport {
  std::vector<LinearViolation> violations;
  bool ok() const { return violations.empty(); }
};

namespace lindetail {

inline Rat sample_scalar(SemiField f, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(0, 20), den(1, 7);
  if (f == SemiField::Zo) return Rat(num(rng));
  return Rat(num(rng), den(rng));
}

inline Rat sample_component(Component c, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(0, 20), snum(-20, 20), den(1, 7);
  switch (c) {
    case Component::Zo: return Rat(num(rng));
    case Component::Qo: return Rat(num(rng), den(rng));
    case Component::Q: return Rat(snum(rng), den(rng));
    case Component::Zero: return Rat(0);
  }
  return Rat(0);
}

inline VecQ sample_vec(const SemiVecDescriptor& w, std::mt19937& rng) {
  VecQ v;
  for (Component c : w.components) v.push_back(sample_component(c, rng));
  return v;
}

inline std::string vec_str(const VecQ& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace lindetail

/// Closure of components under addition and under the declared scalar
/// action, decided by rule table and confirmed on seeded samples.
inline std::pair<bool, LinearReport> is_semivector_space(
    const SemiVecDescriptor& w, int samples = 500, unsigned seed = 0) {
  LinearReport rep;
  // rule table: the only failing combination in this family is a dense
  // scalar semifield acting on an integral component
  for (int i = 0; i < w.dim(); ++i)
    if (w.scalars == SemiField::Qo && w.components[i] == Component::Zo) {
      VecQ wit(w.dim(), Rat(0));
      wit[i] = Rat(1);
      rep.violations.push_back(
          {"scalar_closure",
           "a=3/7, w=" + lindetail::vec_str(wit) + " gives aw outside component " +
               std::to_string(i)});
      return {false, rep};
    }
  std::mt19937 rng(seed);
  for (int t = 0; t < samples; ++t) {
    VecQ u = lindetail::sample_vec(w, rng), v = lindetail::sample_vec(w, rng);
    Rat a = lindetail::sample_scalar(w.scalars, rng);
    for (int i = 0; i < w.dim(); ++i) {
      if (!component_member(w.components[i], u[i] + v[i]))
        rep.violations.push_back({"add_closure", lindetail::vec_str(u)});
      if (!component_member(w.components[i], a * u[i]))
        rep.violations.push_back({"scalar_closure", a.str() + " * " + lindetail::vec_str(u)});
    }
    if (!rep.ok()) return {false, rep};
  }
  return {true, rep};
}

namespace lindetail {

/// Gauss-Jordan inverse over Q; nullopt when singular.
inline std::optional<MatQ> inverse(MatQ m) {
  int n = static_cast<int>(m.size());
  MatQ inv(n, VecQ(n, Rat(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = Rat(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = m[col][col];
    for (int c = 0; c < n; ++c) { m[col][c] /= d; inv[col][c] /= d; }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rat f = m[r][col];
      for (int c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace lindetail

/// True iff B is a Q-basis of Q^n and simultaneously a basis of w's
/// lattice over w's semifield: every lattice point has a unique
/// representation with scalars drawn from the semifield.
inline bool is_s_definite_basis(const std::vector<VecQ>& basis, int n,
                                const SemiVecDescriptor& w) {
  if (w.dim() != n) throw DimensionMismatch("descriptor dimension != n");
  for (const VecQ& b : basis)
    if (static_cast<int>(b.size()) != n)
      throw DimensionMismatch("basis vector has wrong length");
  if (static_cast<int>(basis.size()) != n) return false;
  if (!is_semivector_space(w).first) return false;
  for (Component c : w.components)
    if (c == Component::Zero || c == Component::Q) return false;  // not proper
  for (const VecQ& b : basis)
    if (!lattice_member(w, b)) return false;
  // columns of M are the basis vectors
  MatQ m(n, VecQ(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = basis[j][i];
  auto inv = lindetail::inverse(m);
  if (!inv) return false;  // not a Q-basis
  // coefficient vector of e_i is column i of the inverse; each entry must
  // be a legal semifield scalar for the representation to exist
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!scalar_member(w.scalars, (*inv)[i][j])) return false;
  return true;
}

/// Returns n when some candidate admits a size-n basis that is both a
/// Q-basis and a semifield basis of the candidate's lattice.
inline std::optional<int> s_definite_dimension(
    int n, const std::vector<SemiVecDescriptor>& candidates) {
  for (const auto& w : candidates) {
    if (w.dim() != n) continue;
    if (!is_semivector_space(w).first) continue;
    bool finite_basis = true;
    for (Component c : w.components) {
      if (c == Component::Zo) continue;  // standard vector spans over either
      if (c == Component::Qo && w.scalars == SemiField::Qo) continue;
      finite_basis = false;  // Qo over Zo needs infinitely many generators
      break;
    }
    if (!finite_basis) continue;
    std::vector<VecQ> std_basis(n, VecQ(n, Rat(0)));
    for (int i = 0; i < n; ++i) std_basis[i][i] = Rat(1);
    if (is_s_definite_basis(std_basis, n, w)) return n;
  }
  return std::nullopt;
}

/// Rational matrix map between semivector descriptors.
struct RestrictedMap {
  MatQ matrix;  // rows = codomain coordinates
  SemiVecDescriptor domain;
  SemiVecDescriptor codomain;

  void validate() const {
    if (static_cast<int>(matrix.size()) != codomain.dim())
      throw DimensionMismatch("matrix rows != codomain dimension");
    for (const auto& row : matrix)
      if (static_cast<int>(row.size()) != domain.dim())
        throw DimensionMismatch("matrix cols != domain dimension");
  }

  VecQ apply(const VecQ& x) const {
    VecQ y(matrix.size(), Rat(0));
    for (std::size_t i = 0; i < matrix.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j)
        y[i] += matrix[i][j] * x[j];
    return y;
  }
};

namespace lindetail {

/// Entry condition for T(domain lattice) to land in a codomain component.
inline bool entry_ok(const Rat& e, Component dom, Component cod) {
  if (dom == Component::Zero || cod == Component::Q) return true;
  switch (cod) {
    case Component::Zero: return e.is_zero();
    case Component::Zo:
      if (dom == Component::Zo) return e.is_integer() && !e.is_negative();
      return e.is_zero();  // dense or signed inputs force a zero entry
    case Component::Qo:
      if (dom == Component::Q) return e.is_zero();
      return !e.is_negative();
    default: return true;
  }
}

}  // namespace lindetail

/// Checks the restricted-linearity identity T(au+v) = aT(u) + T(v) on
/// sampled points and exact image containment by entry analysis.
inline LinearReport verify_restricted_transformation(const RestrictedMap& m,
                                                     int samples = 200,
                                                     unsigned seed = 0) {
  m.validate();
  LinearReport rep;
  for (int i = 0; i < m.codomain.dim(); ++i)
    for (int j = 0; j < m.domain.dim(); ++j)
      if (!lindetail::entry_ok(m.matrix[i][j], m.domain.components[j],
                               m.codomain.components[i])) {
        VecQ wit(m.domain.dim(), Rat(0));
        wit[j] = Rat(1);
        rep.violations.push_back(
            {"image_containment", "witness " + lindetail::vec_str(wit) +
                                      " escapes codomain coordinate " +
                                      std::to_string(i)});
      }
  std::mt19937 rng(seed);
  for (int t = 0; t < samples && rep.ok(); ++t) {
    VecQ u = lindetail::sample_vec(m.domain, rng);
    VecQ v = lindetail::sample_vec(m.domain, rng);
    Rat a = lindetail::sample_scalar(m.domain.scalars, rng);
    VecQ au_v(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) au_v[i] = a * u[i] + v[i];
    VecQ lhs = m.apply(au_v);
    VecQ tu = m.apply(u), tv = m.apply(v);
    for (std::size_t i = 0; i < lhs.size(); ++i)
      if (lhs[i] != a * tu[i] + tv[i]) {
        rep.violations.push_back({"linearity", lindetail::vec_str(u)});
        break;
      }
    if (!lattice_member(m.codomain, m.apply(u)))
      rep.violations.push_back({"image_containment", lindetail::vec_str(u)});
  }
  return rep;
}

/// Componentwise expression maps used by converging/diverging audits.
enum class ExprMap { Zero, Identity, Abs };

inline VecQ apply_expr(ExprMap e, const VecQ& x) {
  VecQ y = x;
  switch (e) {
    case ExprMap::Zero:
      for (Rat& c : y) c = Rat(0);
      break;
    case ExprMap::Identity: break;
    case ExprMap::Abs:
      for (Rat& c : y) c = c.abs();
      break;
  }
  return y;
}

struct AuditedMap {
  std::optional<MatQ> matrix;  // exactly one of matrix / expr is set
  std::optional<ExprMap> expr;

  VecQ apply(const VecQ& x) const {
    if (matrix) {
      RestrictedMap rm{*matrix, {}, {}};
      return rm.apply(x);
    }
    return apply_expr(*expr, x);
  }
};

/// Converging map: V -> W with additivity and homogeneity over the full
/// field, and image inside W. Scalars are sampled from all of Q, negative
/// values included.
inline LinearReport verify_converging(const AuditedMap& t,
                                      const SemiVecDescriptor& v_space,
                                      const SemiVecDescriptor& w_sub,
                                      int samples = 200, unsigned seed = 0) {
  LinearReport rep;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> snum(-20, 20), den(1, 7);
  for (int i = 0; i < samples && rep.ok(); ++i) {
    VecQ x = lindetail::sample_vec(v_space, rng);
    VecQ y = lindetail::sample_vec(v_space, rng);
    Rat a(snum(rng), den(rng));
    VecQ sum(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) sum[j] = x[j] + y[j];
    VecQ ts = t.apply(sum), tx = t.apply(x), ty = t.apply(y);
    for (std::size_t j = 0; j < ts.size(); ++j)
      if (ts[j] != tx[j] + ty[j]) {
        rep.violations.push_back({"additivity", "x=" + lindetail::vec_str(x) +
                                                    " y=" + lindetail::vec_str(y)});
        break;
      }
    VecQ ax(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) ax[j] = a * x[j];
    VecQ tax = t.apply(ax);
    for (std::size_t j = 0; j < tax.size(); ++j)
      if (tax[j] != a * tx[j]) {
        rep.violations.push_back({"homogeneity", "a=" + a.str() +
                                                     " x=" + lindetail::vec_str(x)});
        break;
      }
    if (rep.ok() && !lattice_member(w_sub, tx))
      rep.violations.push_back({"image_containment", lindetail::vec_str(x)});
  }
  // deterministic probe the sampler may miss at small sample counts
  if (rep.ok() && v_space.dim() > 0 &&
      component_member(v_space.components[0], Rat(-1))) {
    VecQ x(v_space.dim(), Rat(0)), y(v_space.dim(), Rat(0));
    x[0] = Rat(1);
    y[0] = Rat(-1);
    VecQ ts = t.apply(VecQ(v_space.dim(), Rat(0)));
    VecQ tx = t.apply(x), ty = t.apply(y);
    for (std::size_t j = 0; j < ts.size(); ++j)
      if (ts[j] != tx[j] + ty[j]) {
        rep.violations.push_back({"additivity", "x=(1,0,..) y=(-1,0,..)"});
        break;
      }
  }
  return rep;
}

/// Diverging map: W -> V checked against T(ax + y) = aT(x) + T(y) with
/// x, y drawn from W and scalars from the base field.
inline LinearReport verify_diverging(const AuditedMap& t,
                                     const SemiVecDescriptor& w_sub,
                                     int samples = 200, unsigned seed = 0) {
  LinearReport rep;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> snum(-20, 20), den(1, 7);
  for (int i = 0; i < samples && rep.ok(); ++i) {
    VecQ x = lindetail::sample_vec(w_sub, rng);
    VecQ y = lindetail::sample_vec(w_sub, rng);
    Rat a(snum(rng), den(rng));
    VecQ axy(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) axy[j] = a * x[j] + y[j];
    VecQ lhs = t.apply(axy), tx = t.apply(x), ty = t.apply(y);
    for (std::size_t j = 0; j < lhs.size(); ++j)
      if (lhs[j] != a * tx[j] + ty[j]) {
        rep.violations.push_back(
            {"def_identity", "a=" + a.str() + " x=" + lindetail::vec_str(x) +
                                 " y=" + lindetail::vec_str(y)});
        break;
      }
  }
  return rep;
}

/// Bilinear form value sum form_ij x_i y_j; both arguments must lie in
/// w's lattice.
inline Rat inner_product(const VecQ& x, const VecQ& y,
                         const SemiVecDescriptor& w,
                         const std::optional<MatQ>& form = std::nullopt) {
  if (!lattice_member(w, x))
    throw NotInLattice("first argument outside the lattice");
  if (!lattice_member(w, y))
    throw NotInLattice("second argument outside the lattice");
  Rat acc(0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) {
      Rat f = form ? (*form)[i][j] : (i == j ? Rat(1) : Rat(0));
      acc += f * x[i] * y[j];
    }
  return acc;
}

/// Sampled audit of the inner-product axioms: additivity in the first
/// slot, scalar homogeneity, positivity of (a|a) for nonzero a.
inline LinearReport inner_product_audit(const SemiVecDescriptor& w,
                                        const std::optional<MatQ>& form = std::nullopt,
                                        int samples = 500, unsigned seed = 0) {
  LinearReport rep;
  std::mt19937 rng(seed);
  for (int t = 0; t < samples && rep.ok(); ++t) {
    VecQ x = lindetail::sample_vec(w, rng);
    VecQ y = lindetail::sample_vec(w, rng);
    VecQ z = lindetail::sample_vec(w, rng);
    VecQ xy(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xy[i] = x[i] + y[i];
    if (inner_product(xy, z, w, form) !=
        inner_product(x, z, w, form) + inner_product(y, z, w, form))
      rep.violations.push_back({"additivity", lindetail::vec_str(x)});
    Rat a = lindetail::sample_scalar(w.scalars, rng);
    VecQ ax(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) ax[i] = a * x[i];
    if (inner_product(ax, y, w, form) != a * inner_product(x, y, w, form))
      rep.violations.push_back({"homogeneity", a.str()});
    bool nonzero = false;
    for (const Rat& c : x) nonzero = nonzero || !c.is_zero();
    if (nonzero && !(inner_product(x, x, w, form) > Rat(0)))
      rep.violations.push_back({"positivity", lindetail::vec_str(x)});
  }
  return rep;
}

/// Product rules for semilinear-algebra audits.
struct SemilinearDescriptor {
  SemiVecDescriptor space;
  enum class Product { Coordinatewise, Matrix2x2, TruncatedPoly } product =
      Product::Coordinatewise;
};

namespace lindetail {

inline VecQ alg_mul(const SemilinearDescriptor& d, const VecQ& u, const VecQ& v) {
  using P = SemilinearDescriptor::Product;
  int n = d.space.dim();
  VecQ r(n, Rat(0));
  switch (d.product) {
    case P::Coordinatewise:
      for (int i = 0; i < n; ++i) r[i] = u[i] * v[i];
      break;
    case P::Matrix2x2:
      if (n != 4) throw DimensionMismatch("matrix product needs dimension 4");
      r[0] = u[0] * v[0] + u[1] * v[2];
      r[1] = u[0] * v[1] + u[1] * v[3];
      r[2] = u[2] * v[0] + u[3] * v[2];
      r[3] = u[2] * v[1] + u[3] * v[3];
      break;
    case P::TruncatedPoly:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[(i + j) % n] += u[i] * v[j];
      break;
  }
  return r;
}

}  // namespace lindetail

/// Sampled associativity, distributivity, and scalar-compatibility audit.
inline LinearReport is_semilinear_algebra(const SemilinearDescriptor& d,
                                          int samples = 200, unsigned seed = 0) {
  LinearReport rep;
  std::mt19937 rng(seed);
  for (int t = 0; t < samples && rep.ok(); ++t) {
    VecQ u = lindetail::sample_vec(d.space, rng);
    VecQ v = lindetail::sample_vec(d.space, rng);
    VecQ w = lindetail::sample_vec(d.space, rng);
    Rat c = lindetail::sample_scalar(d.space.scalars, rng);
    auto mul = [&](const VecQ& a, const VecQ& b) {
      return lindetail::alg_mul(d, a, b);
    };
    auto addv = [](const VecQ& a, const VecQ& b) {
      VecQ r(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
      return r;
    };
    auto scale = [](const Rat& s, const VecQ& a) {
      VecQ r(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
      return r;
    };
    if (mul(mul(u, v), w) != mul(u, mul(v, w)))
      rep.violations.push_back({"associativity", lindetail::vec_str(u)});
    if (mul(u, addv(v, w)) != addv(mul(u, v), mul(u, w)))
      rep.violations.push_back({"left_distributivity", lindetail::vec_str(u)});
    if (mul(addv(u, v), w) != addv(mul(u, w), mul(v, w)))
      rep.violations.push_back({"right_distributivity", lindetail::vec_str(u)});
    if (scale(c, mul(u, v)) != mul(scale(c, u), v) ||
        scale(c, mul(u, v)) != mul(u, scale(c, v)))
      rep.violations.push_back({"scalar_compatibility", c.str()});
    if (!lattice_member(d.space, mul(u, v)))
      rep.violations.push_back({"product_closure", lindetail::vec_str(u)});
  }
  return rep;
}

}  // namespace smalg

#endif  // SMALG_LINEAR_HPP
