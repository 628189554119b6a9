#ifndef SMALG_QUATERNION_HPP
#define SMALG_QUATERNION_HPP

#include <cstdint>
#include <string>

namespace smalg {

/// Integer quaternion a0 + a1 i + a2 j + a3 k.
struct Quaternion {
  std::int64_t a0 = 0, a1 = 0, a2 = 0, a3 = 0;

  friend bool operator==(const Quaternion&, const Quaternion&) = default;

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.a0 + b.a0, a.a1 + b.a1, a.a2 + b.a2, a.a3 + b.a3};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.a0 - b.a0, a.a1 - b.a1, a.a2 - b.a2, a.a3 - b.a3};
  }

  std::string str() const {
    return "(" + std::to_string(a0) + " + " + std::to_string(a1) + "i + " +
           std::to_string(a2) + "j + " + std::to_string(a3) + "k)";
  }
};

/// Product via the four component formulas (ij = k, jk = i, ki = j,
/// i^2 = j^2 = k^2 = -1).
inline Quaternion quaternion_mul(const Quaternion& a, const Quaternion& b) {
  Quaternion g;
  g.a0 = a.a0 * b.a0 - a.a1 * b.a1 - a.a2 * b.a2 - a.a3 * b.a3;
  g.a1 = a.a0 * b.a1 + a.a1 * b.a0 + a.a2 * b.a3 - a.a3 * b.a2;
  g.a2 = a.a0 * b.a2 + a.a2 * b.a0 - a.a1 * b.a3 + a.a3 * b.a1;
  g.a3 = a.a0 * b.a3 - a.a2 * b.a1 + a.a1 * b.a2 + a.a3 * b.a0;
  return g;
}

}  // namespace smalg

#endif  // SMALG_QUATERNION_HPP
