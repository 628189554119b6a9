#ifndef SMALG_RATIONAL_HPP
#define SMALG_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace smalg {

/// Exact rational number with canonical sign/gcd normalization.
/// Denominator is always positive and gcd(|num|, den) == 1.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(std::int64_t n) : num_(n), den_(1) {}
  Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_positive() const { return num_ > 0; }
  bool is_negative() const { return num_ < 0; }

  Rat operator-() const { return Rat(-num_, den_, raw_tag{}); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  Rat abs() const { return num_ < 0 ? -*this : *this; }

  /// True when this / other is an integer.
  bool divisible_by(const Rat& other) const {
    if (other.num_ == 0) return num_ == 0;
    return (*this / other).is_integer();
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "a" or "a/b".
  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(std::stoll(s));
      return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

private:
  struct raw_tag {};
  Rat(std::int64_t n, std::int64_t d, raw_tag) : num_(n), den_(d) {}

  void normalize() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_;
  std::int64_t den_;
};

/// lcm(a/b, c/d) = lcm(a, c) / gcd(b, d), for positive rationals.
inline Rat rat_lcm(const Rat& a, const Rat& b) {
  if (!a.is_positive() || !b.is_positive())
    throw std::domain_error("rat_lcm: operands must be positive");
  return Rat(std::lcm(a.num(), b.num()), std::gcd(a.den(), b.den()));
}

/// gcd(a/b, c/d) = gcd(a, c) / lcm(b, d), for positive rationals.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
  if (!a.is_positive() || !b.is_positive())
    throw std::domain_error("rat_gcd: operands must be positive");
  return Rat(std::gcd(a.num(), b.num()), std::lcm(a.den(), b.den()));
}

}  // namespace smalg

#endif  // SMALG_RATIONAL_HPP
