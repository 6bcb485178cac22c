#ifndef CRYSREF_RATIONAL_HPP
#define CRYSREF_RATIONAL_HPP

#include <compare>
#include <string>
#include <string_view>

#include "crysref/integer.hpp"

namespace crysref {

// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : num_(v) {}
  Rational(long v) : num_(v) {}
  Rational(long long v) : num_(v) {}
  Rational(Integer v) : num_(std::move(v)) {}
  Rational(Integer num, Integer den);
  explicit Rational(std::string_view text);  // "p", "p/q", "-p/q"

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_.is_one(); }
  int sign() const noexcept { return num_.sign(); }

  Rational operator-() const { return Rational(-num_, den_, Raw{}); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  Rational inverse() const;
  Integer floor() const { return floor_div(num_, den_); }
  // Fractional part in [0, 1).
  Rational frac() const { return Rational(floor_mod(num_, den_), den_, Raw{}); }
  double to_double() const { return num_.to_double() / den_.to_double(); }
  std::string to_string() const;
  size_t hash() const noexcept {
    size_t h = num_.hash();
    hash_combine(h, den_.hash());
    return h;
  }

 private:
  struct Raw {};
  Rational(Integer num, Integer den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Integer num_{0};
  Integer den_{1};
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

}  // namespace crysref

#endif
