#include "crysref/rational.hpp"

#include "crysref/errors.hpp"

namespace crysref {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "zero denominator");
  normalize();
}

Rational::Rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    num_ = Integer(text);
    den_ = Integer(1);
    return;
  }
  num_ = Integer(text.substr(0, slash));
  den_ = Integer(text.substr(slash + 1));
  if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = Integer(1);
    return;
  }
  if (den_.is_one()) return;
  Integer g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
  }
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_.is_one() && b.den_.is_one()) return Rational(a.num_ + b.num_);
  if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.den_.is_one() && b.den_.is_one()) return Rational(a.num_ - b.num_);
  if (a.den_ == b.den_) return Rational(a.num_ - b.num_, a.den_);
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.den_.is_one() && b.den_.is_one()) return Rational(a.num_ * b.num_);
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero);
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero);
  return Rational(den_, num_);
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace crysref
