#include "crysref/integer.hpp"

#include <numeric>

#include "crysref/errors.hpp"

namespace crysref {

Integer::Integer(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  mpz_class z;
  if (s.empty() || z.set_str(s, 10) != 0) fail(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  assign_mpz(z);
}

std::string Integer::to_string() const {
  if (big_) return big_->get_str();
  return std::to_string(v_);
}

size_t Integer::hash() const noexcept {
  if (!big_) return std::hash<int64_t>{}(v_);
  size_t h = 0x51ed270b;
  const size_t n = mpz_size(big_->get_mpz_t());
  for (size_t i = 0; i < n; ++i) hash_combine(h, mpz_getlimbn(big_->get_mpz_t(), i));
  hash_combine(h, static_cast<size_t>(sgn(*big_) + 1));
  return h;
}

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && a.v_ != INT64_MIN && b.v_ != INT64_MIN)
    return Integer(std::gcd(a.v_, b.v_));
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(r);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(divexact(a, gcd(a, b)) * b);
}

Integer divexact(const Integer& a, const Integer& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero);
  if (a.is_small() && b.is_small() && !(a.v_ == INT64_MIN && b.v_ == -1)) return Integer(a.v_ / b.v_);
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(r);
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero);
  if (a.is_small() && b.is_small() && !(a.v_ == INT64_MIN && b.v_ == -1)) {
    int64_t q = a.v_ / b.v_;
    if ((a.v_ % b.v_ != 0) && ((a.v_ < 0) != (b.v_ < 0))) --q;
    return Integer(q);
  }
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(r);
}

Integer floor_mod(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

Integer round_div(const Integer& a, const Integer& b) {
  // floor((2a + b) / (2b)) for b > 0; sign-adjusted otherwise.
  if (b.sign() < 0) return round_div(-a, -b);
  return floor_div(a * Integer(2) + b, b * Integer(2));
}

bool divides(const Integer& d, const Integer& a) {
  if (d.is_zero()) return a.is_zero();
  if (d.is_small() && a.is_small() && d.v_ != -1) return a.v_ % d.v_ == 0;
  return mpz_divisible_p(a.to_mpz().get_mpz_t(), d.to_mpz().get_mpz_t()) != 0;
}

Integer pow(const Integer& a, unsigned e) {
  Integer r(1), b = a;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

}  // namespace crysref
