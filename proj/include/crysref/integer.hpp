#ifndef CRYSREF_INTEGER_HPP
#define CRYSREF_INTEGER_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace crysref {

// Arbitrary-precision integer. Values that fit in int64 are stored inline and
// handled with overflow-checked machine arithmetic; larger values spill to GMP.
class Integer {
 public:
  Integer() noexcept = default;
  Integer(int v) noexcept : v_(v) {}
  Integer(long v) noexcept : v_(v) {}
  Integer(long long v) noexcept : v_(v) {}
  explicit Integer(const mpz_class& z) { assign_mpz(z); }
  explicit Integer(std::string_view text);

  Integer(const Integer& o) : v_(o.v_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& o) {
    if (this != &o) {
      v_ = o.v_;
      big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;

  bool is_small() const noexcept { return !big_; }
  int64_t small_value() const noexcept { return v_; }
  mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(v_)); }
  bool fits_int64() const noexcept { return !big_; }
  double to_double() const { return big_ ? big_->get_d() : static_cast<double>(v_); }

  int sign() const noexcept {
    if (big_) return sgn(*big_);
    return (v_ > 0) - (v_ < 0);
  }
  bool is_zero() const noexcept { return !big_ && v_ == 0; }
  bool is_one() const noexcept { return !big_ && v_ == 1; }

  Integer operator-() const {
    if (!big_ && v_ != INT64_MIN) return Integer(-v_);
    return Integer(mpz_class(-to_mpz()));
  }
  friend Integer operator+(const Integer& a, const Integer& b) {
    long long r;
    if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.v_, b.v_, &r)) return Integer(r);
    return Integer(mpz_class(a.to_mpz() + b.to_mpz()));
  }
  friend Integer operator-(const Integer& a, const Integer& b) {
    long long r;
    if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.v_, b.v_, &r)) return Integer(r);
    return Integer(mpz_class(a.to_mpz() - b.to_mpz()));
  }
  friend Integer operator*(const Integer& a, const Integer& b) {
    long long r;
    if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.v_, b.v_, &r)) return Integer(r);
    return Integer(mpz_class(a.to_mpz() * b.to_mpz()));
  }
  Integer& operator+=(const Integer& b) {
    long long r;
    if (!big_ && !b.big_ && !__builtin_add_overflow(v_, b.v_, &r)) {
      v_ = r;
      return *this;
    }
    return *this = *this + b;
  }
  Integer& operator-=(const Integer& b) {
    long long r;
    if (!big_ && !b.big_ && !__builtin_sub_overflow(v_, b.v_, &r)) {
      v_ = r;
      return *this;
    }
    return *this = *this - b;
  }
  Integer& operator*=(const Integer& b) {
    long long r;
    if (!big_ && !b.big_ && !__builtin_mul_overflow(v_, b.v_, &r)) {
      v_ = r;
      return *this;
    }
    return *this = *this * b;
  }
  // this += a * b
  void add_mul(const Integer& a, const Integer& b) {
    long long p, r;
    if (!big_ && !a.big_ && !b.big_ && !__builtin_mul_overflow(a.v_, b.v_, &p) &&
        !__builtin_add_overflow(v_, p, &r)) {
      v_ = r;
      return;
    }
    *this = *this + a * b;
  }

  friend bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.v_ == b.v_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // normalized: a big value never fits in int64
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.v_ <=> b.v_;
    int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const;
  size_t hash() const noexcept;

  friend Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }
  friend Integer gcd(const Integer& a, const Integer& b);
  friend Integer lcm(const Integer& a, const Integer& b);
  // Exact division; the caller guarantees b | a.
  friend Integer divexact(const Integer& a, const Integer& b);
  // Floor division and the matching non-negative-divisor remainder.
  friend Integer floor_div(const Integer& a, const Integer& b);
  friend Integer floor_mod(const Integer& a, const Integer& b);
  // Quotient rounded to nearest (ties toward floor), used to keep HNF entries small.
  friend Integer round_div(const Integer& a, const Integer& b);
  friend bool divides(const Integer& d, const Integer& a);
  friend Integer pow(const Integer& a, unsigned e);

 private:
  void assign_mpz(const mpz_class& z) {
    if (z.fits_slong_p()) {
      v_ = z.get_si();
      big_.reset();
    } else {
      v_ = 0;
      big_ = std::make_unique<mpz_class>(z);
    }
  }

  int64_t v_ = 0;
  std::unique_ptr<mpz_class> big_;
};

struct IntegerHash {
  size_t operator()(const Integer& a) const noexcept { return a.hash(); }
};

inline void hash_combine(size_t& seed, size_t v) noexcept {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace crysref

#endif
