#ifndef CRYSREF_CYCLOTOMIC_HPP
#define CRYSREF_CYCLOTOMIC_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "crysref/integer.hpp"
#include "crysref/rational.hpp"

namespace crysref {

// Static data for Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi-1).
struct CycloField {
  int order = 1;                             // N
  int phi = 1;                               // phi(N)
  std::vector<long long> cyclotomic_poly;    // Phi_N, ascending coefficients, monic
  std::vector<std::vector<long long>> power; // power[k] = zeta^k reduced, 0 <= k < N

  static const CycloField& get(int order);
};

// Largest field order reachable by automatic coercion to a common order.
inline constexpr int kMaxFieldOrder = 2520;

int euler_phi(int n);

// Exact element of Q(zeta_N). Stored as integer numerators over one positive
// common denominator, fully reduced, so equal values have equal storage.
class CycloNum {
 public:
  CycloNum();                                 // 0 in Q
  CycloNum(int v);                            // integer in Q
  CycloNum(const Rational& r, int order = 1);
  CycloNum(const Integer& v) : CycloNum(Rational(v)) {}
  // Element sum_k coeffs[k] zeta^k (k may exceed phi; reduced on input).
  CycloNum(int order, const std::vector<Rational>& coeffs);

  static CycloNum zeta(int order, long long k = 1);
  // Sum of (p/q) zeta_N^e over the given exponent/coefficient pairs.
  static CycloNum from_terms(int order, const std::vector<std::pair<long long, Rational>>& terms);

  int order() const noexcept { return f_->order; }
  int phi() const noexcept { return f_->phi; }
  const CycloField& field() const noexcept { return *f_; }
  const std::vector<Integer>& numerators() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }
  Rational coeff(int i) const { return Rational(num_[i], den_); }
  std::vector<Rational> coeffs() const;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_rational() const noexcept;
  std::optional<Rational> to_rational() const;

  // Same value viewed in Q(zeta_M); requires order() | M.
  CycloNum embed(int M) const;

  CycloNum operator-() const;
  friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b);
  CycloNum& operator+=(const CycloNum& b) { return *this = *this + b; }
  CycloNum& operator-=(const CycloNum& b) { return *this = *this - b; }
  CycloNum& operator*=(const CycloNum& b) { return *this = *this * b; }
  CycloNum& operator/=(const CycloNum& b) { return *this = *this / b; }
  friend bool operator==(const CycloNum& a, const CycloNum& b);

  CycloNum inverse() const;
  CycloNum conj() const;
  // Galois automorphism zeta -> zeta^a, gcd(a, N) = 1.
  CycloNum galois(long long a) const;
  CycloNum pow(long long e) const;

  // z * conj(z).
  CycloNum norm_sq() const { return *this * conj(); }
  // z + conj(z) = 2 Re z.
  CycloNum twice_real() const { return *this + conj(); }
  // Field norm N_{Q(zeta)/Q}(z).
  Rational field_norm() const;

  std::complex<double> approx() const;
  size_t hash() const noexcept;
  std::string to_string() const;  // human form, e.g. "1/2 + 3*z8^2"

 private:
  CycloNum(const CycloField* f, std::vector<Integer> num, Integer den);
  void normalize();
  static const CycloField* common_field(const CycloNum& a, const CycloNum& b);

  const CycloField* f_;
  std::vector<Integer> num_;
  Integer den_{1};
};

struct CycloHash {
  size_t operator()(const CycloNum& z) const noexcept { return z.hash(); }
};

struct NormSqResult {
  CycloNum value;
  std::optional<Rational> rational;
};
NormSqResult norm_sq(const CycloNum& z);
CycloNum conj(const CycloNum& z);

// The same value as an element of Q(zeta_N); throws IncompatibleFieldOrders
// when z does not lie in that field.
CycloNum coerce_order(const CycloNum& z, int N);

// |z|^2 in Z and 2 Re z in Z, decided symbolically.
bool is_imag_quadratic_integer(const CycloNum& z);

// Multiplicative order of a root of unity, or nullopt if none below cap.
std::optional<int> root_of_unity_order(const CycloNum& z, int cap = 10000);

// Exact sign decisions for real and imaginary parts. Zero is detected
// symbolically; nonzero signs come from MPFR evaluation at increasing
// precision until the rounding error bound separates the value from 0.
int sign_re(const CycloNum& z);
int sign_im(const CycloNum& z);
// floor(Re z) as an exact integer.
Integer floor_re(const CycloNum& z);

}  // namespace crysref

#endif
