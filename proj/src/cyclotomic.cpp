#include "crysref/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "crysref/errors.hpp"

namespace crysref {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<long long> compute_cyclotomic_poly(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& q = CycloField::get(d).cyclotomic_poly;
    const int dq = static_cast<int>(q.size()) - 1;
    const int dp = static_cast<int>(p.size()) - 1;
    std::vector<long long> quot(dp - dq + 1, 0);
    for (int k = dp - dq; k >= 0; --k) {
      long long c = p[k + dq];  // q is monic
      quot[k] = c;
      if (c == 0) continue;
      for (int i = 0; i <= dq; ++i) p[k + i] -= c * q[i];
    }
    p = quot;
  }
  return p;
}

std::unique_ptr<CycloField> build_field(int n) {
  auto f = std::make_unique<CycloField>();
  f->order = n;
  f->phi = euler_phi(n);
  f->cyclotomic_poly = compute_cyclotomic_poly(n);
  const int phi = f->phi;
  f->power.assign(n, std::vector<long long>(phi, 0));
  std::vector<long long> cur(phi, 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    f->power[k] = cur;
    // multiply by zeta: shift, then reduce x^phi = -sum Phi_i x^i
    long long top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < phi; ++i) cur[i] -= top * f->cyclotomic_poly[i];
  }
  return f;
}

std::mutex& field_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const CycloField& CycloField::get(int order) {
  if (order < 1) fail(ErrorCode::IncompatibleFieldOrders, "field order must be positive");
  if (order > kMaxFieldOrder) fail(ErrorCode::IncompatibleFieldOrders, "field order too large: " + std::to_string(order));
  static std::map<int, std::unique_ptr<CycloField>> cache;
  {
    std::lock_guard<std::mutex> lock(field_mutex());
    auto it = cache.find(order);
    if (it != cache.end()) return *it->second;
  }
  // Built outside the lock: construction recursively requests divisor fields.
  auto f = build_field(order);
  std::lock_guard<std::mutex> lock(field_mutex());
  auto [it, inserted] = cache.emplace(order, std::move(f));
  return *it->second;
}

CycloNum::CycloNum() : f_(&CycloField::get(1)), num_(1, Integer(0)) {}

CycloNum::CycloNum(int v) : f_(&CycloField::get(1)), num_(1, Integer(v)) {}

CycloNum::CycloNum(const Rational& r, int order) : f_(&CycloField::get(order)), num_(f_->phi, Integer(0)), den_(r.den()) {
  num_[0] = r.num();
}

CycloNum::CycloNum(const CycloField* f, std::vector<Integer> num, Integer den)
    : f_(f), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

CycloNum::CycloNum(int order, const std::vector<Rational>& coeffs) : f_(&CycloField::get(order)) {
  std::vector<std::pair<long long, Rational>> terms;
  for (size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero()) terms.emplace_back(static_cast<long long>(k), coeffs[k]);
  *this = from_terms(order, terms);
}

CycloNum CycloNum::from_terms(int order, const std::vector<std::pair<long long, Rational>>& terms) {
  const CycloField* f = &CycloField::get(order);
  Integer den(1);
  for (const auto& t : terms) den = lcm(den, t.second.den());
  std::vector<Integer> num(f->phi, Integer(0));
  for (const auto& [e, c] : terms) {
    long long k = ((e % order) + order) % order;
    Integer scaled = c.num() * divexact(den, c.den());
    const auto& p = f->power[k];
    for (int i = 0; i < f->phi; ++i)
      if (p[i] != 0) num[i].add_mul(scaled, Integer(p[i]));
  }
  return CycloNum(f, std::move(num), std::move(den));
}

CycloNum CycloNum::zeta(int order, long long k) {
  return from_terms(order, {{k, Rational(1)}});
}

void CycloNum::normalize() {
  if (den_.sign() < 0) {
    den_ = -den_;
    for (auto& x : num_) x = -x;
  }
  if (den_.is_one()) return;
  Integer g = den_;
  for (const auto& x : num_) {
    if (x.is_zero()) continue;
    g = gcd(g, x);
    if (g.is_one()) return;
  }
  if (std::all_of(num_.begin(), num_.end(), [](const Integer& x) { return x.is_zero(); })) {
    den_ = Integer(1);
    return;
  }
  den_ = divexact(den_, g);
  for (auto& x : num_)
    if (!x.is_zero()) x = divexact(x, g);
}

std::vector<Rational> CycloNum::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& x : num_) out.emplace_back(x, den_);
  return out;
}

bool CycloNum::is_zero() const noexcept {
  for (const auto& x : num_)
    if (!x.is_zero()) return false;
  return true;
}

bool CycloNum::is_one() const noexcept {
  if (!den_.is_one() || !num_[0].is_one()) return false;
  for (size_t i = 1; i < num_.size(); ++i)
    if (!num_[i].is_zero()) return false;
  return true;
}

bool CycloNum::is_rational() const noexcept {
  for (size_t i = 1; i < num_.size(); ++i)
    if (!num_[i].is_zero()) return false;
  return true;
}

std::optional<Rational> CycloNum::to_rational() const {
  if (!is_rational()) return std::nullopt;
  return Rational(num_[0], den_);
}

CycloNum CycloNum::embed(int M) const {
  const int N = order();
  if (M == N) return *this;
  if (M % N != 0) fail(ErrorCode::IncompatibleFieldOrders, std::to_string(N) + " does not divide " + std::to_string(M));
  const CycloField* g = &CycloField::get(M);
  const int step = M / N;
  std::vector<Integer> num(g->phi, Integer(0));
  for (int i = 0; i < phi(); ++i) {
    if (num_[i].is_zero()) continue;
    const auto& p = g->power[(static_cast<long long>(i) * step) % M];
    for (int j = 0; j < g->phi; ++j)
      if (p[j] != 0) num[j].add_mul(num_[i], Integer(p[j]));
  }
  return CycloNum(g, std::move(num), den_);
}

const CycloField* CycloNum::common_field(const CycloNum& a, const CycloNum& b) {
  if (a.f_ == b.f_) return a.f_;
  long long L = std::lcm(static_cast<long long>(a.order()), static_cast<long long>(b.order()));
  if (L > kMaxFieldOrder)
    fail(ErrorCode::IncompatibleFieldOrders,
         "no common embedding for orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
  return &CycloField::get(static_cast<int>(L));
}

CycloNum CycloNum::operator-() const {
  std::vector<Integer> num(num_.size());
  for (size_t i = 0; i < num_.size(); ++i) num[i] = -num_[i];
  CycloNum r;
  r.f_ = f_;
  r.num_ = std::move(num);
  r.den_ = den_;
  return r;
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
  const CycloField* f = CycloNum::common_field(a, b);
  if (a.f_ != f || b.f_ != f) {
    return (a.f_ == f ? a : a.embed(f->order)) + (b.f_ == f ? b : b.embed(f->order));
  }
  std::vector<Integer> num(f->phi);
  if (a.den_ == b.den_) {
    for (int i = 0; i < f->phi; ++i) num[i] = a.num_[i] + b.num_[i];
    return CycloNum(f, std::move(num), a.den_);
  }
  for (int i = 0; i < f->phi; ++i) {
    num[i] = a.num_[i] * b.den_;
    num[i].add_mul(b.num_[i], a.den_);
  }
  return CycloNum(f, std::move(num), a.den_ * b.den_);
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) { return a + (-b); }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  const CycloField* f = CycloNum::common_field(a, b);
  if (a.f_ != f || b.f_ != f) {
    return (a.f_ == f ? a : a.embed(f->order)) * (b.f_ == f ? b : b.embed(f->order));
  }
  const int phi = f->phi;
  const int N = f->order;
  if (phi == 1) {
    // Q: N in {1, 2}
    return CycloNum(f, {a.num_[0] * b.num_[0]}, a.den_ * b.den_);
  }
  std::vector<Integer> conv(2 * phi - 1, Integer(0));
  for (int i = 0; i < phi; ++i) {
    if (a.num_[i].is_zero()) continue;
    for (int j = 0; j < phi; ++j)
      if (!b.num_[j].is_zero()) conv[i + j].add_mul(a.num_[i], b.num_[j]);
  }
  std::vector<Integer> num(conv.begin(), conv.begin() + phi);
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (conv[k].is_zero()) continue;
    const auto& p = f->power[k % N];
    for (int i = 0; i < phi; ++i)
      if (p[i] != 0) num[i].add_mul(conv[k], Integer(p[i]));
  }
  return CycloNum(f, std::move(num), a.den_ * b.den_);
}

CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.f_ == b.f_) return a.den_ == b.den_ && a.num_ == b.num_;
  const CycloField* f = CycloNum::common_field(a, b);
  CycloNum x = a.embed(f->order), y = b.embed(f->order);
  return x.den_ == y.den_ && x.num_ == y.num_;
}

CycloNum CycloNum::galois(long long a) const {
  const int N = order();
  long long am = ((a % N) + N) % N;
  if (std::gcd(am, static_cast<long long>(N)) != 1 && N > 1)
    fail(ErrorCode::PreconditionViolated, "galois exponent not a unit mod N");
  std::vector<Integer> num(phi(), Integer(0));
  for (int i = 0; i < phi(); ++i) {
    if (num_[i].is_zero()) continue;
    const auto& p = f_->power[(am * i) % N];
    for (int j = 0; j < phi(); ++j)
      if (p[j] != 0) num[j].add_mul(num_[i], Integer(p[j]));
  }
  return CycloNum(f_, std::move(num), den_);
}

CycloNum CycloNum::conj() const { return galois(-1); }

Rational CycloNum::field_norm() const {
  CycloNum prod = *this;
  const int N = order();
  for (int a = 2; a < N; ++a)
    if (std::gcd(a, N) == 1) prod *= galois(a);
  auto r = prod.to_rational();
  if (!r) fail(ErrorCode::PreconditionViolated, "field norm not rational (internal)");
  return *r;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero);
  if (is_rational()) return CycloNum(Rational(den_, num_[0]), order());
  CycloNum others(Rational(1), order());
  const int N = order();
  for (int a = 2; a < N; ++a)
    if (std::gcd(a, N) == 1) others *= galois(a);
  auto norm = (*this * others).to_rational();
  if (!norm) fail(ErrorCode::PreconditionViolated, "field norm not rational (internal)");
  return others * CycloNum(norm->inverse(), order());
}

CycloNum CycloNum::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNum r(Rational(1), order()), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

std::complex<double> CycloNum::approx() const {
  std::complex<double> s = 0;
  const double d = den_.to_double();
  for (int i = 0; i < phi(); ++i) {
    if (num_[i].is_zero()) continue;
    double ang = 2.0 * std::numbers::pi * i / order();
    s += num_[i].to_double() / d * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

size_t CycloNum::hash() const noexcept {
  // Rationals hash alike in every field; other values only within one order.
  size_t h = is_rational() ? 1 : static_cast<size_t>(order());
  if (is_rational()) {
    hash_combine(h, den_.hash());
    hash_combine(h, num_[0].hash());
    return h;
  }
  hash_combine(h, den_.hash());
  for (const auto& x : num_) hash_combine(h, x.hash());
  return h;
}

std::string CycloNum::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < phi(); ++i) {
    if (num_[i].is_zero()) continue;
    Rational c(num_[i], den_);
    std::string cs = c.to_string();
    if (!first) {
      if (c.sign() < 0) {
        os << " - ";
        cs = (-c).to_string();
      } else {
        os << " + ";
      }
    }
    first = false;
    if (i == 0) {
      os << cs;
      continue;
    }
    if (cs != "1") {
      if (cs == "-1") os << "-";
      else os << cs << "*";
    }
    os << "z" << order();
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

NormSqResult norm_sq(const CycloNum& z) {
  CycloNum v = z.norm_sq();
  auto r = v.to_rational();
  return {v, r};
}

CycloNum conj(const CycloNum& z) { return z.conj(); }

CycloNum coerce_order(const CycloNum& z, int N) {
  const int M = z.order();
  if (M == N) return z;
  if (N % M == 0) return z.embed(N);
  if (z.is_rational()) return CycloNum(*z.to_rational(), N);
  const int L = std::lcm(M, N);
  if (L > kMaxFieldOrder) fail(ErrorCode::IncompatibleFieldOrders, "order " + std::to_string(L) + " too large");
  const CycloField& fl = CycloField::get(L);
  const int phiN = euler_phi(N);
  const int step = L / N;
  // Columns: zeta_N^k in the power basis of Q(zeta_L); right-hand side: z.
  std::vector<std::vector<Rational>> a(fl.phi, std::vector<Rational>(phiN + 1));
  for (int k = 0; k < phiN; ++k) {
    const auto& p = fl.power[(static_cast<long long>(k) * step) % L];
    for (int i = 0; i < fl.phi; ++i) a[i][k] = Rational(p[i]);
  }
  CycloNum w = z.embed(L);
  for (int i = 0; i < fl.phi; ++i) a[i][phiN] = w.coeff(i);
  int row = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < phiN && row < fl.phi; ++c) {
    int p = row;
    while (p < fl.phi && a[p][c].is_zero()) ++p;
    if (p == fl.phi) continue;
    std::swap(a[p], a[row]);
    Rational inv = a[row][c].inverse();
    for (auto& x : a[row]) x *= inv;
    for (int r = 0; r < fl.phi; ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      Rational t = a[r][c];
      for (int j = 0; j <= phiN; ++j) a[r][j] -= t * a[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (int r = row; r < fl.phi; ++r)
    if (!a[r][phiN].is_zero())
      fail(ErrorCode::IncompatibleFieldOrders, "value does not lie in Q(zeta_" + std::to_string(N) + ")");
  std::vector<Rational> coeffs(phiN);
  for (int r = 0; r < row; ++r) coeffs[pivot_col[r]] = a[r][phiN];
  return CycloNum(N, coeffs);
}

bool is_imag_quadratic_integer(const CycloNum& z) {
  auto n = z.norm_sq().to_rational();
  auto t = z.twice_real().to_rational();
  return n && t && n->is_integer() && t->is_integer();
}

std::optional<int> root_of_unity_order(const CycloNum& z, int cap) {
  if (z.is_zero()) return std::nullopt;
  auto n = z.norm_sq();
  if (!n.is_one()) return std::nullopt;
  CycloNum p = z;
  for (int k = 1; k <= cap; ++k) {
    if (p.is_one()) return k;
    p *= z;
  }
  return std::nullopt;
}

namespace {

// Sign of sum_i num[i] * f(2 pi i / N) for f = cos or sin, given it is nonzero.
int mpfr_sign(const CycloNum& z, bool imag) {
  const int N = z.order();
  const auto& num = z.numerators();
  for (mpfr_prec_t prec = 128; prec <= (1 << 16); prec *= 2) {
    mpfr_t acc, term, angle, pi, c;
    mpfr_inits2(prec, acc, term, angle, pi, c, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(acc, 1);
    mpfr_const_pi(pi, MPFR_RNDN);
    double magnitude = 0;
    for (int i = 0; i < z.phi(); ++i) {
      if (num[i].is_zero()) continue;
      mpfr_mul_ui(angle, pi, 2u * static_cast<unsigned>(i), MPFR_RNDN);
      mpfr_div_ui(angle, angle, static_cast<unsigned>(N), MPFR_RNDN);
      if (imag) mpfr_sin(term, angle, MPFR_RNDN);
      else mpfr_cos(term, angle, MPFR_RNDN);
      mpz_class q = num[i].to_mpz();
      mpfr_set_z(c, q.get_mpz_t(), MPFR_RNDN);
      mpfr_mul(term, term, c, MPFR_RNDN);
      mpfr_add(acc, acc, term, MPFR_RNDN);
      magnitude += std::fabs(num[i].to_double());
    }
    // Each term carries relative error of a few ulps; bound the total generously.
    const long bound_exp = static_cast<long>(std::ceil(std::log2(magnitude + 1.0))) - static_cast<long>(prec) + 16;
    const int s = mpfr_sgn(acc);
    const bool separated = s != 0 && mpfr_get_exp(acc) > bound_exp;
    mpfr_clears(acc, term, angle, pi, c, static_cast<mpfr_ptr>(nullptr));
    if (separated) return s;
  }
  fail(ErrorCode::PreconditionViolated, "sign determination did not converge");
}

}  // namespace

int sign_re(const CycloNum& z) {
  CycloNum t = z.twice_real();
  if (t.is_zero()) return 0;
  if (auto r = t.to_rational()) return r->sign();
  return mpfr_sign(z, false);
}

int sign_im(const CycloNum& z) {
  CycloNum t = z - z.conj();
  if (t.is_zero()) return 0;
  return mpfr_sign(z, true);
}

Integer floor_re(const CycloNum& z) {
  double a = std::floor(z.approx().real());
  Integer k(static_cast<long long>(a));
  while (sign_re(z - CycloNum(Rational(k))) < 0) k -= Integer(1);
  while (sign_re(z - CycloNum(Rational(k + Integer(1)))) >= 0) k += Integer(1);
  return k;
}

}  // namespace crysref
