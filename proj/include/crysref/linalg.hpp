#ifndef CRYSREF_LINALG_HPP
#define CRYSREF_LINALG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crysref/cyclotomic.hpp"
#include "crysref/errors.hpp"
#include "crysref/integer.hpp"
#include "crysref/rational.hpp"

namespace crysref {

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, const T& fill = T()) : r_(rows), c_(cols), a_(rows * cols, fill) {}
  static Matrix identity(size_t n) {
    Matrix m(n, n, T(0));
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < m.r_; ++i) {
      if (rows[i].size() != m.c_) fail(ErrorCode::DimensionMismatch, "ragged rows");
      for (size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, size_t rows) {
    Matrix m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) fail(ErrorCode::DimensionMismatch, "column length");
      for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  size_t rows() const noexcept { return r_; }
  size_t cols() const noexcept { return c_; }
  bool square() const noexcept { return r_ == c_; }
  T& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
  const std::vector<T>& data() const noexcept { return a_; }

  std::vector<T> row(size_t i) const { return std::vector<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
  std::vector<T> column(size_t j) const {
    std::vector<T> v(r_);
    for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Matrix transpose() const {
    Matrix t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) fail(ErrorCode::DimensionMismatch, "matrix product");
    Matrix p(a.r_, b.c_, T(0));
    for (size_t i = 0; i < a.r_; ++i)
      for (size_t k = 0; k < a.c_; ++k) {
        const T& x = a(i, k);
        if (x == T(0)) continue;
        for (size_t j = 0; j < b.c_; ++j) p(i, j) += x * b(k, j);
      }
    return p;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    Matrix s = a;
    for (size_t i = 0; i < s.a_.size(); ++i) s.a_[i] += b.a_[i];
    return s;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    Matrix s = a;
    for (size_t i = 0; i < s.a_.size(); ++i) s.a_[i] -= b.a_[i];
    return s;
  }
  friend Matrix operator*(const T& x, const Matrix& b) {
    Matrix s = b;
    for (auto& e : s.a_) e = x * e;
    return s;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != c_) fail(ErrorCode::DimensionMismatch, "matrix-vector product");
    std::vector<T> w(r_, T(0));
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) w[i] += (*this)(i, j) * v[j];
    return w;
  }

 private:
  void check_same(const Matrix& b) const {
    if (r_ != b.r_ || c_ != b.c_) fail(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }
  size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using CVec = std::vector<CycloNum>;
using CMat = Matrix<CycloNum>;
using QVec = std::vector<Rational>;
using QMat = Matrix<Rational>;
using ZVec = std::vector<Integer>;
using ZMat = Matrix<Integer>;

// ---- exact Gaussian elimination over a field (Rational or CycloNum) ----

// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<size_t> rref(Matrix<T>& a) {
  std::vector<size_t> piv;
  size_t row = 0;
  for (size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    size_t p = row;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    T inv = a(row, c).inverse();
    for (size_t j = c; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
    for (size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, c).is_zero()) continue;
      T t = a(r, c);
      for (size_t j = c; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(r, j) -= t * a(row, j);
    }
    piv.push_back(c);
    ++row;
  }
  return piv;
}

template <class T>
size_t rank(Matrix<T> a) {
  return rref(a).size();
}

// Basis of the right kernel {x : A x = 0}.
template <class T>
std::vector<std::vector<T>> kernel(Matrix<T> a) {
  auto piv = rref(a);
  std::vector<bool> is_piv(a.cols(), false);
  for (size_t p : piv) is_piv[p] = true;
  std::vector<std::vector<T>> basis;
  for (size_t f = 0; f < a.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<T> x(a.cols(), T(0));
    x[f] = T(1);
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -a(r, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

// Some solution of A x = b, or nullopt.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  if (b.size() != a.rows()) fail(ErrorCode::DimensionMismatch, "solve");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  std::vector<T> x(a.cols(), T(0));
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
  return x;
}

template <class T>
T determinant(Matrix<T> a) {
  if (!a.square()) fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  T det(1);
  const size_t n = a.rows();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det = det * a(c, c);
    T inv = a(c, c).inverse();
    for (size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      T t = a(r, c) * inv;
      for (size_t j = c; j < n; ++j) a(r, j) -= t * a(c, j);
    }
  }
  return det;
}

// Throws DivisionByZero when singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (!a.square()) fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const size_t n = a.rows();
  Matrix<T> aug(n, 2 * n, T(0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = T(1);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) fail(ErrorCode::DivisionByZero, "singular matrix");
  Matrix<T> inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// ---- Hermitian geometry over Q(zeta_N) ----

// Optional Gram matrix G: <u|v> = u^T G conj(v). Absent means G = I.
struct HermitianForm {
  std::optional<CMat> gram;
  bool standard() const noexcept { return !gram.has_value(); }
};

CycloNum inner(const CVec& u, const CVec& v, const HermitianForm& form = {});

CMat conj_transpose(const CMat& m);
CMat conj(const CMat& m);
CVec scale(const CycloNum& z, const CVec& v);
CVec add(const CVec& a, const CVec& b);
CVec sub(const CVec& a, const CVec& b);
bool is_zero(const CVec& v);

struct Reflection {
  CVec root;       // e, not normalized
  CycloNum theta;  // eigenvalue on e
  int order = 2;   // multiplicative order of theta

  // theta = exp(2 pi i / m), coerced into Q(zeta_N).
  static Reflection standard(CVec root, int m, int N);
};

// R v = v - (1 - theta) <v|e>/<e|e> e.
CMat reflection_matrix(const Reflection& r, const HermitianForm& form = {});

inline constexpr int kDefaultOrderCap = 10000;

bool is_unitary(const CMat& p, const HermitianForm& form = {});
int fixed_codim(const CMat& p);
// Multiplicative order; throws OrderCapExceeded beyond cap.
int matrix_order(const CMat& p, int cap = kDefaultOrderCap);
bool is_reflection_matrix(const CMat& p, const HermitianForm& form = {}, int cap = kDefaultOrderCap);

// Smallest N with every entry in Q(zeta_N).
int common_order(const CMat& m);
int common_order(const CVec& v);

// ---- realification: Q(zeta_N)^n  <->  Q^(n phi(N)) ----

// Coordinates of z in the power basis of Q(zeta_N).
QVec realify(const CycloNum& z, int N);
QVec realify(const CVec& v, int N);
CVec complexify(const QVec& x, int n, int N);
// Matrix of multiplication by z on Q^phi(N).
QMat multiplication_matrix(const CycloNum& z, int N);
QMat realify(const CMat& m, int N);

std::string to_string(const CVec& v);

}  // namespace crysref

#endif
